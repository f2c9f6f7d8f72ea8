//! Point sequences and their tangent-chain representation.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An ordered sequence of at least two points of equal dimension.
///
/// Coordinates are stored row-major: point `i` occupies
/// `coords[i * dim..(i + 1) * dim]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline<T> {
    coords: Vec<T>,
    dim: usize,
}

impl<T: Scalar> Polyline<T> {
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let dim = match points.first() {
            Some(p) => p.len(),
            None => return Err(Error::invalid("polyline needs at least 2 points, got 0")),
        };
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != dim) {
            return Err(Error::invalid(format!(
                "point {i} has dimension {}, expected {dim}",
                p.len()
            )));
        }
        Self::from_flat(points.into_iter().flatten().collect(), dim)
    }

    /// Builds a polyline from row-major coordinates.
    pub fn from_flat(coords: Vec<T>, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("points must have at least one coordinate"));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::invalid(format!(
                "{} coordinates do not split into points of dimension {dim}",
                coords.len()
            )));
        }
        let n = coords.len() / dim;
        if n < 2 {
            return Err(Error::invalid(format!(
                "polyline needs at least 2 points, got {n}"
            )));
        }
        if let Some(i) = coords.iter().position(|c| !c.is_finite_value()) {
            return Err(Error::invalid(format!(
                "non-finite coordinate {} of point {}",
                i % dim,
                i / dim
            )));
        }
        Ok(Polyline { coords, dim })
    }
}

impl<T> Polyline<T> {
    /// Number of points.
    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false; a polyline holds at least two points.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of segments, one less than the number of points.
    pub fn segments(&self) -> usize {
        self.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn first(&self) -> &[T] {
        self.point(0)
    }

    pub fn last(&self) -> &[T] {
        self.point(self.len() - 1)
    }

    pub fn points(&self) -> std::slice::ChunksExact<'_, T> {
        self.coords.chunks_exact(self.dim)
    }

    /// Values of one coordinate axis, in point order.
    pub fn axis(&self, axis: usize) -> impl Iterator<Item = &T> + '_ {
        assert!(
            axis < self.dim,
            "axis {axis} out of range for dimension {}",
            self.dim
        );
        self.coords.iter().skip(axis).step_by(self.dim)
    }

    pub fn as_flat(&self) -> &[T] {
        &self.coords
    }

    pub fn into_flat(self) -> Vec<T> {
        self.coords
    }

    pub fn to_points(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.points().map(<[T]>::to_vec).collect()
    }
}

/// A base point followed by `N` tangent (difference) vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentChain<T> {
    base: Vec<T>,
    tangents: Vec<T>,
}

impl<T: Scalar> TangentChain<T> {
    pub fn new(base: Vec<T>, tangents: Vec<Vec<T>>) -> Result<Self> {
        let dim = base.len();
        if let Some((i, t)) = tangents.iter().enumerate().find(|(_, t)| t.len() != dim) {
            return Err(Error::invalid(format!(
                "tangent {i} has dimension {}, expected {dim}",
                t.len()
            )));
        }
        Self::from_flat(base, tangents.into_iter().flatten().collect())
    }

    /// Builds a chain from a base point and row-major tangent coordinates.
    pub fn from_flat(base: Vec<T>, tangents: Vec<T>) -> Result<Self> {
        let dim = base.len();
        if dim == 0 {
            return Err(Error::invalid(
                "base point must have at least one coordinate",
            ));
        }
        if tangents.is_empty() || !tangents.len().is_multiple_of(dim) {
            return Err(Error::invalid(format!(
                "{} tangent coordinates do not form a non-empty chain of dimension {dim}",
                tangents.len()
            )));
        }
        if !base.iter().chain(&tangents).all(Scalar::is_finite_value) {
            return Err(Error::invalid("chain contains a non-finite coordinate"));
        }
        Ok(TangentChain { base, tangents })
    }

    /// Projects the chain onto a single coordinate axis.
    pub fn project(&self, axis: usize) -> TangentChain<T> {
        assert!(
            axis < self.dim(),
            "axis {axis} out of range for dimension {}",
            self.dim()
        );
        TangentChain {
            base: vec![self.base[axis].clone()],
            tangents: self
                .tangents
                .iter()
                .skip(axis)
                .step_by(self.dim())
                .cloned()
                .collect(),
        }
    }

    /// Reassembles a chain from one-dimensional per-axis chains of equal length.
    pub fn from_axes(axes: &[TangentChain<T>]) -> Result<TangentChain<T>> {
        let n = match axes.first() {
            Some(a) => a.segments(),
            None => return Err(Error::invalid("no axes to assemble")),
        };
        if axes.iter().any(|a| a.dim() != 1 || a.segments() != n) {
            return Err(Error::invalid(
                "axis chains must be one-dimensional and of equal length",
            ));
        }
        let base = axes.iter().map(|a| a.base[0].clone()).collect();
        let tangents = (0..n)
            .flat_map(|i| axes.iter().map(move |a| a.tangents[i].clone()))
            .collect();
        Ok(TangentChain { base, tangents })
    }
}

impl<T> TangentChain<T> {
    pub(crate) fn from_parts_unchecked(base: Vec<T>, tangents: Vec<T>) -> Self {
        debug_assert!(!base.is_empty() && !tangents.is_empty());
        debug_assert_eq!(tangents.len() % base.len(), 0);
        TangentChain { base, tangents }
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    /// Number of tangent vectors.
    pub fn segments(&self) -> usize {
        self.tangents.len() / self.dim()
    }

    pub fn base(&self) -> &[T] {
        &self.base
    }

    pub fn tangent(&self, i: usize) -> &[T] {
        let d = self.dim();
        &self.tangents[i * d..(i + 1) * d]
    }

    pub fn tangents(&self) -> std::slice::ChunksExact<'_, T> {
        self.tangents.chunks_exact(self.dim())
    }

    pub fn tangents_flat(&self) -> &[T] {
        &self.tangents
    }
}

/// Converts a polyline into its tangent chain: `t[i] = p[i+1] - p[i]`.
pub fn build_chain<T: Scalar>(p: &Polyline<T>) -> TangentChain<T> {
    let d = p.dim();
    let tangents = p
        .coords
        .iter()
        .zip(&p.coords[d..])
        .map(|(a, b)| b.clone() - a.clone())
        .collect();
    TangentChain::from_parts_unchecked(p.first().to_vec(), tangents)
}

/// Rebuilds the point sequence by cumulative summation from the base point.
pub fn reconstruct<T: Scalar>(c: &TangentChain<T>) -> Polyline<T> {
    let d = c.dim();
    let mut coords = Vec::with_capacity(c.base.len() + c.tangents.len());
    coords.extend_from_slice(&c.base);
    for t in c.tangents() {
        let prev = coords.len() - d;
        for (a, ta) in t.iter().enumerate() {
            let next = coords[prev + a].clone() + ta.clone();
            coords.push(next);
        }
    }
    Polyline { coords, dim: d }
}
