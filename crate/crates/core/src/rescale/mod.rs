//! One rescaling step of a tangent chain.
//!
//! The old chain is parametrized by `u` in `[0, N]`, old segment `j` owning the
//! unit interval `[j, j + 1]`. New segment `k` covers `[k·s, (k + 1)·s]`, and
//! its tangent is the sum of old tangents weighted by the length of overlap
//! with each old interval. For `s = 4/3` this yields the familiar rows
//! `t1 + 1/3 t2`, `2/3 t2 + 2/3 t3`, `1/3 t3 + t4`, and so on.
//!
//! Weights are computed on the integer lattice scaled by `den(s)`, so they are
//! exact. When `N / s` is not an integer the uncovered tail of the old chain is
//! dropped; no short final row is ever emitted.

mod oracle;

pub use oracle::brute_force_coefficients;

use num_traits::{One, Zero};

use crate::chain::TangentChain;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Weights of the old segments that make up one new segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientRow {
    entries: Vec<(usize, Rational)>,
}

impl CoefficientRow {
    pub(crate) fn new(entries: Vec<(usize, Rational)>) -> Self {
        CoefficientRow { entries }
    }

    /// `(old_index, weight)` pairs, old indices contiguous and ascending.
    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn sum(&self) -> Rational {
        self.entries.iter().map(|(_, w)| *w).sum()
    }
}

/// Sparse matrix mapping `n_old` tangents to `n_new` tangents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMatrix {
    rows: Vec<CoefficientRow>,
    n_old: usize,
    s: Rational,
}

impl CoefficientMatrix {
    pub(crate) fn new(rows: Vec<CoefficientRow>, n_old: usize, s: Rational) -> Self {
        CoefficientMatrix { rows, n_old, s }
    }

    pub fn rows(&self) -> &[CoefficientRow] {
        &self.rows
    }

    pub fn n_old(&self) -> usize {
        self.n_old
    }

    pub fn n_new(&self) -> usize {
        self.rows.len()
    }

    pub fn scaling(&self) -> Rational {
        self.s
    }

    /// Total weight each old segment contributes across all rows.
    pub fn column_sums(&self) -> Vec<Rational> {
        let mut sums = vec![Rational::zero(); self.n_old];
        for (j, w) in self.rows.iter().flat_map(|r| r.entries()) {
            sums[*j] += *w;
        }
        sums
    }

    /// True when every old segment is consumed exactly once.
    pub fn is_full_coverage(&self) -> bool {
        self.column_sums().iter().all(One::is_one)
    }
}

/// Rejects `s` outside `(1, 2]`.
pub(crate) fn check_scaling(s: Rational) -> Result<()> {
    if s > Rational::one() && s <= Rational::from_integer(2) {
        Ok(())
    } else {
        Err(Error::InvalidScaling(s))
    }
}

/// `floor(n_old / s)` for `s = a/b`, erroring when it is zero.
pub(crate) fn new_segment_count(n_old: usize, s: Rational) -> Result<usize> {
    check_scaling(s)?;
    let (a, b) = (*s.numer() as i128, *s.denom() as i128);
    let n_new = (n_old as i128 * b / a) as usize;
    if n_new == 0 {
        return Err(Error::ChainTooShort { segments: n_old, s });
    }
    Ok(n_new)
}

/// Exact overlap weights for one rescaling step of `n_old` segments at
/// scaling parameter `s`.
pub fn overlap_coefficients(n_old: usize, s: Rational) -> Result<CoefficientMatrix> {
    let n_new = new_segment_count(n_old, s)?;
    let (a, b) = (*s.numer() as i128, *s.denom() as i128);

    // on the lattice scaled by b: new k spans [k·a, (k+1)·a], old j spans [j·b, (j+1)·b]
    let rows = (0..n_new as i128)
        .map(|k| {
            let (lo, hi) = (k * a, (k + 1) * a);
            let first = lo / b;
            let last = (hi + b - 1) / b;
            let entries = (first..last)
                .filter_map(|j| {
                    let overlap = hi.min((j + 1) * b) - lo.max(j * b);
                    (overlap > 0).then(|| (j as usize, Rational::new(overlap as i64, b as i64)))
                })
                .collect();
            CoefficientRow::new(entries)
        })
        .collect();
    Ok(CoefficientMatrix::new(rows, n_old, s))
}

/// Applies a coefficient matrix to a chain. The base point is kept; old
/// tangents are accumulated in ascending index order.
pub fn apply_coefficients<T: Scalar>(
    c: &TangentChain<T>,
    m: &CoefficientMatrix,
) -> Result<TangentChain<T>> {
    if c.segments() != m.n_old() {
        return Err(Error::invalid(format!(
            "coefficient matrix expects {} segments, chain has {}",
            m.n_old(),
            c.segments()
        )));
    }
    let d = c.dim();
    let mut out = Vec::with_capacity(m.n_new() * d);
    let mut acc = vec![T::zero(); d];
    for row in m.rows() {
        acc.iter_mut().for_each(|x| *x = T::zero());
        for (j, w) in row.entries() {
            let w = T::from_weight(w);
            for (x, t) in acc.iter_mut().zip(c.tangent(*j)) {
                *x = x.clone() + w.clone() * t.clone();
            }
        }
        out.extend(acc.iter().cloned());
    }
    Ok(TangentChain::from_parts_unchecked(c.base().to_vec(), out))
}

/// One rescaling step at rational `s` in `(1, 2]`; the new chain has
/// `floor(N / s)` tangents.
pub fn rescale_fractional<T: Scalar>(c: &TangentChain<T>, s: Rational) -> Result<TangentChain<T>> {
    let m = overlap_coefficients(c.segments(), s)?;
    apply_coefficients(c, &m)
}

/// Integer rescaling: each new tangent is the plain sum of `s` consecutive old
/// tangents, and the trailing `N mod s` old tangents are discarded.
pub fn rescale_integer<T: Scalar>(c: &TangentChain<T>, s: usize) -> Result<TangentChain<T>> {
    let s_rat = Rational::from_integer(s as i64);
    if s < 2 {
        return Err(Error::InvalidScaling(s_rat));
    }
    let n_new = c.segments() / s;
    if n_new == 0 {
        return Err(Error::ChainTooShort {
            segments: c.segments(),
            s: s_rat,
        });
    }
    let d = c.dim();
    let mut out = Vec::with_capacity(n_new * d);
    for k in 0..n_new {
        let mut acc = vec![T::zero(); d];
        for j in k * s..(k + 1) * s {
            for (x, t) in acc.iter_mut().zip(c.tangent(j)) {
                *x = x.clone() + t.clone();
            }
        }
        out.extend(acc);
    }
    Ok(TangentChain::from_parts_unchecked(c.base().to_vec(), out))
}
