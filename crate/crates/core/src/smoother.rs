//! Iteration driver.
//!
//! Every step picks `s = N / (N - 1)` for the current segment count `N`, so
//! `N / s` is an integer, the rescaling covers the whole chain and exactly one
//! segment is removed. Both chain ends are therefore kept as they are. The
//! number of steps is the only tuning parameter.

use crate::chain::{build_chain, reconstruct, Polyline, TangentChain};
use crate::error::{Error, Result};
use crate::rescale::rescale_fractional;
use crate::scalar::{Rational, Scalar};

/// Scaling parameter `N / (N - 1)` that shortens an `N`-segment chain by one.
pub fn optimal_scaling(n_segments: usize) -> Result<Rational> {
    if n_segments < 2 {
        return Err(Error::ChainTooShort {
            segments: n_segments,
            s: Rational::from_integer(2),
        });
    }
    Ok(Rational::new(n_segments as i64, n_segments as i64 - 1))
}

/// Percentage of points removed: `(1 - (N_p + 1) / (N + 1)) * 100`.
pub fn compression_ratio(n_original_segments: usize, n_current_segments: usize) -> Result<f64> {
    if n_current_segments < 1 || n_current_segments > n_original_segments {
        return Err(Error::invalid(format!(
            "current segment count {n_current_segments} must lie in 1..={n_original_segments}"
        )));
    }
    let kept = (n_current_segments + 1) as f64 / (n_original_segments + 1) as f64;
    Ok((1.0 - kept) * 100.0)
}

/// Smallest step count whose compression ratio reaches `target_pct` for a
/// chain of `n_segments` segments.
pub fn steps_for_ratio(n_segments: usize, target_pct: f64) -> Result<usize> {
    if !(0.0..100.0).contains(&target_pct) {
        return Err(Error::invalid(format!(
            "target compression ratio {target_pct}% must lie in [0, 100)"
        )));
    }
    if n_segments < 1 {
        return Err(Error::invalid("chain has no segments"));
    }
    let max = n_segments - 1;
    let ratio = |k: usize| compression_ratio(n_segments, n_segments - k);
    let estimate = (target_pct / 100.0 * (n_segments + 1) as f64).ceil() as usize;
    // correct the float estimate in either direction
    let mut k = estimate.min(max);
    while k > 0 && ratio(k - 1)? >= target_pct {
        k -= 1;
    }
    while ratio(k)? < target_pct {
        if k == max {
            return Err(Error::TooManySteps {
                requested: estimate.max(max + 1),
                max,
            });
        }
        k += 1;
    }
    Ok(k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    /// 1-based step index.
    pub step: usize,
    pub n_before: usize,
    pub s: Rational,
    pub n_after: usize,
    /// Relative to the segment count the run started from.
    pub compression_ratio_pct: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SmoothingTrace {
    steps: Vec<StepRecord>,
}

impl SmoothingTrace {
    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> Option<&StepRecord> {
        self.steps.last()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, StepRecord> {
        self.steps.iter()
    }
}

impl<'a> IntoIterator for &'a SmoothingTrace {
    type Item = &'a StepRecord;
    type IntoIter = std::slice::Iter<'a, StepRecord>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoothingResult<T> {
    pub output: Polyline<T>,
    pub trace: SmoothingTrace,
    pub input_points: usize,
    pub output_points: usize,
}

/// Step-by-step smoother over a tangent chain.
///
/// `smooth` is a thin wrapper around this; use it directly to inspect the
/// chain between steps.
#[derive(Debug, Clone)]
pub struct Smoother<T> {
    chain: TangentChain<T>,
    original_segments: usize,
    trace: SmoothingTrace,
}

impl<T: Scalar> Smoother<T> {
    pub fn new(p: &Polyline<T>) -> Self {
        Smoother {
            chain: build_chain(p),
            original_segments: p.segments(),
            trace: SmoothingTrace::default(),
        }
    }

    pub fn chain(&self) -> &TangentChain<T> {
        &self.chain
    }

    pub fn trace(&self) -> &SmoothingTrace {
        &self.trace
    }

    /// Steps still possible before the chain is a single segment.
    pub fn remaining(&self) -> usize {
        self.chain.segments() - 1
    }

    pub fn step(&mut self) -> Result<&StepRecord> {
        let n_before = self.chain.segments();
        let s = optimal_scaling(n_before)?;
        self.chain = rescale_fractional(&self.chain, s)?;
        let n_after = self.chain.segments();
        debug_assert_eq!(n_after, n_before - 1);
        self.trace.steps.push(StepRecord {
            step: self.trace.len() + 1,
            n_before,
            s,
            n_after,
            compression_ratio_pct: compression_ratio(self.original_segments, n_after)?,
        });
        Ok(self.trace.steps.last().unwrap())
    }

    pub fn finish(self) -> SmoothingResult<T> {
        let output = reconstruct(&self.chain);
        SmoothingResult {
            input_points: self.original_segments + 1,
            output_points: output.len(),
            output,
            trace: self.trace,
        }
    }
}

/// Runs `steps` rescaling iterations and rebuilds the point sequence.
pub fn smooth<T: Scalar>(p: &Polyline<T>, steps: usize) -> Result<SmoothingResult<T>> {
    let max = p.segments() - 1;
    if steps > max {
        return Err(Error::TooManySteps {
            requested: steps,
            max,
        });
    }
    if steps == 0 {
        return Ok(SmoothingResult {
            output: p.clone(),
            trace: SmoothingTrace::default(),
            input_points: p.len(),
            output_points: p.len(),
        });
    }
    let mut smoother = Smoother::new(p);
    for _ in 0..steps {
        smoother.step()?;
    }
    Ok(smoother.finish())
}

/// Smooths with the fewest steps whose compression ratio is at least
/// `target_pct`.
pub fn smooth_to_ratio<T: Scalar>(p: &Polyline<T>, target_pct: f64) -> Result<SmoothingResult<T>> {
    smooth(p, steps_for_ratio(p.segments(), target_pct)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize) -> Polyline<f64> {
        let pts = (0..n)
            .map(|i| vec![i as f64 * 0.2, ((i * 7919) % 13) as f64 / 13.0])
            .collect();
        Polyline::new(pts).unwrap()
    }

    #[test]
    fn optimal_scaling_values() {
        assert_eq!(optimal_scaling(4).unwrap(), Rational::new(4, 3));
        assert_eq!(optimal_scaling(2).unwrap(), Rational::from_integer(2));
        assert_eq!(optimal_scaling(100).unwrap(), Rational::new(100, 99));
        assert!(matches!(
            optimal_scaling(1),
            Err(Error::ChainTooShort { .. })
        ));
        assert!(matches!(
            optimal_scaling(0),
            Err(Error::ChainTooShort { .. })
        ));
    }

    #[test]
    fn compression_ratio_values() {
        assert_eq!(compression_ratio(100, 100).unwrap(), 0.0);
        assert!((compression_ratio(100, 5).unwrap() - (1.0 - 6.0 / 101.0) * 100.0).abs() < 1e-12);
        assert!((compression_ratio(100, 5).unwrap() - 94.059_405_940_594).abs() < 1e-9);
        assert!((compression_ratio(100, 50).unwrap() - 49.504_950_495_049_5).abs() < 1e-9);
        assert!(compression_ratio(100, 0).is_err());
        assert!(compression_ratio(10, 11).is_err());
    }

    #[test]
    fn steps_for_ratio_values() {
        assert_eq!(steps_for_ratio(100, 94.0).unwrap(), 95);
        assert_eq!(steps_for_ratio(100, 0.0).unwrap(), 0);
        // exactly reachable targets are not overshot
        let exact = compression_ratio(100, 50).unwrap();
        assert_eq!(steps_for_ratio(100, exact).unwrap(), 50);
        assert!(matches!(
            steps_for_ratio(2, 99.0),
            Err(Error::TooManySteps { max: 1, .. })
        ));
        assert!(steps_for_ratio(10, 100.0).is_err());
        assert!(steps_for_ratio(10, -1.0).is_err());
        assert!(steps_for_ratio(10, f64::NAN).is_err());
    }

    #[test]
    fn zero_steps_is_identity() {
        let p = grid(11);
        let r = smooth(&p, 0).unwrap();
        assert_eq!(r.output, p);
        assert!(r.trace.is_empty());
        assert_eq!(r.output_points, 11);
    }

    #[test]
    fn too_many_steps() {
        let p = grid(11);
        assert!(matches!(
            smooth(&p, 10),
            Err(Error::TooManySteps {
                requested: 10,
                max: 9
            })
        ));
        assert_eq!(smooth(&p, 9).unwrap().output.len(), 2);
    }

    #[test]
    fn two_points_cannot_step() {
        let p = Polyline::new(vec![vec![0.0], vec![1.0]]).unwrap();
        assert_eq!(smooth(&p, 0).unwrap().output, p);
        assert!(matches!(
            smooth(&p, 1),
            Err(Error::TooManySteps { max: 0, .. })
        ));
    }

    #[test]
    fn trace_schedule() {
        let r = smooth(&grid(101), 95).unwrap();
        assert_eq!(r.output_points, 6);
        assert_eq!(r.trace.len(), 95);
        let mut last_cr = 0.0;
        for (i, rec) in r.trace.iter().enumerate() {
            assert_eq!(rec.step, i + 1);
            assert_eq!(rec.n_before, 100 - i);
            assert_eq!(rec.n_after, rec.n_before - 1);
            assert_eq!(
                rec.s,
                Rational::new(rec.n_before as i64, rec.n_after as i64)
            );
            assert!(rec.compression_ratio_pct > last_cr);
            last_cr = rec.compression_ratio_pct;
        }
    }

    #[test]
    fn x_grid_after_95_and_96_steps() {
        let p = grid(101);
        let xs: Vec<f64> = smooth(&p, 95).unwrap().output.axis(0).copied().collect();
        for (x, e) in xs.iter().zip([0.0, 4.0, 8.0, 12.0, 16.0, 20.0]) {
            assert!((x - e).abs() < 1e-9, "{xs:?}");
        }
        let xs: Vec<f64> = smooth(&p, 96).unwrap().output.axis(0).copied().collect();
        assert_eq!(xs.len(), 5);
        for (x, e) in xs.iter().zip([0.0, 5.0, 10.0, 15.0, 20.0]) {
            assert!((x - e).abs() < 1e-9, "{xs:?}");
        }
    }

    #[test]
    fn to_ratio() {
        let r = smooth_to_ratio(&grid(101), 94.0).unwrap();
        assert_eq!(r.trace.len(), 95);
        assert!((r.trace.last().unwrap().compression_ratio_pct - 94.0594).abs() < 1e-4);
        assert_eq!(smooth_to_ratio(&grid(101), 0.0).unwrap().output, grid(101));
        assert!(matches!(
            smooth_to_ratio(&grid(3), 99.0),
            Err(Error::TooManySteps { .. })
        ));
    }

    #[test]
    fn smoother_stops_at_one_segment() {
        let mut sm = Smoother::new(&grid(4));
        assert_eq!(sm.remaining(), 2);
        sm.step().unwrap();
        sm.step().unwrap();
        assert_eq!(sm.remaining(), 0);
        assert!(matches!(sm.step(), Err(Error::ChainTooShort { .. })));
    }
}
