//! Tick-enumeration oracle for the overlap coefficients.
//!
//! Each old segment is cut into `den(s)` equal ticks. Because new-segment
//! boundaries `k·s` fall on multiples of `1/den(s)`, every tick lies inside
//! exactly one new segment; counting ticks per (new, old) pair gives the
//! weights without any interval arithmetic.

use std::collections::BTreeMap;

use super::{check_scaling, CoefficientMatrix, CoefficientRow};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Same contract as [`super::overlap_coefficients`], computed by enumeration.
pub fn brute_force_coefficients(n_old: usize, s: Rational) -> Result<CoefficientMatrix> {
    check_scaling(s)?;
    let ticks_per_old = *s.denom() as usize;
    let ticks_per_new = *s.numer() as usize;

    let mut counts: Vec<BTreeMap<usize, i64>> = Vec::new();
    let mut filled: Vec<usize> = Vec::new();
    for tick in 0..n_old * ticks_per_old {
        let new = tick / ticks_per_new;
        if new == counts.len() {
            counts.push(BTreeMap::new());
            filled.push(0);
        }
        *counts[new].entry(tick / ticks_per_old).or_default() += 1;
        filled[new] += 1;
    }

    // a new segment that did not collect a full s worth of ticks is dropped
    if filled.last().is_some_and(|&f| f < ticks_per_new) {
        counts.pop();
    }
    if counts.is_empty() {
        return Err(Error::ChainTooShort { segments: n_old, s });
    }

    let rows = counts
        .into_iter()
        .map(|row| {
            CoefficientRow::new(
                row.into_iter()
                    .map(|(j, c)| (j, Rational::new(c, ticks_per_old as i64)))
                    .collect(),
            )
        })
        .collect();
    Ok(CoefficientMatrix::new(rows, n_old, s))
}
