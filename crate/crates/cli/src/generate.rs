//! Synthetic test signals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rgsmooth::Polyline64;

use crate::run::CliError;

/// Noise-free curve underlying the `sine-noise` generator.
pub fn clean_signal(x: f64) -> f64 {
    x.sin()
}

/// `n_points` samples `(x_i, sin(x_i) + e_i)` on the regular grid
/// `x_i = x_max * i / (n_points - 1)`, with `e_i ~ N(0, sigma^2)` drawn from a
/// ChaCha8 generator seeded with `seed`.
pub fn sine_noise(
    n_points: usize,
    x_max: f64,
    sigma: f64,
    seed: u64,
) -> Result<Polyline64, CliError> {
    if n_points < 2 {
        return Err(CliError::Usage(format!(
            "need at least 2 points, got {n_points}"
        )));
    }
    if !(x_max.is_finite() && x_max > 0.0) {
        return Err(CliError::Usage(format!(
            "x-max must be a positive finite number, got {x_max}"
        )));
    }
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(CliError::Usage(format!(
            "sigma must be finite and >= 0, got {sigma}"
        )));
    }
    let noise = Normal::new(0.0, sigma).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let last = (n_points - 1) as f64;
    let coords = (0..n_points)
        .flat_map(|i| {
            let x = x_max * i as f64 / last;
            [x, clean_signal(x) + noise.sample(&mut rng)]
        })
        .collect();
    Ok(Polyline64::from_flat(coords, 2)?)
}
