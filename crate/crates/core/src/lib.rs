//! Renormalization-group smoothing of ordered point sequences.
//!
//! A curve is turned into a tangent chain (a base point plus difference
//! vectors), and the chain is repeatedly rescaled: each new tangent is an
//! overlap-weighted sum of old tangents, with the scaling parameter picked so
//! the chain loses exactly one segment per step. The result is smoothed and
//! compressed at the same time, in any number of dimensions.
//!
//! All geometry is generic over [`Scalar`], which is implemented for `f32`,
//! `f64` and the arbitrary-precision [`BigRational`]. Scaling parameters and
//! overlap weights are always exact [`Rational`]s.
//!
//! ```
//! use rgsmooth::{smooth, Polyline64};
//!
//! let line = Polyline64::new(vec![
//!     vec![0.0, 0.0],
//!     vec![1.0, 2.0],
//!     vec![2.0, -1.0],
//!     vec![3.0, 0.0],
//! ])
//! .unwrap();
//! let result = smooth(&line, 2).unwrap();
//! assert_eq!(result.output.len(), 2);
//! assert_eq!(result.output.first(), line.first());
//! ```

pub mod chain;
pub mod error;
pub mod io;
pub mod rescale;
pub mod scalar;
pub mod smoother;

pub use chain::{build_chain, reconstruct, Polyline, TangentChain};
pub use error::{Error, Result};
pub use io::{emit_svg, read_points, write_points, Columns, CsvSchema};
pub use rescale::{
    apply_coefficients, brute_force_coefficients, overlap_coefficients, rescale_fractional,
    rescale_integer, CoefficientMatrix, CoefficientRow,
};
pub use scalar::{BigRational, Rational, Scalar};
pub use smoother::{
    compression_ratio, optimal_scaling, smooth, smooth_to_ratio, steps_for_ratio, Smoother,
    SmoothingResult, SmoothingTrace, StepRecord,
};

pub type Polyline32 = Polyline<f32>;
pub type Polyline64 = Polyline<f64>;
pub type ExactPolyline = Polyline<BigRational>;

pub type TangentChain32 = TangentChain<f32>;
pub type TangentChain64 = TangentChain<f64>;
pub type ExactTangentChain = TangentChain<BigRational>;

pub type SmoothingResult64 = SmoothingResult<f64>;
pub type ExactSmoothingResult = SmoothingResult<BigRational>;
