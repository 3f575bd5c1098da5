//! Binary codes under the asymmetric discrepancy `δ_r(y, x) = r·d10 + d01`:
//! minimum-discrepancy computation, Singleton/Hamming/Plotkin bounds and
//! their optimality conditions, Boolean functions and Walsh spectra,
//! GF(2^d) arithmetic, and bent-function code constructions.
//!
//! Numeric code is generic over [`Scalar`]; use [`Rational`] for exact
//! results and `f64` for quick floating-point checks.

pub mod boolean;
pub mod bounds;
pub mod cli;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod metric;
pub mod scalar;
pub mod word;

pub use boolean::{BooleanFunction, EvaluationSet, WalshSpectrum};
pub use bounds::{
    channel_r, classify_optimality, classify_parameters, BoundKind, BoundStatus, BoundVerdict,
    ChannelParams, OptimalityReport,
};
pub use code::Code;
pub use error::{Error, Result};
pub use metric::{
    delta_r, discrepancy_pair, hamming_distance, min_discrepancy, min_hamming, profile,
    DiscrepancyPair, DiscrepancyProfile, MinDiscrepancy, ProfileOptions,
};
pub use scalar::{parse_rational, rational, Scalar};
pub use word::Word;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Optimality report with exact arithmetic.
pub type ExactReport = OptimalityReport<Rational>;
/// Optimality report in double precision.
pub type FloatReport = OptimalityReport<f64>;
