//! Exact random-walk mixing experiments on regular graphs.
//!
//! Graphs are built by [`builders`], walked exactly by [`walk`], analysed
//! spectrally by [`spectral`] and compared with closed forms in [`theory`].

pub mod builders;
pub mod error;
pub mod export;
pub mod graph;
pub mod scalar;
pub mod spectral;
pub mod theory;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{DirectedEdgeSpace, Provenance, RegularGraph};
pub use scalar::{Field, Real};

pub type ProbabilityVector64 = walk::ProbabilityVector<f64>;
pub type ProbabilityVector32 = walk::ProbabilityVector<f32>;
pub type MixingCurve64 = walk::MixingCurve<f64>;
pub type MixingCurve32 = walk::MixingCurve<f32>;
pub type TreeRadialTable64 = walk::TreeRadialTable<f64>;
pub type ExactTreeRadialTable = walk::TreeRadialTable<num_rational::BigRational>;
pub type CutoffPrediction64 = theory::CutoffPrediction<f64>;
pub type LpPrediction64 = theory::LpPrediction<f64>;
