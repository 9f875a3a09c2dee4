//! Finite-activity Lévy-Ito primitives.

mod calculus;
mod grid;
mod measure;
mod noise;
mod path;

pub use calculus::{
    compensate, product_coefficients, quotient_coefficients, SymmetricCoefficients,
};
pub use grid::TimeGrid;
pub use measure::{JumpAtom, LevyMeasure};
pub use noise::{sample_noise, JumpEvent, NoiseRealization};
pub use path::{geometric_path, integrate, Dynamics, PathSeries, Proportional};
