//! Exact computation of genus-zero and genus-one Gromov-Witten invariants
//! and genus-zero BPS numbers for local Calabi-Yau n-folds of the form
//! Tot(O(-c_1) + ... + O(-c_m) -> P^{n-m}).
//!
//! All arithmetic is exact big-rational; there is no floating point anywhere.
//! Everything is immutable values and pure functions, so results are
//! bit-deterministic and safe for concurrent use.

pub mod cli;
pub mod exactmath;
pub mod genus0;
pub mod genus1;
pub mod geometry;
pub mod ifunctions;
pub mod tables;
pub mod verify;

pub use exactmath::{QSeries, Rational, SeriesError};
pub use geometry::{GeometryError, InvariantKind, SplitGeometry};
