//! Exact analysis of doubly-affine integer squares.
//!
//! A square is doubly-affine (DA) when every row and column sums to the same
//! linesum; Latin squares, semimagic and magic squares are all DA. This crate
//! answers questions about their matrix powers with exact arithmetic:
//!
//! * [`IntSquare`] / [`RationalSquare`]: dense arbitrary-precision matrices.
//! * [`CharPoly`]: exact characteristic polynomials (Faddeev–LeVerrier).
//! * [`classify`]: line sums, Latin/magic/associative/pandiagonal/Franklin flags,
//!   Frenicle canonical form.
//! * [`spectra`]: singular values, R-index, Compression, Spread, Gerschgorin disks.
//! * [`structure`]: nilpotent decomposition and the Jordan profile of eigenvalue 0.
//! * [`powering`]: power trajectories and constancy onset.
//! * [`catalog`] / [`compound`]: the named squares and compound construction.
//! * [`census`]: exhaustive enumeration of the 880 order-4 magic squares.

pub mod catalog;
pub mod census;
pub mod charpoly;
pub mod classify;
pub mod compound;
mod eigen;
mod elimination;
mod error;
mod jacobi;
pub mod parse;
pub mod powering;
pub mod serde_big;
pub mod rational;
pub mod spectra;
pub mod square;
pub mod structure;
pub mod symmetry;

pub use charpoly::CharPoly;
pub use classify::{classify, line_sums, ClassificationFlags, LineSumReport, TypeLabel};
pub use eigen::{eigenvalues, Eigenvalue};
pub use error::{Error, Result};
pub use parse::parse_square;
pub use powering::{constancy_onset, trajectory, PowerStepRecord, PowerTrajectory};
pub use rational::RationalSquare;
pub use spectra::{SpectralSummary, DEFAULT_SV_TOLERANCE};
pub use square::IntSquare;
pub use structure::JordanZeroProfile;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
