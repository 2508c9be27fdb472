//! Bürgi's arithmetical way to a sine table, next to the classical one.
//!
//! The centerpiece is the exact two-pass column iteration ([`kunstweg`])
//! whose normalized columns converge to `sin(j*pi/2n)`; the [`classical`]
//! module builds the same values the old way (polygon chords, Ptolemy's
//! theorems, a bracket for crd 1°) and serves as a method-independent check.
//! [`tablegen`] produces full degree and minute tables, [`sexagesimal`]
//! handles the historical base-60 notation exactly, and
//! [`prosthaphaeresis`] demonstrates multiplication by table lookup.
//!
//! All core arithmetic is exact (big integers, dyadic or decimal fixed
//! point); rounding is confined to explicitly requested output precisions
//! and is always half-away-from-zero.

pub mod classical;
pub mod dec;
mod error;
pub mod kunstweg;
pub mod prosthaphaeresis;
pub mod sexagesimal;
pub mod tablegen;

pub use dec::Dec;
pub use error::{Error, Result};
pub use kunstweg::{DyadicVector, StopRule};
pub use sexagesimal::Sexagesimal;
pub use tablegen::{Provenance, SineTable};
