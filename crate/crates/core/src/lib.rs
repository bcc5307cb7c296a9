//! Exact-arithmetic toolkit for constant-slope piecewise-linear multimodal
//! interval maps.
//!
//! The crate derives bifurcation equations from turning-point itineraries,
//! searches for and certifies exceptional itineraries (slopes at which every
//! bifurcation polynomial vanishes), and detects codimension-one hyperbolic
//! maps. Every comparison between orbit points and turning points is decided
//! exactly, including at algebraic slopes.

pub mod algebra;
pub mod bifurcation;
pub mod error;
pub mod exceptional;
pub mod io;
pub mod itinerary;
pub mod plot;
pub mod pwl;
pub mod reproduce;

pub use error::{Error, Result};
