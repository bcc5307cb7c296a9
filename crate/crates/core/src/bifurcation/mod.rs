//! Bifurcation equations: the polynomial conditions on `(λ, b)` under which
//! a turning point follows a prescribed itinerary back onto a turning point.

mod equation;
mod orbit;
mod wbound;

pub use equation::{
    coefficient_structure_check, derive_bifurcation_eq, eq11_residual, BifurcationEq, EquationSummary,
    StructureKind, StructureReport,
};
pub use orbit::{symbolic_orbit, LinearFormOrbit};
pub use wbound::{w_bound_check, WBoundMode, WBoundReport};
