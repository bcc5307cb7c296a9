//! Ordinary and exceptional turning points, the search for exceptional
//! itineraries, codimension-one curves and renormalization checks.

mod cascade;
mod classify;
mod codim1;
mod renorm;

pub use cascade::{
    cascade_search, extract_factor, insert_blocks, CascadeFailure, CascadeOptions, CascadeOutcome, ExceptionalRecord,
    RealizedRoot,
};
pub use classify::{classify_turning_point, controlling_itinerary, Classification};
pub use codim1::{codim1_analyze, hyperbolic_approx_obstruction, Codim1Report, Obstruction, ValidityWindow};
pub use renorm::{image_of, nonrigidity_scan, renormalization_check, NonrigidityReport, RenormReport, ScanRow};
