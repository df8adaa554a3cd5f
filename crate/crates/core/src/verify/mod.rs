//! Exact verification of candidate solutions and an independent search oracle.

mod search;
mod system;

pub use search::{brute_force, brute_force_range, canonical};
pub use system::{
    identity_certificate, verify_polygonal_display, verify_system, SolutionTuple,
    VerificationReport, ENTRY_NAMES, POLYGONAL_DISPLAY,
};
