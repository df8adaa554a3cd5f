//! Elliptic curves over Q(T) attached to f(X) = X(X+a)(X+b), and rational
//! parametric solutions obtained from multiples of their distinguished points.

mod group;
mod maps;
mod models;
mod solve;


pub use group::{ec_add, ec_double, ec_mul, CurvePoint, WeierstrassCurve};
pub use maps::{phi_forward, phi_inverse, Phi3};
pub use models::{
    canonical_point, make_curve, printed_coefficients, printed_double, ConstructionPath, CurveTag,
    Origin, MAX_PARAM,
};
pub use solve::{
    compose_full, doubling_remainder, non_torsion_certificate, solve_equation, CubicSolutionPair,
    EquationTag, FullSolution, FULL_ENTRY_NAMES,
};
