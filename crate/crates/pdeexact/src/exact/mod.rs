//! Exact-rational polynomial algebra, flag differential operators, and the
//! polynomial/trig-polynomial solution basis generators.

pub mod bases;
pub mod flag;
pub mod poly;

pub use bases::{
    dissipative_basis, epd_basis, klein_gordon_basis, klein_gordon_pair, xi_poly,
    xi_recurrence_check, TPowPoly, TrigPoly,
};
pub use flag::{
    brute_force_kernel, flag_basis, monomials_up_to, right_inverse_series, same_span,
    FlagOperator, GradedBound,
};
pub use poly::{rat, rat_int, rat_to_f64, Expo, PolyJson, Rat, RationalPoly, TermJson};
