//! Forward-mode Taylor jets: the carrier of all residual evaluation.
//!
//! Two concrete types:
//! - [`Jet1`]: univariate Taylor data to order 4, used to push scalar
//!   functions of one intermediate variable through a [`Jet4`];
//! - [`Jet4`]: truncated multivariate expansion in (t, x, y, z) holding the
//!   value and every partial derivative with |alpha| <= 4.

mod funcs;
mod jet1;
mod jet4;

pub use funcs::*;
pub use jet1::Jet1;
pub use jet4::{Jet4, Var, JET4_LEN};
