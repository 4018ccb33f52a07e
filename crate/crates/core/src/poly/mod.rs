//! Sparse exact polynomials in `t` and in `(s, t)`.

mod bi;
mod first_order;
pub(crate) mod text;
mod uni;

pub use bi::{BiPoly, Mono, Var};
pub use first_order::FirstOrder;
pub use uni::{gcd_all, gcd_or_zero, UniPoly};
