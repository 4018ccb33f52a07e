//! Exact computations with the polynomial modules `Φ(λ, α, h)` and `Θ(λ, h)`
//! over `Vir(0, b)` and the Virasoro algebra.
//!
//! Both modules are `ℚ[s, t]` with the action of [`action`]; [`submod`]
//! classifies submodules, [`virsub`] handles the Virasoro-only case and
//! [`tensor`] the tensor products of irreducible `Φ` modules.

pub mod action;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod submod;
pub mod tensor;
pub mod virsub;

pub use error::{Error, ParseError, Result};
pub use poly::{BiPoly, FirstOrder, UniPoly, Var};
pub use rational::Rational;
