//! Generalized gamma functions over real sequences and arithmetic progressions.
//!
//! For a real sequence `A = (a_n)` with `Σ 1/a_n² < ∞` the function
//!
//! ```text
//! Γ_A(s) = ∏_{n≥0} (1 + 1/a_n)^s / (1 + s/a_n)
//! ```
//!
//! is meromorphic with poles at `-a_n`. For `a_n = a + n·r` it is written
//! `Γ_{a,r}` and satisfies `Γ(s) = Γ_{1,1}(s) / s`.
//!
//! The crate offers two independent evaluation routes:
//!
//! * [`seqgamma`]: truncated products in log space with rigorous tail bounds,
//!   for any sequence exposing a tail bound on `Σ 1/a_n²`;
//! * [`argamma`]: closed forms for the arithmetic family through the
//!   classical Γ, Ψ, β and ζ of [`classical`].
//!
//! [`verify`] runs the identity registry of [`argamma::identities`] over a
//! fixed complex grid, and [`cli`] is the command-line front end.

pub mod argamma;
pub mod classical;
pub mod cli;
mod error;
pub mod seqgamma;
pub mod summation;
pub mod verify;

pub use error::{GammaError, Result};
pub use num_complex::Complex64;

/// Absolute distance to a pole under which evaluation is refused.
pub const POLE_THRESHOLD: f64 = 1e-8;

/// `rel(u, v) = |u − v| / max(|u|, |v|, 1)`: absolute near zero, relative
/// for large values.
pub fn rel_residual(u: Complex64, v: Complex64) -> f64 {
    let scale = u.norm().max(v.norm()).max(1.0);
    (u - v).norm() / scale
}
