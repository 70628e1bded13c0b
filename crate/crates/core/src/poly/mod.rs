//! Exact sparse multivariate polynomial algebra over ℚ and ℚ(i).

mod context;
mod linalg;
mod modular;
mod monomial;
mod mpoly;
mod parse;
mod resultant;
mod univariate;

pub use context::VarContext;
pub use linalg::{determinant, kernel_3x4, solve_linear, ExactRing};
pub use modular::solve_linear_modular;
pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use resultant::{distinct_complex_root_count, resultant, BinaryForm};
pub use univariate::UPoly;

/// Exact quotient together with a separated constant factor, so a caller
/// checking `p = c·q²` sees `c` explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledQuotient<F: crate::arith::Field> {
    pub constant: F,
    pub quotient: MPoly<F>,
}

/// Divides `p` by `q` and splits off the content, so that
/// `p = constant · q · quotient` with `quotient` having leading coefficient 1.
pub fn exact_divide_scaled<F: crate::arith::Field>(
    p: &MPoly<F>,
    q: &MPoly<F>,
) -> Result<ScaledQuotient<F>, crate::error::PolyError> {
    let r = p.exact_divide(q)?;
    let constant = match r.leading_term() {
        Some((_, c)) => c.clone(),
        None => F::zero(),
    };
    let quotient = match constant.inv() {
        Some(inv) => r.scale(&inv),
        None => r,
    };
    Ok(ScaledQuotient { constant, quotient })
}
