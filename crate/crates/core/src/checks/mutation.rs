//! Sign-flip mutants of the symbolic octic, used to confirm that the octic
//! checks are sensitive to the construction.

use super::curves::check_restriction_square;
use super::result::CheckResult;
use super::vertex::{check_vertex_structure, VertexSetup};
use crate::models::{octic_symbolic, specialize_symbolic, OcticParams, TangentFrame};
use crate::poly::{MPoly, Monomial};

pub const MUTATION_COUNT: usize = 10;

/// Order used for the vertex checks on a mutant.
const MUTANT_ORDER: usize = 8;

#[derive(Clone, Debug)]
pub struct Mutant {
    pub monomial: Monomial,
    pub poly: MPoly,
}

/// `q` with the sign of the term at `m` flipped.
pub fn flip_sign(q: &MPoly, m: &Monomial) -> MPoly {
    let c = q.coeff(m);
    q - &MPoly::term(q.ctx(), m.clone(), &c + &c)
}

/// Position of the `λ₀²·z₀²z₁²z₂²z₃²` term. `λ₀` enters `Q` only through
/// this term, so flipping it is the substitution `λ₀ ↦ iλ₀`: the mutant is
/// again a member of the family and no structural check can reject it.
pub fn lambda0_term() -> Monomial {
    octic_symbolic().terms().map(|(m, _)| m.clone()).find(|m| m.exps()[4] == 2).expect("λ₀² term")
}

/// A fixed catalog of evenly spaced terms of the symbolic octic, in its term
/// order, skipping the `λ₀²` term.
pub fn mutation_catalog() -> Vec<Mutant> {
    let q = octic_symbolic();
    let skip = lambda0_term();
    let monos: Vec<&Monomial> = q.terms().map(|(m, _)| m).filter(|m| **m != skip).collect();
    let step = monos.len() / MUTATION_COUNT;
    monos
        .into_iter()
        .step_by(step)
        .take(MUTATION_COUNT)
        .map(|m| Mutant { monomial: m.clone(), poly: flip_sign(&q, m) })
        .collect()
}

/// Runs the restriction check on the mutant, then the vertex checks at the
/// given parameters until one fails. Returns the failing results.
pub fn detect_mutant(mutant: &Mutant, params: &OcticParams, frame: &TangentFrame) -> Vec<CheckResult> {
    let r = check_restriction_square(&mutant.poly);
    if !r.passed() {
        return vec![r];
    }
    let q = specialize_symbolic(&mutant.poly, params);
    let mut setup = VertexSetup::new(params, frame, MUTANT_ORDER);
    setup.q_sym = Some(&mutant.poly);
    (0..4).map(|j| check_vertex_structure(&setup, &q, j)).find(|r| !r.passed()).into_iter().collect()
}
