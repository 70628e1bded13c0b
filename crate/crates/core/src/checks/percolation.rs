//! Degree bookkeeping for hyperbolic non-percolation.
//!
//! For an entire curve in a plane section meeting `n` lines, the Second Main
//! Theorem bounds `(n − 3)·T` by the sum of truncated counting functions,
//! truncation bounds that sum by `k·N(D)`, and the First Main Theorem bounds
//! `N(D)` by `d·T`. A positive margin `(n − 3) − k·d` makes the chain
//! contradictory for a nonconstant curve.

use serde::{Deserialize, Serialize};

use super::result::CheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PercolationParams {
    pub n_lines: u32,
    pub truncation: u32,
    pub divisor_degree: u32,
}

impl PercolationParams {
    /// The fifteen-plane construction: 14 lines, truncation 2, quintic.
    pub const PLANES15: PercolationParams = PercolationParams { n_lines: 14, truncation: 2, divisor_degree: 5 };
}

/// `(margin, certified)`; `certified` only says the degree chain is
/// contradictory, never that a particular surface is hyperbolic.
pub fn non_percolation_margin(p: PercolationParams) -> Result<(i64, bool), String> {
    if p.n_lines == 0 || p.divisor_degree == 0 {
        return Err("line count and divisor degree must be positive".into());
    }
    let margin = (i64::from(p.n_lines) - 3) - i64::from(p.truncation) * i64::from(p.divisor_degree);
    Ok((margin, margin > 0))
}

pub fn check_percolation(p: PercolationParams) -> CheckResult {
    let mut r = CheckResult::new("planes.percolation_margin");
    match non_percolation_margin(p) {
        Ok((margin, certified)) => {
            r.witness("chain", format!("({} - 3)·T ≤ {}·{}·T", p.n_lines, p.truncation, p.divisor_degree));
            r.witness("margin", margin);
            r.require("certified", certified, format!("margin {margin} ≤ 0"));
        }
        Err(e) => {
            r.fail("params", e);
        }
    }
    r.note("certifies only the arithmetic contradiction of the degree chain; sufficiency only");
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u32, k: u32, d: u32) -> Result<(i64, bool), String> {
        non_percolation_margin(PercolationParams { n_lines: n, truncation: k, divisor_degree: d })
    }

    #[test]
    fn margins() {
        assert_eq!(m(14, 2, 5), Ok((1, true)));
        assert_eq!(m(5, 2, 6), Ok((-10, false)));
        assert_eq!(m(3, 0, 1), Ok((0, false)));
        assert!(m(0, 2, 5).is_err());
        assert_eq!(m(4, 1, 1), Ok((0, false)));
    }

    #[test]
    fn monotone() {
        for n in 4..20 {
            for k in 0..4 {
                for d in 1..8 {
                    let base = m(n, k, d).unwrap().0;
                    assert_eq!(m(n + 1, k, d).unwrap().0, base + 1);
                    assert_eq!(m(n, k, d + 1).unwrap().0, base - i64::from(k));
                }
            }
        }
    }
}
