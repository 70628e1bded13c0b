//! Multi-modular solving of rational linear systems.
//!
//! The system is cleared to integers, solved modulo a sequence of 62-bit
//! primes, combined by CRT and lifted back by rational reconstruction. The
//! result is a candidate; callers check it exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rat;

const PRIME_CEILING: u64 = 1 << 62;

/// Primes just below 2⁶², in decreasing order.
fn primes() -> impl Iterator<Item = u64> {
    (1..PRIME_CEILING).rev().step_by(2).filter(|&n| primal::is_prime(n))
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

/// Gauss-Jordan modulo `p`: the pivot columns and the solution with free
/// variables zero, or `None` if inconsistent.
fn solve_mod(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<(Vec<usize>, Vec<u64>)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u64>> = a.iter().zip(b).map(|(r, &x)| r.iter().copied().chain([x]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], p - 2, p);
        for x in m[r].iter_mut().skip(c) {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for k in c..=cols {
                    row[k] = (row[k] + p - mul_mod(f, pivot_row[k], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[cols] != 0) {
        return None;
    }
    let mut x = vec![0; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols];
    }
    Some((pivots, x))
}

/// `n/d ≡ a (mod m)` with `|n|, d ≤ √(m/2)`, if such a fraction exists.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), &r0 - &q * &r1);
        (t0, t1) = (t1.clone(), &t0 - &q * &t1);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// Candidate solution of `A·x = b` with free variables zero. `None` if the
/// system is inconsistent modulo two primes, or if no candidate stabilized
/// within `max_primes` primes.
pub fn solve_linear_modular(a: &[Vec<Rat>], b: &[Rat], max_primes: usize) -> Option<Vec<Rat>> {
    // clear denominators row by row
    let int_rows: Vec<(Vec<BigInt>, BigInt)> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let l = row.iter().chain([rhs]).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let scale = |c: &Rat| (c.numer() * &l) / c.denom();
            (row.iter().map(scale).collect(), scale(rhs))
        })
        .collect();
    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = Vec::new();
    let mut pivots: Option<Vec<usize>> = None;
    let mut previous: Option<Vec<Rat>> = None;
    let mut inconsistent = 0;
    for p in primes().take(max_primes) {
        let am: Vec<Vec<u64>> = int_rows.iter().map(|(r, _)| r.iter().map(|c| reduce(c, p)).collect()).collect();
        let bm: Vec<u64> = int_rows.iter().map(|(_, c)| reduce(c, p)).collect();
        let Some((piv, x)) = solve_mod(&am, &bm, p) else {
            inconsistent += 1;
            if inconsistent == 2 {
                return None;
            }
            continue;
        };
        match &pivots {
            Some(known) if *known != piv => continue,
            _ => pivots = Some(piv),
        }
        let pb = BigInt::from(p);
        if residues.is_empty() {
            residues = x.iter().map(|&v| BigInt::from(v)).collect();
        } else {
            // x ≡ r (mod M), x ≡ v (mod p)  ⇒  x = r + M·((v − r)·M⁻¹ mod p)
            let m_inv = pow_mod(reduce(&modulus, p), p - 2, p);
            for (r, &v) in residues.iter_mut().zip(&x) {
                let diff = (v + p - reduce(r, p)) % p;
                let k = mul_mod(diff, m_inv, p);
                *r = &*r + &modulus * BigInt::from(k);
            }
        }
        modulus *= pb;
        let lifted: Option<Vec<Rat>> = residues.iter().map(|r| rational_reconstruct(r, &modulus)).collect();
        if let Some(lifted) = lifted {
            if previous.as_ref() == Some(&lifted) {
                return Some(lifted);
            }
            previous = Some(lifted);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn reconstructs_fractions() {
        let a = vec![vec![r(2, 1), r(1, 3), r(0, 1)], vec![r(0, 1), r(5, 1), r(-7, 2)]];
        let b = vec![r(1, 1), r(-2, 9)];
        let x = solve_linear_modular(&a, &b, 8).unwrap();
        for (row, want) in a.iter().zip(&b) {
            let got = row.iter().zip(&x).fold(Rat::zero(), |acc, (p, q)| acc + p.clone() * q);
            assert_eq!(&got, want);
        }
        assert_eq!(x, crate::poly::solve_linear(&a, &b).unwrap());
        let a = vec![vec![r(1, 1), r(1, 1)], vec![r(2, 1), r(2, 1)]];
        assert!(solve_linear_modular(&a, &[r(1, 1), r(3, 1)], 8).is_none());
    }

    #[test]
    fn large_entries() {
        let big = Rat::new(BigInt::from(10).pow(40) + 7, BigInt::from(3).pow(30));
        let a = vec![vec![Rat::from(3)]];
        let x = solve_linear_modular(&a, std::slice::from_ref(&big), 12).unwrap();
        assert_eq!(x[0].clone() * Rat::from(3), big);
    }
}
