use std::cmp::Ordering;

/// Exponent vector ordered graded-lexicographically: total degree first, then
/// lexicographic with the first context variable largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { deg, exps: exps.into_boxed_slice() }
    }

    pub fn one(arity: usize) -> Monomial {
        Monomial { deg: 0, exps: vec![0; arity].into_boxed_slice() }
    }

    pub fn var(arity: usize, i: usize) -> Monomial {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    /// Total degree over the variables selected by `mask`.
    pub fn degree_in(&self, mask: &[bool]) -> u32 {
        self.exps.iter().zip(mask).filter(|(_, &m)| m).map(|(e, _)| *e).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial { deg: self.deg + o.deg, exps: self.exps.iter().zip(o.exps.iter()).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self.divides(o)`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial { deg: o.deg - self.deg, exps: o.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect() }
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.exps.to_vec();
        v[i] = e;
        Monomial::new(v)
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.deg.cmp(&o.deg).then_with(|| self.exps.cmp(&o.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x2 = Monomial::new(vec![2, 0]);
        let xy = Monomial::new(vec![1, 1]);
        let y2 = Monomial::new(vec![0, 2]);
        let x = Monomial::new(vec![1, 0]);
        assert!(x2 > xy && xy > y2 && y2 > x);
    }
}
