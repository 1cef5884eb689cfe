use std::cmp::Ordering;

use super::{VarId, NUM_VARS};

/// A power product of registry variables.
///
/// Stored as a dense exponent vector; variables with exponent zero are
/// simply absent from [`Monomial::iter`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial {
    exps: [u32; NUM_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId, e: u32) -> Self {
        Monomial::one().with_exponent(v, e)
    }

    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m.exps[v.index()] += e;
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps[v.index()]
    }

    pub fn with_exponent(&self, v: VarId, e: u32) -> Self {
        let mut m = self.clone();
        m.exps[v.index()] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `(variable, exponent)` pairs with nonzero exponent, in index order.
    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (VarId::new(i).unwrap(), e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = self.clone();
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a -= b;
        }
        Some(m)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        m
    }
}

/// Graded lexicographic: total degree first, then exponents compared
/// variable by variable in registry index order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
