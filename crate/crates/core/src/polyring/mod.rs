//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables come from a fixed registry of eight names (see [`VarId`]).
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded-lexicographic order, so the leading term is always the last key
//! and canonical printing walks the map in reverse.

mod eval;
mod monomial;
mod ops;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use eval::{FloatEval, FloatPolynomial};
pub use monomial::Monomial;

/// Exact coefficient type. Always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Number of registry variables.
pub const NUM_VARS: usize = 8;

const VAR_NAMES: [&str; NUM_VARS] = ["x1", "x2", "x3", "eta", "xi", "psi", "x", "y"];

/// One of the eight registry variables.
///
/// The index order (`x1 < x2 < ... < y`) is also the tie-break order of the
/// graded-lex monomial order: among monomials of equal degree, a larger
/// exponent on a lower-index variable sorts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(u8);

impl VarId {
    pub const X1: VarId = VarId(0);
    pub const X2: VarId = VarId(1);
    pub const X3: VarId = VarId(2);
    pub const ETA: VarId = VarId(3);
    pub const XI: VarId = VarId(4);
    pub const PSI: VarId = VarId(5);
    pub const X: VarId = VarId(6);
    pub const Y: VarId = VarId(7);

    pub fn new(index: usize) -> Option<VarId> {
        (index < NUM_VARS).then_some(VarId(index as u8))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        VAR_NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<VarId> {
        VAR_NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| VarId(i as u8))
    }

    pub fn all() -> impl Iterator<Item = VarId> {
        (0..NUM_VARS as u8).map(VarId)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("variable {0} already occurs in the polynomial")]
    VariablePresent(VarId),
    #[error("variable {0} is not bound")]
    UnboundVariable(VarId),
    #[error("division is not exact")]
    InexactDivision,
}

/// A sparse polynomial over the rationals in the registry variables.
///
/// No zero coefficients are ever stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Polynomial::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: graded-lex, leading term first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Result<u32, PolyError> {
        self.terms
            .keys()
            .map(Monomial::degree)
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// True when every term has the same total degree. The zero polynomial
    /// counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Highest exponent of `v` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    /// Variables that occur with positive exponent somewhere, in index order.
    pub fn variables(&self) -> Vec<VarId> {
        VarId::all().filter(|&v| self.contains_var(v)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, k)| (n.mul(m), k.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, v: VarId) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.with_exponent(v, e - 1);
            out.add_term(reduced, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Lifts a polynomial of degree n to a homogeneous one of degree n by
    /// padding every term with a power of `new_var`.
    pub fn homogenize(&self, new_var: VarId) -> Result<Polynomial, PolyError> {
        let n = self.total_degree()?;
        if self.contains_var(new_var) {
            return Err(PolyError::VariablePresent(new_var));
        }
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_exponent(new_var, n - m.degree()), c.clone()))
                .collect(),
        })
    }

    /// Sets `v = 1`.
    pub fn dehomogenize(&self, v: VarId) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with_exponent(v, 0), c.clone())),
        )
    }

    /// Simultaneous substitution of every bound variable, fully expanded.
    /// Unbound variables are left in place.
    pub fn substitute(&self, bindings: &[(VarId, Polynomial)]) -> Polynomial {
        let mut table: [Option<&Polynomial>; NUM_VARS] = Default::default();
        for (v, q) in bindings {
            table[v.index()] = Some(q);
        }
        // powers[v][e] caches binding(v)^e
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); NUM_VARS];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut product = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                match table[v.index()] {
                    None => kept = kept.with_exponent(v, e),
                    Some(q) => {
                        let cache = &mut powers[v.index()];
                        if cache.is_empty() {
                            cache.push(Polynomial::one());
                        }
                        while cache.len() <= e as usize {
                            let next = cache.last().unwrap() * q;
                            cache.push(next);
                        }
                        product = &product * &cache[e as usize];
                    }
                }
            }
            for (n, k) in product.mul_monomial(&kept).terms {
                out.add_term(n, k);
            }
        }
        out
    }

    /// Splits `p = content * primitive` where the primitive part has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(Rational, Polynomial), PolyError> {
        let (_, lead) = self.leading_term().ok_or(PolyError::ZeroPolynomial)?;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        Ok((content, self.scale(&inv)))
    }

    /// Primitive part with positive leading coefficient; the canonical
    /// representative of `p` up to a nonzero scalar.
    pub fn primitive_part(&self) -> Result<Polynomial, PolyError> {
        self.content_and_primitive().map(|(_, p)| p)
    }

    /// Removes the largest power of `v` dividing every term.
    pub fn divide_out_variable_power(&self, v: VarId) -> Result<(u32, Polynomial), PolyError> {
        let k = self
            .terms
            .keys()
            .map(|m| m.exponent(v))
            .min()
            .ok_or(PolyError::ZeroPolynomial)?;
        if k == 0 {
            return Ok((0, self.clone()));
        }
        let q = Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_exponent(v, m.exponent(v) - k), c.clone()))
                .collect(),
        };
        Ok((k, q))
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Result<Monomial, PolyError> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(PolyError::ZeroPolynomial)?.clone();
        Ok(it.fold(first, |acc, m| acc.gcd(m)))
    }

    /// Exact division; errors when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(PolyError::ZeroPolynomial)?;
        if divisor.num_terms() == 1 {
            let mut out = Polynomial::zero();
            for (m, c) in &self.terms {
                let q = m.div(lead_m).ok_or(PolyError::InexactDivision)?;
                out.terms.insert(q, c / lead_c);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lead_m).ok_or(PolyError::InexactDivision)?;
            let qc = c / lead_c;
            rem = &rem - &divisor.mul_monomial(&qm).scale(&qc);
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(Rational::one(), m)
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}
