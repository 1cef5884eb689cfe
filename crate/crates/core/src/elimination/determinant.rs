use std::sync::OnceLock;

use crate::polyring::{PolyError, Polynomial};
use crate::registry::{Named, Registry};

use super::PolyMatrix;

/// An exact determinant algorithm over the polynomial ring.
///
/// Every implementation must return the same polynomial for the same
/// matrix; strategies differ only in cost.
pub trait Determinant: Named + Send + Sync {
    fn determinant(&self, m: &PolyMatrix) -> Result<Polynomial, PolyError>;
}

/// Fraction-free Gaussian elimination. Each step divides by the previous
/// pivot, a division that is exact in any integral domain.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bareiss;

impl Named for Bareiss {
    fn name(&self) -> &'static str {
        "bareiss"
    }
}

impl Determinant for Bareiss {
    fn determinant(&self, m: &PolyMatrix) -> Result<Polynomial, PolyError> {
        let n = m.size();
        if n == 0 {
            return Ok(Polynomial::one());
        }
        let mut a = m.rows();
        let mut negate = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                // first row below with a structurally nonzero pivot
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero()),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in bottom.iter_mut() {
                for j in k + 1..n {
                    let num = &(pivot * &row[j]) - &(&row[k] * &pivot_row[j]);
                    row[j] = num.div_exact(&prev)?;
                }
                row[k] = Polynomial::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}

/// Laplace expansion along the first row, skipping zero entries.
/// Factorial cost; fine for small matrices and as a cross-check.
#[derive(Debug, Clone, Copy, Default)]
pub struct Cofactor;

fn cofactor_rec(rows: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
    match cols.len() {
        0 => Polynomial::one(),
        1 => rows[0][cols[0]].clone(),
        2 => {
            let r0 = &rows[0];
            let r1 = &rows[1];
            &(&r0[cols[0]] * &r1[cols[1]]) - &(&r0[cols[1]] * &r1[cols[0]])
        }
        _ => {
            let mut acc = Polynomial::zero();
            for (i, &c) in cols.iter().enumerate() {
                let entry = &rows[0][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let term = entry * &cofactor_rec(&rows[1..], &rest);
                acc = if i % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

impl Named for Cofactor {
    fn name(&self) -> &'static str {
        "cofactor"
    }
}

impl Determinant for Cofactor {
    fn determinant(&self, m: &PolyMatrix) -> Result<Polynomial, PolyError> {
        let cols: Vec<usize> = (0..m.size()).collect();
        Ok(cofactor_rec(&m.rows(), &cols))
    }
}

/// Largest size [`AutoDeterminant`] expands by cofactors. Sylvester matrices
/// of curves up to degree five (8x8) are mostly zeros, which the expansion
/// skips, and it avoids the exact divisions that dominate Bareiss there.
pub const AUTO_COFACTOR_MAX: usize = 8;

/// Cofactor expansion up to [`AUTO_COFACTOR_MAX`], Bareiss above.
#[derive(Debug, Clone, Copy, Default)]
pub struct AutoDeterminant;

impl Named for AutoDeterminant {
    fn name(&self) -> &'static str {
        "auto"
    }
}

impl Determinant for AutoDeterminant {
    fn determinant(&self, m: &PolyMatrix) -> Result<Polynomial, PolyError> {
        if m.size() <= AUTO_COFACTOR_MAX {
            Cofactor.determinant(m)
        } else {
            Bareiss.determinant(m)
        }
    }
}

pub const DEFAULT_DETERMINANT: &str = "auto";

/// Determinant strategies looked up by name.
pub type DeterminantRegistry = Registry<dyn Determinant>;

impl Registry<dyn Determinant> {
    pub fn with_builtins() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(AutoDeterminant) as Box<dyn Determinant>);
        r.register(Box::new(Bareiss));
        r.register(Box::new(Cofactor));
        r
    }

    /// Shared registry holding the built-in strategies.
    pub fn builtin() -> &'static DeterminantRegistry {
        static REGISTRY: OnceLock<DeterminantRegistry> = OnceLock::new();
        REGISTRY.get_or_init(DeterminantRegistry::with_builtins)
    }
}

/// Determinant with the default strategy.
pub fn determinant(m: &PolyMatrix) -> Polynomial {
    AutoDeterminant
        .determinant(m)
        .expect("Bareiss divisions are exact over an integral domain")
}
