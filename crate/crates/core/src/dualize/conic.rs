use num_traits::Zero;

use crate::polyring::{Monomial, Polynomial, Rational, VarId};

use super::DualError;

/// Symmetric matrix of a conic `(u v 1) M (u v 1)^T`:
///
/// ```text
/// A1 A4 A5
/// A4 A2 A6
/// A5 A6 A3
/// ```
///
/// so the conic reads `A1 u^2 + 2 A4 u v + 2 A5 u + A2 v^2 + 2 A6 v + A3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicMatrix {
    a: [Rational; 6],
}

impl ConicMatrix {
    /// Coefficients in the order `A1..A6`. At least one of `A1, A2, A4`
    /// must be nonzero.
    pub fn new(a: [Rational; 6]) -> Result<Self, DualError> {
        if a[0].is_zero() && a[1].is_zero() && a[3].is_zero() {
            return Err(DualError::NotConic);
        }
        Ok(ConicMatrix { a })
    }

    pub fn from_polynomial(p: &Polynomial, u: VarId, v: VarId) -> Result<Self, DualError> {
        if p.total_degree().map_or(true, |d| d > 2)
            || p.variables().iter().any(|&w| w != u && w != v)
        {
            return Err(DualError::NotConic);
        }
        let c =
            |pairs: &[(VarId, u32)]| p.coefficient(&Monomial::from_pairs(pairs.iter().copied()));
        let half = Rational::new(1.into(), 2.into());
        ConicMatrix::new([
            c(&[(u, 2)]),
            c(&[(v, 2)]),
            c(&[]),
            c(&[(u, 1), (v, 1)]) * &half,
            c(&[(u, 1)]) * &half,
            c(&[(v, 1)]) * &half,
        ])
    }

    /// `A1..A6`.
    pub fn coefficients(&self) -> &[Rational; 6] {
        &self.a
    }

    pub fn matrix(&self) -> [[Rational; 3]; 3] {
        let [a1, a2, a3, a4, a5, a6] = self.a.clone();
        [
            [a1, a4.clone(), a5.clone()],
            [a4, a2, a6.clone()],
            [a5, a6, a3],
        ]
    }

    pub fn determinant(&self) -> Rational {
        let [a1, a2, a3, a4, a5, a6] = &self.a;
        a1 * (a2 * a3 - a6 * a6) - a4 * (a4 * a3 - a6 * a5) + a5 * (a4 * a6 - a2 * a5)
    }

    /// The conic as a polynomial in `u, v`.
    pub fn polynomial_in(&self, u: VarId, v: VarId) -> Polynomial {
        let [a1, a2, a3, a4, a5, a6] = &self.a;
        let two = Rational::from_integer(2.into());
        Polynomial::from_terms([
            (Monomial::var(u, 2), a1.clone()),
            (Monomial::from_pairs([(u, 1), (v, 1)]), a4 * &two),
            (Monomial::var(u, 1), a5 * &two),
            (Monomial::var(v, 2), a2.clone()),
            (Monomial::var(v, 1), a6 * &two),
            (Monomial::one(), a3.clone()),
        ])
    }
}

/// Closed-form parallel-coordinates dual of a conic. The result is returned
/// as a matrix in `(x, y)`; it is total, so degenerate inputs still produce
/// a (possibly degenerate) matrix.
pub fn conic_dual_matrix(src: &ConicMatrix) -> ConicMatrix {
    let [a1, a2, a3, a4, a5, a6] = &src.a;
    let s56 = a5 + a6;
    ConicMatrix {
        a: [
            a3 * (a1 + a2 + a4 + a4) - &s56 * &s56,
            a1 * a2 - a4 * a4,
            a2 * a3 - a6 * a6,
            a6 * (a1 + a4) - a5 * (a2 + a4),
            a6 * a6 + a5 * a6 - a3 * (a2 + a4),
            a2 * a5 - a4 * a6,
        ],
    }
}
