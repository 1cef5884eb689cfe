use crate::polyring::{Monomial, Polynomial, VarId};

use super::EliminationError;

/// A form `sum_i a_i x1^i x2^(n-i)` whose coefficients lie in
/// `Q[eta, xi, psi]`. `coeffs[i]` is the coefficient of `x1^i x2^(n-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Polynomial>,
}

const FORM_VARS: [VarId; 2] = [VarId::X1, VarId::X2];
const COEFF_VARS: [VarId; 3] = [VarId::ETA, VarId::XI, VarId::PSI];

fn check_coeff(c: &Polynomial) -> Result<(), EliminationError> {
    match c.variables().into_iter().find(|v| !COEFF_VARS.contains(v)) {
        Some(v) => Err(EliminationError::StrayVariable(v)),
        None => Ok(()),
    }
}

impl BinaryForm {
    /// Builds a form from coefficients indexed by `x1` exponent.
    pub fn new(coeffs: Vec<Polynomial>) -> Result<Self, EliminationError> {
        if coeffs.is_empty() || coeffs.iter().all(Polynomial::is_zero) {
            return Err(EliminationError::ZeroForm);
        }
        coeffs.iter().try_for_each(check_coeff)?;
        Ok(BinaryForm { coeffs })
    }

    /// Reads off the coefficients of a polynomial homogeneous in `(x1, x2)`.
    pub fn from_polynomial(p: &Polynomial) -> Result<Self, EliminationError> {
        let mut degree = None;
        for (m, _) in p.terms() {
            let d = m.exponent(VarId::X1) + m.exponent(VarId::X2);
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(EliminationError::NotHomogeneous),
                _ => {}
            }
        }
        let n = degree.ok_or(EliminationError::ZeroForm)? as usize;
        let mut coeffs = vec![Polynomial::zero(); n + 1];
        for (m, c) in p.terms() {
            let i = m.exponent(VarId::X1) as usize;
            let rest = m.with_exponent(VarId::X1, 0).with_exponent(VarId::X2, 0);
            coeffs[i] = &coeffs[i] + &Polynomial::term(c.clone(), rest);
        }
        BinaryForm::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x1^i x2^(n-i)`.
    pub fn coeff(&self, i: usize) -> &Polynomial {
        &self.coeffs[i]
    }

    /// Coefficients from `x1^n` down to `x2^n`.
    pub fn leading_first(&self) -> impl Iterator<Item = &Polynomial> + '_ {
        self.coeffs.iter().rev()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (i, c)| {
                let m =
                    Monomial::from_pairs([(FORM_VARS[0], i as u32), (FORM_VARS[1], n - i as u32)]);
                &acc + &c.mul_monomial(&m)
            })
    }
}
