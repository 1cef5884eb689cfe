//! Elimination of `(x1, x2)` from two binary forms via the Sylvester
//! resultant, with coefficients in the gradient ring `Q[eta, xi, psi]`.

mod determinant;
mod form;
mod matrix;

use thiserror::Error;

use crate::polyring::{PolyError, Polynomial};

pub use determinant::{
    determinant, AutoDeterminant, Bareiss, Cofactor, Determinant, DeterminantRegistry,
    AUTO_COFACTOR_MAX, DEFAULT_DETERMINANT,
};
pub use form::BinaryForm;
pub use matrix::PolyMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("polynomial is not homogeneous in (x1, x2)")]
    NotHomogeneous,
    #[error("coefficient ring variable {0} is not one of eta, xi, psi")]
    StrayVariable(crate::polyring::VarId),
    #[error("binary form has no nonzero coefficient")]
    ZeroForm,
    #[error("binary form of degree 0 has no Sylvester matrix")]
    DegreeZero,
    #[error("unknown determinant strategy {0:?}")]
    UnknownStrategy(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Sylvester matrix of `f` (degree n) and `g` (degree m): m shifted rows of
/// f's coefficients followed by n shifted rows of g's. Each row lists the
/// coefficients from the highest power of `x1` down.
pub fn sylvester_matrix(f: &BinaryForm, g: &BinaryForm) -> Result<PolyMatrix, EliminationError> {
    let (n, m) = (f.degree(), g.degree());
    if n == 0 || m == 0 {
        return Err(EliminationError::DegreeZero);
    }
    let size = n + m;
    let mut mat = PolyMatrix::zeros(size);
    for row in 0..m {
        for (j, c) in f.leading_first().enumerate() {
            mat.set(row, row + j, c.clone());
        }
    }
    for row in 0..n {
        for (j, c) in g.leading_first().enumerate() {
            mat.set(m + row, row + j, c.clone());
        }
    }
    Ok(mat)
}

pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Result<Polynomial, EliminationError> {
    resultant_with(f, g, &AutoDeterminant)
}

pub fn resultant_with(
    f: &BinaryForm,
    g: &BinaryForm,
    det: &dyn Determinant,
) -> Result<Polynomial, EliminationError> {
    let mat = sylvester_matrix(f, g)?;
    Ok(det.determinant(&mat)?)
}
