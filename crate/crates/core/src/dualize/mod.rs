//! Parallel-coordinates duals of planar algebraic curves.
//!
//! The symbolic route ([`dual_curve`]) homogenizes `f`, restricts it to the
//! pencil of lines `eta*x1 + xi*x2 + psi*x3 = 0`, eliminates `(x1, x2)` with
//! a resultant of the two partials and maps `(eta, xi, psi)` to the plane by
//! `eta = 1 - x, xi = x, psi = -y`. The numeric route ([`point_image_on_dual`]
//! over [`sample_curve`] points) maps each tangent line directly; the two
//! meet in [`verify_duality`].

mod algorithm;
mod conic;
mod maps;
mod sampling;
mod verify;

use thiserror::Error;

use crate::elimination::EliminationError;
use crate::polyring::{FloatPolynomial, PolyError, Polynomial, VarId};

pub use algorithm::{
    dual_curve, dual_curve_with, dual_steps, ConicDualizer, DualSteps, Dualizer, DualizerRegistry,
    ResultantDualizer, DEFAULT_DUALIZER,
};
pub use conic::{conic_dual_matrix, ConicMatrix};
pub use maps::{line_dual_point, point_image_on_dual, point_to_polyline, PlanePoint};
pub use sampling::{sample_curve, CurveSample, CurveSamples, Window};
pub use verify::{verify_duality, VerifyReport};

/// Numeric tolerances shared by sampling, the pointwise maps and the oracle.
pub mod tolerance {
    /// Scale-relative bound on `|f|` for a point to count as on the curve:
    /// `|f(p)| <= F_TOL_REL * (1 + sum |term(p)|)`.
    pub const F_TOL_REL: f64 = 1e-12;
    /// Minimum gradient norm for a sample to be kept.
    pub const SINGULAR_TOL: f64 = 1e-9;
    /// Minimum `|f_x1 + f_x2|` (or `|1 - m|`) before a tangent is treated as
    /// having slope one, whose image is an ideal point.
    pub const DENOM_TOL: f64 = 1e-9;
    /// Largest acceptable oracle residual.
    pub const ORACLE_THRESHOLD: f64 = 1e-6;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("curve must be a nonzero polynomial in x1, x2 only (found {0})")]
    NotPlanar(VarId),
    #[error("curve must be a nonzero polynomial")]
    ZeroCurve,
    #[error("curve degree {0} is below 2")]
    DegreeTooLow(u32),
    #[error("degenerate input: no dual curve survives elimination (reducible curve or common factor of the partials)")]
    Degenerate,
    #[error("not a conic: the quadratic part vanishes or the degree is not 2")]
    NotConic,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("slope-1 tangent maps to ideal point")]
    IdealPoint,
    #[error("axis spacing must be positive and finite")]
    InvalidSpacing,
    #[error("a point needs at least two coordinates")]
    TooFewCoordinates,
    #[error("window must satisfy xmin < xmax and ymin < ymax with finite bounds")]
    InvalidWindow,
    #[error("no verifiable samples")]
    NoVerifiableSamples,
    #[error("unknown dualizer {0:?}")]
    UnknownDualizer(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Elimination(#[from] EliminationError),
}

/// A planar curve `f(x1, x2) = 0` of degree at least one. Irreducibility is
/// the caller's responsibility.
#[derive(Clone, Debug)]
pub struct ImplicitCurve {
    f: Polynomial,
    degree: u32,
    gradient: [Polynomial; 2],
    f_float: FloatPolynomial,
    gradient_float: [FloatPolynomial; 2],
}

impl ImplicitCurve {
    pub fn new(f: Polynomial) -> Result<Self, DualError> {
        if let Some(v) = f
            .variables()
            .into_iter()
            .find(|&v| v != VarId::X1 && v != VarId::X2)
        {
            return Err(DualError::NotPlanar(v));
        }
        let degree = f.total_degree().map_err(|_| DualError::ZeroCurve)?;
        if degree == 0 {
            return Err(DualError::DegreeTooLow(0));
        }
        let gradient = [
            f.partial_derivative(VarId::X1),
            f.partial_derivative(VarId::X2),
        ];
        Ok(ImplicitCurve {
            f_float: FloatPolynomial::new(&f),
            gradient_float: [
                FloatPolynomial::new(&gradient[0]),
                FloatPolynomial::new(&gradient[1]),
            ],
            f,
            degree,
            gradient,
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gradient(&self) -> &[Polynomial; 2] {
        &self.gradient
    }

    /// `(f, sum |term|)` at a point.
    pub(crate) fn value_and_scale(&self, x1: f64, x2: f64) -> (f64, f64) {
        let mut point = [0.0; crate::polyring::NUM_VARS];
        point[VarId::X1.index()] = x1;
        point[VarId::X2.index()] = x2;
        let e = self.f_float.eval_dense(&point);
        (e.value, e.abs_sum)
    }

    pub(crate) fn value(&self, x1: f64, x2: f64) -> f64 {
        self.f_float.eval2(VarId::X1, x1, VarId::X2, x2)
    }

    pub(crate) fn gradient_at(&self, x1: f64, x2: f64) -> [f64; 2] {
        [
            self.gradient_float[0].eval2(VarId::X1, x1, VarId::X2, x2),
            self.gradient_float[1].eval2(VarId::X1, x1, VarId::X2, x2),
        ]
    }

    /// On-curve test with the scale-relative tolerance.
    pub fn contains(&self, x1: f64, x2: f64) -> bool {
        let (v, scale) = self.value_and_scale(x1, x2);
        v.abs() <= tolerance::F_TOL_REL * (1.0 + scale)
    }
}

/// The dual of a curve: a primitive polynomial in `(x, y)` with positive
/// leading coefficient, plus what was cancelled to reach it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCurve {
    pub g: Polynomial,
    pub source_degree: u32,
    /// Power of `psi` cancelled from the resultant.
    pub psi_power: u32,
    /// Powers of `eta` and `xi` cancelled alongside; nonzero only when the
    /// curve is singular at the point at infinity of an axis direction.
    pub eta_power: u32,
    pub xi_power: u32,
}

impl DualCurve {
    pub fn degree(&self) -> u32 {
        self.g.total_degree().expect("dual is nonzero")
    }
}
