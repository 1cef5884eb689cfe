use std::sync::OnceLock;

use crate::elimination::{
    resultant_with, AutoDeterminant, BinaryForm, Determinant, EliminationError,
};
use crate::polyring::{Monomial, Polynomial, VarId};
use crate::registry::{Named, Registry};

use super::conic::{conic_dual_matrix, ConicMatrix};
use super::{DualCurve, DualError, ImplicitCurve};

/// Every intermediate of the symbolic pipeline, kept for inspection.
#[derive(Clone, Debug)]
pub struct DualSteps {
    /// `F(x1, x2, x3)`, homogeneous of degree n.
    pub homogenized: Polynomial,
    /// `F(psi*x1, psi*x2, -(eta*x1 + xi*x2))`.
    pub pencil: Polynomial,
    /// Partials of the pencil in `x1` and `x2`, as binary forms.
    pub partials: [BinaryForm; 2],
    /// Raw resultant `R(eta, xi, psi)`.
    pub resultant: Polynomial,
    /// Monomial factor `eta^a xi^b psi^k` cancelled from `R`.
    pub cancelled: Monomial,
    /// `R' = R / cancelled`.
    pub reduced: Polynomial,
}

fn var(v: VarId) -> Polynomial {
    Polynomial::var(v)
}

/// `F(psi*x1, psi*x2, -(eta*x1 + xi*x2))`: the curve's cone cut by the
/// tangent-plane pencil, written in homogeneous coordinates without dividing
/// by `psi`.
pub(crate) fn pencil_restriction(homogenized: &Polynomial) -> Polynomial {
    let psi = var(VarId::PSI);
    let plane = -(&(&var(VarId::ETA) * &var(VarId::X1)) + &(&var(VarId::XI) * &var(VarId::X2)));
    homogenized.substitute(&[
        (VarId::X1, &psi * &var(VarId::X1)),
        (VarId::X2, &psi * &var(VarId::X2)),
        (VarId::X3, plane),
    ])
}

/// `eta = 1 - x, xi = x, psi = -y`.
pub(crate) fn to_parallel_plane(r: &Polynomial) -> Polynomial {
    r.substitute(&[
        (VarId::ETA, &Polynomial::one() - &var(VarId::X)),
        (VarId::XI, var(VarId::X)),
        (VarId::PSI, -var(VarId::Y)),
    ])
}

fn form(p: Polynomial) -> Result<BinaryForm, DualError> {
    BinaryForm::from_polynomial(&p).map_err(|e| match e {
        EliminationError::ZeroForm => DualError::Degenerate,
        other => DualError::Elimination(other),
    })
}

pub fn dual_steps(c: &ImplicitCurve, det: &dyn Determinant) -> Result<DualSteps, DualError> {
    if c.degree() < 2 {
        return Err(DualError::DegreeTooLow(c.degree()));
    }
    let homogenized = c.polynomial().homogenize(VarId::X3)?;
    let pencil = pencil_restriction(&homogenized);
    let partials = [
        form(pencil.partial_derivative(VarId::X1))?,
        form(pencil.partial_derivative(VarId::X2))?,
    ];
    let resultant = resultant_with(&partials[0], &partials[1], det)?;
    if resultant.is_zero() {
        return Err(DualError::Degenerate);
    }
    let cancelled = resultant.monomial_content()?;
    let reduced = resultant.div_exact(&Polynomial::from(cancelled.clone()))?;
    // only a power product was left: the curve has no proper dual
    if reduced.is_constant() {
        return Err(DualError::Degenerate);
    }
    Ok(DualSteps {
        homogenized,
        pencil,
        partials,
        resultant,
        cancelled,
        reduced,
    })
}

pub fn dual_curve_with(c: &ImplicitCurve, det: &dyn Determinant) -> Result<DualCurve, DualError> {
    let steps = dual_steps(c, det)?;
    let g = to_parallel_plane(&steps.reduced).primitive_part()?;
    Ok(DualCurve {
        g,
        source_degree: c.degree(),
        psi_power: steps.cancelled.exponent(VarId::PSI),
        eta_power: steps.cancelled.exponent(VarId::ETA),
        xi_power: steps.cancelled.exponent(VarId::XI),
    })
}

/// Dual of `c` with the default determinant strategy.
pub fn dual_curve(c: &ImplicitCurve) -> Result<DualCurve, DualError> {
    dual_curve_with(c, &AutoDeterminant)
}

/// A way of computing the dual of a curve.
pub trait Dualizer: Named + Send + Sync {
    fn dualize(&self, c: &ImplicitCurve, det: &dyn Determinant) -> Result<DualCurve, DualError>;
}

/// General route through the gradient resultant; works for any degree >= 2.
#[derive(Debug, Clone, Copy, Default)]
pub struct ResultantDualizer;

impl Named for ResultantDualizer {
    fn name(&self) -> &'static str {
        "resultant"
    }
}

impl Dualizer for ResultantDualizer {
    fn dualize(&self, c: &ImplicitCurve, det: &dyn Determinant) -> Result<DualCurve, DualError> {
        dual_curve_with(c, det)
    }
}

/// Closed-form conic transform. Ignores the determinant strategy.
#[derive(Debug, Clone, Copy, Default)]
pub struct ConicDualizer;

impl Named for ConicDualizer {
    fn name(&self) -> &'static str {
        "conic"
    }
}

impl Dualizer for ConicDualizer {
    fn dualize(&self, c: &ImplicitCurve, _det: &dyn Determinant) -> Result<DualCurve, DualError> {
        if c.degree() != 2 {
            return Err(DualError::NotConic);
        }
        let conic = ConicMatrix::from_polynomial(c.polynomial(), VarId::X1, VarId::X2)?;
        let dual = conic_dual_matrix(&conic).polynomial_in(VarId::X, VarId::Y);
        if dual.is_constant() {
            return Err(DualError::Degenerate);
        }
        Ok(DualCurve {
            g: dual.primitive_part()?,
            source_degree: 2,
            // the conic resultant is always 4 psi^2 times the dual form
            psi_power: 2,
            eta_power: 0,
            xi_power: 0,
        })
    }
}

pub const DEFAULT_DUALIZER: &str = "resultant";

pub type DualizerRegistry = Registry<dyn Dualizer>;

impl Registry<dyn Dualizer> {
    pub fn with_builtins() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(ResultantDualizer) as Box<dyn Dualizer>);
        r.register(Box::new(ConicDualizer));
        r
    }

    pub fn builtin() -> &'static DualizerRegistry {
        static REGISTRY: OnceLock<DualizerRegistry> = OnceLock::new();
        REGISTRY.get_or_init(DualizerRegistry::with_builtins)
    }
}
