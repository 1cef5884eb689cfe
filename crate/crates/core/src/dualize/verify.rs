use crate::polyring::{FloatPolynomial, VarId};

use super::{point_image_on_dual, CurveSamples, DualCurve, DualError, ImplicitCurve};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyReport {
    pub max_residual: f64,
    pub tested: usize,
    /// Samples whose tangent has slope one (image at infinity).
    pub skipped: usize,
}

impl VerifyReport {
    pub fn passes(&self, threshold: f64) -> bool {
        self.max_residual < threshold
    }
}

/// Maps every sample's tangent to the parallel-coordinates plane and
/// evaluates the candidate dual there. The residual is scale-relative:
/// `|g(x, y)| / (1 + max |term of g at (x, y)|)`.
pub fn verify_duality(
    c: &ImplicitCurve,
    g: &DualCurve,
    samples: &CurveSamples,
) -> Result<VerifyReport, DualError> {
    let dual = FloatPolynomial::new(&g.g);
    let mut report = VerifyReport {
        max_residual: 0.0,
        tested: 0,
        skipped: 0,
    };
    for s in samples.iter() {
        let image = match point_image_on_dual(c, (s.point[0], s.point[1])) {
            Ok(p) => p,
            Err(DualError::IdealPoint | DualError::NotOnCurve) => {
                report.skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let e = dual.eval(&[(VarId::X, image.x), (VarId::Y, image.y)])?;
        let residual = e.value.abs() / (1.0 + e.abs_max);
        report.max_residual = report.max_residual.max(residual);
        report.tested += 1;
    }
    if report.tested == 0 {
        return Err(DualError::NoVerifiableSamples);
    }
    Ok(report)
}
