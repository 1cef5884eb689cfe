use num_traits::{ToPrimitive, Zero};

use super::{Monomial, PolyError, Polynomial, Rational, VarId, NUM_VARS};

/// Result of a floating-point evaluation together with the term magnitudes
/// needed for scale-relative tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatEval {
    pub value: f64,
    /// Sum of `|c * m(p)|` over all terms.
    pub abs_sum: f64,
    /// Largest `|c * m(p)|` over all terms.
    pub abs_max: f64,
}

/// A polynomial with coefficients rounded to `f64`, terms kept in canonical
/// order so repeated evaluations sum identically.
#[derive(Clone, Debug)]
pub struct FloatPolynomial {
    terms: Vec<(f64, Monomial)>,
    vars: Vec<VarId>,
}

impl FloatPolynomial {
    pub fn new(p: &Polynomial) -> Self {
        FloatPolynomial {
            terms: p
                .terms()
                .map(|(m, c)| (c.to_f64().unwrap_or(f64::NAN), m.clone()))
                .collect(),
            vars: p.variables(),
        }
    }

    /// Variables that must be bound for evaluation.
    pub fn variables(&self) -> &[VarId] {
        &self.vars
    }

    /// Evaluates at a dense point indexed by `VarId::index`.
    pub fn eval_dense(&self, point: &[f64; NUM_VARS]) -> FloatEval {
        let mut value = 0.0;
        let mut abs_sum = 0.0;
        let mut abs_max = 0.0f64;
        for (c, m) in &self.terms {
            let mut t = *c;
            for (v, e) in m.iter() {
                t *= point[v.index()].powi(e as i32);
            }
            value += t;
            abs_sum += t.abs();
            abs_max = abs_max.max(t.abs());
        }
        FloatEval {
            value,
            abs_sum,
            abs_max,
        }
    }

    /// Convenience for polynomials in two variables `u`, `v`.
    pub fn eval2(&self, u: VarId, a: f64, v: VarId, b: f64) -> f64 {
        let mut point = [0.0; NUM_VARS];
        point[u.index()] = a;
        point[v.index()] = b;
        self.eval_dense(&point).value
    }

    pub fn eval(&self, point: &[(VarId, f64)]) -> Result<FloatEval, PolyError> {
        let dense = dense_point(&self.vars, point, 0.0)?;
        Ok(self.eval_dense(&dense))
    }
}

fn dense_point<T: Clone>(
    needed: &[VarId],
    point: &[(VarId, T)],
    fill: T,
) -> Result<[T; NUM_VARS], PolyError> {
    let mut dense: [T; NUM_VARS] = std::array::from_fn(|_| fill.clone());
    let mut bound = [false; NUM_VARS];
    for (v, x) in point {
        dense[v.index()] = x.clone();
        bound[v.index()] = true;
    }
    match needed.iter().find(|v| !bound[v.index()]) {
        Some(&v) => Err(PolyError::UnboundVariable(v)),
        None => Ok(dense),
    }
}

impl Polynomial {
    pub fn evaluate_exact(&self, point: &[(VarId, Rational)]) -> Result<Rational, PolyError> {
        let dense = dense_point(&self.variables(), point, Rational::zero())?;
        let mut acc = Rational::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                t *= num_traits::pow(dense[v.index()].clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// IEEE-double evaluation; terms summed in canonical order.
    pub fn evaluate_float(&self, point: &[(VarId, f64)]) -> Result<f64, PolyError> {
        self.evaluate_float_detailed(point).map(|e| e.value)
    }

    pub fn evaluate_float_detailed(&self, point: &[(VarId, f64)]) -> Result<FloatEval, PolyError> {
        FloatPolynomial::new(self).eval(point)
    }
}
