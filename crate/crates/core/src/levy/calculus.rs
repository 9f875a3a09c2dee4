//! Symmetric Lévy-Ito coefficients and the proportional product and
//! quotient rules acting on them.

use serde::{Deserialize, Serialize};

use super::LevyMeasure;
use crate::error::{check_len, Error, Result};

/// Coefficients `(α, β, γ(x_k))` of `dX = α dt + β dW + ∫ γ(x) Ñ(dx, dt)`.
///
/// In proportional form the same triple multiplies `X_{t-}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetricCoefficients {
    pub drift: f64,
    pub brownian_vol: f64,
    pub jump_vol: Vec<f64>,
}

impl SymmetricCoefficients {
    pub fn new(drift: f64, brownian_vol: f64, jump_vol: Vec<f64>) -> Result<Self> {
        let c = Self {
            drift,
            brownian_vol,
            jump_vol,
        };
        if !c.is_finite() {
            return Err(Error::InvalidParameter(
                "coefficients must be finite".into(),
            ));
        }
        Ok(c)
    }

    /// All-zero coefficients over a measure with `n_atoms` atoms.
    pub fn null(n_atoms: usize) -> Self {
        Self {
            drift: 0.0,
            brownian_vol: 0.0,
            jump_vol: vec![0.0; n_atoms],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.drift.is_finite()
            && self.brownian_vol.is_finite()
            && self.jump_vol.iter().all(|g| g.is_finite())
    }

    pub fn check_measure(&self, measure: &LevyMeasure) -> Result<()> {
        check_len("jump volatilities", measure.len(), self.jump_vol.len())
    }

    /// `β² + ∫ γ(x)² ν(dx)`: the quadratic-variation rate.
    pub fn variance_rate(&self, measure: &LevyMeasure) -> f64 {
        self.brownian_vol * self.brownian_vol + measure.weighted_dot(&self.jump_vol, &self.jump_vol)
    }
}

/// Compensator `∫ γ(x) ν(dx)` of the jump integrand.
pub fn compensate(measure: &LevyMeasure, jump_vol: &[f64]) -> Result<f64> {
    check_len("jump volatilities", measure.len(), jump_vol.len())?;
    Ok(measure
        .intensities()
        .zip(jump_vol)
        .map(|(w, g)| g * w)
        .sum())
}

fn check_pair(
    a: &SymmetricCoefficients,
    b: &SymmetricCoefficients,
    measure: &LevyMeasure,
) -> Result<()> {
    a.check_measure(measure)?;
    b.check_measure(measure)
}

/// Coefficients of `X¹X²` when both factors have proportional dynamics.
pub fn product_coefficients(
    a: &SymmetricCoefficients,
    b: &SymmetricCoefficients,
    measure: &LevyMeasure,
) -> Result<SymmetricCoefficients> {
    check_pair(a, b, measure)?;
    let drift = a.drift
        + b.drift
        + a.brownian_vol * b.brownian_vol
        + measure.weighted_dot(&a.jump_vol, &b.jump_vol);
    let jump_vol = a
        .jump_vol
        .iter()
        .zip(&b.jump_vol)
        .map(|(g1, g2)| g1 + g2 + g1 * g2)
        .collect();
    Ok(SymmetricCoefficients {
        drift,
        brownian_vol: a.brownian_vol + b.brownian_vol,
        jump_vol,
    })
}

/// Coefficients of `X¹/X²` when both have proportional dynamics.
///
/// Fails if `1 + γ²(x_k) = 0` for some atom, i.e. the denominator can jump
/// to zero.
pub fn quotient_coefficients(
    a: &SymmetricCoefficients,
    b: &SymmetricCoefficients,
    measure: &LevyMeasure,
) -> Result<SymmetricCoefficients> {
    check_pair(a, b, measure)?;
    if let Some(atom) = b.jump_vol.iter().position(|g| 1.0 + g == 0.0) {
        return Err(Error::SingularDenominator { atom });
    }
    let jump_vol: Vec<f64> = a
        .jump_vol
        .iter()
        .zip(&b.jump_vol)
        .map(|(g1, g2)| (g1 - g2) / (1.0 + g2))
        .collect();
    let drift = a.drift
        - b.drift
        - b.brownian_vol * (a.brownian_vol - b.brownian_vol)
        - measure.weighted_dot(&b.jump_vol, &jump_vol);
    Ok(SymmetricCoefficients {
        drift,
        brownian_vol: a.brownian_vol - b.brownian_vol,
        jump_vol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bernoulli() -> LevyMeasure {
        LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0).unwrap()
    }

    fn one_atom() -> LevyMeasure {
        LevyMeasure::poisson(1.0, 1.0).unwrap()
    }

    #[test]
    fn compensate_examples() {
        let m = bernoulli();
        assert_eq!(compensate(&m, &[0.0, 0.0]).unwrap(), 0.0);
        let g = [0.3f64.exp_m1(), (-0.3f64).exp_m1()];
        // 7.5 * (e^0.3 - 1) + 7.5 * (e^-0.3 - 1)
        assert!((compensate(&m, &g).unwrap() - 0.680_077_711_932_907_8).abs() < 1e-12);
        let single = LevyMeasure::poisson(2.0, 1.0).unwrap();
        assert_eq!(compensate(&single, &[3.0]).unwrap(), 6.0);
        assert!(compensate(&m, &[1.0]).is_err());
    }

    #[test]
    fn product_with_null_is_identity() {
        let m = bernoulli();
        let b = SymmetricCoefficients::new(0.1, 0.2, vec![0.3, -0.2]).unwrap();
        let p = product_coefficients(&SymmetricCoefficients::null(2), &b, &m).unwrap();
        assert_eq!(p, b);
    }

    #[test]
    fn product_square_by_hand() {
        let a = SymmetricCoefficients::new(0.05, 0.1, vec![0.2]).unwrap();
        let p = product_coefficients(&a, &a, &one_atom()).unwrap();
        assert!((p.drift - (2.0 * 0.05 + 0.01 + 0.04)).abs() < 1e-15);
        assert!((p.brownian_vol - 0.2).abs() < 1e-15);
        assert!((p.jump_vol[0] - 0.44).abs() < 1e-15);
    }

    #[test]
    fn quotient_of_self_is_null() {
        let m = bernoulli();
        let a = SymmetricCoefficients::new(0.1, 0.2, vec![0.3, -0.2]).unwrap();
        let q = quotient_coefficients(&a, &a, &m).unwrap();
        assert!(q.drift.abs() < 1e-15);
        assert_eq!(q.brownian_vol, 0.0);
        assert!(q.jump_vol.iter().all(|g| *g == 0.0));
    }

    #[test]
    fn quotient_singular_denominator() {
        let a = SymmetricCoefficients::new(0.0, 0.0, vec![0.0]).unwrap();
        let b = SymmetricCoefficients::new(0.0, 0.0, vec![-1.0]).unwrap();
        assert!(matches!(
            quotient_coefficients(&a, &b, &one_atom()),
            Err(Error::SingularDenominator { atom: 0 })
        ));
    }

    #[test]
    fn measure_mismatch_is_rejected() {
        let a = SymmetricCoefficients::null(1);
        let b = SymmetricCoefficients::null(2);
        assert!(product_coefficients(&a, &b, &bernoulli()).is_err());
    }

    fn coeffs() -> impl Strategy<Value = SymmetricCoefficients> {
        (-1.0..1.0f64, -1.0..1.0f64, -0.9..2.0f64, -0.9..2.0f64).prop_map(|(a, b, g1, g2)| {
            SymmetricCoefficients {
                drift: a,
                brownian_vol: b,
                jump_vol: vec![g1, g2],
            }
        })
    }

    proptest! {
        #[test]
        fn quotient_then_product_recovers_numerator(a in coeffs(), b in coeffs()) {
            let m = bernoulli();
            let q = quotient_coefficients(&a, &b, &m).unwrap();
            let back = product_coefficients(&q, &b, &m).unwrap();
            prop_assert!((back.drift - a.drift).abs() < 1e-12);
            prop_assert!((back.brownian_vol - a.brownian_vol).abs() < 1e-12);
            for (x, y) in back.jump_vol.iter().zip(&a.jump_vol) {
                prop_assert!((x - y).abs() < 1e-12);
            }
        }

        #[test]
        fn compensate_is_linear(
            s in -3.0..3.0f64, u in -3.0..3.0f64,
            g1 in proptest::collection::vec(-2.0..2.0f64, 2),
            g2 in proptest::collection::vec(-2.0..2.0f64, 2),
        ) {
            let m = bernoulli();
            let mixed: Vec<f64> = g1.iter().zip(&g2).map(|(x, y)| s * x + u * y).collect();
            let lhs = compensate(&m, &mixed).unwrap();
            let rhs = s * compensate(&m, &g1).unwrap() + u * compensate(&m, &g2).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }
    }
}
