use super::{LevyMeasure, NoiseRealization, SymmetricCoefficients, TimeGrid};
use crate::error::{check_len, Error, Result};

/// Values of a process on a grid together with its pre-jump states.
///
/// `left_limits[i]` is the state at `t_{i+1}` after the continuous part of
/// step `i` has been applied but before that step's jumps.
#[derive(Debug, Clone, PartialEq)]
pub struct PathSeries {
    pub values: Vec<f64>,
    pub left_limits: Vec<f64>,
}

impl PathSeries {
    pub fn constant(value: f64, steps: usize) -> Self {
        Self {
            values: vec![value; steps + 1],
            left_limits: vec![value; steps],
        }
    }

    pub fn steps(&self) -> usize {
        self.left_limits.len()
    }

    pub fn initial(&self) -> f64 {
        self.values[0]
    }

    pub fn terminal(&self) -> f64 {
        *self.values.last().expect("path has at least one point")
    }

    /// `X_{t_{i+1}} - X_{t_i}` for every step.
    pub fn increments(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.windows(2).map(|w| w[1] - w[0])
    }

    pub fn all_positive(&self) -> bool {
        self.values
            .iter()
            .chain(&self.left_limits)
            .all(|&x| x > 0.0)
    }
}

/// Per-step coefficients of a symmetric Lévy-Ito equation, evaluated at
/// the time and left-limit state of the step.
pub trait Dynamics {
    fn drift(&self, t: f64, x: f64) -> f64;
    fn brownian_vol(&self, t: f64, x: f64) -> f64;
    fn jump_vol(&self, t: f64, x: f64, atom: usize) -> f64;
}

/// Constant additive coefficients.
impl Dynamics for SymmetricCoefficients {
    fn drift(&self, _t: f64, _x: f64) -> f64 {
        self.drift
    }

    fn brownian_vol(&self, _t: f64, _x: f64) -> f64 {
        self.brownian_vol
    }

    fn jump_vol(&self, _t: f64, _x: f64, atom: usize) -> f64 {
        self.jump_vol[atom]
    }
}

/// Proportional dynamics `dX = X_{t-} [α dt + β dW + ∫ γ Ñ]`.
#[derive(Debug, Clone, Copy)]
pub struct Proportional<'a>(pub &'a SymmetricCoefficients);

impl Dynamics for Proportional<'_> {
    fn drift(&self, _t: f64, x: f64) -> f64 {
        self.0.drift * x
    }

    fn brownian_vol(&self, _t: f64, x: f64) -> f64 {
        self.0.brownian_vol * x
    }

    fn jump_vol(&self, _t: f64, x: f64, atom: usize) -> f64 {
        self.0.jump_vol[atom] * x
    }
}

impl<F> Dynamics for F
where
    F: Fn(f64, f64) -> SymmetricCoefficients,
{
    fn drift(&self, t: f64, x: f64) -> f64 {
        self(t, x).drift
    }

    fn brownian_vol(&self, t: f64, x: f64) -> f64 {
        self(t, x).brownian_vol
    }

    fn jump_vol(&self, t: f64, x: f64, atom: usize) -> f64 {
        self(t, x).jump_vol[atom]
    }
}

fn check_noise(measure: &LevyMeasure, noise: &NoiseRealization, grid: &TimeGrid) -> Result<()> {
    check_len("noise steps", grid.steps(), noise.steps())?;
    if noise.has_jumps() {
        check_len("noise atoms", measure.len(), noise.n_atoms())?;
    }
    Ok(())
}

/// Euler scheme for symmetric dynamics on a shared noise realization:
///
/// `X_{i+1} = X_i + α dt + β ΔW + Σ_k γ(x_k) (count_k - ν_k dt)`
///
/// with every coefficient frozen at `(t_i, X_i)`. Several arrivals of the
/// same atom within one step contribute `count · γ`.
pub fn integrate<D: Dynamics + ?Sized>(
    dynamics: &D,
    measure: &LevyMeasure,
    noise: &NoiseRealization,
    grid: &TimeGrid,
    x0: f64,
) -> Result<PathSeries> {
    check_noise(measure, noise, grid)?;
    let n = grid.steps();
    let dt = grid.dt();
    let mut values = Vec::with_capacity(n + 1);
    let mut left_limits = Vec::with_capacity(n);
    let mut x = x0;
    values.push(x);
    for (i, dw) in noise.brownian_increments().iter().enumerate() {
        let t = grid.time(i);
        let compensator: f64 = measure
            .intensities()
            .enumerate()
            .map(|(k, w)| dynamics.jump_vol(t, x, k) * w)
            .sum();
        let continuous =
            x + dynamics.drift(t, x) * dt + dynamics.brownian_vol(t, x) * dw - compensator * dt;
        let jumps: f64 = noise
            .events(i)
            .iter()
            .map(|e| f64::from(e.count) * dynamics.jump_vol(t, x, e.atom))
            .sum();
        let next = continuous + jumps;
        if !next.is_finite() {
            return Err(Error::NonFinite { step: i });
        }
        left_limits.push(continuous);
        values.push(next);
        x = next;
    }
    Ok(PathSeries {
        values,
        left_limits,
    })
}

/// Exact solution of proportional dynamics with constant coefficients:
///
/// `X_t = X_0 exp((α - β²/2) t + β W_t + Σ_k log(1 + γ_k) N_k(t) - t Σ_k γ_k ν_k)`.
///
/// Requires `γ_k > -1` for every atom.
pub fn geometric_path(
    coeffs: &SymmetricCoefficients,
    measure: &LevyMeasure,
    noise: &NoiseRealization,
    grid: &TimeGrid,
    x0: f64,
) -> Result<PathSeries> {
    coeffs.check_measure(measure)?;
    check_noise(measure, noise, grid)?;
    if let Some(k) = coeffs.jump_vol.iter().position(|&g| !(g > -1.0)) {
        return Err(Error::InvalidParameter(format!(
            "proportional jump volatility at atom {k} must exceed -1"
        )));
    }
    let log_jump: Vec<f64> = coeffs.jump_vol.iter().map(|g| g.ln_1p()).collect();
    let compensator = super::compensate(measure, &coeffs.jump_vol)?;
    let rate = coeffs.drift - 0.5 * coeffs.brownian_vol * coeffs.brownian_vol - compensator;

    let n = grid.steps();
    let mut values = Vec::with_capacity(n + 1);
    let mut left_limits = Vec::with_capacity(n);
    values.push(x0);
    let mut w = 0.0;
    let mut jump_log = 0.0;
    for (i, dw) in noise.brownian_increments().iter().enumerate() {
        w += dw;
        let t = grid.time(i + 1);
        let continuous_log = rate * t + coeffs.brownian_vol * w;
        left_limits.push(x0 * (continuous_log + jump_log).exp());
        jump_log += noise
            .events(i)
            .iter()
            .map(|e| f64::from(e.count) * log_jump[e.atom])
            .sum::<f64>();
        values.push(x0 * (continuous_log + jump_log).exp());
    }
    Ok(PathSeries {
        values,
        left_limits,
    })
}
