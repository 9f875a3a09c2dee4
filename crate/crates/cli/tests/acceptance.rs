//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//!
//! Reference values are computed here from first principles where possible
//! rather than taken from the library under test.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use levy_hedge::hedging::{
    analytic_delta, degeneracy_check, gram_system, multi_asset_hedge, two_asset_hedge,
};
use levy_hedge::levy::{
    geometric_path, integrate, product_coefficients, quotient_coefficients, sample_noise, JumpAtom,
    LevyMeasure, Proportional, SymmetricCoefficients, TimeGrid,
};
use levy_hedge::market::{benchmark_coefficients, geometric_price_path, kernel_path, AssetSpec};
use levy_hedge::sim::{
    brute_force_constant_hedge, builtin_scenario, run_scenario, HedgeMode, RatioGrid, Scenario,
};
use levy_hedge::stats::{median, Estimate};
use levy_hedge::{Error, GeometricBernoulliSpec, PricingKernelSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_517;
/// Monte Carlo tolerance in standard errors.
const N_SE: f64 = 3.0;
/// Pathwise and algebraic identities.
const IDENTITY_TOL: f64 = 1e-10;
/// Brute-force grid step; argmins must land within one step.
const GRID_STEP: f64 = 1e-3;
/// Complete markets: `|dV| <= COMPLETE_TOL * C_0`.
const COMPLETE_TOL: f64 = 1e-9;
const NEAR_PERFECT: f64 = 0.1;
/// fig4/fig3 per-step residual std, first verified run at `SEED`, N = 1000.
const GOLDEN_NEAR_PERFECT: f64 = 3.759_449e-2;
const GOLDEN_REL_TOL: f64 = 1e-5;
/// Euler error ratio when `dt` halves, first-order convergence.
const HALVING_BAND: (f64, f64) = (0.35, 0.6);
/// Draws whose scaled Gram matrix is worse conditioned than this are left
/// out of the closed-form vs general-solve comparison: at condition number
/// κ two double-precision solves legitimately differ by about κ·ε.
const CONDITION_LIMIT: f64 = 1e6;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

/// `σ_a σ_b + Σ_k w_k Σ_a(x_k) Σ_b(x_k)`.
fn cov(a: &AssetSpec, b: &AssetSpec, m: &LevyMeasure) -> f64 {
    let jumps: f64 = m
        .atoms()
        .iter()
        .enumerate()
        .map(|(k, atom)| atom.intensity * a.jump_vol()[k] * b.jump_vol()[k])
        .sum();
    a.brownian_vol() * b.brownian_vol() + jumps
}

fn fig1() -> LevyMeasure {
    LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0).unwrap()
}

fn random_measure(rng: &mut ChaCha8Rng) -> LevyMeasure {
    let n = rng.random_range(1..=3);
    let atoms = (0..n)
        .map(|k| JumpAtom {
            location: (k as f64 - 1.0) + rng.random_range(-0.4..0.4),
            intensity: rng.random_range(0.5..15.0),
        })
        .collect();
    LevyMeasure::new(atoms).unwrap()
}

fn random_spec(rng: &mut ChaCha8Rng) -> GeometricBernoulliSpec {
    GeometricBernoulliSpec::new(
        100.0,
        rng.random_range(0.0..0.5),
        rng.random_range(-0.7..0.7),
    )
}

fn criterion_1() -> Outcome {
    let m = fig1();
    let grid = TimeGrid::new(1.0, 1000).unwrap();
    let driver = SymmetricCoefficients::new(0.0, 0.2, vec![0.3, -0.3]).unwrap();
    // T (σ² + Σ w γ²) = 0.04 + 15 * 0.09
    let analytic = 1.39;
    let xs: Vec<f64> = (0..10_000)
        .map(|i| {
            let noise = sample_noise(&m, &grid, SEED, i);
            integrate(&driver, &m, &noise, &grid, 0.0)
                .unwrap()
                .terminal()
                .powi(2)
        })
        .collect();
    let est = Estimate::from_samples(&xs);
    let z = est.z_score(analytic);
    (
        z <= N_SE,
        format!(
            "MC E[X_T^2] {:.5} +/- {:.5} vs {analytic}, {z:.2} SE, rel err {:.2e}",
            est.mean,
            est.std_error,
            (est.mean - analytic).abs() / analytic
        ),
    )
}

fn criterion_2() -> Outcome {
    let m = fig1();
    let grid = TimeGrid::new(1.0, 1000).unwrap();
    let specs = [(0.15, 0.25), (0.20, 0.30), (0.10, 0.20)];
    let assets: Vec<AssetSpec> = specs
        .iter()
        .map(|&(s, b)| {
            GeometricBernoulliSpec::new(100.0, s, b)
                .to_asset(&m)
                .unwrap()
        })
        .collect();
    let mut terminals: Vec<Vec<f64>> = vec![Vec::new(); 3];
    for i in 0..10_000 {
        let noise = sample_noise(&m, &grid, SEED, i);
        for (k, a) in assets.iter().enumerate() {
            terminals[k].push(
                geometric_price_path(a, &m, &noise, &grid)
                    .unwrap()
                    .terminal(),
            );
        }
    }
    let mut ok = true;
    let mut detail = Vec::new();
    for (label, xs) in ["C", "S1", "S2"].iter().zip(&terminals) {
        let est = Estimate::from_samples(xs);
        ok &= est.within(100.0, N_SE);
        detail.push(format!("{label} {:.3} +/- {:.3}", est.mean, est.std_error));
    }
    (ok, format!("mean S_T: {}", detail.join(", ")))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let grid = TimeGrid::new(1.0, 1000).unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let m = random_measure(&mut rng);
        let kernel = PricingKernelSpec::new(
            rng.random_range(-0.02..0.1),
            rng.random_range(-1.0..1.0),
            (0..m.len()).map(|_| rng.random_range(-2.0..0.9)).collect(),
        )
        .unwrap();
        let noise = sample_noise(&m, &grid, SEED, i);
        let pi = kernel_path(&kernel, &m, &noise, &grid).unwrap();
        let xi = geometric_path(
            &benchmark_coefficients(&kernel, &m).unwrap(),
            &m,
            &noise,
            &grid,
            1.0,
        )
        .unwrap();
        for (p, x) in pi.values.iter().zip(&xi.values) {
            worst = worst.max((p * x - 1.0).abs());
        }
    }
    (
        worst <= IDENTITY_TOL,
        format!("max |pi xi - 1| = {worst:.2e} over 100 kernels"),
    )
}

fn random_scenario(rng: &mut ChaCha8Rng, mode: HedgeMode) -> Scenario {
    let mut s = builtin_scenario("fig3").unwrap();
    s.measure = random_measure(rng);
    s.contract = random_spec(rng);
    s.hedging_assets = vec![random_spec(rng), random_spec(rng)];
    s.hedge_mode = mode;
    s
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let (mut tested, mut skipped) = (0, 0);
    let (mut worst_steps, mut worst_gap): (f64, f64) = (0.0, 0.0);
    while tested < 100 {
        let s = random_scenario(&mut rng, HedgeMode::Single(0));
        let c = s.contract.to_asset(&s.measure).unwrap();
        let a = s.hedging_assets[0].to_asset(&s.measure).unwrap();
        let a2 = s.hedging_assets[1].to_asset(&s.measure).unwrap();
        let (k, l, mm) = (
            cov(&c, &c, &s.measure),
            cov(&a, &c, &s.measure),
            cov(&a, &a, &s.measure),
        );
        if mm <= 1e-8 {
            skipped += 1;
            continue;
        }
        tested += 1;
        let r = l / mm;
        let lo = r.round() - 2.0;
        let bf = brute_force_constant_hedge(&s, RatioGrid::new(lo, lo + 4.0, GRID_STEP).unwrap())
            .unwrap();
        worst_steps = worst_steps.max((bf.best[0] - r).abs() / GRID_STEP);

        // Gap identity over both hedging assets: Δ(ψ) - Δ(r̂) = τ (ψ - r̂)ᵀ M (ψ - r̂).
        let assets = [a.clone(), a2.clone()];
        let m12 = cov(&a, &a2, &s.measure);
        let m22 = cov(&a2, &a2, &s.measure);
        let det = mm * m22 - m12 * m12;
        if det <= 1e-8 * (mm + m22).powi(2) {
            continue;
        }
        let l2 = cov(&a2, &c, &s.measure);
        let rhat = [(l * m22 - m12 * l2) / det, (l2 * mm - m12 * l) / det];
        let tau = (k * 1.0).exp_m1() / k;
        let d_hat = analytic_delta(&c, &assets, &rhat, &s.measure, 1.0).unwrap();
        for _ in 0..5 {
            let e = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
            let psi = [rhat[0] + e[0], rhat[1] + e[1]];
            let d = analytic_delta(&c, &assets, &psi, &s.measure, 1.0).unwrap();
            let predicted = tau * (e[0] * e[0] * mm + 2.0 * e[0] * e[1] * m12 + e[1] * e[1] * m22);
            worst_gap = worst_gap.max(((d - d_hat) - predicted).abs() / d.abs().max(1.0));
        }
    }
    (
        worst_steps <= 1.0 && worst_gap <= IDENTITY_TOL,
        format!(
            "argmin off by <= {worst_steps:.3} steps over {tested} specs ({skipped} degenerate skipped), gap identity err {worst_gap:.2e}"
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let (mut tested, mut skipped, mut ill) = (0, 0, 0);
    let (mut worst, mut worst_ill): (f64, f64) = (0.0, 0.0);
    while tested < 1000 {
        let s = random_scenario(&mut rng, HedgeMode::TwoAsset);
        let c = s.contract.to_asset(&s.measure).unwrap();
        let a: Vec<AssetSpec> = s
            .hedging_assets
            .iter()
            .map(|x| x.to_asset(&s.measure).unwrap())
            .collect();
        let p = (
            rng.random_range(10.0..200.0),
            rng.random_range(10.0..200.0),
            rng.random_range(10.0..200.0),
        );
        let closed = two_asset_hedge(&c, &a[0], &a[1], p, &s.measure);
        let system = gram_system(&c, &a, p.0, &[p.1, p.2], &s.measure).unwrap();
        let cond = degeneracy_check(&system).condition_number;
        match (closed, multi_asset_hedge(&system)) {
            (Ok((x, y)), Ok(g)) => {
                let err = ((x - g[0]).abs() / g[0].abs().max(1.0))
                    .max((y - g[1]).abs() / g[1].abs().max(1.0));
                if cond > CONDITION_LIMIT {
                    ill += 1;
                    worst_ill = worst_ill.max(err / (cond * f64::EPSILON));
                } else {
                    tested += 1;
                    worst = worst.max(err);
                }
            }
            (Err(Error::Degenerate(_)), Err(Error::Degenerate(_))) => skipped += 1,
            _ => {
                return (
                    false,
                    "closed form and general solve disagree on degeneracy".into(),
                )
            }
        }
    }
    let fig3 = builtin_scenario("fig3").unwrap();
    let bf =
        brute_force_constant_hedge(&fig3, RatioGrid::new(0.0, 2.0, GRID_STEP).unwrap()).unwrap();
    let m = fig1();
    let c = fig3.contract.to_asset(&m).unwrap();
    let a: Vec<AssetSpec> = fig3
        .hedging_assets
        .iter()
        .map(|x| x.to_asset(&m).unwrap())
        .collect();
    let (r1, r2) = two_asset_hedge(&c, &a[0], &a[1], (1.0, 1.0, 1.0), &m).unwrap();
    let steps = (bf.best[0] - r1).abs().max((bf.best[1] - r2).abs()) / GRID_STEP;
    let golden = (r1 - 0.451_876_88).abs() < 1e-8 && (r2 - 0.571_359_58).abs() < 1e-8;
    (
        worst <= IDENTITY_TOL && steps <= 1.0 && golden,
        format!(
            "max rel diff {worst:.2e} over {tested} draws ({skipped} degenerate, {ill} with condition number > {CONDITION_LIMIT:.0e} excluded, their diff <= {worst_ill:.2} cond*eps); fig3 ratios ({r1:.6}, {r2:.6}) vs grid ({:.3}, {:.3}), {steps:.3} steps",
            bf.best[0], bf.best[1]
        ),
    )
}

fn run_named(name: &str) -> levy_hedge::ScenarioResult {
    let mut s = builtin_scenario(name).unwrap();
    s.seed = SEED;
    s.n_paths = 1000;
    run_scenario(&s).unwrap()
}

fn criterion_6() -> Outcome {
    let (s1, s2, two) = (run_named("fig2a"), run_named("fig2b"), run_named("fig3"));
    let analytic = two.delta_analytic < s1.delta_analytic.min(s2.delta_analytic);
    let mut ok = analytic;
    let mut detail = format!(
        "analytic Delta {:.4} / {:.4} / two {:.4}",
        s1.delta_analytic, s2.delta_analytic, two.delta_analytic
    );
    for (label, single) in [("S1", &s1), ("S2", &s2)] {
        let d: Vec<f64> = single
            .paths
            .iter()
            .zip(&two.paths)
            .map(|(a, b)| a.delta - b.delta)
            .collect();
        let est = Estimate::from_samples(&d);
        let z = est.mean / est.std_error;
        ok &= z >= N_SE;
        detail.push_str(&format!("; MC {label} - two = {:.3} ({z:.2} SE)", est.mean));
    }
    (ok, detail)
}

fn criterion_7() -> Outcome {
    let mut poisson = builtin_scenario("fig2a").unwrap();
    poisson.measure = LevyMeasure::poisson(15.0, 1.0).unwrap();
    poisson.contract = GeometricBernoulliSpec::new(100.0, 0.0, 0.25);
    poisson.hedging_assets = vec![GeometricBernoulliSpec::new(100.0, 0.0, 0.30)];
    let mut bernoulli = builtin_scenario("fig3").unwrap();
    bernoulli.contract.brownian_vol = 0.0;
    bernoulli
        .hedging_assets
        .iter_mut()
        .for_each(|a| a.brownian_vol = 0.0);

    let mut ok = true;
    let mut detail = Vec::new();
    for (label, mut s) in [("pure Poisson", poisson), ("pure Bernoulli", bernoulli)] {
        s.n_paths = 100;
        s.seed = SEED;
        let r = run_scenario(&s).unwrap();
        let worst =
            r.paths.iter().map(|p| p.max_abs_dv).fold(0.0, f64::max) / s.contract.initial_price;
        ok &= worst <= COMPLETE_TOL;
        detail.push(format!("{label} max |dV|/C0 = {worst:.2e}"));
    }
    (ok, detail.join(", "))
}

fn criterion_8() -> Outcome {
    let (three, four) = (run_named("fig3"), run_named("fig4"));
    let ratio = four.aggregate.per_step_std / three.aggregate.per_step_std;
    let golden = (ratio - GOLDEN_NEAR_PERFECT).abs() <= GOLDEN_REL_TOL * GOLDEN_NEAR_PERFECT;
    (
        ratio <= NEAR_PERFECT && golden,
        format!(
            "per-step std fig4 {:.4e} / fig3 {:.4e} = {ratio:.5} (golden {GOLDEN_NEAR_PERFECT})",
            four.aggregate.per_step_std, three.aggregate.per_step_std
        ),
    )
}

fn halving_ratio(coeffs: &SymmetricCoefficients, m: &LevyMeasure, n_paths: u64) -> f64 {
    let fine = TimeGrid::new(1.0, 2000).unwrap();
    let coarse = TimeGrid::new(1.0, 1000).unwrap();
    let (mut e_fine, mut e_coarse) = (Vec::new(), Vec::new());
    for i in 0..n_paths {
        let nf = sample_noise(m, &fine, SEED, i);
        let nc = nf.coarsen(2).unwrap();
        let exact = geometric_path(coeffs, m, &nf, &fine, 1.0)
            .unwrap()
            .terminal();
        e_fine.push(
            (integrate(&Proportional(coeffs), m, &nf, &fine, 1.0)
                .unwrap()
                .terminal()
                - exact)
                .abs(),
        );
        e_coarse.push(
            (integrate(&Proportional(coeffs), m, &nc, &coarse, 1.0)
                .unwrap()
                .terminal()
                - exact)
                .abs(),
        );
    }
    median(&e_fine) / median(&e_coarse)
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let grid = TimeGrid::new(1.0, 1000).unwrap();
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let m = random_measure(&mut rng);
        let mut coeffs = || {
            SymmetricCoefficients::new(
                rng.random_range(-0.2..0.2),
                rng.random_range(-0.5..0.5),
                (0..m.len()).map(|_| rng.random_range(-0.6..0.8)).collect(),
            )
            .unwrap()
        };
        let (a, b) = (coeffs(), coeffs());
        let noise = sample_noise(&m, &grid, SEED, i);
        let x = geometric_path(&a, &m, &noise, &grid, 2.0).unwrap();
        let y = geometric_path(&b, &m, &noise, &grid, 0.5).unwrap();
        let p = geometric_path(
            &product_coefficients(&a, &b, &m).unwrap(),
            &m,
            &noise,
            &grid,
            1.0,
        )
        .unwrap();
        let q = geometric_path(
            &quotient_coefficients(&a, &b, &m).unwrap(),
            &m,
            &noise,
            &grid,
            4.0,
        )
        .unwrap();
        for j in 0..=grid.steps() {
            let (u, v) = (x.values[j], y.values[j]);
            worst = worst.max((p.values[j] / (u * v) - 1.0).abs());
            worst = worst.max((q.values[j] / (u / v) - 1.0).abs());
        }
    }
    let pure_jump = SymmetricCoefficients::new(0.1, 0.0, vec![0.3, -0.25]).unwrap();
    let ratio = halving_ratio(&pure_jump, &fig1(), 100);
    let in_band = ratio >= HALVING_BAND.0 && ratio <= HALVING_BAND.1;
    (
        worst <= IDENTITY_TOL && in_band,
        format!("product/quotient rel err {worst:.2e}; pure-jump Euler error ratio dt/2 : dt = {ratio:.3}"),
    )
}

fn snapshot(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                std::fs::read(e.path()).unwrap(),
            )
        })
        .filter(|(n, _)| n.ends_with(".csv"))
        .collect();
    files.sort();
    files
}

fn criterion_10() -> Outcome {
    let dirs: Vec<_> = (0..3).map(|_| tempfile::tempdir().unwrap()).collect();
    for (dir, threads) in dirs.iter().zip(["1", "8", "3"]) {
        let out = dir.path().to_str().unwrap();
        for args in [
            vec!["figures", "--out", out],
            vec!["simulate", "fig3", "--paths", "300", "--out", out],
        ] {
            let status = Command::new(env!("CARGO_BIN_EXE_levy-hedge"))
                .args(&args)
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .unwrap()
                .status;
            if !status.success() {
                return (false, format!("{args:?} exited with {status}"));
            }
        }
    }
    let snaps: Vec<_> = dirs.iter().map(|d| snapshot(d.path())).collect();
    let n = snaps[0].len();
    let same = snaps.iter().all(|s| *s == snaps[0]);
    (
        same && n == 8,
        format!("{n} CSV files byte-identical across 3 runs with 1, 8 and 3 threads"),
    )
}

/// Informational: with a Brownian component the Euler scheme converges with
/// strong order one half, so its error does not halve with `dt`.
fn jump_diffusion_note() -> String {
    let jd = SymmetricCoefficients::new(0.1, 0.2, vec![0.3, -0.25]).unwrap();
    format!(
        "info: jump-diffusion Euler error ratio dt/2 : dt = {:.3} over 1000 paths (strong order 1/2 predicts 0.707, not gated)",
        halving_ratio(&jd, &fig1(), 1000)
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Ito isometry", criterion_1),
        ("natural-price martingale", criterion_2),
        ("kernel/benchmark identity", criterion_3),
        ("single-asset argmin and optimality gap", criterion_4),
        ("two-asset closed form and 2-D argmin", criterion_5),
        ("two-asset ordering", criterion_6),
        ("completeness limits", criterion_7),
        ("near-perfect hedge", criterion_8),
        ("calculus oracles", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
    }
    println!("{}", jump_diffusion_note());
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
