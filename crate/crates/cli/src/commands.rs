use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use levy_hedge::hedging::{degeneracy_check, gram_system};
use levy_hedge::sim::csv::{format_float, write_hedge_csv, write_market_csv, write_summary_csv};
use levy_hedge::sim::verify::{run_suite, Suite};
use levy_hedge::sim::{hedge_ratios, run_scenario, simulate_path, HedgeMode, Scenario};
use levy_hedge::{rho_diagnostic, DegeneracyReport, Error};

use crate::config::{Overrides, RunConfig};
use crate::exit::Failure;

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>, Failure> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Failure::Io(format!("creating {}: {e}", dir.display())))?;
    let path = dir.join(name);
    File::create(&path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Io(format!("creating {}: {e}", path.display())))
}

fn finish(mut w: BufWriter<File>) -> Result<(), Failure> {
    w.flush()?;
    Ok(())
}

fn write_effective(dir: &Path, cfg: &RunConfig) -> Result<(), Failure> {
    let mut w = create(dir, "effective_config.json")?;
    serde_json::to_writer_pretty(&mut w, cfg).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(w)?;
    finish(w)
}

/// Writes the reporting path of a scenario: the market display for
/// unhedged scenarios, the hedge portfolio otherwise.
fn write_figure(dir: &Path, s: &Scenario) -> Result<PathBuf, Failure> {
    let run = simulate_path(s, 0)?;
    let name = format!("{}.csv", s.name);
    let mut w = create(dir, &name)?;
    if s.hedge_mode == HedgeMode::None {
        write_market_csv(&mut w, &run, &s.grid)?;
    } else {
        write_hedge_csv(&mut w, &run, &s.grid)?;
    }
    finish(w)?;
    Ok(dir.join(name))
}

pub fn figures(
    names: &[String],
    cfg: Option<RunConfig>,
    o: &Overrides,
    verbosity: u8,
) -> Result<(), Failure> {
    let configs: Vec<RunConfig> = match cfg {
        Some(c) => vec![c],
        None => names.iter().map(|n| RunConfig::builtin(n)).collect(),
    };
    for cfg in configs {
        let (s, out) = cfg.resolve(o)?;
        let dir = out.unwrap_or_else(|| PathBuf::from("."));
        let path = write_figure(&dir, &s)?;
        if verbosity > 0 {
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn used_assets(s: &Scenario) -> Vec<usize> {
    match s.hedge_mode {
        HedgeMode::None => vec![],
        HedgeMode::Single(i) => vec![i],
        HedgeMode::TwoAsset => vec![0, 1],
        HedgeMode::Multi => (0..s.hedging_assets.len()).collect(),
    }
}

fn print_report(r: &DegeneracyReport) {
    println!("min_eigenvalue: {}", r.min_eigenvalue);
    println!("condition_number: {}", r.condition_number);
    println!("degenerate: {}", r.degenerate);
}

pub fn hedge(cfg: RunConfig, o: &Overrides) -> Result<(), Failure> {
    let (s, out) = cfg.resolve(o)?;
    let contract = s.natural_contract()?;
    let assets = s.natural_assets()?;
    let used = used_assets(&s);

    println!("scenario: {}", s.name);
    println!(
        "hedge_mode: {}",
        serde_json::to_string(&s.hedge_mode).unwrap_or_default()
    );
    if !used.is_empty() {
        let picked: Vec<_> = used.iter().map(|&i| assets[i].clone()).collect();
        let prices: Vec<f64> = picked.iter().map(|a| a.initial_price()).collect();
        let system = gram_system(
            &contract,
            &picked,
            contract.initial_price(),
            &prices,
            &s.measure,
        )?;
        let report = degeneracy_check(&system);
        print_report(&report);
        if report.degenerate {
            return Err(Error::Degenerate(report).into());
        }
    }

    let ratios = hedge_ratios(&s)?;
    let c0 = contract.initial_price();
    let phi: Vec<f64> = ratios
        .iter()
        .zip(&assets)
        .map(|(r, a)| r * c0 / a.initial_price())
        .collect();
    let theta0: f64 = phi
        .iter()
        .zip(&assets)
        .map(|(p, a)| p * a.initial_price())
        .sum();
    for (i, (r, p)) in ratios.iter().zip(&phi).enumerate() {
        println!("ratio{}: {r}", i + 1);
        println!("phi{}: {p}", i + 1);
    }
    println!("theta0: {theta0}");
    if let HedgeMode::Single(i) = s.hedge_mode {
        println!(
            "rho: {}",
            rho_diagnostic(&contract, &assets[i], &s.measure)?
        );
    }
    let delta =
        levy_hedge::analytic_delta(&contract, &assets, &ratios, &s.measure, s.grid.horizon())?;
    println!("delta_analytic: {}", delta * c0 * c0);
    println!("delta_analytic_per_c0_squared: {delta}");

    if let Some(dir) = out {
        let mut w = create(&dir, "hedge.csv")?;
        writeln!(w, "asset,ratio,phi")?;
        for (i, (r, p)) in ratios.iter().zip(&phi).enumerate() {
            writeln!(w, "S{},{},{}", i + 1, format_float(*r), format_float(*p))?;
        }
        finish(w)?;
        write_effective(&dir, &cfg.effective(&s, Some(dir.clone())))?;
    }
    Ok(())
}

pub fn simulate(cfg: RunConfig, o: &Overrides) -> Result<(), Failure> {
    let (s, out) = cfg.resolve(o)?;
    let r = run_scenario(&s)?;
    let a = &r.aggregate;
    println!("scenario: {}", s.name);
    println!("paths: {}", s.n_paths);
    for (i, x) in r.ratios.iter().enumerate() {
        println!("ratio{}: {x}", i + 1);
    }
    println!("delta_mc: {}", a.delta.mean);
    println!("delta_mc_std_error: {}", a.delta.std_error);
    println!("delta_analytic: {}", r.delta_analytic);
    if let Some(rho) = r.rho {
        println!("rho: {rho}");
    }
    println!("per_step_std: {}", a.per_step_std);
    println!("max_abs_dv: {}", a.max_abs_dv);

    if let Some(dir) = out {
        let mut w = create(&dir, "hedge.csv")?;
        write_hedge_csv(&mut w, &r.reporting, &s.grid)?;
        finish(w)?;
        let mut w = create(&dir, "market.csv")?;
        write_market_csv(&mut w, &r.reporting, &s.grid)?;
        finish(w)?;
        let mut w = create(&dir, "paths.csv")?;
        write_summary_csv(&mut w, &r.paths)?;
        finish(w)?;
        write_effective(&dir, &cfg.effective(&s, Some(dir.clone())))?;
    }
    Ok(())
}

pub fn verify(suite: Suite, seed: u64, paths: Option<usize>) -> Result<(), Failure> {
    let checks = run_suite(suite, seed, paths)?;
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        return Err(Failure::Property(format!("{failed} properties failed")));
    }
    Ok(())
}
