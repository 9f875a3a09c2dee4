//! CSV emission. Floats are written with 17 significant digits so that
//! values round-trip exactly.

use std::io::Write;

use super::run::{PathRun, PathSummary};
use crate::levy::TimeGrid;

pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn to_io(e: csv::Error) -> std::io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => std::io::Error::other(format!("{other:?}")),
    }
}

/// Hedging run: `t,C,S1..Sn,phi1..phin,theta,V,dV`, one row per grid point,
/// `dV` empty on the first row.
pub fn write_hedge_csv<W: Write>(out: W, run: &PathRun, grid: &TimeGrid) -> std::io::Result<()> {
    let n = run.assets.len();
    let mut w = writer(out);
    let mut header = vec!["t".to_string(), "C".to_string()];
    header.extend((1..=n).map(|i| format!("S{i}")));
    header.extend((1..=n).map(|i| format!("phi{i}")));
    header.extend(["theta", "V", "dV"].map(String::from));
    w.write_record(&header).map_err(to_io)?;

    let r = &run.report;
    for i in 0..=grid.steps() {
        let mut row = vec![
            format_float(grid.time(i)),
            format_float(run.contract.values[i]),
        ];
        row.extend(run.assets.iter().map(|a| format_float(a.values[i])));
        row.extend(r.strategy.phi[i].iter().map(|&p| format_float(p)));
        row.push(format_float(r.strategy.theta[i]));
        row.push(format_float(r.portfolio_path.values[i]));
        row.push(if i == 0 {
            String::new()
        } else {
            format_float(r.residual_increments[i - 1])
        });
        w.write_record(&row).map_err(to_io)?;
    }
    w.flush()
}

/// Market display: `t,N_t,X_t,C,S1..Sn`.
pub fn write_market_csv<W: Write>(out: W, run: &PathRun, grid: &TimeGrid) -> std::io::Result<()> {
    let mut w = writer(out);
    let mut header = vec!["t".to_string(), "N_t".into(), "X_t".into(), "C".into()];
    header.extend((1..=run.assets.len()).map(|i| format!("S{i}")));
    w.write_record(&header).map_err(to_io)?;
    for i in 0..=grid.steps() {
        let mut row = vec![
            format_float(grid.time(i)),
            run.jump_count[i].to_string(),
            format_float(run.levy[i]),
            format_float(run.contract.values[i]),
        ];
        row.extend(run.assets.iter().map(|a| format_float(a.values[i])));
        w.write_record(&row).map_err(to_io)?;
    }
    w.flush()
}

/// One row per path with the sums needed to rebuild every aggregate.
pub fn write_summary_csv<W: Write>(out: W, paths: &[PathSummary]) -> std::io::Result<()> {
    let mut w = writer(out);
    w.write_record([
        "path",
        "delta",
        "sum_dV",
        "sum_dV_sq",
        "max_abs_dV",
        "steps",
    ])
    .map_err(to_io)?;
    for p in paths {
        w.write_record([
            p.path_index.to_string(),
            format_float(p.delta),
            format_float(p.sum_dv),
            format_float(p.sum_dv_sq),
            format_float(p.max_abs_dv),
            p.steps.to_string(),
        ])
        .map_err(to_io)?;
    }
    w.flush()
}

/// Reads back a summary file written by [`write_summary_csv`].
pub fn read_summary_csv<R: std::io::Read>(input: R) -> std::io::Result<Vec<PathSummary>> {
    let mut r = csv::Reader::from_reader(input);
    let bad = |what: &str| std::io::Error::new(std::io::ErrorKind::InvalidData, what.to_string());
    r.records()
        .map(|rec| {
            let rec = rec.map_err(to_io)?;
            let f = |i: usize| -> std::io::Result<f64> {
                rec.get(i)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad float"))
            };
            Ok(PathSummary {
                path_index: rec
                    .get(0)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad path"))?,
                delta: f(1)?,
                sum_dv: f(2)?,
                sum_dv_sq: f(3)?,
                max_abs_dv: f(4)?,
                steps: rec
                    .get(5)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad steps"))?,
            })
        })
        .collect()
}
