//! Probes the conjectured period-2 quantity of E8. A probe reports
//! EVIDENCE, never PASS, and a failing probe does not fail a run.

use affine_frieze::report::{run_checks, RunConfig};
use affine_frieze::Family;

fn main() -> affine_frieze::Result<()> {
    let mut cfg = RunConfig::new(Family::E8)?;
    cfg.seeds = 10;
    cfg.checks = vec!["conjecture".into()];
    let out = run_checks(&cfg)?;
    for r in &out.reports {
        println!("{:<9} {:<24} n {}..{}  {}", r.verdict.as_str(), r.id, r.n_window[0], r.n_window[1], r.citation);
    }
    println!("exit code {}", out.exit_code());
    Ok(())
}
