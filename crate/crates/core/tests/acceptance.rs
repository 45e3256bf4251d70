//! Runs every acceptance criterion at the default bounds (or `MFG_BOUNDS`)
//! and prints one verdict line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use mfg_core::suite::{run_criterion, CRITERIA};
use mfg_core::Bounds;

fn main() -> ExitCode {
    let bounds = match Bounds::from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("bad {}: {e}", Bounds::ENV);
            return ExitCode::from(2);
        }
    };
    println!("acceptance suite, bounds {bounds}");
    let start = Instant::now();
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let t = Instant::now();
        let r = run_criterion(id, bounds);
        println!("{r} [{:.2}s]", t.elapsed().as_secs_f64());
        failed += usize::from(!r.passed);
    }
    println!(
        "{} passed, {failed} failed in {:.2}s",
        CRITERIA.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
