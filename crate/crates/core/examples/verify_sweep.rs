//! Check every spectral claim over a range of k and summarize the verdicts.
//!
//! ```text
//! cargo run --release --example verify_sweep -- 2 60
//! ```

use andrasfai::{run_sweep, ClaimId, VerdictStatus};

pub fn run_example() -> andrasfai::Result<()> {
    let mut args = std::env::args().skip(1).filter_map(|a| a.parse::<usize>().ok());
    let from = args.next().unwrap_or(2).max(2);
    let to = args.next().unwrap_or(24).max(from);

    let report = run_sweep(from, to, 600)?;
    println!(
        "k in [{from}, {to}]: {} pass, {} erratum, {} fail; min gap {:.3e}; oracle max deviation {:.2e}",
        report.count(VerdictStatus::Pass),
        report.count(VerdictStatus::ErratumDetected),
        report.count(VerdictStatus::Fail),
        report.min_gap,
        report.oracle_max_dev,
    );

    // The +1 multiplicity is 2 whenever k = 3 mod 4.
    for k in (from..=to).filter(|k| k % 4 == 3) {
        let verdict = report.verdict(k, ClaimId::PlusOne).expect("every k has a plus_one verdict");
        println!("  k = {k}: {}", verdict.detail);
        assert_eq!(verdict.status, VerdictStatus::ErratumDetected);
    }
    assert_eq!(report.exit_code(), 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> andrasfai::Result<()> {
    run_example()
}
