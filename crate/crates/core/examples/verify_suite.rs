//! Runs the claim registry, or the claims named on the command line.

use greenstone::verify::{run_suite, VerifyConfig};

fn main() -> greenstone::Result<()> {
    let selection = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let report = run_suite(&selection, &VerifyConfig::default())?;
    print!("{}", report.summary());
    Ok(())
}
