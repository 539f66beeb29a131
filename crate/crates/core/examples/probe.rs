//! Bounded search for a stable ideal extension whose ideal lacks a
//! minimal condition.

use greenstone::verify::{probe_open_problem, VerifyConfig};

fn main() -> greenstone::Result<()> {
    let config = VerifyConfig {
        depth: 8,
        ..VerifyConfig::default()
    };
    print!("{}", probe_open_problem(&config)?.to_json());
    Ok(())
}
