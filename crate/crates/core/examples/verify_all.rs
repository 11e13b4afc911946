//! Runs every check with the default fleets and prints the text report.
//!
//! `cargo run --release --example verify_all [-- --json]`

use endograph::verifier::{run_all, VerifyConfig};

fn main() -> endograph::Result<()> {
    let json = std::env::args().any(|a| a == "--json");
    let config = VerifyConfig {
        timings: !json,
        ..VerifyConfig::default()
    };
    let report = run_all(&config)?;
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
