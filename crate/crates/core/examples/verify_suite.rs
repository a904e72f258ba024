//! Run part of the identity suite and print the report table and JSON.
use pqml::verifier::{run_suite, SuiteConfig};

fn main() -> pqml::Result<()> {
    let cfg = SuiteConfig::parse(
        r#"
identities = ["recurrence", "derivative-shift", "derivative-shift-as-printed", "wright-exponential"]

[grid]
alpha = [0.5, 1.0]
beta = [1.0]
z = [-1.0, 0.5]
"#,
    )?;
    let outcome = run_suite(&cfg)?;
    print!("{}", outcome.summary_table());
    println!();
    print!("{}", outcome.to_json());
    println!("all corrected forms pass: {}", outcome.corrected_pass());
    Ok(())
}
