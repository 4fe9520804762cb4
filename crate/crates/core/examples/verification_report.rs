//! Runs the verification suites and prints the JSON document.

use harmonic_zeta::real::PrecisionContext;
use harmonic_zeta::report::{cmd_verify, Suite};

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(20)?;
    let doc = cmd_verify(&ctx, &[Suite::Bernoulli, Suite::FundamentalLemma, Suite::ChainExactness]);
    for suite in doc.suites.iter().flatten() {
        eprintln!("{:<20} {}", suite.suite.name(), if suite.passed { "pass" } else { "FAIL" });
    }
    print!("{}", doc.to_json()?);
    std::process::exit(doc.exit_code());
}
