//! Ramanujan-summed values of sum H_n n^k beside the chain values.

use harmonic_zeta::ramanujan::{self_test_residual, EMScheme};
use harmonic_zeta::real::PrecisionContext;
use harmonic_zeta::report::oracle_report;

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(30)?;
    let scheme = EMScheme::for_precision(&ctx);
    println!("scheme N = {}, J = {}, integral from {}", scheme.n, scheme.j, EMScheme::INTEGRAL_LOWER_LIMIT);
    println!("self-test |sum^R n^-2 - (zeta(2) - 1)| = {}", self_test_residual(scheme, &ctx)?.to_sci_string(3));
    let report = oracle_report(4, &ctx)?;
    for row in &report.rows {
        println!("S_{}^R = {}  spread {}  stable {}", row.k, row.ramanujan, row.spread.to_sci_string(2), row.stable);
        for c in &row.comparisons {
            println!("    {}: chain - S^R = {}", c.convention, c.chain_minus_ramanujan.to_sci_string(10));
        }
    }
    Ok(())
}
