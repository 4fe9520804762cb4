//! The exact recurrence chain seeded by zeta'(0) and its distance from the
//! classical zeta'(-k).

use harmonic_zeta::chain::{build_relation, discrepancy_report, solve_chain};
use harmonic_zeta::euler_sums::SumConvention;
use harmonic_zeta::exact::rational_to_string;
use harmonic_zeta::real::PrecisionContext;

fn main() -> harmonic_zeta::Result<()> {
    for s in 2..=4 {
        let r = build_relation(s)?;
        let coeffs: Vec<String> = r.coefficients.iter().map(rational_to_string).collect();
        println!("s = {s}: C(s,j) = [{}], rhs {}", coeffs.join(", "), rational_to_string(&r.rhs));
    }
    for conv in SumConvention::ALL {
        println!("\nconvention {conv}");
        for s in solve_chain(4, conv)? {
            println!("  S_{} = {}", s.k, s.value.as_exact().expect("exact"));
        }
    }
    let ctx = PrecisionContext::new(30)?;
    let report = discrepancy_report(6, &SumConvention::ALL, &ctx)?;
    println!("\n k conv  zeta'(-k) chain                         delta");
    for row in &report.rows {
        println!("{:>2} {:>4}  {:<38} {}", row.k, row.convention, row.chain.to_string(), row.delta.to_sci_string(6));
    }
    for z in &report.zeta_odd {
        println!("zeta({}) chain {} oracle {} ({})", 2 * z.k + 1, z.chain.to_sci_string(12), z.oracle.to_sci_string(12), z.convention);
    }
    Ok(())
}
