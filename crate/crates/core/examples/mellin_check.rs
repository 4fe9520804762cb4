//! Generating function of H_n and its Mellin transform.

use harmonic_zeta::euler_sums::{generating_function_check, mellin_fundamental_check};
use harmonic_zeta::real::{PrecisionContext, Real};

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(40)?;
    for (x, n) in [("1", 200), ("0.1", 1200), ("0.1", 100)] {
        let g = generating_function_check(&Real::parse(x, &ctx)?, n, &ctx)?;
        println!(
            "x = {x:>3}, N = {n:>4}: residual {}  bound {}  ok {}",
            g.residual.to_sci_string(3),
            g.bound.to_sci_string(3),
            g.within_bound()
        );
    }
    for s in [2, 3] {
        let m = mellin_fundamental_check(&Real::from_i64(s, &ctx), &ctx)?;
        println!("s = {s}");
        println!("  int x^(s-1) L/D        = {}  residual {}", m.first_integral, m.first_residual.to_sci_string(3));
        println!("  int x^(s-1) e^-x L/D   = {}  residual {}", m.middle_integral, m.middle_residual.to_sci_string(3));
        println!("  int x^(s-1) L          = {}  residual {}", m.log_integral, m.log_residual.to_sci_string(3));
        println!("  combined {}  direct {}", m.combined_residual.to_sci_string(3), m.direct_residual.to_sci_string(3));
    }
    Ok(())
}
