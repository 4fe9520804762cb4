//! Bernoulli numbers at non-integer index through the Hankel contour.

use harmonic_zeta::hankel::{
    bernoulli_interp, bernoulli_prime_interp, bernoulli_prime_oracle, lemma3_residual,
    orientation_sign, ContourSpec,
};
use harmonic_zeta::real::{PrecisionContext, Real};

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(30)?;
    let spec = ContourSpec::for_precision(&ctx);
    println!("orientation sign fixed by B_1 = +1/2: {}", orientation_sign());
    for s in ["0", "0.5", "1", "1.5", "2.5", "5"] {
        let s = Real::parse(s, &ctx)?;
        println!("B_(s+1) at s = {:<4} {}", s.to_f64(), bernoulli_interp(&s, &spec, &ctx)?);
    }
    for s in ["0.5", "1.5", "4"] {
        let r = lemma3_residual(&Real::parse(s, &ctx)?, &spec, &ctx)?;
        println!("|B_s + s zeta(1-s)| at s = {s}: {}", r.to_sci_string(3));
    }
    for s in [1, 2, 3] {
        let s = Real::from_i64(s, &ctx);
        println!(
            "B'_{} contour {}  zeta engine {}",
            s.to_f64(),
            bernoulli_prime_interp(&s, &spec, &ctx)?,
            bernoulli_prime_oracle(&s, &ctx)?
        );
    }
    let wide = bernoulli_interp(&Real::parse("1.3", &ctx)?, &spec.with_radius(3.0), &ctx)?;
    println!("radius 3 at s = 1.3: {wide}");
    Ok(())
}
