//! Gamma, digamma, polygamma and the constants at 60 digits.

use harmonic_zeta::real::{
    const_gamma, const_log2pi, const_pi, digamma, gamma_fn, polygamma, PrecisionContext, Real,
};

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(60)?;
    println!("pi        = {}", const_pi(&ctx));
    println!("gamma     = {}", const_gamma(&ctx));
    println!("ln(2 pi)  = {}", const_log2pi(&ctx));

    let half = Real::parse("0.5", &ctx)?;
    println!("Gamma(1/2)   = {}", gamma_fn(&half, &ctx)?);
    println!("Gamma(-2.5)  = {}", gamma_fn(&Real::parse("-2.5", &ctx)?, &ctx)?);
    println!("psi(1)       = {}", digamma(&Real::from_i64(1, &ctx), &ctx)?);
    for m in 1..=4 {
        println!("psi^({m})(1)   = {}", polygamma(m, &Real::from_i64(1, &ctx), &ctx)?);
    }
    Ok(())
}
