//! Riemann zeta and its derivative, including zeta'(-k) and the bridge to zeta(2k+1).

use harmonic_zeta::real::{PrecisionContext, Real};
use harmonic_zeta::zeta::{
    functional_equation_residual, zeta_em, zeta_neg_int_exact, zeta_odd_from_zprime,
    zeta_prime_oracle,
};
use harmonic_zeta::exact::rational_to_string;

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(50)?;
    for s in ["2", "0.5", "-1.5", "3"] {
        println!("zeta({s:>4}) = {}", zeta_em(&Real::parse(s, &ctx)?, &ctx)?);
    }
    for k in 1..=6 {
        println!("zeta({}) = {}", 1 - k as i64, rational_to_string(&zeta_neg_int_exact(k)?));
    }
    for k in 0..=4 {
        println!("zeta'(-{k}) = {}", zeta_prime_oracle(&Real::from_i64(-k, &ctx), &ctx)?);
    }
    let zp2 = zeta_prime_oracle(&Real::from_i64(-2, &ctx), &ctx)?;
    println!("zeta(3) from zeta'(-2) = {}", zeta_odd_from_zprime(1, &zp2, &ctx)?);
    let r = functional_equation_residual(&Real::parse("2.5", &ctx)?, &ctx)?;
    println!("functional equation residual at 2.5: {}", r.to_sci_string(3));
    Ok(())
}
