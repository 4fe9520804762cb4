//! The Euler sum h(s) = sum H_n/n^s and the shifted-sum identity.

use harmonic_zeta::euler_sums::{fundamental_lemma_residual, h_euler, shifted_euler_sum};
use harmonic_zeta::real::{PrecisionContext, Real};
use harmonic_zeta::zeta::zeta_em;

fn main() -> harmonic_zeta::Result<()> {
    let ctx = PrecisionContext::new(40)?;
    for s in ["1.25", "2", "3", "4.5"] {
        let s = Real::parse(s, &ctx)?;
        let h = h_euler(&s, &ctx)?;
        let shifted = shifted_euler_sum(&s, &ctx)?;
        let residual = fundamental_lemma_residual(&s, &ctx)?;
        println!("s = {s:.4}\n  h(s)             = {h}\n  sum H_n/(n+1)^s  = {shifted}\n  residual         = {}", residual.to_sci_string(3));
    }
    let two = Real::from_i64(2, &ctx);
    let ratio = h_euler(&two, &ctx)? / zeta_em(&Real::from_i64(3, &ctx), &ctx)?;
    println!("h(2) / zeta(3) = {ratio}");
    Ok(())
}
