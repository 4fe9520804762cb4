//! Harmonic numbers, binomials and exact values in Q + Q gamma + Q ln(2 pi).

use harmonic_zeta::euler_sums::SymbolicValue;
use harmonic_zeta::exact::{binomial, harmonic, parse_rational, rational_to_string};
use harmonic_zeta::real::PrecisionContext;

fn main() -> harmonic_zeta::Result<()> {
    for n in [1, 2, 10, 30] {
        println!("H_{n} = {}", rational_to_string(&harmonic(n)?));
    }
    println!("C(40, 20) = {}", rational_to_string(&binomial(40, 20)));

    let s0 = SymbolicValue::from_ratios((1, 2), (1, 2), (-1, 2));
    let shifted = s0.add_rational(&parse_rational("-1/12")?);
    let sum = &s0 + &shifted.scale(&parse_rational("3/2")?);
    let ctx = PrecisionContext::new(40)?;
    println!("S_0         = {s0} = {}", s0.evaluate(&ctx));
    println!("S_0 + 3/2 x = {sum} = {}", sum.evaluate(&ctx));
    println!("as JSON: {}", serde_json::to_string(&sum).expect("serializable"));
    Ok(())
}
