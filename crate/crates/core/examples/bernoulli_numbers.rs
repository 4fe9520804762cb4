//! Exact Bernoulli numbers under both sign conventions for B_1.

use harmonic_zeta::exact::{bernoulli, bernoulli_self_identity, rational_to_string, BernoulliConvention};

fn main() -> harmonic_zeta::Result<()> {
    println!("{:>3}  {:>24}  {:>24}", "n", "B_n (B_1 = +1/2)", "B_n (B_1 = -1/2)");
    for n in 0..=20 {
        println!(
            "{n:>3}  {:>24}  {:>24}",
            rational_to_string(&bernoulli(n, BernoulliConvention::PaperPlus)),
            rational_to_string(&bernoulli(n, BernoulliConvention::ConventionalMinus)),
        );
    }

    // B_n = sum_{k<=n} C(n,k) B_k holds only with B_1 = -1/2
    println!("\nresidual of B_n = sum C(n,k) B_k");
    for n in 2..=8 {
        println!(
            "n = {n}: plus {:>4}  minus {:>4}",
            rational_to_string(&bernoulli_self_identity(n, BernoulliConvention::PaperPlus)?),
            rational_to_string(&bernoulli_self_identity(n, BernoulliConvention::ConventionalMinus)?),
        );
    }
    Ok(())
}
