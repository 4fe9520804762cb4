use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// The harmonic number `H_n = 1 + 1/2 + ... + 1/n`. `H_0` is left undefined.
pub fn harmonic(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "harmonic number H_0 is not defined".into(),
        ));
    }
    Ok((1..=n).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(BigInt::one(), BigInt::from(j))
    }))
}

/// Serializes as `numerator/denominator`, always including the denominator.
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(2, 1), q(2, 1));
        assert_eq!(binomial(0, 0), q(1, 1));
        assert_eq!(binomial(5, 2), q(10, 1));
        assert_eq!(binomial(3, 7), q(0, 1));
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(1).unwrap(), q(1, 1));
        assert_eq!(harmonic(2).unwrap(), q(3, 2));
        assert_eq!(harmonic(3).unwrap(), q(11, 6));
        assert!(harmonic(0).is_err());
    }

    #[test]
    fn harmonic_telescopes() {
        for n in 1..60u64 {
            let step = harmonic(n + 1).unwrap() - harmonic(n).unwrap();
            assert_eq!(step, q(1, n as i64 + 1));
        }
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&q(-5, 24)), "-5/24");
        assert_eq!(rational_to_string(&q(4, 2)), "2/1");
        assert_eq!(parse_rational("-5/24").unwrap(), q(-5, 24));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn ring_axioms_small_values() {
        let vals: Vec<Rational> = (-3..=3)
            .flat_map(|n| (1..=3).map(move |d| q(n, d)))
            .collect();
        for a in &vals {
            for b in &vals {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert!(b.denom() > &BigInt::zero());
                for c in &vals {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
            assert_eq!(a + Rational::zero(), a.clone());
            assert_eq!(a * Rational::one(), a.clone());
            assert_eq!(a - a, Rational::zero());
        }
    }
}
