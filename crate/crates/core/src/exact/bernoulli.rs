use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{binomial, Rational};
use crate::error::{Error, Result};

/// Sign convention for `B_1`; every other Bernoulli number is shared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BernoulliConvention {
    /// `B_1 = +1/2`, the coefficients of `-z / (e^{-z} - 1)`.
    PaperPlus,
    /// `B_1 = -1/2`, the coefficients of `z / (e^z - 1)`.
    ConventionalMinus,
}

impl fmt::Display for BernoulliConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BernoulliConvention::PaperPlus => f.write_str("B1=+1/2"),
            BernoulliConvention::ConventionalMinus => f.write_str("B1=-1/2"),
        }
    }
}

// Conventional (B_1 = -1/2) values, grown on demand.
static CACHE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

fn extend_cache(cache: &mut Vec<Rational>, n: usize) {
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= n {
        let m = cache.len() as u64;
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        let acc = cache
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| {
                acc + binomial(m + 1, k as u64) * b
            });
        cache.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
}

/// Exact Bernoulli number `B_n` under the requested convention.
pub fn bernoulli(n: usize, conv: BernoulliConvention) -> Rational {
    let conventional = {
        let cache = CACHE.read().unwrap_or_else(|e| e.into_inner());
        cache.get(n).cloned()
    };
    let b = match conventional {
        Some(b) => b,
        None => {
            let mut cache = CACHE.write().unwrap_or_else(|e| e.into_inner());
            extend_cache(&mut cache, n);
            cache[n].clone()
        }
    };
    if n == 1 && conv == BernoulliConvention::PaperPlus {
        -b
    } else {
        b
    }
}

/// Residual `sum_{k=0}^{n-1} C(n,k) B_k` of the identity
/// `B_n = sum_{k=0}^{n} C(n,k) B_k`; zero exactly when the identity holds.
pub fn bernoulli_self_identity(n: usize, conv: BernoulliConvention) -> Result<Rational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "self identity is stated for n >= 2, got {n}"
        )));
    }
    Ok((0..n).fold(Rational::zero(), |acc, k| {
        acc + binomial(n as u64, k as u64) * bernoulli(k, conv)
    }))
}
