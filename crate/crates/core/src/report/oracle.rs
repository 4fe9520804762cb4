//! Ramanujan values of `sum H_n n^k` beside the chain and the closed form.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::solve_chain;
use crate::error::{Error, Result};
use crate::euler_sums::{s_from_zprime, SumConvention, SymbolicValue, Value};
use crate::ramanujan::{ramanujan_sum, EMScheme, MAX_K};
use crate::real::{PrecisionContext, Real};
use crate::zeta::zeta_prime_oracle;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConventionComparison {
    pub convention: SumConvention,
    pub chain_exact: SymbolicValue,
    pub chain: Real,
    /// Closed form fed with the classical `zeta'(-k)`.
    pub closed_form: Real,
    pub chain_minus_ramanujan: Real,
    pub closed_form_minus_ramanujan: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleRow {
    pub k: u32,
    pub scheme: EMScheme,
    pub refined: EMScheme,
    pub ramanujan: Real,
    pub spread: Real,
    pub stable: bool,
    pub comparisons: Vec<ConventionComparison>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub kmax: u32,
    pub integral_lower_limit: u64,
    pub rows: Vec<OracleRow>,
}

pub fn oracle_report(kmax: u32, ctx: &PrecisionContext) -> Result<OracleReport> {
    if kmax > MAX_K {
        return Err(Error::InvalidArgument(format!("oracle kmax must be at most {MAX_K}, got {kmax}")));
    }
    let chains: Vec<(SumConvention, Vec<SymbolicValue>)> = SumConvention::ALL
        .into_iter()
        .map(|conv| {
            let values = solve_chain(kmax.max(1), conv)?
                .into_iter()
                .map(|s| s.value.as_exact().cloned().expect("chain values are exact"))
                .collect();
            Ok((conv, values))
        })
        .collect::<Result<_>>()?;
    let scheme = EMScheme::for_precision(ctx);
    let rows = (0..=kmax)
        .into_par_iter()
        .map(|k| {
            let r = ramanujan_sum(k, scheme, ctx)?;
            let value = r.value().clone();
            let zprime = zeta_prime_oracle(&Real::from_i64(-i64::from(k), ctx), ctx)?;
            let comparisons = chains
                .iter()
                .map(|(conv, values)| {
                    let chain_exact = values[k as usize].clone();
                    let chain = chain_exact.evaluate(ctx);
                    let closed_form =
                        s_from_zprime(k + 1, &Value::Numeric(zprime.clone()), *conv, ctx)?.value.evaluate(ctx);
                    Ok(ConventionComparison {
                        convention: *conv,
                        chain_minus_ramanujan: &chain - &value,
                        closed_form_minus_ramanujan: &closed_form - &value,
                        chain_exact,
                        chain,
                        closed_form,
                    })
                })
                .collect::<Result<_>>()?;
            Ok(OracleRow {
                k,
                scheme: r.scheme,
                refined: r.refined,
                ramanujan: value,
                spread: r.spread,
                stable: r.stable,
                comparisons,
            })
        })
        .collect::<Result<_>>()?;
    Ok(OracleReport { kmax, integral_lower_limit: EMScheme::INTEGRAL_LOWER_LIMIT, rows })
}
