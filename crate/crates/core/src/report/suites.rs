//! Verification suites for the statements that are expected to hold exactly
//! or to working precision.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rug::Float;
use serde::{Deserialize, Serialize};

use crate::chain::build_relation;
use crate::chain::solve_chain;
use crate::error::{Error, Result};
use crate::euler_sums::{
    bprime_conversion, fundamental_lemma_residual, generating_function_check,
    generating_function_identity_residual, mellin_fundamental_check, shifted_euler_sum,
    SumConvention, SymbolicValue, Value,
};
use crate::exact::{bernoulli, bernoulli_self_identity, binomial, BernoulliConvention, Rational};
use crate::hankel::{
    bernoulli_interp, bernoulli_prime_interp, bernoulli_prime_oracle, lemma3_residual, ContourSpec,
};
use crate::ramanujan::{ramanujan_sum, self_test_residual, EMScheme};
use crate::real::{const_log2pi, const_pi, PrecisionContext, Real};
use crate::zeta::{
    functional_equation_sides, zeta_em, zeta_neg_int_exact, zeta_odd_from_bprime,
    zeta_odd_from_zprime, zeta_prime_em, zeta_prime_oracle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Bernoulli,
    Zeta,
    FunctionalEquation,
    FundamentalLemma,
    Mellin,
    Hankel,
    Lemma4,
    ChainExactness,
    Ramanujan,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Bernoulli,
        Suite::Zeta,
        Suite::FunctionalEquation,
        Suite::FundamentalLemma,
        Suite::Mellin,
        Suite::Hankel,
        Suite::Lemma4,
        Suite::ChainExactness,
        Suite::Ramanujan,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bernoulli => "bernoulli",
            Suite::Zeta => "zeta",
            Suite::FunctionalEquation => "functional-equation",
            Suite::FundamentalLemma => "fundamental-lemma",
            Suite::Mellin => "mellin",
            Suite::Hankel => "hankel",
            Suite::Lemma4 => "lemma4",
            Suite::ChainExactness => "chain-exactness",
            Suite::Ramanujan => "ramanujan",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    /// Absent for exact checks.
    pub residual: Option<Real>,
    pub tolerance: Option<Real>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn numeric(name: impl Into<String>, residual: Real, tolerance: Real) -> Self {
        let passed = residual < tolerance;
        CheckResult { name: name.into(), residual: Some(residual), tolerance: Some(tolerance), passed, detail: None }
    }

    pub fn exact(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), residual: None, tolerance: None, passed, detail: Some(detail.into()) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Runs one suite; evaluation errors become a failed result.
pub fn run_suite(suite: Suite, ctx: &PrecisionContext) -> SuiteResult {
    let outcome = match suite {
        Suite::Bernoulli => bernoulli_checks(),
        Suite::Zeta => zeta_checks(ctx),
        Suite::FunctionalEquation => functional_equation_checks(ctx),
        Suite::FundamentalLemma => fundamental_lemma_checks(ctx),
        Suite::Mellin => mellin_checks(ctx),
        Suite::Hankel => hankel_checks(ctx),
        Suite::Lemma4 => lemma4_checks(ctx),
        Suite::ChainExactness => chain_checks(),
        Suite::Ramanujan => ramanujan_checks(ctx),
    };
    match outcome {
        Ok(checks) => SuiteResult { suite, passed: checks.iter().all(|c| c.passed), checks, error: None },
        Err(e) => SuiteResult { suite, passed: false, checks: Vec::new(), error: Some(e.to_string()) },
    }
}

fn real(x: f64, ctx: &PrecisionContext) -> Real {
    Real::from_f64(x, ctx)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn bernoulli_checks() -> Result<Vec<CheckResult>> {
    use BernoulliConvention::*;
    let mut checks = Vec::new();
    // sum_{k<=m} C(m+1,k) B_k = 0 with B_1 = -1/2
    let recurrence_ok = (1..30u64).all(|m| {
        (0..=m)
            .map(|k| binomial(m + 1, k) * bernoulli(k as usize, ConventionalMinus))
            .fold(Rational::zero(), |a, b| a + b)
            .is_zero()
    });
    checks.push(CheckResult::exact("recurrence B_0..B_30", recurrence_ok, "sum_k C(m+1,k) B_k = 0 for m = 1..29"));
    let plus_ok = (0..=30).all(|n| {
        let (p, m) = (bernoulli(n, PaperPlus), bernoulli(n, ConventionalMinus));
        if n == 1 { p == q(1, 2) && m == q(-1, 2) } else { p == m }
    });
    checks.push(CheckResult::exact("conventions differ only at B_1", plus_ok, "B_1 = +1/2 versus -1/2"));
    let mut minus_zero = true;
    for n in 2..=30 {
        minus_zero &= bernoulli_self_identity(n, ConventionalMinus)?.is_zero();
    }
    checks.push(CheckResult::exact(
        "self identity, B_1 = -1/2",
        minus_zero,
        "sum_{k<n} C(n,k) B_k = 0 for n = 2..30",
    ));
    let mut plus_residuals = true;
    for n in 2..=30 {
        plus_residuals &= bernoulli_self_identity(n, PaperPlus)? == q(n as i64, 1);
    }
    let r2 = bernoulli_self_identity(2, PaperPlus)?;
    checks.push(CheckResult::exact(
        "self identity, B_1 = +1/2",
        plus_residuals && !r2.is_zero(),
        format!("residual 2 n B_1 = n, n = 2 gives {r2}"),
    ));
    Ok(checks)
}

pub(crate) fn zeta_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let pi = const_pi(ctx);
    let z2 = zeta_em(&real(2.0, ctx), ctx)?;
    let expect = &(&pi * &pi) / &Real::from_i64(6, ctx);
    checks.push(CheckResult::numeric("zeta(2) = pi^2/6", (&z2 - &expect).abs(), ctx.tolerance(5)));
    let mut worst = Real::from_i64(0, ctx);
    for k in 1..=12u64 {
        let s = Real::from_i64(1 - k as i64, ctx);
        let r = (&zeta_em(&s, ctx)? - &Real::from_rational(&zeta_neg_int_exact(k)?, ctx)).abs();
        if r > worst {
            worst = r;
        }
    }
    checks.push(CheckResult::numeric("zeta(1-k) = -B_k/k, k = 1..12", worst, ctx.tolerance(5)));
    let d0 = zeta_prime_em(&Real::from_i64(0, ctx), ctx)?;
    let expect = &const_log2pi(ctx) * &real(-0.5, ctx);
    checks.push(CheckResult::numeric("zeta'(0) = -ln(2 pi)/2", (&d0 - &expect).abs(), ctx.tolerance(8)));
    Ok(checks)
}

pub(crate) const FUNCTIONAL_EQUATION_POINTS: [f64; 7] = [1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0];

pub(crate) fn functional_equation_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    for s in FUNCTIONAL_EQUATION_POINTS {
        let (lhs, rhs) = functional_equation_sides(&real(s, ctx), ctx)?;
        checks.push(CheckResult::numeric(format!("s = {s}"), (&lhs - &rhs).abs(), ctx.tolerance(8)));
        if s == 3.0 {
            checks.push(CheckResult::exact("s = 3 right side", rhs.is_zero(), "cos(3 pi/2) = 0 exactly"));
        }
    }
    Ok(checks)
}

pub(crate) const LEMMA_POINTS: [f64; 4] = [1.25, 2.0, 3.0, 4.5];

pub(crate) fn fundamental_lemma_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    for s in LEMMA_POINTS {
        let r = fundamental_lemma_residual(&real(s, ctx), ctx)?;
        checks.push(CheckResult::numeric(format!("s = {s}"), r, ctx.tolerance(10)));
    }
    let shifted = shifted_euler_sum(&real(2.0, ctx), ctx)?;
    let z3 = zeta_em(&real(3.0, ctx), ctx)?;
    checks.push(CheckResult::numeric("sum H_n/(n+1)^2 = zeta(3)", (&shifted - &z3).abs(), ctx.tolerance(10)));
    Ok(checks)
}

pub(crate) fn mellin_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    for s in [2.0, 3.0] {
        let m = mellin_fundamental_check(&real(s, ctx), ctx)?;
        let tol = ctx.tolerance(12);
        checks.push(CheckResult::numeric(format!("s = {s}: first integral"), m.first_residual.clone(), tol.clone()));
        checks.push(CheckResult::numeric(format!("s = {s}: middle integral"), m.middle_residual.clone(), tol.clone()));
        checks.push(CheckResult::numeric(format!("s = {s}: log integral"), m.log_residual.clone(), tol.clone()));
        let gap = (&m.combined_residual - &m.direct_residual).abs();
        checks.push(CheckResult::numeric(
            format!("s = {s}: combined versus direct"),
            gap,
            &m.quadrature_error + &tol,
        ));
    }
    let g = generating_function_check(&real(1.0, ctx), 200, ctx)?;
    checks.push(CheckResult::numeric("generating function, x = 1, N = 200", g.residual, g.bound));
    let id = generating_function_identity_residual(&real(0.1, ctx), ctx)?;
    checks.push(CheckResult::numeric("generating function identity, x = 0.1", id, ctx.tolerance(2)));
    Ok(checks)
}

pub(crate) const LEMMA3_POINTS: [f64; 4] = [0.5, 1.5, 2.0, 4.0];

pub(crate) fn hankel_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let spec = ContourSpec::for_precision(ctx);
    let half = ctx.half_tolerance();
    for n in [1i64, 2, 4, 6] {
        let b = bernoulli_interp(&Real::from_i64(n - 1, ctx), &spec, ctx)?;
        let exact = Real::from_rational(&bernoulli(n as usize, BernoulliConvention::PaperPlus), ctx);
        checks.push(CheckResult::numeric(format!("B_{n}"), (&b - &exact).abs(), half.clone()));
    }
    for s in LEMMA3_POINTS {
        let r = lemma3_residual(&real(s, ctx), &spec, ctx)?;
        checks.push(CheckResult::numeric(format!("B_s + s zeta(1-s), s = {s}"), r, half.clone()));
    }
    let s = real(1.3, ctx);
    let narrow = bernoulli_interp(&s, &spec, ctx)?;
    let wide = bernoulli_interp(&s, &spec.with_radius(3.0), ctx)?;
    checks.push(CheckResult::numeric("radius 1 versus 3", (&narrow - &wide).abs(), ctx.tolerance(5)));
    for s in [1.0, 2.0, 3.0] {
        let d = bernoulli_prime_interp(&real(s, ctx), &spec, ctx)?;
        let o = bernoulli_prime_oracle(&real(s, ctx), ctx)?;
        checks.push(CheckResult::numeric(format!("B'_s, s = {s}"), (&d - &o).abs(), half.clone()));
    }
    Ok(checks)
}

pub(crate) fn lemma4_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let bits = ctx.working_bits();
    for k in 1..=4u32 {
        let zp = zeta_prime_oracle(&Real::from_i64(-2 * i64::from(k), ctx), ctx)?;
        let direct = zeta_odd_from_zprime(k, &zp, ctx)?;
        let bprime = bprime_conversion(2 * k + 1, &Value::Numeric(zp), ctx)?.evaluate(ctx);
        let printed = zeta_odd_from_bprime(k, &bprime, ctx)?;
        checks.push(CheckResult::numeric(format!("k = {k}: two forms"), (&direct - &printed).abs(), ctx.tolerance(8)));
        let classical = Real::from_float(Float::with_val(bits, 2 * k + 1).zeta(), ctx);
        checks.push(CheckResult::numeric(
            format!("k = {k}: zeta({})", 2 * k + 1),
            (&direct - &classical).abs(),
            ctx.tolerance(8),
        ));
    }
    Ok(checks)
}

pub(crate) const CHAIN_RELATIONS: u32 = 9;

pub(crate) fn chain_checks() -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    for conv in SumConvention::ALL {
        let values: Vec<SymbolicValue> = solve_chain(CHAIN_RELATIONS - 1, conv)?
            .iter()
            .map(|s| s.value.as_exact().cloned().expect("chain values are exact"))
            .collect();
        for s in 2..=CHAIN_RELATIONS {
            let residual = build_relation(s)?.residual(&values)?;
            checks.push(CheckResult::exact(
                format!("convention {conv}, s = {s}"),
                residual.is_zero(),
                format!("residual {residual}"),
            ));
        }
        let lhs = &values[1].scale(&q(2, 1)) + &values[0];
        checks.push(CheckResult::exact(
            format!("convention {conv}: 2 S_1 + S_0"),
            lhs == SymbolicValue::from_rational(q(1, 12)),
            format!("{lhs}"),
        ));
    }
    Ok(checks)
}

pub(crate) fn ramanujan_checks(ctx: &PrecisionContext) -> Result<Vec<CheckResult>> {
    let mut checks = Vec::new();
    let scheme = EMScheme::for_precision(ctx);
    let r = self_test_residual(scheme, ctx)?;
    checks.push(CheckResult::numeric("sum^R n^-2 = zeta(2) - 1", r, ctx.half_tolerance()));
    for k in 0..=4 {
        let v = ramanujan_sum(k, scheme, ctx)?;
        let mut c = CheckResult::numeric(format!("S_{k}^R stable"), v.spread.clone(), ctx.half_tolerance());
        c.detail = Some(format!("S_{k}^R = {}", v.value().to_sci_string(20)));
        checks.push(c);
    }
    Ok(checks)
}
