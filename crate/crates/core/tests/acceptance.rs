//! Acceptance gate: one line per criterion, non-zero exit if any fails.
//! Reference values come from MPFR constants and from oracles written here.

use std::process::ExitCode;
use std::time::Instant;

use harmonic_zeta::chain::{build_relation, discrepancy_report, extract_zprime_chain, solve_chain};
use harmonic_zeta::euler_sums::{
    fundamental_lemma_residual, mellin_fundamental_check, shifted_euler_sum, SumConvention,
    SymbolicValue,
};
use harmonic_zeta::exact::{bernoulli, bernoulli_self_identity, BernoulliConvention, Rational};
use harmonic_zeta::hankel::{bernoulli_interp, lemma3_residual, ContourSpec};
use harmonic_zeta::ramanujan::{self_test_residual, EMScheme};
use harmonic_zeta::real::{PrecisionContext, Real};
use harmonic_zeta::report::oracle_report;
use harmonic_zeta::zeta::{
    functional_equation_sides, zeta_em, zeta_odd_from_bprime, zeta_odd_from_zprime, zeta_prime_em,
    zeta_prime_oracle,
};
use harmonic_zeta::euler_sums::{bprime_conversion, Value};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rug::float::Constant;
use rug::Float;

const P: u32 = 50;

type Outcome = Result<String, String>;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn ctx() -> PrecisionContext {
    PrecisionContext::new(P).unwrap()
}

fn bits() -> u32 {
    ctx().working_bits() + 32
}

fn mpfr(x: Float) -> Real {
    Real::from_float(x, &ctx())
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn below(what: &str, r: &Real, tol: &Real) -> Result<(), String> {
    ensure(r < tol, format!("{what}: {} >= {}", r.to_sci_string(4), tol.to_sci_string(2)))
}

/// Coefficients of `z/(e^z - 1)` by inverting `sum z^n/(n+1)!`.
fn bernoulli_by_series(n: usize) -> Vec<Rational> {
    let mut fact = vec![BigInt::one()];
    for i in 1..=n + 1 {
        let next = &fact[i - 1] * BigInt::from(i);
        fact.push(next);
    }
    let a: Vec<Rational> = (0..=n).map(|i| Rational::new(BigInt::one(), fact[i + 1].clone())).collect();
    let mut c: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let s = (1..=m).fold(Rational::zero(), |acc, i| acc + &a[i] * &c[m - i]);
        c.push(-s);
    }
    c.into_iter().enumerate().map(|(i, x)| x * Rational::from_integer(fact[i].clone())).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let series = bernoulli_by_series(30);
    for (n, expect) in series.iter().enumerate() {
        ensure(bernoulli(n, BernoulliConvention::ConventionalMinus) == *expect, format!("B_{n} mismatch"))?;
    }
    ensure(bernoulli(1, BernoulliConvention::PaperPlus) == q(1, 2), "PaperPlus B_1")?;
    for n in 2..=30 {
        ensure(
            bernoulli_self_identity(n, BernoulliConvention::ConventionalMinus).unwrap().is_zero(),
            format!("self identity n = {n}"),
        )?;
    }
    // with B_1 = +1/2 the residual is C(n,1) (B_1^+ - B_1^-) = n
    let r2 = bernoulli_self_identity(2, BernoulliConvention::PaperPlus).unwrap();
    ensure(r2 == q(2, 1), format!("PaperPlus n = 2 residual {r2}"))?;
    for n in 3..=30 {
        let r = bernoulli_self_identity(n, BernoulliConvention::PaperPlus).unwrap();
        ensure(r == q(n as i64, 1), format!("PaperPlus n = {n} residual {r}"))?;
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 1.0, format!("took {elapsed:.3} s"))?;
    Ok(format!("B_0..B_30 exact, PaperPlus residual at n = 2 is {r2}, {elapsed:.3} s"))
}

fn criterion_2() -> Outcome {
    let c = ctx();
    let b = bits();
    let pi = Float::with_val(b, Constant::Pi);
    let z2 = zeta_em(&Real::from_i64(2, &c), &c).unwrap();
    let expect = mpfr(Float::with_val(b, pi.square_ref()) / 6u32);
    below("zeta(2)", &(&z2 - &expect).abs(), &c.tolerance(5))?;
    let series = bernoulli_by_series(12);
    for k in 1..=12usize {
        let mut bk = series[k].clone();
        if k == 1 {
            bk = -bk;
        }
        let exact = Real::from_rational(&(-bk / q(k as i64, 1)), &c);
        let got = zeta_em(&Real::from_i64(1 - k as i64, &c), &c).unwrap();
        below(&format!("zeta({})", 1 - k as i64), &(&got - &exact).abs(), &c.tolerance(5))?;
    }
    let d0 = zeta_prime_em(&Real::from_i64(0, &c), &c).unwrap();
    let expect = mpfr(-(Float::with_val(b, &pi * 2u32).ln()) / 2u32);
    below("zeta'(0)", &(&d0 - &expect).abs(), &c.tolerance(8))?;
    Ok("zeta(2), zeta(1-k) for k = 1..12, zeta'(0)".into())
}

fn criterion_3() -> Outcome {
    let c = ctx();
    let mut worst = Real::from_i64(0, &c);
    for s in [1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0] {
        let (lhs, rhs) = functional_equation_sides(&Real::from_f64(s, &c), &c).unwrap();
        let r = (&lhs - &rhs).abs();
        below(&format!("s = {s}"), &r, &c.tolerance(8))?;
        if s == 3.0 {
            ensure(rhs.is_zero(), "right side at s = 3 is not identically zero")?;
        }
        if r > worst {
            worst = r;
        }
    }
    Ok(format!("max residual {}, RHS(3) = 0 exactly", worst.to_sci_string(3)))
}

fn criterion_4() -> Outcome {
    let c = ctx();
    for s in [1.25, 2.0, 3.0, 4.5] {
        let r = fundamental_lemma_residual(&Real::from_f64(s, &c), &c).unwrap();
        below(&format!("s = {s}"), &r, &c.tolerance(10))?;
    }
    let shifted = shifted_euler_sum(&Real::from_i64(2, &c), &c).unwrap();
    let z3 = mpfr(Float::with_val(bits(), 3).zeta());
    below("sum H_n/(n+1)^2", &(&shifted - &z3).abs(), &c.tolerance(10))?;
    Ok("s in {1.25, 2, 3, 4.5} and sum H_n/(n+1)^2 = zeta(3)".into())
}

fn criterion_5() -> Outcome {
    let c = ctx();
    for s in [2.0, 3.0] {
        let m = mellin_fundamental_check(&Real::from_f64(s, &c), &c).unwrap();
        for (name, r) in [("first", &m.first_residual), ("middle", &m.middle_residual), ("log", &m.log_residual)] {
            below(&format!("s = {s} {name}"), r, &c.tolerance(12))?;
        }
        let gap = (&m.combined_residual - &m.direct_residual).abs();
        below(&format!("s = {s} combined vs direct"), &gap, &(&m.quadrature_error + &c.tolerance(12)))?;
    }
    // int_0^inf x ln(1-e^-x) dx = -zeta(3)
    let m = mellin_fundamental_check(&Real::from_i64(2, &c), &c).unwrap();
    let z3 = mpfr(Float::with_val(bits(), 3).zeta());
    below("int x ln(1-e^-x)", &(&m.log_integral + &z3).abs(), &c.tolerance(12))?;
    Ok("three Mellin residuals at s = 2, 3; combined identity matches".into())
}

fn criterion_6() -> Outcome {
    let c = ctx();
    let spec = ContourSpec::for_precision(&c);
    let half = c.half_tolerance();
    for (n, exact) in [(2, q(1, 6)), (4, q(-1, 30)), (6, q(1, 42))] {
        let b = bernoulli_interp(&Real::from_i64(n - 1, &c), &spec, &c).unwrap();
        below(&format!("B_{n}"), &(&b - &Real::from_rational(&exact, &c)).abs(), &half)?;
    }
    let b1 = bernoulli_interp(&Real::from_i64(0, &c), &spec, &c).unwrap();
    below("B_1 anchor", &(&b1 - &Real::from_f64(0.5, &c)).abs(), &half)?;
    for s in [0.5, 1.5, 2.0, 4.0] {
        let r = lemma3_residual(&Real::from_f64(s, &c), &spec, &c).unwrap();
        below(&format!("lemma3 s = {s}"), &r, &half)?;
    }
    let s = Real::from_f64(1.7, &c);
    let r1 = bernoulli_interp(&s, &spec, &c).unwrap();
    let r3 = bernoulli_interp(&s, &spec.with_radius(3.0), &c).unwrap();
    let longer = ContourSpec { truncation: spec.truncation + 25.0, ..spec };
    let rt = bernoulli_interp(&s, &longer, &c).unwrap();
    below("radius 1 vs 3", &(&r1 - &r3).abs(), &c.tolerance(5))?;
    below("T vs T + 25", &(&r1 - &rt).abs(), &c.tolerance(5))?;
    Ok("B_2, B_4, B_6, B_s + s zeta(1-s) residuals, deformation invariance".into())
}

fn criterion_7() -> Outcome {
    for conv in SumConvention::ALL {
        let values: Vec<SymbolicValue> = solve_chain(8, conv)
            .unwrap()
            .into_iter()
            .map(|s| s.value.as_exact().cloned().ok_or("numeric chain value"))
            .collect::<Result<_, _>>()?;
        for s in 2..=9u32 {
            // recompute C(s,j) and -zeta(1-s) = B_s/s here
            let mut lhs = SymbolicValue::zero();
            let mut binom = Rational::one();
            for j in 0..s {
                lhs = &lhs + &values[j as usize].scale(&binom);
                binom = binom * q((s - j) as i64, (j + 1) as i64);
            }
            let zeta = -bernoulli(s as usize, BernoulliConvention::ConventionalMinus) / q(s as i64, 1);
            let residual = lhs.add_rational(&zeta);
            ensure(residual.is_zero(), format!("conv {conv}, s = {s}: {residual}"))?;
            ensure(build_relation(s).unwrap().residual(&values).unwrap().is_zero(), "library residual")?;
        }
        let two = &values[1].scale(&q(2, 1)) + &values[0];
        ensure(two == SymbolicValue::from_rational(q(1, 12)), format!("2 S_1 + S_0 = {two}"))?;
    }
    Ok("s = 2..9 exact for A and B; 2 S_1 + S_0 = 1/12".into())
}

/// Hand derivation of the closed form at k = 1, 2 with triples `(a, b, c)`.
fn sample_triples() -> (SymbolicValue, SymbolicValue) {
    let t = |a: Rational, b: Rational, c: Rational| SymbolicValue::new(a, b, c);
    // S_0 = -zeta(0) + zeta'(0) + B_0 + gamma B_1 - (B_1/1) B_0 - B_1 H_1
    //     = 1/2 - ln(2pi)/2 + 1 + gamma/2 - 1/2 - 1/2
    let s0 = t(q(1, 2), q(1, 2), q(-1, 2));
    // 2 S_1 + S_0 = 1/12
    let s1 = (&SymbolicValue::from_rational(q(1, 12)) - &s0).scale(&q(1, 2));
    // -2 S_1 = -zeta(-1) + 2 zeta'(-1) + 2 B_1 + gamma B_2 - [2 (1/2)(1/2) + (1/12)/2 ... ] - B_2 H_2
    // with sum_{l=1,2} C(2,l)(B_l/l)B_(2-l) = 2(1/2)(1/2) + (1/6)/2 = 7/12
    let rest = t(q(1, 12) + q(1, 1) - q(7, 12) - q(1, 6) * q(3, 2), q(1, 6), q(0, 1));
    // zeta(-1) = -1/12 so -zeta(-1) = 1/12
    let zp1 = (&s1.scale(&q(-2, 1)) - &rest).scale(&q(1, 2));
    (s0, zp1)
}

fn criterion_8() -> Outcome {
    let (s0, zp1) = sample_triples();
    ensure(s0 == SymbolicValue::from_ratios((1, 2), (1, 2), (-1, 2)), format!("hand S_0 = {s0}"))?;
    ensure(zp1 == SymbolicValue::from_ratios((1, 12), (1, 6), (-1, 4)), format!("hand zeta'(-1) = {zp1}"))?;
    let chain_s0 = solve_chain(1, SumConvention::A).unwrap()[0].value.as_exact().cloned().unwrap();
    ensure(chain_s0 == s0, "pipeline S_0 differs from hand value")?;
    ensure(extract_zprime_chain(1, SumConvention::A).unwrap()[0] == zp1, "pipeline zeta'(-1) differs")?;

    let c = ctx();
    let c2 = c.doubled();
    let report = discrepancy_report(8, &SumConvention::ALL, &c).unwrap();
    let doubled = discrepancy_report(8, &SumConvention::ALL, &c2).unwrap();
    ensure(report.rows.len() == 16, format!("{} rows", report.rows.len()))?;
    let mut worst = Real::from_i64(0, &c);
    for (a, b) in report.rows.iter().zip(&doubled.rows) {
        ensure(a.chain == b.chain, "chain triple depends on precision")?;
        let shift = (&a.delta - &b.delta).abs();
        below(&format!("Delta_{} ({})", a.k, a.convention), &shift, &c.tolerance(5))?;
        if shift > worst {
            worst = shift;
        }
    }
    // the oracle side, evaluated independently
    let zp = zeta_prime_oracle(&Real::from_i64(-1, &c), &c).unwrap();
    let d1 = (&zp1.evaluate(&c) - &zp).abs();
    let row = report.row(1, SumConvention::A).unwrap();
    ensure((d1.to_f64() - 0.1145).abs() < 5e-4, format!("Delta_1 = {d1}"))?;
    ensure(row.delta == d1, "report Delta_1 differs")?;
    let d1b = &report.row(1, SumConvention::B).unwrap().delta;
    ensure(*d1b != d1, "conventions A and B agree at k = 1")?;
    Ok(format!(
        "16 exact rows; Delta_1(A) = {}, Delta_1(B) = {}; max shift under doubling {}",
        d1.to_sci_string(6),
        d1b.to_sci_string(6),
        worst.to_sci_string(3)
    ))
}

fn criterion_9() -> Outcome {
    let c = ctx();
    for k in 1..=4u32 {
        let zp = zeta_prime_oracle(&Real::from_i64(-2 * k as i64, &c), &c).unwrap();
        let a = zeta_odd_from_zprime(k, &zp, &c).unwrap();
        let bp = bprime_conversion(2 * k + 1, &Value::Numeric(zp), &c).unwrap().evaluate(&c);
        let b = zeta_odd_from_bprime(k, &bp, &c).unwrap();
        below(&format!("k = {k}"), &(&a - &b).abs(), &c.tolerance(8))?;
        let z = mpfr(Float::with_val(bits(), 2 * k + 1).zeta());
        below(&format!("zeta({})", 2 * k + 1), &(&a - &z).abs(), &c.tolerance(8))?;
    }
    Ok("both forms agree for k = 1..4".into())
}

fn criterion_10() -> Outcome {
    let c = ctx();
    let r = self_test_residual(EMScheme::for_precision(&c), &c).unwrap();
    below("sum^R n^-2", &r, &c.half_tolerance())?;
    let report = oracle_report(0, &c).unwrap();
    ensure(report.rows.len() == 1 && report.integral_lower_limit == 1, "oracle report shape")?;
    let row = &report.rows[0];
    ensure(row.comparisons.len() == 2, "S_0 not compared for both conventions")?;
    let a = row.comparisons.iter().find(|x| x.convention == SumConvention::A).unwrap();
    ensure(a.chain_exact == SymbolicValue::from_ratios((1, 2), (1, 2), (-1, 2)), "chain S_0")?;
    Ok(format!(
        "self-test residual {}; S_0^R = {} (stable: {}), chain S_0(A) - S_0^R = {}",
        r.to_sci_string(3),
        row.ramanujan.to_sci_string(12),
        row.stable,
        a.chain_minus_ramanujan.to_sci_string(6)
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("exact layer", criterion_1),
        ("zeta oracle", criterion_2),
        ("functional equation", criterion_3),
        ("fundamental lemma", criterion_4),
        ("Mellin route", criterion_5),
        ("Hankel interpolation", criterion_6),
        ("chain exactness", criterion_7),
        ("chain versus oracle", criterion_8),
        ("zeta(2k+1) form consistency", criterion_9),
        ("Ramanujan self-test", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 passed in {:.2} s", 10 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
