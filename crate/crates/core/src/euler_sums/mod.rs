//! Euler sums `h(s) = sum H_n / n^s`, the shifted-sum identity, the
//! generating-function and Mellin checks, and the closed form linking the
//! regularized sums `sum H_n n^(k-1)` to `zeta'(1-k)`.

mod convergent;
mod matext;
mod mellin;
pub(crate) mod smooth;
mod symbolic;

pub use convergent::{fundamental_lemma_residual, h_euler, shifted_euler_sum};
pub use matext::{
    bprime_conversion, bprime_to_zprime, s_from_zprime, s_from_zprime_with, sum_lm,
    sum_lm_with, zprime_from_s, Provenance, RegularizedSum, SumConvention, Value,
};

pub use symbolic::SymbolicValue;
pub use mellin::{
    generating_function_check, generating_function_identity_residual,
    generating_function_residual, mellin_fundamental_check, GeneratingFunctionCheck, MellinCheck,
};
