//! The generating series of hook functions, compared against `H(u) E(v)`.

use crate::error::Result;
use crate::multiparam::functions::hook_function;
use crate::params::ParamSequence;
use crate::symfunc::TruncatedSeries2;

/// Outcome of comparing both sides coefficient-wise up to total order `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookSeriesReport {
    pub order: usize,
    pub lhs: TruncatedSeries2,
    pub rhs: TruncatedSeries2,
    /// Keys `(j, k)` of `u^{-j} v^{-k}` where the sides differ.
    pub mismatches: Vec<(usize, usize)>,
}

impl HookSeriesReport {
    pub fn equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Builds `1 + (u+v) sum_{p,q} s_{(p|q);a} / ((u-a_1)..(u-a_{p+1})(v-hat a_1)..(v-hat a_{q+1}))`
/// and `H(u) E(v)` truncated at total order `order`.
///
/// The sum is formed at order `order + 1` because multiplying by `u + v`
/// lowers orders by one; hooks with `p + q + 1 > order` cannot contribute.
pub fn hook_series_check(order: usize, a: &ParamSequence) -> Result<HookSeriesReport> {
    let wide = order + 1;
    let mut sum = TruncatedSeries2::zero(wide);
    for p in 0..order {
        for q in 0..order - p {
            let u_roots = a.range(1, p as i64 + 1)?;
            let v_roots = (1..=q as i64 + 1).map(|i| a.hat(i)).collect::<Result<Vec<_>>>()?;
            let kernel = TruncatedSeries2::expand_rational(wide, &u_roots, &v_roots);
            sum = sum.add(&kernel.scale(&hook_function(p, q, a)?))?;
        }
    }
    let lhs = TruncatedSeries2::one(order).add(&sum.mul_u_plus_v()?)?;
    let rhs = TruncatedSeries2::h_series(order).mul(&TruncatedSeries2::e_series(order))?;
    let mut mismatches = Vec::new();
    for j in 0..=order {
        for k in 0..=order - j {
            if lhs.coeff(j, k) != rhs.coeff(j, k) {
                mismatches.push((j, k));
            }
        }
    }
    Ok(HookSeriesReport { order, lhs, rhs, mismatches })
}
