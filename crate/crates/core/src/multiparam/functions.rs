//! `h_{k;a}`, `e_{k;a}`, `s_{mu;a}` and the Frobenius-Schur functions.

use num_traits::Zero;

use crate::error::Result;
use crate::linalg::det_division_free;
use crate::params::ParamSequence;
use crate::partition::Partition;
use crate::rational::elementary_all;
use crate::symfunc::SymFunc;

/// `h_{k;a} = sum_{i=1}^k (-1)^{k-i} e_{k-i}(a_1..a_{k-1}) h_i`; one for
/// `k = 0`, zero for negative `k`.
pub fn h_mp(k: i64, a: &ParamSequence) -> Result<SymFunc> {
    correction_sum(k, a, SymFunc::h)
}

/// `e_{k;a} = sum_{i=1}^k (-1)^{k-i} e_{k-i}(hat a_1..hat a_{k-1}) e_i`.
pub fn e_mp(k: i64, a: &ParamSequence) -> Result<SymFunc> {
    if k <= 0 {
        return correction_sum(k, a, SymFunc::e);
    }
    let e = SymFunc::e_all(k as usize);
    correction_sum(k, &a.dual(), |i| e[i].clone())
}

fn correction_sum(k: i64, a: &ParamSequence, generator: impl Fn(usize) -> SymFunc) -> Result<SymFunc> {
    if k < 0 {
        return Ok(SymFunc::zero());
    }
    if k == 0 {
        return Ok(SymFunc::one());
    }
    let k = k as usize;
    let params = a.range(1, k as i64 - 1)?;
    let el = elementary_all(&params);
    let mut out = SymFunc::zero();
    for i in 1..=k {
        let mut c = el[k - i].clone();
        if (k - i) % 2 == 1 {
            c = -c;
        }
        if !c.is_zero() {
            out = out + generator(i).scale(&c);
        }
    }
    Ok(out)
}

/// `s_{mu;a} = det[h_{mu_i - i + j; tau^{1-j} a}]` of order `l(mu)`.
pub fn s_mp(mu: &Partition, a: &ParamSequence) -> Result<SymFunc> {
    s_mp_with_order(mu, a, mu.len())
}

/// The same determinant with an explicit order `m >= l(mu)`. Larger orders read
/// parameters further to the left.
pub fn s_mp_with_order(mu: &Partition, a: &ParamSequence, order: usize) -> Result<SymFunc> {
    assert!(order >= mu.len(), "determinant order below the number of rows");
    let shifted: Vec<ParamSequence> = (1..=order).map(|j| a.shift(1 - j as i64)).collect();
    let mut m = Vec::with_capacity(order);
    for i in 1..=order {
        let mut row = Vec::with_capacity(order);
        for (j, aj) in shifted.iter().enumerate() {
            let k = mu.part(i - 1) as i64 - i as i64 + (j + 1) as i64;
            row.push(h_mp(k, aj)?);
        }
        m.push(row);
    }
    Ok(det_division_free(&m))
}

/// Dual form `det[e_{mu'_i - i + j; tau^{j-1} a}]` of order `mu_1`.
pub fn s_mp_dual(mu: &Partition, a: &ParamSequence) -> Result<SymFunc> {
    let conj = mu.conjugate();
    let order = conj.len();
    let shifted: Vec<ParamSequence> = (1..=order).map(|j| a.shift(j as i64 - 1)).collect();
    let mut m = Vec::with_capacity(order);
    for i in 1..=order {
        let mut row = Vec::with_capacity(order);
        for (j, aj) in shifted.iter().enumerate() {
            let k = conj.part(i - 1) as i64 - i as i64 + (j + 1) as i64;
            row.push(e_mp(k, aj)?);
        }
        m.push(row);
    }
    Ok(det_division_free(&m))
}

/// `FS_mu`, the multiparameter Schur function at `a_i = i - 1/2`.
pub fn frobenius_schur(mu: &Partition) -> SymFunc {
    s_mp(mu, &ParamSequence::special()).expect("the special sequence has no window")
}

/// Hook function `s_{(p|q);a}`.
pub fn hook_function(p: usize, q: usize, a: &ParamSequence) -> Result<SymFunc> {
    s_mp(&Partition::hook_shape(p, q), a)
}

/// Giambelli form `det[s_{(p_i|q_j);a}]` over the Frobenius coordinates of `mu`.
pub fn giambelli(mu: &Partition, a: &ParamSequence) -> Result<SymFunc> {
    let c = mu.to_frobenius();
    let m = c
        .p()
        .iter()
        .map(|&p| c.q().iter().map(|&q| hook_function(p, q, a)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(det_division_free(&m))
}

/// Indices `lo..=hi` of the parameters `s_{mu;a}` can depend on: `a_1..a_p`
/// and `a_{1-q}..a_0` with `p = mu_1 - 1`, `q = mu'_1 - 1`.
pub fn dependence_window(mu: &Partition) -> (i64, i64) {
    let p = mu.part(0) as i64 - 1;
    let q = mu.len() as i64 - 1;
    (1 - q, p)
}
