//! Transition coefficients between the bases `{s_{mu;a}}` and `{s_{nu;b}}`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg::det_bareiss;
use crate::params::ParamSequence;
use crate::partition::{FrobeniusCoords, Partition};
use crate::rational::{super_complete_all, Rational};

/// `c_{pp'}(a,b) = h_{p-p'}(b_1..b_{p'+1}; -a_1..-a_p)`, zero for `p' > p`.
pub fn transition_c(p: usize, p_prime: usize, a: &ParamSequence, b: &ParamSequence) -> Result<Rational> {
    if p_prime > p {
        return Ok(Rational::zero());
    }
    if p_prime == p {
        return Ok(Rational::one());
    }
    let x = b.range(1, p_prime as i64 + 1)?;
    let y: Vec<Rational> = a.range(1, p as i64)?.into_iter().map(|v| -v).collect();
    Ok(super_complete_all(p - p_prime, &x, &y).swap_remove(p - p_prime))
}

/// Coefficients `c_{mu nu}(a,b)` of `s_{mu;a} = sum_nu c_{mu nu}(a,b) s_{nu;b}`,
/// as products of two order-`d` determinants of one-row coefficients.
pub fn transition_expand(mu: &Partition, a: &ParamSequence, b: &ParamSequence) -> Result<BTreeMap<Partition, Rational>> {
    let c = mu.to_frobenius();
    let d = c.depth();
    let mut out = BTreeMap::new();
    if d == 0 {
        out.insert(Partition::empty(), Rational::one());
        return Ok(out);
    }
    let (a_hat, b_hat) = (a.dual(), b.dual());
    let arm_side = side_determinants(c.p(), a, b)?;
    let leg_side = side_determinants(c.q(), &a_hat, &b_hat)?;
    for (p_new, dp) in &arm_side {
        for (q_new, dq) in &leg_side {
            let nu = FrobeniusCoords::new(p_new.clone(), q_new.clone())
                .expect("strictly decreasing by construction")
                .to_partition();
            out.insert(nu, dp * dq);
        }
    }
    Ok(out)
}

/// Every strictly decreasing `new` with entries at most `old[0]`, paired
/// with the nonzero determinant `det[c_{old_i, new_j}]`.
fn side_determinants(old: &[usize], a: &ParamSequence, b: &ParamSequence) -> Result<Vec<(Vec<usize>, Rational)>> {
    let d = old.len();
    let mut out = Vec::new();
    for combo in (0..=old[0]).combinations(d) {
        let new: Vec<usize> = combo.into_iter().rev().collect();
        let m = old
            .iter()
            .map(|&pi| new.iter().map(|&pj| transition_c(pi, pj, a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let det = det_bareiss(&m);
        if !det.is_zero() {
            out.push((new, det));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiparam::functions::s_mp;
    use crate::rational::{rat, ratio};
    use crate::symfunc::SymFunc;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let (s, z) = (ParamSequence::special(), ParamSequence::zero());
        for k in 0..4 {
            assert_eq!(transition_c(k, k, &s, &z).unwrap(), rat(1));
        }
        assert_eq!(transition_c(1, 0, &s, &z).unwrap(), ratio(-1, 2));
        assert_eq!(transition_c(2, 0, &s, &z).unwrap(), ratio(3, 4));
        assert_eq!(transition_c(0, 1, &s, &z).unwrap(), rat(0));
        let c: ParamSequence = "custom:1=3,2=5".parse().unwrap();
        assert_eq!(transition_c(1, 0, &c, &z).unwrap(), rat(-3));
    }

    #[test]
    fn expansion_examples() {
        let (s, z) = (ParamSequence::special(), ParamSequence::zero());
        for mu in Partition::all_up_to(4) {
            let e = transition_expand(&mu, &s, &s).unwrap();
            assert_eq!(e, BTreeMap::from([(mu.clone(), rat(1))]));
        }
        let e = transition_expand(&p("2"), &s, &z).unwrap();
        assert_eq!(e, BTreeMap::from([(p("2"), rat(1)), (p("1"), ratio(-1, 2))]));
        let e = transition_expand(&p("2,2"), &s, &z).unwrap();
        assert_eq!(e, BTreeMap::from([(p("2,2"), rat(1))]));
        assert_eq!(s_mp(&p("2,2"), &s).unwrap().to_schur().unwrap().to_string(), "s[2,2]");
    }

    #[test]
    fn expansion_reconstructs() {
        let a: ParamSequence = "custom:-5=1,-4=2/3,-3=-1,-2=4,-1=1/2,0=3,1=-2,2=5/3,3=7,4=-1/4,5=2".parse().unwrap();
        let b: ParamSequence = "custom:-5=0,-4=1,-3=1/3,-2=-2,-1=6,0=-1/5,1=1,2=2,3=-3,4=9,5=1/7".parse().unwrap();
        for mu in Partition::all_up_to(4) {
            let e = transition_expand(&mu, &a, &b).unwrap();
            let mut sum = SymFunc::zero();
            for (nu, c) in &e {
                assert!(nu.is_contained_in(&mu) && nu.depth() == mu.depth());
                sum = sum + s_mp(nu, &b).unwrap().scale(c);
            }
            assert_eq!(sum, s_mp(&mu, &a).unwrap(), "{mu}");
        }
    }
}
