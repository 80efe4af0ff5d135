//! Evaluation at diagram nodes, vanishing, and Newton-type interpolation.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::multiparam::functions::s_mp;
use crate::params::{ParamSequence, WindowPolicy};
use crate::partition::{graded_cmp, Partition};
use crate::rational::{format_rational, Rational};
use crate::symfunc::{EvalPoint, SchurExpansion, SymFunc};

/// The node `(x(lambda); y(lambda)) = (a_{p_i+1}; hat a_{q_i+1})`; the origin for the empty diagram.
pub fn eval_point_of_diagram(lambda: &Partition, a: &ParamSequence) -> Result<EvalPoint> {
    let c = lambda.to_frobenius();
    let x = c.p().iter().map(|&p| a.get(p as i64 + 1)).collect::<Result<Vec<_>>>()?;
    let y = c.q().iter().map(|&q| a.hat(q as i64 + 1)).collect::<Result<Vec<_>>>()?;
    Ok(EvalPoint::new(x, y))
}

/// `prod_{(i,j) in mu} (a_{mu_i - i + 1} - a_{j - mu'_j})`.
pub fn value_at_self(mu: &Partition, a: &ParamSequence) -> Result<Rational> {
    let conj = mu.conjugate();
    let mut v = Rational::one();
    for (i, j) in mu.cells() {
        let left = a.get(mu.part(i - 1) as i64 - i as i64 + 1)?;
        let right = a.get(j as i64 - conj.part(j - 1) as i64)?;
        v *= left - right;
    }
    Ok(v)
}

/// `s_{mu;a}(x(lambda); y(lambda))`, computed by evaluating the determinant form.
pub fn eval_at_diagram(mu: &Partition, a: &ParamSequence, lambda: &Partition) -> Result<Rational> {
    Ok(s_mp(mu, a)?.eval_super(&eval_point_of_diagram(lambda, a)?))
}

/// Order in which the nodes of one degree are visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NodeOrder {
    #[default]
    GradedLex,
    ReverseLex,
}

/// Rejects parameters for which the nodes up to degree `n` are not separated:
/// `a_{1-n}, ..., a_n` must be pairwise distinct (which covers distinct `a`,
/// distinct `hat a`, and `a_i != -hat a_j`).
pub fn check_nodes_distinct(a: &ParamSequence, n: usize) -> Result<()> {
    if n == 0 {
        return Ok(());
    }
    let vals = a.range(1 - n as i64, n as i64)?;
    let mut seen: HashMap<&Rational, i64> = HashMap::new();
    for (offset, v) in vals.iter().enumerate() {
        let idx = 1 - n as i64 + offset as i64;
        if let Some(prev) = seen.insert(v, idx) {
            return Err(Error::InterpolationDegenerate(format!(
                "a_{prev} = a_{idx} = {}",
                format_rational(v)
            )));
        }
    }
    Ok(())
}

/// Coefficients `c(lambda)` of `f = sum_{|lambda| <= n} c(lambda) s_{lambda;a}`,
/// by recurrence on `|lambda|` over the interpolation nodes.
pub fn interpolate(f: &SymFunc, a: &ParamSequence, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    interpolate_with_order(f, a, n, NodeOrder::GradedLex)
}

pub fn interpolate_with_order(
    f: &SymFunc,
    a: &ParamSequence,
    n: usize,
    order: NodeOrder,
) -> Result<BTreeMap<Partition, Rational>> {
    if f.degree() > n {
        return Err(Error::SizeMismatch(format!("degree {} exceeds the bound {n}", f.degree())));
    }
    if a.policy() == WindowPolicy::Strict {
        check_nodes_distinct(a, n)?;
    }
    let mut nodes: Vec<Partition> = Vec::new();
    for k in 0..=n {
        let mut level = Partition::all_of_size(k);
        if order == NodeOrder::ReverseLex {
            level.reverse();
        }
        nodes.extend(level);
    }
    let basis: HashMap<Partition, SymFunc> =
        nodes.iter().map(|l| Ok((l.clone(), s_mp(l, a)?))).collect::<Result<_>>()?;
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    for lambda in &nodes {
        let pt = eval_point_of_diagram(lambda, a)?;
        let mut rest = f.eval_super(&pt);
        for (mu, c) in &coeffs {
            if mu != lambda && mu.is_contained_in(lambda) {
                rest -= c * basis[mu].eval_super(&pt);
            }
        }
        let denom = value_at_self(lambda, a)?;
        if denom.is_zero() {
            return Err(Error::InterpolationDegenerate(format!("s_{{{lambda};a}} vanishes at its own node")));
        }
        let c = rest / denom;
        if !c.is_zero() {
            coeffs.insert(lambda.clone(), c);
        }
    }
    Ok(coeffs)
}

/// `sum c(lambda) s_{lambda;a}`.
pub fn reconstruct(coeffs: &BTreeMap<Partition, Rational>, a: &ParamSequence) -> Result<SymFunc> {
    let mut out = SymFunc::zero();
    for (lambda, c) in coeffs {
        out = out + s_mp(lambda, a)?.scale(c);
    }
    Ok(out)
}

/// Solves for the element of degree `<= |mu|` vanishing at every node `lambda != mu`
/// with `|lambda| <= |mu|` and equal to [`value_at_self`] at `mu`.
/// Unknowns are classical Schur coefficients; returns `None` if the system is singular.
pub fn characterize_by_values(mu: &Partition, a: &ParamSequence) -> Result<Option<SchurExpansion>> {
    let shapes = Partition::all_up_to(mu.size());
    let target = value_at_self(mu, a)?;
    let rhs: Vec<Rational> = shapes.iter().map(|l| if l == mu { target.clone() } else { Rational::zero() }).collect();
    solve_on_nodes(&shapes, &shapes, a, &rhs)
        .map(|sol| sol.map(|c| SchurExpansion::from_terms(shapes.iter().cloned().zip(c))))
}

/// Solves for `s_mu + (lower terms)` vanishing at every node with `|lambda| < |mu|`.
pub fn characterize_by_top_term(mu: &Partition, a: &ParamSequence) -> Result<Option<SchurExpansion>> {
    let lower = if mu.is_empty() { Vec::new() } else { Partition::all_up_to(mu.size() - 1) };
    let top = SchurExpansion::single(mu.clone()).to_symfunc()?;
    let rhs = lower
        .iter()
        .map(|l| Ok(-top.eval_super(&eval_point_of_diagram(l, a)?)))
        .collect::<Result<Vec<_>>>()?;
    let sol = solve_on_nodes(&lower, &lower, a, &rhs)?;
    Ok(sol.map(|c| SchurExpansion::from_terms(lower.iter().cloned().zip(c)).add(&SchurExpansion::single(mu.clone()))))
}

fn solve_on_nodes(
    nodes: &[Partition],
    unknowns: &[Partition],
    a: &ParamSequence,
    rhs: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    let schur: Vec<SymFunc> = unknowns
        .iter()
        .map(|nu| SchurExpansion::single(nu.clone()).to_symfunc())
        .collect::<Result<_>>()?;
    let mut m = Vec::with_capacity(nodes.len());
    for lambda in nodes {
        let pt = eval_point_of_diagram(lambda, a)?;
        m.push(schur.iter().map(|s| s.eval_super(&pt)).collect::<Vec<_>>());
    }
    Ok(solve(&m, rhs))
}

/// Nodes sorted in canonical order, for reports.
pub fn sorted_nodes(coeffs: &BTreeMap<Partition, Rational>) -> Vec<(&Partition, &Rational)> {
    let mut v: Vec<_> = coeffs.iter().collect();
    v.sort_by(|x, y| graded_cmp(x.0, y.0));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiparam::functions::frobenius_schur;
    use crate::rational::{rat, ratio};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn custom() -> ParamSequence {
        "custom:-6=2/7,-5=-3,-4=1/5,-3=4,-2=-1/2,-1=1/3,0=5/4,1=2,2=-7/3,3=6,4=1/9,5=-2,6=3/2,7=8"
            .parse()
            .unwrap()
    }

    #[test]
    fn node_examples() {
        let s = ParamSequence::special();
        assert_eq!(eval_point_of_diagram(&p(""), &custom()).unwrap(), EvalPoint::origin());
        assert_eq!(eval_point_of_diagram(&p("2,1"), &s).unwrap(), EvalPoint::new(vec![ratio(3, 2)], vec![ratio(3, 2)]));
        let c = custom();
        assert_eq!(
            eval_point_of_diagram(&p("2,1"), &c).unwrap(),
            EvalPoint::new(vec![c.get(2).unwrap()], vec![c.hat(2).unwrap()])
        );
    }

    #[test]
    fn value_at_self_examples() {
        assert_eq!(value_at_self(&p(""), &custom()).unwrap(), rat(1));
        assert_eq!(value_at_self(&p("2,1"), &ParamSequence::special()).unwrap(), rat(3));
        assert_eq!(value_at_self(&p("1"), &ParamSequence::zero()).unwrap(), rat(0));
    }

    #[test]
    fn eval_at_diagram_examples() {
        let s = ParamSequence::special();
        assert_eq!(eval_at_diagram(&p("2"), &s, &p("1,1")).unwrap(), rat(0));
        assert_eq!(eval_at_diagram(&p("2,1"), &s, &p("2,1")).unwrap(), rat(3));
        assert_eq!(eval_at_diagram(&p("1"), &s, &p("2,1")).unwrap(), rat(3));
    }

    #[test]
    fn interpolation_examples() {
        let s = ParamSequence::special();
        assert_eq!(interpolate(&SymFunc::one(), &s, 0).unwrap(), BTreeMap::from([(p(""), rat(1))]));
        assert_eq!(interpolate(&SymFunc::h(1), &s, 3).unwrap(), BTreeMap::from([(p("1"), rat(1))]));
        assert_eq!(
            interpolate(&SymFunc::h(2), &s, 2).unwrap(),
            BTreeMap::from([(p("2"), rat(1)), (p("1"), ratio(1, 2))])
        );
        assert!(matches!(interpolate(&SymFunc::h(3), &s, 2), Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn degenerate_parameters_rejected() {
        assert!(matches!(
            interpolate(&SymFunc::h(1), &ParamSequence::zero(), 2),
            Err(Error::InterpolationDegenerate(_))
        ));
        let permissive = ParamSequence::zero().with_policy(WindowPolicy::Permissive);
        assert!(matches!(interpolate(&SymFunc::h(1), &permissive, 2), Err(Error::InterpolationDegenerate(_))));
    }

    #[test]
    fn orders_agree_and_reconstruct() {
        let f = SymFunc::p(3) + &SymFunc::h(2) * &SymFunc::e(1) - SymFunc::constant(ratio(2, 3));
        for a in [ParamSequence::special(), custom()] {
            let c1 = interpolate_with_order(&f, &a, 4, NodeOrder::GradedLex).unwrap();
            let c2 = interpolate_with_order(&f, &a, 4, NodeOrder::ReverseLex).unwrap();
            assert_eq!(c1, c2);
            assert_eq!(reconstruct(&c1, &a).unwrap(), f);
        }
    }

    #[test]
    fn characterizations_recover_fs() {
        for mu in Partition::all_up_to(4) {
            let fs = frobenius_schur(&mu).to_schur().unwrap();
            let s = ParamSequence::special();
            assert_eq!(characterize_by_values(&mu, &s).unwrap().unwrap(), fs, "{mu}");
            assert_eq!(characterize_by_top_term(&mu, &s).unwrap().unwrap(), fs, "{mu}");
        }
    }
}
