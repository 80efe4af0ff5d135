//! Closed forms for `s_{mu;a}` on `C^n x C^n` by antisymmetrization.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::det_bareiss;
use crate::params::ParamSequence;
use crate::partition::Partition;
use crate::rational::{pow, Rational};
use crate::symfunc::EvalPoint;

/// `(x | a)^m = (x - a_1) ... (x - a_m)`.
fn falling_power(x: &Rational, params: &[Rational], m: usize) -> Rational {
    params[..m].iter().fold(Rational::one(), |acc, ai| acc * (x - ai))
}

fn vandermonde(v: &[Rational]) -> Rational {
    v.iter().tuple_combinations().fold(Rational::one(), |acc, (a, b)| acc * (a - b))
}

fn require_distinct(name: &str, v: &[Rational]) -> Result<()> {
    if v.iter().tuple_combinations().any(|(a, b)| a == b) {
        return Err(Error::DegeneratePoint(format!("repeated {name} coordinate")));
    }
    Ok(())
}

fn sign(perm: &[usize]) -> bool {
    perm.iter().tuple_combinations().filter(|(a, b)| a > b).count() % 2 == 0
}

/// Sergeev-Pragacz type formula: the `S_n x S_n` antisymmetrization of
/// `g_{mu;a}` divided by `V(x) V(y)`, with `n` the number of coordinate pairs
/// (the shorter side is padded with zeros).
pub fn sergeev_pragacz_eval(mu: &Partition, a: &ParamSequence, pt: &EvalPoint) -> Result<Rational> {
    let n = pt.pairs();
    let d = mu.depth();
    if d > n {
        return Ok(Rational::zero());
    }
    let (x, y) = pt.padded(n);
    require_distinct("x", &x)?;
    require_distinct("y", &y)?;
    let conj = mu.conjugate();
    let a_params = a.range(1, mu.part(0) as i64)?;
    let hat_params = (1..=conj.part(0) as i64).map(|i| a.hat(i)).collect::<Result<Vec<_>>>()?;

    let g = |xs: &[&Rational], ys: &[&Rational]| -> Rational {
        let mut v = Rational::one();
        for i in 0..d {
            let (row, col) = (mu.part(i), conj.part(i));
            v *= falling_power(xs[i], &a_params, row - i - 1);
            v *= pow(xs[i], n.saturating_sub(row));
            v *= falling_power(ys[i], &hat_params, col - i - 1);
            v *= pow(ys[i], n.saturating_sub(col));
        }
        for i in d..n {
            v *= pow(xs[i], n - i - 1) * pow(ys[i], n - i - 1);
        }
        for (i, j) in mu.cells() {
            if i <= n && j <= n {
                v *= xs[i - 1] + ys[j - 1];
            }
        }
        v
    };

    let perms: Vec<(Vec<usize>, bool)> = (0..n).permutations(n).map(|p| {
        let s = sign(&p);
        (p, s)
    }).collect();
    let mut numer = Rational::zero();
    for (px, sx) in &perms {
        let xs: Vec<&Rational> = px.iter().map(|&i| &x[i]).collect();
        for (py, sy) in &perms {
            let ys: Vec<&Rational> = py.iter().map(|&i| &y[i]).collect();
            let term = g(&xs, &ys);
            if sx == sy {
                numer += term;
            } else {
                numer -= term;
            }
        }
    }
    Ok(numer / (vandermonde(&x) * vandermonde(&y)))
}

/// Factorized form at depth `d = d(mu)` variables per side:
/// `det[(x_i|a)^{p_j}]/V(x) * det[(y_i|hat a)^{q_j}]/V(y) * prod (x_i + y_j)`.
pub fn factorized_eval(mu: &Partition, a: &ParamSequence, pt: &EvalPoint) -> Result<Rational> {
    let c = mu.to_frobenius();
    let d = c.depth();
    if pt.pairs() > d {
        return Err(Error::SizeMismatch(format!("point has {} coordinate pairs but d(mu) = {d}", pt.pairs())));
    }
    let (x, y) = pt.padded(d);
    require_distinct("x", &x)?;
    require_distinct("y", &y)?;
    let a_params = a.range(1, c.p().first().map_or(0, |&p| p as i64))?;
    let hat_params = (1..=c.q().first().map_or(0, |&q| q as i64)).map(|i| a.hat(i)).collect::<Result<Vec<_>>>()?;
    let mx: Vec<Vec<Rational>> =
        x.iter().map(|xi| c.p().iter().map(|&pj| falling_power(xi, &a_params, pj)).collect()).collect();
    let my: Vec<Vec<Rational>> =
        y.iter().map(|yi| c.q().iter().map(|&qj| falling_power(yi, &hat_params, qj)).collect()).collect();
    let cross = x.iter().cartesian_product(&y).fold(Rational::one(), |acc, (xi, yj)| acc * (xi + yj));
    Ok(det_bareiss(&mx) / vandermonde(&x) * det_bareiss(&my) / vandermonde(&y) * cross)
}
