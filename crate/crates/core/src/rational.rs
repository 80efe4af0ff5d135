//! Exact rational scalars and a few elementary functions on rational vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, `p` or a negative variant of either. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list of rationals; the empty string is the empty list.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// `p/q` or `p`, no decimals.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `[e_0, e_1, ..., e_{len}]` of the given values.
pub fn elementary_all(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); values.len() + 1];
    e[0] = Rational::one();
    for (n, v) in values.iter().enumerate() {
        for k in (1..=n + 1).rev() {
            let add = &e[k - 1] * v;
            e[k] += add;
        }
    }
    e
}

/// Elementary symmetric polynomial `e_k` of the values; zero when `k` exceeds the length.
pub fn elementary(k: usize, values: &[Rational]) -> Rational {
    if k > values.len() {
        return Rational::zero();
    }
    elementary_all(values).swap_remove(k)
}

/// `[h_0, ..., h_max]` of the values.
pub fn complete_all(max: usize, values: &[Rational]) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); max + 1];
    h[0] = Rational::one();
    for v in values {
        for k in 1..=max {
            let add = &h[k - 1] * v;
            h[k] += add;
        }
    }
    h
}

/// Supersymmetric complete functions `h_k(x;y) = sum_{r+s=k} h_r(x) e_s(y)` for `k <= max`.
pub fn super_complete_all(max: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let hx = complete_all(max, x);
    let ey = elementary_all(y);
    (0..=max)
        .map(|k| {
            (0..=k.min(y.len()))
                .map(|s| &hx[k - s] * &ey[s])
                .fold(Rational::zero(), |acc, t| acc + t)
        })
        .collect()
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}
