//! Ribbon polynomials `f_{nu;a}(u, v)` and the tableau formula for `s_{mu;a}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ParamSequence;
use crate::partition::Partition;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::skew::{Orientation, SkewShape};
use crate::symfunc::EvalPoint;
use crate::tableaux::enumerate_diagonal_strict;

/// Polynomial in `u, v` with rational coefficients; key `(du, dv)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn one() -> Self {
        BivariatePoly::monomial(0, 0, Rational::one())
    }

    pub fn monomial(du: u32, dv: u32, c: Rational) -> Self {
        let mut p = BivariatePoly::zero();
        p.add_term(du, dv, c);
        p
    }

    /// `u + c` or `v + c`.
    fn linear(in_u: bool, c: Rational) -> Self {
        let mut p = if in_u { BivariatePoly::monomial(1, 0, Rational::one()) } else { BivariatePoly::monomial(0, 1, Rational::one()) };
        p.add_term(0, 0, c);
        p
    }

    pub fn add_term(&mut self, du: u32, dv: u32, c: Rational) {
        let slot = self.coeffs.entry((du, dv)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(du, dv));
        }
    }

    pub fn coeff(&self, du: u32, dv: u32) -> Rational {
        self.coeffs.get(&(du, dv)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.coeffs.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a1, b1), c1) in &self.coeffs {
            for (&(a2, b2), c2) in &other.coeffs {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    /// `f(v, u)`.
    pub fn swap(&self) -> BivariatePoly {
        BivariatePoly { coeffs: self.coeffs.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        self.coeffs
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(u.clone(), a as usize) * num_traits::pow(v.clone(), b as usize))
            .fold(Rational::zero(), |x, y| x + y)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<BivariateTerm> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&(du, dv), c)| BivariateTerm { du, dv, coeff: format_rational(c) })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<BivariateTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::InvalidRational(e.to_string()))?;
        let mut out = BivariatePoly::zero();
        for t in terms {
            out.add_term(t.du, t.dv, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

/// JSON record `{"du": int, "dv": int, "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateTerm {
    pub du: u32,
    pub dv: u32,
    pub coeff: String,
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&(du, dv), c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match idx {
                0 if c.is_negative() => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (du == 0 && dv == 0) {
                factors.push(format_rational(&mag));
            }
            for (var, d) in [("u", du), ("v", dv)] {
                match d {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{d}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// One linear factor of a ribbon polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RibbonFactor {
    /// `u + v`, one per connected component
    UPlusV,
    /// `u - a_k`, from a vertical interior side
    U(i64),
    /// `v + a_k`, from a horizontal interior side
    V(i64),
}

/// A ribbon polynomial kept as its list of linear factors, independent of the
/// parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonFactors {
    factors: Vec<RibbonFactor>,
}

impl RibbonFactors {
    /// Factors of `f_{nu;a}` for a 2x2-free skew shape: `(u+v)` per component,
    /// `(u - a_k)` per vertical interior side and `(v + a_k)` per horizontal one,
    /// where `k = delta - eps + 1/2` for the side midpoint `(eps, delta)`.
    pub fn of_shape(nu: &SkewShape) -> Result<Self> {
        let (components, has_2x2) = nu.decompose();
        if has_2x2 {
            return Err(Error::Contains2x2);
        }
        let mut factors = Vec::new();
        for comp in &components {
            factors.push(RibbonFactor::UPlusV);
            for side in comp.interior_sides()? {
                let k = side.param_index();
                factors.push(match side.orientation {
                    Orientation::Vertical => RibbonFactor::U(k),
                    Orientation::Horizontal => RibbonFactor::V(k),
                });
            }
        }
        factors.sort();
        Ok(RibbonFactors { factors })
    }

    pub fn factors(&self) -> &[RibbonFactor] {
        &self.factors
    }

    pub fn expand(&self, a: &ParamSequence) -> Result<BivariatePoly> {
        let mut out = BivariatePoly::one();
        for f in &self.factors {
            let lin = match *f {
                RibbonFactor::UPlusV => {
                    let mut p = BivariatePoly::monomial(1, 0, Rational::one());
                    p.add_term(0, 1, Rational::one());
                    p
                }
                RibbonFactor::U(k) => BivariatePoly::linear(true, -a.get(k)?),
                RibbonFactor::V(k) => BivariatePoly::linear(false, a.get(k)?),
            };
            out = out.mul(&lin);
        }
        Ok(out)
    }

    /// Value at `(u, v)` without expanding.
    pub fn eval(&self, a: &ParamSequence, u: &Rational, v: &Rational) -> Result<Rational> {
        let mut out = Rational::one();
        for f in &self.factors {
            out *= match *f {
                RibbonFactor::UPlusV => u + v,
                RibbonFactor::U(k) => u - a.get(k)?,
                RibbonFactor::V(k) => v + a.get(k)?,
            };
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    /// `(u+v)(u-a[-1])(v+a[0])`; `1` for the empty shape.
    pub fn symbolic(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|f| match *f {
                RibbonFactor::UPlusV => "(u+v)".to_string(),
                RibbonFactor::U(k) => format!("(u-a[{k}])"),
                RibbonFactor::V(k) => format!("(v+a[{k}])"),
            })
            .collect()
    }

    /// Factored form with parameter values substituted, e.g. `(u+v)(u+1)(v+0)`.
    pub fn substituted(&self, a: &ParamSequence) -> Result<String> {
        if self.factors.is_empty() {
            return Ok("1".into());
        }
        let mut out = String::new();
        for f in &self.factors {
            let s = match *f {
                RibbonFactor::UPlusV => "(u+v)".to_string(),
                RibbonFactor::U(k) => linear_text("u", &-a.get(k)?),
                RibbonFactor::V(k) => linear_text("v", &a.get(k)?),
            };
            out.push_str(&s);
        }
        Ok(out)
    }
}

fn linear_text(var: &str, c: &Rational) -> String {
    if c.is_negative() {
        format!("({var}-{})", format_rational(&-c))
    } else {
        format!("({var}+{})", format_rational(c))
    }
}

/// `f_{nu;a}(u, v)` expanded.
pub fn ribbon_poly(nu: &SkewShape, a: &ParamSequence) -> Result<BivariatePoly> {
    RibbonFactors::of_shape(nu)?.expand(a)
}

/// `sum_T prod_k f_{T^{-1}(k);a}(x_k, y_k)` over diagonal-strict tableaux of shape `mu`
/// with entries at most the number of coordinate pairs of `pt`.
pub fn combinatorial_eval(mu: &Partition, a: &ParamSequence, pt: &EvalPoint) -> Result<Rational> {
    let n = pt.pairs();
    let (x, y) = pt.padded(n);
    let mut factor_cache: HashMap<SkewShape, RibbonFactors> = HashMap::new();
    let mut total = Rational::zero();
    for t in enumerate_diagonal_strict(mu, n) {
        let mut term = Rational::one();
        for k in 1..=t.max_entry() {
            let level = t.level_set(k);
            if level.is_empty() {
                continue;
            }
            let factors = match factor_cache.get(&level) {
                Some(f) => f,
                None => {
                    let f = RibbonFactors::of_shape(&level)?;
                    factor_cache.entry(level).or_insert(f)
                }
            };
            term *= factors.eval(a, &x[k - 1], &y[k - 1])?;
            if term.is_zero() {
                break;
            }
        }
        total += term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiparam::functions::s_mp;
    use crate::rational::{rat, ratio};

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let f = RibbonFactors::of_shape(&sk("4,2,2/1,1")).unwrap();
        assert_eq!(f.symbolic(), "(u+v)(u-a[-1])(u-a[2])(u-a[3])(v+a[0])(v+a[1])");
        let a: ParamSequence = "custom:-1=-1,0=0,1=1,2=2,3=3".parse().unwrap();
        assert_eq!(f.substituted(&a).unwrap(), "(u+v)(u+1)(u-2)(u-3)(v+0)(v+1)");
    }

    #[test]
    fn small_shapes() {
        let a: ParamSequence = "custom:-3=7,-2=1/2,-1=-5,0=3,1=-2,2=4,3=1/3".parse().unwrap();
        assert_eq!(ribbon_poly(&sk("/"), &a).unwrap(), BivariatePoly::one());
        assert_eq!(RibbonFactors::of_shape(&sk("2,1/")).unwrap().symbolic(), "(u+v)(u-a[1])(v+a[0])");
        assert_eq!(ribbon_poly(&sk("2,2/"), &a), Err(Error::Contains2x2));
        // disconnected: product over components
        let f = RibbonFactors::of_shape(&sk("3,1/2")).unwrap();
        assert_eq!(f.symbolic(), "(u+v)(u+v)");
        let poly = ribbon_poly(&sk("2,1/"), &a).unwrap();
        assert_eq!(poly.total_degree(), 3);
        assert_eq!(poly.eval(&rat(0), &rat(0)), rat(0));
        // (u+v)(u+2)(v+3) at u=1, v=2
        assert_eq!(poly.eval(&rat(1), &rat(2)), rat(3 * 3 * 5));
    }

    #[test]
    fn ribbon_duality_in_box() {
        let a: ParamSequence = "custom:-8=3,-7=-1,-6=2/3,-5=5,-4=-7/2,-3=1,-2=9,-1=-4,0=1/6,1=-3,2=8,3=2/5,4=-6,5=7,6=11,7=-1/3,8=4,9=-2"
            .parse()
            .unwrap();
        let a_hat = a.dual();
        let mut checked = 0;
        for outer in Partition::all_up_to(16) {
            if outer.part(0) > 4 || outer.len() > 4 {
                continue;
            }
            for inner in outer.subdiagrams() {
                let nu = SkewShape::new(outer.clone(), inner).unwrap();
                if nu.is_empty() || !nu.is_connected() || nu.has_2x2() {
                    continue;
                }
                let lhs = ribbon_poly(&nu, &a).unwrap().swap();
                let rhs = ribbon_poly(&nu.conjugate(), &a_hat).unwrap();
                assert_eq!(lhs, rhs, "{nu}");
                checked += 1;
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn display_and_json() {
        let a = ParamSequence::zero();
        let poly = ribbon_poly(&sk("2/"), &a).unwrap();
        assert_eq!(poly.to_string(), "u^2 + u*v");
        let j = poly.to_json();
        assert_eq!(j.to_string(), r#"[{"du":2,"dv":0,"coeff":"1"},{"du":1,"dv":1,"coeff":"1"}]"#);
        assert_eq!(BivariatePoly::from_json(&j).unwrap(), poly);
    }

    #[test]
    fn combinatorial_examples() {
        let a: ParamSequence = "custom:-3=7,-2=1/2,-1=-5,0=3,1=-2,2=4,3=1/3".parse().unwrap();
        let (x1, y1) = (ratio(3, 5), rat(-4));
        let pt = EvalPoint::new(vec![x1.clone()], vec![y1.clone()]);
        assert_eq!(combinatorial_eval(&p("1"), &a, &pt).unwrap(), &x1 + &y1);
        assert_eq!(combinatorial_eval(&p("2"), &a, &pt).unwrap(), (&x1 + &y1) * (&x1 - rat(-2)));
        assert_eq!(combinatorial_eval(&p("2,2"), &a, &pt).unwrap(), rat(0));
        for mu in Partition::all_up_to(4) {
            assert_eq!(combinatorial_eval(&mu, &a, &pt).unwrap(), s_mp(&mu, &a).unwrap().eval_super(&pt), "{mu}");
        }
    }
}
