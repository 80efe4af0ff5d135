//! Schur-basis representation and conversion to and from the `h` basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::kostka::kostka;
use super::SymFunc;
use crate::error::{Error, Result};
use crate::partition::{graded_cmp, Partition};
use crate::rational::{format_rational, parse_rational, Rational};

/// Degree limit for Kostka-based conversions.
pub const DEFAULT_DEGREE_CAP: usize = 20;

/// `sum_mu c_mu s_mu` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn single(mu: Partition) -> Self {
        SchurExpansion::from_terms([(mu, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SchurExpansion::zero();
        for (k, v) in terms {
            out.add_term(k, v);
        }
        out
    }

    pub fn add_term(&mut self, key: Partition, coeff: Rational) {
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.terms.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    /// Terms in canonical order (larger size first, then decreasing lexicographic).
    pub fn terms(&self) -> Vec<(&Partition, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_cmp(a.0, b.0));
        v
    }

    /// Keeps only the terms of maximal degree.
    pub fn top_component(&self) -> SchurExpansion {
        let d = self.degree();
        SchurExpansion {
            terms: self.terms.iter().filter(|(k, _)| k.size() == d).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub fn conjugate(&self) -> SchurExpansion {
        SchurExpansion { terms: self.terms.iter().map(|(k, v)| (k.conjugate(), v.clone())).collect() }
    }

    pub fn scale(&self, c: &Rational) -> SchurExpansion {
        SchurExpansion::from_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SchurExpansion) -> SchurExpansion {
        self.add(&other.scale(&-Rational::one()))
    }

    /// `h_lambda = sum_mu K_{mu lambda} s_mu`.
    pub fn from_symfunc(f: &SymFunc, cap: usize) -> Result<Self> {
        check_cap(f.degree(), cap)?;
        let mut out = SchurExpansion::zero();
        for (lambda, c) in f.h_terms() {
            for mu in Partition::all_of_size(lambda.size()) {
                let k = kostka(&mu, lambda);
                if !k.is_zero() {
                    out.add_term(mu, c * Rational::from_integer(BigInt::from(k)));
                }
            }
        }
        Ok(out)
    }

    /// Inverse of [`SchurExpansion::from_symfunc`]: unitriangular solve against the
    /// Kostka matrix, processing shapes in increasing lexicographic order.
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        check_cap(self.degree(), DEFAULT_DEGREE_CAP)?;
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &Rational)>> = BTreeMap::new();
        for (k, v) in &self.terms {
            by_degree.entry(k.size()).or_default().push((k, v));
        }
        let mut out = SymFunc::zero();
        for (n, _) in by_degree {
            let mut shapes = Partition::all_of_size(n);
            shapes.reverse();
            let mut solved: Vec<(Partition, Rational)> = Vec::new();
            for mu in shapes {
                let mut d = self.coeff(&mu);
                for (lambda, dl) in &solved {
                    let k = kostka(&mu, lambda);
                    if !k.is_zero() {
                        d -= dl * Rational::from_integer(BigInt::from(k));
                    }
                }
                if !d.is_zero() {
                    solved.push((mu, d));
                }
            }
            for (lambda, d) in solved {
                out = out + SymFunc::from_h_term(lambda, d);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<SchurTerm> = self
            .terms()
            .into_iter()
            .map(|(k, v)| SchurTerm { partition: k.parts().to_vec(), coeff: format_rational(v) })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let terms: Vec<SchurTerm> =
            serde_json::from_value(value.clone()).map_err(|e| Error::InvalidPartition(e.to_string()))?;
        let mut out = SchurExpansion::zero();
        for t in terms {
            out.add_term(Partition::new(t.partition)?, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

fn check_cap(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

/// JSON record `{"partition": [..], "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub partition: Vec<usize>,
    pub coeff: String,
}

impl fmt::Display for SchurExpansion {
    /// `s[2] - 1/2 s[1] + 3`; the empty-partition term prints as a bare number.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mu, c)) in self.terms().into_iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mu.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "s[{mu}]")?;
            } else {
                write!(f, "{} s[{mu}]", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conversions() {
        assert!(SchurExpansion::from_symfunc(&SymFunc::zero(), 20).unwrap().is_zero());
        let h21 = SymFunc::from_h_term(p("2,1"), rat(1));
        let s = h21.to_schur().unwrap();
        assert_eq!(s, SchurExpansion::from_terms([(p("3"), rat(1)), (p("2,1"), rat(1))]));
        for mu in Partition::all_up_to(8) {
            let single = SchurExpansion::single(mu);
            assert_eq!(single.to_symfunc().unwrap().to_schur().unwrap(), single);
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let f = SymFunc::h(5);
        assert_eq!(f.to_schur_with_cap(4), Err(Error::DegreeCap { degree: 5, cap: 4 }));
        assert!(Error::DegreeCap { degree: 5, cap: 4 }.is_data_error());
    }

    #[test]
    fn display_and_json() {
        let e = SchurExpansion::from_terms([(p("2"), rat(1)), (p("1"), ratio(-1, 2)), (p(""), rat(3))]);
        assert_eq!(e.to_string(), "s[2] - 1/2 s[1] + 3");
        let j = e.to_json();
        assert_eq!(
            j.to_string(),
            r#"[{"partition":[2],"coeff":"1"},{"partition":[1],"coeff":"-1/2"},{"partition":[],"coeff":"3"}]"#
        );
        let back = SchurExpansion::from_json(&j).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_json(), j);
        assert_eq!(SchurExpansion::zero().to_string(), "0");
        assert_eq!(SchurExpansion::single(p("1")).scale(&rat(-1)).to_string(), "-s[1]");
    }
}
