//! The algebra of symmetric functions with exact rational coefficients.
//!
//! Elements are stored in the basis `h_lambda = h_{lambda_1} h_{lambda_2} ...`,
//! where multiplication is concatenation of keys. The Schur basis
//! ([`SchurExpansion`]) is the reporting basis.

mod kostka;
mod schur;
mod series;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use kostka::kostka;
pub use schur::{SchurExpansion, SchurTerm, DEFAULT_DEGREE_CAP};
pub use series::TruncatedSeries2;

use crate::error::Result;
use crate::partition::Partition;
use crate::rational::{super_complete_all, Rational};

/// Which classical generator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// complete homogeneous `h_k`
    H,
    /// elementary `e_k`
    E,
    /// power sum `p_k`
    P,
}

/// A symmetric function: finite rational combination of `h_lambda`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SymFunc::from_h_term(Partition::empty(), c)
    }

    pub fn from_h_term(key: Partition, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(key, coeff);
        }
        SymFunc { terms }
    }

    /// `h_k`; the unit for `k = 0`.
    pub fn h(k: usize) -> Self {
        SymFunc::from_h_term(Partition::from_unsorted(vec![k]), Rational::one())
    }

    /// `e_k`, from `e_k = sum_{i<k} (-1)^{k-1-i} e_i h_{k-i}`.
    pub fn e(k: usize) -> Self {
        SymFunc::e_all(k).pop().expect("nonempty")
    }

    /// `[e_0, ..., e_k]`.
    pub fn e_all(k: usize) -> Vec<SymFunc> {
        let mut e = vec![SymFunc::one()];
        for n in 1..=k {
            let mut acc = SymFunc::zero();
            for (i, ei) in e.iter().enumerate() {
                let term = ei * &SymFunc::h(n - i);
                if (n - 1 - i) % 2 == 0 {
                    acc = acc + term;
                } else {
                    acc = acc - term;
                }
            }
            e.push(acc);
        }
        e
    }

    /// Power sum `p_k` via Newton's identity `k h_k = sum_{i=1}^k p_i h_{k-i}`; the unit for `k = 0`.
    pub fn p(k: usize) -> Self {
        if k == 0 {
            return SymFunc::one();
        }
        let mut p: Vec<SymFunc> = vec![SymFunc::zero()];
        for n in 1..=k {
            let mut acc = SymFunc::h(n).scale(&Rational::from_integer((n as i64).into()));
            for (i, pi) in p.iter().enumerate().skip(1) {
                acc = acc - pi * &SymFunc::h(n - i);
            }
            p.push(acc);
        }
        p.pop().expect("nonempty")
    }

    pub fn generator(kind: Generator, k: usize) -> Self {
        match kind {
            Generator::H => SymFunc::h(k),
            Generator::E => SymFunc::e(k),
            Generator::P => SymFunc::p(k),
        }
    }

    /// `p_{rho_1} p_{rho_2} ...`
    pub fn p_product(rho: &Partition) -> Self {
        rho.parts().iter().fold(SymFunc::one(), |acc, &k| &acc * &SymFunc::p(k))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal size of a key; zero for constants and for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn h_terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    fn add_term(&mut self, key: Partition, coeff: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn to_schur(&self) -> Result<SchurExpansion> {
        SchurExpansion::from_symfunc(self, DEFAULT_DEGREE_CAP)
    }

    pub fn to_schur_with_cap(&self, cap: usize) -> Result<SchurExpansion> {
        SchurExpansion::from_symfunc(self, cap)
    }

    /// The involution swapping `h_k` and `e_k`, computed by conjugating Schur keys.
    pub fn omega(&self) -> Result<SymFunc> {
        self.to_schur()?.conjugate().to_symfunc()
    }

    /// Value of the supersymmetric function at `(x; y)`, using
    /// `h_k(x;y) = sum_{r+s=k} h_r(x) e_s(y)`.
    pub fn eval_super(&self, pt: &EvalPoint) -> Rational {
        let max_part = self.terms.keys().map(|k| k.part(0)).max().unwrap_or(0);
        let h = super_complete_all(max_part, &pt.x, &pt.y);
        self.terms
            .iter()
            .map(|(key, c)| key.parts().iter().fold(c.clone(), |acc, &k| acc * &h[k]))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.clone() + rhs.clone()
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        self + (-rhs)
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.clone() - rhs.clone()
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &rhs.terms {
                let mut parts = k1.parts().to_vec();
                parts.extend_from_slice(k2.parts());
                out.add_term(Partition::from_unsorted(parts), v1 * v2);
            }
        }
        out
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl crate::linalg::RingElement for SymFunc {
    fn zero_elem() -> Self {
        SymFunc::zero()
    }
    fn one_elem() -> Self {
        SymFunc::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
}

/// A point of `C^m x C^n`, zero-padded to infinite vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EvalPoint {
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
}

impl EvalPoint {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Self {
        EvalPoint { x, y }
    }

    /// The origin `(0; 0)`.
    pub fn origin() -> Self {
        EvalPoint::default()
    }

    /// Number of coordinate pairs, `max(len x, len y)`.
    pub fn pairs(&self) -> usize {
        self.x.len().max(self.y.len())
    }

    /// Both sides zero-padded to `n` coordinates.
    pub fn padded(&self, n: usize) -> (Vec<Rational>, Vec<Rational>) {
        let pad = |v: &[Rational]| {
            let mut v = v.to_vec();
            v.resize(n.max(v.len()), Rational::zero());
            v
        };
        (pad(&self.x), pad(&self.y))
    }
}
