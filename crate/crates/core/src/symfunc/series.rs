//! Truncated power series in `1/u` and `1/v` with symmetric-function coefficients.

use std::collections::BTreeMap;

use super::SymFunc;
use crate::error::{Error, Result};
use crate::rational::{complete_all, Rational};

/// An element of `Lambda[[1/u, 1/v]]` modulo terms of total order above `order`.
/// The key `(j, k)` stands for `u^{-j} v^{-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries2 {
    order: usize,
    coeffs: BTreeMap<(usize, usize), SymFunc>,
}

impl TruncatedSeries2 {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries2 { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries2::zero(order);
        s.add_coeff(0, 0, SymFunc::one());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `u^{-j} v^{-k}`.
    pub fn coeff(&self, j: usize, k: usize) -> SymFunc {
        self.coeffs.get(&(j, k)).cloned().unwrap_or_default()
    }

    pub fn add_coeff(&mut self, j: usize, k: usize, f: SymFunc) {
        if j + k > self.order || f.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((j, k)).or_default();
        *slot = &*slot + &f;
        if slot.is_zero() {
            self.coeffs.remove(&(j, k));
        }
    }

    /// `H(u) = 1 + sum_k h_k u^{-k}`.
    pub fn h_series(order: usize) -> Self {
        let mut s = TruncatedSeries2::zero(order);
        for k in 0..=order {
            s.add_coeff(k, 0, SymFunc::h(k));
        }
        s
    }

    /// `E(v) = 1 + sum_k e_k v^{-k}`.
    pub fn e_series(order: usize) -> Self {
        let mut s = TruncatedSeries2::zero(order);
        for (k, e) in SymFunc::e_all(order).into_iter().enumerate() {
            s.add_coeff(0, k, e);
        }
        s
    }

    /// Expansion of `1 / ((u - c_1)...(u - c_m) (v - d_1)...(v - d_n))`, using
    /// `1/prod(u - c_i) = u^{-m} sum_r h_r(c) u^{-r}`.
    pub fn expand_rational(order: usize, u_roots: &[Rational], v_roots: &[Rational]) -> Self {
        let (m, n) = (u_roots.len(), v_roots.len());
        let mut s = TruncatedSeries2::zero(order);
        if m + n > order {
            return s;
        }
        let room = order - m - n;
        let hu = complete_all(room, u_roots);
        let hv = complete_all(room, v_roots);
        for r in 0..=room {
            for t in 0..=room - r {
                s.add_coeff(m + r, n + t, SymFunc::constant(&hu[r] * &hv[t]));
            }
        }
        s
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&(j, k), f) in &other.coeffs {
            out.add_coeff(j, k, f.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = TruncatedSeries2::zero(self.order);
        for (&(j1, k1), f1) in &self.coeffs {
            for (&(j2, k2), f2) in &other.coeffs {
                if j1 + j2 + k1 + k2 <= self.order {
                    out.add_coeff(j1 + j2, k1 + k2, f1 * f2);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, f: &SymFunc) -> Self {
        let mut out = TruncatedSeries2::zero(self.order);
        for (&(j, k), g) in &self.coeffs {
            out.add_coeff(j, k, g * f);
        }
        out
    }

    /// Multiplies by `u + v`, which lowers every order by one; the result is
    /// truncated at `order - 1`. Requires every stored term to be divisible by
    /// both `1/u` and `1/v`.
    pub fn mul_u_plus_v(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::OrderMismatch(0, 1));
        }
        let mut out = TruncatedSeries2::zero(self.order - 1);
        for (&(j, k), f) in &self.coeffs {
            if j == 0 || k == 0 {
                return Err(Error::InvalidParams(format!(
                    "term u^-{j} v^-{k} is not divisible by u^-1 v^-1"
                )));
            }
            out.add_coeff(j - 1, k, f.clone());
            out.add_coeff(j, k - 1, f.clone());
        }
        Ok(out)
    }

    /// Stored coefficients, ordered by key.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &SymFunc)> {
        self.coeffs.iter()
    }
}
