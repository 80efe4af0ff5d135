//! Standard-tableau counts and diagonal-strict tableaux.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::linalg::det_bareiss;
use crate::partition::Partition;
use crate::rational::Rational;
use crate::skew::SkewShape;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n (n-1) ... (n-m+1)`; one when `m = 0`.
pub fn falling_factorial(n: i64, m: usize) -> BigInt {
    (0..m as i64).fold(BigInt::one(), |acc, k| acc * (n - k))
}

/// Number of standard tableaux of shape `nu`, by the hook length formula.
pub fn dim_straight(nu: &Partition) -> BigUint {
    let conj = nu.conjugate();
    let hooks = nu.cells().fold(BigUint::one(), |acc, (i, j)| acc * nu.hook(&conj, i, j));
    factorial(nu.size()) / hooks
}

/// Number of standard tableaux of shape `nu / mu` (zero unless `mu` is inside `nu`),
/// via Aitken's determinant `(|nu|-|mu|)! det[1/((nu_i - i) - (mu_j - j))!]`.
pub fn dim_skew(mu: &Partition, nu: &Partition) -> BigUint {
    if !mu.is_contained_in(nu) {
        return BigUint::zero();
    }
    let n = nu.len();
    let inv_fact = |k: i64| -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            Rational::new(BigInt::one(), BigInt::from(factorial(k as usize)))
        }
    };
    let m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| inv_fact((nu.part(i) as i64 - i as i64) - (mu.part(j) as i64 - j as i64)))
                .collect()
        })
        .collect();
    let value = det_bareiss(&m) * Rational::from_integer(BigInt::from(factorial(nu.size() - mu.size())));
    debug_assert!(value.is_integer() && !value.is_negative());
    value.to_integer().to_biguint().expect("nonnegative count")
}

/// Same contract as [`dim_skew`], by recursive removal of outer corners.
/// Exponential; meant as a test oracle.
pub fn dim_skew_bruteforce(mu: &Partition, nu: &Partition) -> BigUint {
    fn rec(mu: &Partition, nu: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if nu == mu {
            return BigUint::one();
        }
        if !mu.is_contained_in(nu) {
            return BigUint::zero();
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for i in 0..nu.len() {
            // removable corner at the end of row i
            if nu.part(i) > nu.part(i + 1) && nu.part(i) > mu.part(i) {
                let mut parts = nu.parts().to_vec();
                parts[i] -= 1;
                total += rec(mu, &Partition::from_unsorted(parts), memo);
            }
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    rec(mu, nu, &mut HashMap::new())
}

/// A filling of a straight shape by positive integers, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalStrictTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl DiagonalStrictTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at cell `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The level set `T^{-1}(k)` as the skew shape `{T <= k} / {T <= k-1}`.
    pub fn level_set(&self, k: usize) -> SkewShape {
        let below = |k: usize| {
            Partition::from_unsorted(self.rows.iter().map(|r| r.iter().filter(|&&e| e <= k).count()).collect())
        };
        SkewShape::new(below(k), below(k.saturating_sub(1))).expect("level sets of a tableau are skew shapes")
    }

    /// Row-major reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Lazily enumerates every diagonal-strict tableau of shape `mu` with entries in
/// `1..=max_entry`, in lexicographic order of the row-major reading word.
pub struct DiagonalStrictTableaux {
    shape: Partition,
    cells: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
    max_entry: usize,
    word: Vec<usize>,
    started: bool,
    done: bool,
}

impl DiagonalStrictTableaux {
    pub fn new(mu: &Partition, max_entry: usize) -> Self {
        let cells: Vec<_> = mu.cells().collect();
        let index = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        DiagonalStrictTableaux {
            shape: mu.clone(),
            cells,
            index,
            max_entry,
            word: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn min_value(&self, pos: usize) -> usize {
        let (i, j) = self.cells[pos];
        let mut lo = 1;
        if j > 1 {
            lo = lo.max(self.word[self.index[&(i, j - 1)]]);
        }
        if i > 1 {
            lo = lo.max(self.word[self.index[&(i - 1, j)]]);
        }
        if i > 1 && j > 1 {
            lo = lo.max(self.word[self.index[&(i - 1, j - 1)]] + 1);
        }
        lo
    }

    /// Fills `word` from its current length to completion with minimal values;
    /// false if some cell cannot be filled.
    fn fill_minimal(&mut self) -> bool {
        while self.word.len() < self.cells.len() {
            let v = self.min_value(self.word.len());
            if v > self.max_entry {
                return false;
            }
            self.word.push(v);
        }
        true
    }

    /// Advances to the next valid word in depth-first order.
    fn advance(&mut self) -> bool {
        while let Some(last) = self.word.pop() {
            if last < self.max_entry {
                self.word.push(last + 1);
                if self.fill_minimal() {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for DiagonalStrictTableaux {
    type Item = DiagonalStrictTableau;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.fill_minimal() || self.advance()
        } else {
            self.advance()
        };
        if !ok {
            self.done = true;
            return None;
        }
        let mut rows = Vec::with_capacity(self.shape.len());
        let mut it = self.word.iter().copied();
        for &p in self.shape.parts() {
            rows.push(it.by_ref().take(p).collect());
        }
        Some(DiagonalStrictTableau { shape: self.shape.clone(), rows })
    }
}

pub fn enumerate_diagonal_strict(mu: &Partition, max_entry: usize) -> DiagonalStrictTableaux {
    DiagonalStrictTableaux::new(mu, max_entry)
}
