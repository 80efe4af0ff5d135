//! Determinants and linear solves over exact rings.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Commutative ring operations needed by the division-free determinant.
pub trait RingElement: Clone {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl RingElement for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Division-free determinant by dynamic programming over column subsets
/// (row-by-row Laplace expansion with shared minors). Zero entries are skipped.
///
/// The matrix is given row-major; the empty matrix has determinant one.
pub fn det_division_free<T: RingElement>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one_elem();
    }
    assert!(n <= 20, "matrix order {n} too large for subset expansion");
    // minors[mask] = signed sum over bijections rows[0..popcount) -> columns in mask
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(T::one_elem());
    for mask in 0usize..(1 << n) {
        let Some(cur) = minors[mask].take() else { continue };
        if cur.is_zero_elem() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            minors[mask] = Some(cur);
            continue;
        }
        for (col, entry) in m[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero_elem() {
                continue;
            }
            // sign: number of used columns to the right of `col`
            let above = (mask >> col).count_ones();
            let mut term = cur.times(entry);
            if above % 2 == 1 {
                term = term.negate();
            }
            let next = mask | (1 << col);
            minors[next] = Some(match minors[next].take() {
                Some(acc) => acc.plus(&term),
                None => term,
            });
        }
    }
    minors[(1 << n) - 1].take().unwrap_or_else(T::zero_elem)
}

/// Fraction-free (Bareiss) elimination for rational matrices.
pub fn det_bareiss(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Solves `m x = rhs` by Gauss-Jordan elimination; `None` when singular.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..=n {
                    let sub = &factor * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}
