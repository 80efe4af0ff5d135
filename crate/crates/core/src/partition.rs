//! Partitions (Young diagrams) and their Frobenius coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// empty diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Row length `i` (0-based); zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of diagonal cells.
    pub fn depth(&self) -> usize {
        self.0.iter().enumerate().take_while(|&(i, &p)| p > i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((1..=cols).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// True iff `self` is contained in `other` as a diagram.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Cells `(i, j)`, 1-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i - 1) >= j
    }

    /// Hook length of cell `(i, j)` (1-based).
    pub fn hook(&self, conj: &Partition, i: usize, j: usize) -> usize {
        self.part(i - 1) - j + conj.part(j - 1) - i + 1
    }

    pub fn to_frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let d = self.depth();
        FrobeniusCoords {
            p: (0..d).map(|i| self.0[i] - i - 1).collect(),
            q: (0..d).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    pub fn from_frobenius(c: &FrobeniusCoords) -> Partition {
        let d = c.depth();
        if d == 0 {
            return Partition::empty();
        }
        // Rows 1..d come from p; rows below the diagonal block from the legs q.
        let mut parts: Vec<usize> = (0..d).map(|i| c.p[i] + i + 1).collect();
        let rows = c.q[0] + 1;
        for r in d + 1..=rows {
            // Row r (> d) has one cell in each column j <= d with leg length reaching it.
            parts.push((0..d).filter(|&j| c.q[j] + j + 1 >= r).count());
        }
        Partition(parts)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, grouped by ascending size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        fn rec(i: usize, bound: usize, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() || bound == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            out.push(Partition(cur.clone()));
            for p in 1..=bound.min(outer.part(i)) {
                cur.push(p);
                rec(i + 1, p, outer, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, usize::MAX, self, &mut Vec::new(), &mut out);
        out.sort_by(graded_cmp);
        out.dedup();
        out
    }

    /// `(k, 1^m)` hook in Frobenius form `(p | q)`.
    pub fn hook_shape(p: usize, q: usize) -> Partition {
        let mut parts = vec![p + 1];
        parts.extend(std::iter::repeat_n(1, q));
        Partition(parts)
    }

    /// Appends `count` parts equal to 1.
    pub fn with_ones(&self, count: usize) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, count));
        Partition(parts)
    }
}

/// Canonical output order: larger size first, then decreasing lexicographic order.
pub fn graded_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.size().cmp(&a.size()).then_with(|| b.0.cmp(&a.0))
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `4,2,2`; the empty string is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Frobenius coordinates `(p_1,...,p_d | q_1,...,q_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    p: Vec<usize>,
    q: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(p: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::InvalidFrobenius(format!("{p:?} and {q:?} differ in length")));
        }
        if p.windows(2).any(|w| w[0] <= w[1]) || q.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidFrobenius(format!("({p:?}|{q:?}) is not strictly decreasing")));
        }
        Ok(FrobeniusCoords { p, q })
    }

    pub fn p(&self) -> &[usize] {
        &self.p
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn depth(&self) -> usize {
        self.p.len()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_frobenius(self)
    }
}

impl FromStr for FrobeniusCoords {
    type Err = Error;

    /// `p1,...,pd|q1,...,qd`; `|` alone is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .split_once('|')
            .ok_or_else(|| Error::InvalidFrobenius(format!("missing '|' in {s:?}")))?;
        let list = |t: &str| -> Result<Vec<usize>> {
            let t = t.trim();
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidFrobenius(s.to_string())))
                .collect()
        };
        FrobeniusCoords::new(list(p)?, list(q)?)
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", j(&self.p), j(&self.q))
    }
}
