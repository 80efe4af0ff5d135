//! Skew shapes, their connected components and ribbon interior sides.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{ratio, Rational};

/// `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidSkewShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Cells `(i, j)` with `inner_i < j <= outer_i`, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |j| (i + 1, j)))
            .collect()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        self.outer.contains_cell(i, j) && !self.inner.contains_cell(i, j)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    pub fn has_2x2(&self) -> bool {
        self.cells().into_iter().any(|(i, j)| {
            self.contains_cell(i, j + 1) && self.contains_cell(i + 1, j) && self.contains_cell(i + 1, j + 1)
        })
    }

    /// Edge-connected components, each returned as the skew shape
    /// `(inner + component) / inner`, and whether a 2x2 block occurs.
    pub fn decompose(&self) -> (Vec<SkewShape>, bool) {
        let cells: BTreeSet<(usize, usize)> = self.cells().into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut components = Vec::new();
        for &start in &cells {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some((i, j)) = queue.pop_front() {
                comp.push((i, j));
                let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
                for n in nbrs {
                    if cells.contains(&n) && seen.insert(n) {
                        queue.push_back(n);
                    }
                }
            }
            let mut rows: Vec<usize> = (0..self.outer.len()).map(|i| self.inner.part(i)).collect();
            for &(i, _) in &comp {
                rows[i - 1] += 1;
            }
            let outer = Partition::from_unsorted(rows);
            components.push(SkewShape { outer, inner: self.inner.clone() });
        }
        (components, self.has_2x2())
    }

    pub fn is_connected(&self) -> bool {
        self.decompose().0.len() <= 1
    }

    /// Interior sides of a ribbon: one per pair of edge-adjacent cells.
    pub fn interior_sides(&self) -> Result<Vec<InteriorSide>> {
        if self.has_2x2() {
            return Err(Error::Contains2x2);
        }
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut sides = Vec::new();
        for (i, j) in self.cells() {
            if self.contains_cell(i, j + 1) {
                sides.push(InteriorSide::between_columns(i, j));
            }
            if self.contains_cell(i + 1, j) {
                sides.push(InteriorSide::between_rows(i, j));
            }
        }
        Ok(sides)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// `outer/inner`, e.g. `4,2,2/1,1`; a bare partition is a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// A unit edge shared by two cells, identified by its midpoint `(eps, delta)`
/// (first coordinate downward, second rightward).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InteriorSide {
    pub eps: Rational,
    pub delta: Rational,
    pub orientation: Orientation,
}

impl InteriorSide {
    /// Vertical side between `(i, j)` and `(i, j+1)`; midpoint `(i - 1/2, j)`.
    fn between_columns(i: usize, j: usize) -> Self {
        InteriorSide {
            eps: ratio(2 * i as i64 - 1, 2),
            delta: ratio(j as i64, 1),
            orientation: Orientation::Vertical,
        }
    }

    /// Horizontal side between `(i, j)` and `(i+1, j)`; midpoint `(i, j - 1/2)`.
    fn between_rows(i: usize, j: usize) -> Self {
        InteriorSide {
            eps: ratio(i as i64, 1),
            delta: ratio(2 * j as i64 - 1, 2),
            orientation: Orientation::Horizontal,
        }
    }

    /// The integer `k = delta - eps + 1/2`, so that the side's parameter is `a_k`.
    pub fn param_index(&self) -> i64 {
        let k = &self.delta - &self.eps + ratio(1, 2);
        debug_assert!(k.is_integer());
        k.to_integer().try_into().expect("index fits in i64")
    }
}
