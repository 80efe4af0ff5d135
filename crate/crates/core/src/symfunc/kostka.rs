//! Kostka numbers by horizontal-strip recursion, with a shared cache.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;

type Cache = RwLock<HashMap<(Partition, Partition), BigUint>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
///
/// Entries equal to the largest letter form a horizontal strip; stripping it
/// recursively enumerates every tableau exactly once. Concurrent callers may
/// recompute an entry, but always store the same value.
pub fn kostka(shape: &Partition, content: &Partition) -> BigUint {
    if shape.size() != content.size() {
        return BigUint::zero();
    }
    if content.is_empty() {
        return BigUint::one();
    }
    // dominance is necessary for a nonzero count
    let (mut s, mut c) = (0, 0);
    for i in 0..content.len().max(shape.len()) {
        s += shape.part(i);
        c += content.part(i);
        if s < c {
            return BigUint::zero();
        }
    }
    let key = (shape.clone(), content.clone());
    if let Some(v) = cache().read().expect("kostka cache poisoned").get(&key) {
        return v.clone();
    }
    let (&last, rest) = content.parts().split_last().expect("nonempty content");
    let rest = Partition::new(rest.to_vec()).expect("prefix of a partition");
    let mut total = BigUint::zero();
    for inner in horizontal_strip_removals(shape, last) {
        total += kostka(&inner, &rest);
    }
    cache().write().expect("kostka cache poisoned").insert(key, total.clone());
    total
}

/// All `nu` with `shape / nu` a horizontal strip of `size` cells.
fn horizontal_strip_removals(shape: &Partition, size: usize) -> Vec<Partition> {
    fn rec(i: usize, left: usize, shape: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == shape.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(cur.clone()));
            }
            return;
        }
        let hi = shape.part(i);
        let lo = shape.part(i + 1);
        for keep in (lo..=hi).rev() {
            let removed = hi - keep;
            if removed > left {
                break;
            }
            cur.push(keep);
            rec(i + 1, left - removed, shape, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, size, shape, &mut Vec::new(), &mut out);
    out
}
