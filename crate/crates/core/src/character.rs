//! Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `chi^nu` at the conjugacy class of cycle type `sigma`.
///
/// Rim hooks are removed through beta-sets: removing a `k`-hook moves a bead
/// from `b` to `b - k`, with sign given by the beads jumped over.
pub fn mn_character(nu: &Partition, sigma: &Partition) -> Result<BigInt> {
    if nu.size() != sigma.size() {
        return Err(Error::SizeMismatch(format!("|{nu}| = {} but |{sigma}| = {}", nu.size(), sigma.size())));
    }
    let len = nu.len();
    let beta: BTreeSet<usize> = (0..len).map(|i| nu.part(i) + len - 1 - i).collect();
    let mut memo = HashMap::new();
    Ok(chi(&beta, sigma.parts(), &mut memo))
}

fn chi(beta: &BTreeSet<usize>, cycles: &[usize], memo: &mut HashMap<(Vec<usize>, usize), BigInt>) -> BigInt {
    let Some((&k, rest)) = cycles.split_first() else {
        return BigInt::from(1);
    };
    let key = (beta.iter().copied().collect::<Vec<_>>(), cycles.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for &b in beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.range(b - k + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - k);
        let v = chi(&next, rest, memo);
        if height.is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}
