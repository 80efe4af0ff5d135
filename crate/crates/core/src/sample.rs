//! Seeded random inputs for verification runs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::params::ParamSequence;
use crate::partition::Partition;
use crate::rational::{ratio, Rational};
use crate::symfunc::{EvalPoint, SchurExpansion, SymFunc};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Numerator in `-9..=9`, denominator in `1..=5`.
pub fn small_rational(rng: &mut SampleRng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// `count` pairwise distinct small rationals.
pub fn distinct_rationals(rng: &mut SampleRng, count: usize) -> Vec<Rational> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r = small_rational(rng);
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    out
}

/// A point with `n` pairs, distinct within each side.
pub fn distinct_point(rng: &mut SampleRng, n: usize) -> EvalPoint {
    EvalPoint::new(distinct_rationals(rng, n), distinct_rationals(rng, n))
}

/// A custom sequence on `-half..=half` with pairwise distinct values.
pub fn distinct_custom(rng: &mut SampleRng, half: i64) -> ParamSequence {
    let values = distinct_rationals(rng, (2 * half + 1) as usize);
    ParamSequence::custom((-half..=half).zip(values)).expect("nonempty window")
}

/// A deterministic custom sequence `a_i = i + 1/(i^2 + 3)` on `-half..=half`;
/// its values are pairwise distinct.
pub fn fixed_custom(half: i64) -> ParamSequence {
    ParamSequence::custom((-half..=half).map(|i| (i, Rational::from_integer(BigInt::from(i)) + ratio(1, i * i + 3))))
        .expect("nonempty window")
}

/// A sparse random combination of Schur functions of degree at most `max_degree`.
pub fn symfunc(rng: &mut SampleRng, max_degree: usize) -> SymFunc {
    let shapes = Partition::all_up_to(max_degree);
    let terms = rng.gen_range(1..=6);
    let mut e = SchurExpansion::zero();
    for _ in 0..terms {
        let mu = shapes.choose(rng).expect("nonempty").clone();
        e.add_term(mu, small_rational(rng));
    }
    e.to_symfunc().expect("degree below the cap")
}
