use num_traits::Zero;
use proptest::prelude::*;

use mpschur::multiparam::{dependence_window, interpolate, reconstruct, s_mp, s_mp_with_order};
use mpschur::rational::ratio;
use mpschur::{EvalPoint, ParamSequence, Partition, Rational, SchurExpansion, SymFunc};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(Partition::from_unsorted)
}

fn partition_of_size_at_most(n: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all_up_to(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

const HALF: i64 = 9;

fn custom() -> impl Strategy<Value = ParamSequence> {
    prop::collection::vec(rational(), (2 * HALF + 1) as usize)
        .prop_map(|v| ParamSequence::custom((-HALF..=HALF).zip(v)).unwrap())
}

fn distinct_custom() -> impl Strategy<Value = ParamSequence> {
    prop::collection::btree_set(rational(), (2 * HALF + 1) as usize)
        .prop_flat_map(|set| Just(set.into_iter().collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| ParamSequence::custom((-HALF..=HALF).zip(v)).unwrap())
}

fn any_sequence() -> impl Strategy<Value = ParamSequence> {
    prop_oneof![Just(ParamSequence::zero()), Just(ParamSequence::special()), custom()]
}

fn schur_expansion(max_degree: usize) -> impl Strategy<Value = SchurExpansion> {
    prop::collection::vec((partition_of_size_at_most(max_degree), rational()), 0..5)
        .prop_map(SchurExpansion::from_terms)
}

fn symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    schur_expansion(max_degree).prop_map(|e| e.to_symfunc().unwrap())
}

fn point(max_pairs: usize) -> impl Strategy<Value = EvalPoint> {
    (1..=max_pairs).prop_flat_map(|n| {
        (prop::collection::vec(rational(), n), prop::collection::vec(rational(), n))
            .prop_map(|(x, y)| EvalPoint::new(x, y))
    })
}

/// Fillings of `mu` from `1 < .. < n < 1' < .. < n'`: unprimed letters weakly
/// increase along rows and strictly down columns, primed letters the reverse.
fn super_tableau_sum(mu: &Partition, pt: &EvalPoint) -> Rational {
    let n = pt.pairs();
    let (x, y) = pt.padded(n);
    let cells: Vec<(usize, usize)> = mu.cells().collect();
    let mut grid = vec![vec![usize::MAX; mu.part(0)]; mu.len()];
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        weight: &dyn Fn(usize) -> Rational,
    ) -> Rational {
        if k == cells.len() {
            return grid.iter().flatten().filter(|&&v| v != usize::MAX).map(|&v| weight(v)).product();
        }
        let (i, j) = (cells[k].0 - 1, cells[k].1 - 1);
        let mut total = Rational::zero();
        for letter in 0..2 * n {
            let primed = letter >= n;
            if j > 0 {
                let left = grid[i][j - 1];
                if left > letter || (primed && left == letter) {
                    continue;
                }
            }
            if i > 0 {
                let up = grid[i - 1][j];
                if up > letter || (!primed && up == letter) {
                    continue;
                }
            }
            grid[i][j] = letter;
            total += fill(k + 1, cells, grid, n, weight);
            grid[i][j] = usize::MAX;
        }
        total
    }
    let weight = |v: usize| if v < n { x[v].clone() } else { y[v - n].clone() };
    fill(0, &cells, &mut grid, n, &weight)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn basis_conversion_is_bijective(e in schur_expansion(6)) {
        let f = e.to_symfunc().unwrap();
        prop_assert_eq!(f.to_schur().unwrap(), e);
    }

    #[test]
    fn omega_is_an_involution(f in symfunc(5)) {
        prop_assert_eq!(f.omega().unwrap().omega().unwrap(), f);
    }

    #[test]
    fn omega_is_multiplicative(f in symfunc(3), g in symfunc(3)) {
        let lhs = (&f * &g).omega().unwrap();
        prop_assert_eq!(lhs, &f.omega().unwrap() * &g.omega().unwrap());
    }

    #[test]
    fn omega_swaps_h_and_e(k in 0usize..7) {
        prop_assert_eq!(SymFunc::h(k).omega().unwrap(), SymFunc::e(k));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in symfunc(4), g in symfunc(4), pt in point(3)) {
        prop_assert_eq!((&f * &g).eval_super(&pt), f.eval_super(&pt) * g.eval_super(&pt));
        prop_assert_eq!((&f + &g).eval_super(&pt), f.eval_super(&pt) + g.eval_super(&pt));
    }

    #[test]
    fn cancellation(f in symfunc(5), pt in point(2), t in rational(), s in rational()) {
        let with = |t: &Rational| {
            let mut x = pt.x.clone();
            let mut y = pt.y.clone();
            x.push(t.clone());
            y.push(-t.clone());
            f.eval_super(&EvalPoint::new(x, y))
        };
        prop_assert_eq!(with(&t), with(&s));
    }

    #[test]
    fn separate_symmetry(f in symfunc(5), pt in point(3)) {
        let mut x = pt.x.clone();
        x.rotate_left(1);
        let mut y = pt.y.clone();
        y.reverse();
        prop_assert_eq!(f.eval_super(&EvalPoint::new(x, y)), f.eval_super(&pt));
    }

    #[test]
    fn schur_evaluation_matches_super_tableaux(mu in partition_of_size_at_most(4), pt in point(2)) {
        let s = SchurExpansion::single(mu.clone()).to_symfunc().unwrap();
        prop_assert_eq!(s.eval_super(&pt), super_tableau_sum(&mu, &pt));
    }

    #[test]
    fn zero_sequence_gives_schur_functions(mu in partition(4, 4)) {
        prop_assert_eq!(s_mp(&mu, &ParamSequence::zero()).unwrap().to_schur().unwrap(), SchurExpansion::single(mu));
    }

    #[test]
    fn top_term_is_the_schur_function(mu in partition(3, 4), a in any_sequence()) {
        let top = s_mp(&mu, &a).unwrap().to_schur().unwrap().top_component();
        prop_assert_eq!(top, SchurExpansion::single(mu));
    }

    #[test]
    fn determinant_order_is_irrelevant(mu in partition(3, 3), a in custom(), extra in 1usize..3) {
        let base = s_mp(&mu, &a).unwrap();
        prop_assert_eq!(s_mp_with_order(&mu, &a, mu.len() + extra).unwrap(), base);
    }

    #[test]
    fn duality(mu in partition(3, 3), a in custom()) {
        let lhs = s_mp(&mu, &a).unwrap().omega().unwrap();
        prop_assert_eq!(lhs, s_mp(&mu.conjugate(), &a.dual()).unwrap());
    }

    #[test]
    fn parameters_outside_the_window_are_ignored(
        mu in partition(3, 4).prop_filter("nonempty", |m| !m.is_empty()),
        a in custom(),
        index in -HALF..=HALF,
        value in rational(),
    ) {
        let (lo, hi) = dependence_window(&mu);
        prop_assume!(index < lo || index > hi);
        let b = a.with_value(index, value).unwrap();
        prop_assert_eq!(s_mp(&mu, &b).unwrap(), s_mp(&mu, &a).unwrap());
    }

    #[test]
    fn interpolation_round_trip(f in symfunc(4), a in distinct_custom()) {
        let c = interpolate(&f, &a, 4).unwrap();
        prop_assert_eq!(reconstruct(&c, &a).unwrap(), f);
    }
}
