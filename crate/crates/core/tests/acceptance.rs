//! Acceptance criteria, each with a runtime limit. Prints one line per
//! criterion and exits nonzero if any fails.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::Rng;

use mpschur::multiparam::{
    characters, combinatorial_eval, eval_point_of_diagram, factorized_eval, frobenius_schur, giambelli,
    hook_series_check, interpolate, p_sharp, reconstruct, s_mp, s_mp_with_order, sergeev_pragacz_eval,
    transition_c, transition_expand, value_at_self, BivariatePoly, RibbonFactors,
};
use mpschur::rational::{rat, ratio};
use mpschur::sample;
use mpschur::tableaux::{dim_skew, dim_skew_bruteforce, dim_straight, falling_factorial};
use mpschur::{Error, EvalPoint, ParamSequence, Partition, Rational, SchurExpansion, SkewShape, SymFunc};

type Check = std::result::Result<(), String>;

/// Name, runtime limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Check);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn presets() -> Vec<ParamSequence> {
    vec![ParamSequence::zero(), ParamSequence::special(), sample::fixed_custom(16)]
}

fn to_rational(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn linear(c_u: i64, c_v: i64, c: Rational) -> BivariatePoly {
    let mut f = BivariatePoly::zero();
    f.add_term(1, 0, rat(c_u));
    f.add_term(0, 1, rat(c_v));
    f.add_term(0, 0, c);
    f
}

fn c1_worked_example() -> Check {
    let shape: SkewShape = "4,2,2/1,1".parse().unwrap();
    let factors = RibbonFactors::of_shape(&shape).map_err(|e| e.to_string())?;
    let symbolic = factors.symbolic();
    ensure(symbolic == "(u+v)(u-a[-1])(u-a[2])(u-a[3])(v+a[0])(v+a[1])", || format!("symbolic form {symbolic}"))?;
    let mut rng = sample::rng(11);
    for _ in 0..3 {
        let values: Vec<Rational> = (0..5).map(|_| sample::small_rational(&mut rng)).collect();
        let a = ParamSequence::custom((-1..=3).zip(values)).unwrap();
        let g = |i: i64| a.get(i).unwrap();
        let expected = [
            linear(1, 1, Rational::zero()),
            linear(1, 0, -g(-1)),
            linear(1, 0, -g(2)),
            linear(1, 0, -g(3)),
            linear(0, 1, g(0)),
            linear(0, 1, g(1)),
        ]
        .iter()
        .fold(BivariatePoly::one(), |acc, f| acc.mul(f));
        let got = factors.expand(&a).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("window {a}: {got} vs {expected}"))?;
        let u = sample::small_rational(&mut rng);
        let v = sample::small_rational(&mut rng);
        ensure(factors.eval(&a, &u, &v).unwrap() == expected.eval(&u, &v), || format!("value mismatch for {a}"))?;
    }
    let a: ParamSequence = "custom:-1=-1,0=0,1=1,2=2,3=3".parse().unwrap();
    let text = factors.substituted(&a).map_err(|e| e.to_string())?;
    ensure(text == "(u+v)(u+1)(u-2)(u-3)(v+0)(v+1)", || format!("substituted form {text}"))
}

fn c2_dimension_ratio() -> Check {
    let shapes = Partition::all_up_to(8);
    let fs: HashMap<Partition, SymFunc> = shapes.iter().map(|mu| (mu.clone(), frobenius_schur(mu))).collect();
    for nu in &shapes {
        let dim_nu = to_rational(dim_straight(nu));
        let n = nu.size() as i64;
        let mut pt = None;
        for mu in nu.subdiagrams() {
            let skew = dim_skew(&mu, nu);
            if skew != dim_skew_bruteforce(&mu, nu) {
                return Err(format!("dim({mu},{nu}) disagrees with the brute-force count"));
            }
            let pt = pt.get_or_insert_with(|| eval_point_of_diagram(nu, &ParamSequence::special()).unwrap());
            let lhs = to_rational(skew) / &dim_nu;
            let rhs = fs[&mu].eval_super(pt) / Rational::from_integer(falling_factorial(n, mu.size()));
            ensure(lhs == rhs, || format!("mu = ({mu}), nu = ({nu}): {lhs} vs {rhs}"))?;
        }
    }
    Ok(())
}

fn c3_determinant_expansion() -> Check {
    let (s, z) = (ParamSequence::special(), ParamSequence::zero());
    for mu in Partition::all_up_to(5) {
        let det = SchurExpansion::from_terms(transition_expand(&mu, &s, &z).map_err(|e| e.to_string())?);
        let direct = s_mp(&mu, &s).unwrap().to_schur().unwrap();
        ensure(det == direct, || format!("mu = ({mu}): {det} vs {direct}"))?;
    }
    ensure(transition_c(1, 0, &s, &z).unwrap() == ratio(-1, 2), || "c_10".into())?;
    ensure(transition_c(2, 0, &s, &z).unwrap() == ratio(3, 4), || "c_20".into())
}

fn hook_product(mu: &Partition) -> Rational {
    let conj = mu.conjugate();
    mu.cells().map(|(i, j)| rat((mu.part(i - 1) - j + conj.part(j - 1) - i + 1) as i64)).product()
}

fn c4_vanishing_and_value() -> Check {
    let shapes = Partition::all_up_to(6);
    for a in [ParamSequence::special(), sample::fixed_custom(16)] {
        let points: Vec<EvalPoint> = shapes.iter().map(|l| eval_point_of_diagram(l, &a).unwrap()).collect();
        for mu in &shapes {
            let f = s_mp(mu, &a).unwrap();
            for (lambda, pt) in shapes.iter().zip(&points) {
                if !mu.is_contained_in(lambda) {
                    ensure(f.eval_super(pt).is_zero(), || format!("({mu}) at ({lambda}), {a}"))?;
                } else if mu == lambda {
                    let v = f.eval_super(pt);
                    ensure(v == value_at_self(mu, &a).unwrap(), || format!("value at ({mu}), {a}"))?;
                    if a == ParamSequence::special() {
                        ensure(v == hook_product(mu), || format!("hook product at ({mu})"))?;
                    }
                }
            }
        }
    }
    ensure(value_at_self(&p("2,1"), &ParamSequence::special()).unwrap() == rat(3), || "(2,1) -> 3".into())
}

fn c5_interpolation() -> Check {
    let a = ParamSequence::special();
    let mut rng = sample::rng(5);
    for k in 0..25 {
        let f = sample::symfunc(&mut rng, 5);
        let c = interpolate(&f, &a, 5).map_err(|e| e.to_string())?;
        ensure(reconstruct(&c, &a).unwrap() == f, || format!("input {k} not reconstructed"))?;
    }
    let degenerate = |a: ParamSequence| matches!(interpolate(&SymFunc::h(2), &a, 2), Err(Error::InterpolationDegenerate(_)));
    ensure(degenerate(ParamSequence::zero()), || "zero sequence accepted".into())?;
    ensure(degenerate("custom:-2=0,-1=1,0=2,1=1,2=5".parse().unwrap()), || "repeated value accepted".into())
}

fn c6_tableau_formula() -> Check {
    let coords = [rat(1), rat(-1), ratio(1, 2), ratio(-1, 2), rat(2), rat(3)];
    let mut points = Vec::new();
    for x in &coords {
        for y in &coords {
            points.push(EvalPoint::new(vec![x.clone()], vec![y.clone()]));
        }
    }
    let mut rng = sample::rng(6);
    let mut pick = |n: usize| (0..n).map(|_| coords[rng.gen_range(0..coords.len())].clone()).collect::<Vec<_>>();
    for n in [2, 3] {
        for _ in 0..40 {
            points.push(EvalPoint::new(pick(n), pick(n)));
        }
    }
    for a in presets() {
        for mu in Partition::all_up_to(5) {
            let f = s_mp(&mu, &a).unwrap();
            for pt in &points {
                let comb = combinatorial_eval(&mu, &a, pt).map_err(|e| e.to_string())?;
                ensure(comb == f.eval_super(pt), || format!("({mu}), {a}, {pt:?}"))?;
            }
        }
    }
    Ok(())
}

fn c7_antisymmetrization() -> Check {
    let mut rng = sample::rng(7);
    for a in presets() {
        for n in 1..=3usize {
            let points: Vec<EvalPoint> = (0..20).map(|_| sample::distinct_point(&mut rng, n)).collect();
            for mu in Partition::all_up_to(5).into_iter().filter(|m| m.depth() <= n) {
                let f = s_mp(&mu, &a).unwrap();
                for pt in &points {
                    let expected = f.eval_super(pt);
                    let sp = sergeev_pragacz_eval(&mu, &a, pt).map_err(|e| e.to_string())?;
                    ensure(sp == expected, || format!("antisymmetrization ({mu}), {a}, {pt:?}"))?;
                    if mu.depth() == n {
                        let fact = factorized_eval(&mu, &a, pt).map_err(|e| e.to_string())?;
                        ensure(fact == expected, || format!("factorized ({mu}), {a}, {pt:?}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn c8_hook_series() -> Check {
    for a in presets() {
        let r = hook_series_check(8, &a).map_err(|e| e.to_string())?;
        ensure(r.equal(), || format!("{a}: mismatches at {:?}", r.mismatches))?;
    }
    Ok(())
}

fn c9_characters_and_duality() -> Check {
    let rhos: Vec<Partition> = Partition::all_up_to(4).into_iter().filter(|r| !r.is_empty()).collect();
    let targets = Partition::all_up_to(7);
    for rho in &rhos {
        let sharp = p_sharp(rho);
        let top = sharp.to_schur().unwrap().top_component();
        ensure(top == SymFunc::p_product(rho).to_schur().unwrap(), || format!("top term of p#({rho})"))?;
        for nu in targets.iter().filter(|nu| nu.size() >= rho.size()) {
            let r = characters::character_ratio_check_with(rho, &sharp, nu).map_err(|e| e.to_string())?;
            ensure(r.equal(), || format!("rho = ({rho}), nu = ({nu}): {} vs {}", r.lhs, r.rhs))?;
        }
    }
    for a in presets() {
        for mu in Partition::all_up_to(6) {
            let f = s_mp(&mu, &a).unwrap();
            ensure(f.omega().unwrap() == s_mp(&mu.conjugate(), &a.dual()).unwrap(), || format!("omega ({mu}), {a}"))?;
            ensure(giambelli(&mu, &a).unwrap() == f, || format!("Giambelli ({mu}), {a}"))?;
        }
    }
    Ok(())
}

fn c10_schur_limit_and_order() -> Check {
    let custom = sample::fixed_custom(16);
    for mu in Partition::all_up_to(6) {
        let zero = s_mp(&mu, &ParamSequence::zero()).unwrap();
        ensure(zero.to_schur().unwrap() == SchurExpansion::single(mu.clone()), || format!("zero sequence ({mu})"))?;
        for a in [ParamSequence::special(), custom.clone()] {
            let base = s_mp(&mu, &a).unwrap();
            for extra in 1..=2 {
                ensure(s_mp_with_order(&mu, &a, mu.len() + extra).unwrap() == base, || format!("order ({mu}), {a}"))?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("ribbon worked example", 1, c1_worked_example),
        ("dimension ratio, |nu| <= 8", 60, c2_dimension_ratio),
        ("Frobenius-Schur determinant expansion, |mu| <= 5", 30, c3_determinant_expansion),
        ("vanishing and value at self, size <= 6", 60, c4_vanishing_and_value),
        ("interpolation round trip", 30, c5_interpolation),
        ("tableau formula, |mu| <= 5", 120, c6_tableau_formula),
        ("antisymmetrization and factorization, n <= 3", 60, c7_antisymmetrization),
        ("hook generating series to order 8", 30, c8_hook_series),
        ("characters, duality, Giambelli", 60, c9_characters_and_duality),
        ("zero sequence and determinant order, |mu| <= 6", 10, c10_schur_limit_and_order),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*limit);
        let status = if outcome.is_ok() && within { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {:>2}: {status}  {name}  ({:.2}s, limit {limit}s)", k + 1, elapsed.as_secs_f64());
        if let Err(msg) = &outcome {
            line.push_str(&format!("  [{msg}]"));
        } else if !within {
            line.push_str("  [over time limit]");
        }
        println!("{line}");
        if status == "FAIL" {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
