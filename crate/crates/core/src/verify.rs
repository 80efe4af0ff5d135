//! Verification suites: each identity checked by two independent routes over
//! all small cases. Cases run in parallel; reports keep a fixed order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::multiparam::*;
use crate::params::ParamSequence;
use crate::partition::Partition;
use crate::rational::Rational;
use crate::sample;
use crate::symfunc::{SchurExpansion, SymFunc};
use crate::tableaux::{dim_skew, dim_skew_bruteforce};

/// One identity family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// character ratio via `p^#_rho`
    T1,
    /// dimension ratio via `FS_mu`
    T2,
    /// duality `omega(s_{mu;a}) = s_{mu';hat a}`
    T4,
    /// Giambelli form equals the determinant form
    T5,
    /// hook generating series
    T6,
    /// transition expansion between two sequences
    T7,
    /// dependence on finitely many parameters
    T8,
    /// Schur expansion of `FS_mu` by one-row coefficients
    T9,
    /// vanishing at nodes outside `mu`
    T10,
    /// value at the own node
    T11,
    /// interpolation round trip
    T12,
    /// characterization by vanishing
    T13,
    /// tableau formula
    T14,
    /// antisymmetrization formula
    T15,
    /// factorized formula
    T16,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::T1,
        Suite::T2,
        Suite::T4,
        Suite::T5,
        Suite::T6,
        Suite::T7,
        Suite::T8,
        Suite::T9,
        Suite::T10,
        Suite::T11,
        Suite::T12,
        Suite::T13,
        Suite::T14,
        Suite::T15,
        Suite::T16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::T1 => "t1",
            Suite::T2 => "t2",
            Suite::T4 => "t4",
            Suite::T5 => "t5",
            Suite::T6 => "t6",
            Suite::T7 => "t7",
            Suite::T8 => "t8",
            Suite::T9 => "t9",
            Suite::T10 => "t10",
            Suite::T11 => "t11",
            Suite::T12 => "t12",
            Suite::T13 => "t13",
            Suite::T14 => "t14",
            Suite::T15 => "t15",
            Suite::T16 => "t16",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::T1 => "character ratio = p#(x(nu);y(nu)) / (n)_m",
            Suite::T2 => "dim(mu,nu)/dim nu = FS_mu(x(nu);y(nu)) / (n)_m",
            Suite::T4 => "omega(s_{mu;a}) = s_{mu';hat a}",
            Suite::T5 => "Giambelli = Jacobi-Trudi",
            Suite::T6 => "hook series = H(u)E(v)",
            Suite::T7 => "transition expansion reconstructs s_{mu;a}",
            Suite::T8 => "s_{mu;a} ignores parameters outside its window",
            Suite::T9 => "FS_mu Schur expansion by determinants",
            Suite::T10 => "s_{mu;a} vanishes at x(lambda) for mu not in lambda",
            Suite::T11 => "s_{mu;a}(x(mu);y(mu)) = product formula",
            Suite::T12 => "interpolation reconstructs f",
            Suite::T13 => "characterization by vanishing",
            Suite::T14 => "tableau formula = determinant",
            Suite::T15 => "antisymmetrization = determinant",
            Suite::T16 => "factorized form = determinant",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `t2`, `t10..t16`, `all`, or a comma-separated list of those.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item == "all" {
            out.extend(Suite::ALL);
        } else if let Some((lo, hi)) = item.split_once("..") {
            let (lo, hi): (Suite, Suite) = (lo.parse()?, hi.parse()?);
            out.extend(Suite::ALL.into_iter().filter(|t| *t >= lo && *t <= hi));
        } else {
            out.push(item.parse()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Result of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Bounds for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_size: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_size: 5, seed: 2024 }
    }
}

pub fn run_suites(suites: &[Suite], config: VerifyConfig) -> Vec<SuiteReport> {
    suites.iter().map(|&s| run_suite(s, config)).collect()
}

pub fn run_suite(suite: Suite, config: VerifyConfig) -> SuiteReport {
    let n = config.max_size;
    let outcomes: Vec<Outcome> = match suite {
        Suite::T1 => t1(n),
        Suite::T2 => t2(n),
        Suite::T4 => per_shape(n, &all_sequences(n), |mu, a| {
            let lhs = s_mp(mu, a)?.omega()?;
            Ok(lhs == s_mp(&mu.conjugate(), &a.dual())?)
        }),
        Suite::T5 => per_shape(n, &all_sequences(n), |mu, a| Ok(giambelli(mu, a)? == s_mp(mu, a)?)),
        Suite::T6 => all_sequences(n)
            .par_iter()
            .map(|a| {
                let r = hook_series_check(n, a)?;
                Ok((r.equal(), format!("order {n}, {a}: mismatches {:?}", r.mismatches)))
            })
            .collect(),
        Suite::T7 => t7(n),
        Suite::T8 => t8(n, config.seed),
        Suite::T9 => t9(n),
        Suite::T10 => t10(n),
        Suite::T11 => per_shape(n, &distinct_sequences(n), |mu, a| {
            let v = value_at_self(mu, a)?;
            Ok(eval_at_diagram(mu, a, mu)? == v && !v.is_zero())
        }),
        Suite::T12 => t12(n, config.seed),
        Suite::T13 => per_shape(n.min(4), &distinct_sequences(n), |mu, a| {
            let expected = s_mp(mu, a)?.to_schur()?;
            Ok(characterize_by_values(mu, a)?.as_ref() == Some(&expected)
                && characterize_by_top_term(mu, a)?.as_ref() == Some(&expected))
        }),
        Suite::T14 => t14(n),
        Suite::T15 => antisym_suite(n, config.seed, false),
        Suite::T16 => antisym_suite(n, config.seed, true),
    };
    let cases = outcomes.len();
    let failures = outcomes
        .into_iter()
        .filter_map(|o| match o {
            Ok((true, _)) => None,
            Ok((false, detail)) => Some(detail),
            Err(e) => Some(format!("error: {e}")),
        })
        .collect();
    SuiteReport { suite, cases, failures }
}

type Outcome = Result<(bool, String)>;

/// Zero, special and a fixed distinct-valued custom window wide enough for size `n`.
pub fn all_sequences(n: usize) -> Vec<ParamSequence> {
    vec![ParamSequence::zero(), ParamSequence::special(), sample::fixed_custom(2 * n as i64 + 4)]
}

fn distinct_sequences(n: usize) -> Vec<ParamSequence> {
    vec![ParamSequence::special(), sample::fixed_custom(2 * n as i64 + 4)]
}

fn per_shape<F>(n: usize, seqs: &[ParamSequence], check: F) -> Vec<Outcome>
where
    F: Fn(&Partition, &ParamSequence) -> Result<bool> + Sync,
{
    let cases: Vec<(Partition, &ParamSequence)> =
        Partition::all_up_to(n).into_iter().flat_map(|mu| seqs.iter().map(move |a| (mu.clone(), a))).collect();
    cases
        .par_iter()
        .map(|(mu, a)| check(mu, a).map(|ok| (ok, format!("mu = ({mu}), a = {a}"))))
        .collect()
}

fn fs_table(n: usize) -> HashMap<Partition, SymFunc> {
    Partition::all_up_to(n).into_par_iter().map(|mu| {
        let fs = frobenius_schur(&mu);
        (mu, fs)
    }).collect()
}

fn t1(n: usize) -> Vec<Outcome> {
    let rhos: Vec<Partition> = Partition::all_up_to(n.min(4)).into_iter().filter(|r| !r.is_empty()).collect();
    let sharp: HashMap<Partition, SymFunc> = rhos.par_iter().map(|r| (r.clone(), p_sharp(r))).collect();
    let mut out: Vec<Outcome> = rhos
        .par_iter()
        .map(|rho| {
            let top = sharp[rho].to_schur()?.top_component();
            Ok((top == SymFunc::p_product(rho).to_schur()?, format!("top term of p#({rho})")))
        })
        .collect();
    let pairs: Vec<(Partition, Partition)> = rhos
        .iter()
        .flat_map(|r| Partition::all_up_to(n).into_iter().filter(|nu| nu.size() >= r.size()).map(move |nu| (r.clone(), nu)))
        .collect();
    out.extend(pairs.par_iter().map(|(rho, nu)| {
        let r = characters::character_ratio_check_with(rho, &sharp[rho], nu)?;
        Ok((r.equal(), format!("rho = ({rho}), nu = ({nu}): {} vs {}", r.lhs, r.rhs)))
    }).collect::<Vec<_>>());
    out
}

fn t2(n: usize) -> Vec<Outcome> {
    let fs = fs_table(n);
    let pairs: Vec<(Partition, Partition)> = Partition::all_up_to(n)
        .into_iter()
        .flat_map(|nu| nu.subdiagrams().into_iter().map(move |mu| (mu, nu.clone())))
        .collect();
    pairs
        .par_iter()
        .map(|(mu, nu)| {
            let r = characters::dim_ratio_check_with(mu, &fs[mu], nu)?;
            let same = dim_skew(mu, nu) == dim_skew_bruteforce(mu, nu);
            Ok((r.equal() && same, format!("mu = ({mu}), nu = ({nu}): {} vs {}", r.lhs, r.rhs)))
        })
        .collect()
}

fn t7(n: usize) -> Vec<Outcome> {
    let custom_a = sample::fixed_custom(2 * n as i64 + 4);
    let custom_b = sample::fixed_custom(2 * n as i64 + 4).shift(3);
    let pairs = [
        (ParamSequence::special(), ParamSequence::zero()),
        (ParamSequence::zero(), ParamSequence::special()),
        (custom_a, custom_b),
    ];
    let cases: Vec<(Partition, usize)> =
        Partition::all_up_to(n).into_iter().flat_map(|mu| (0..pairs.len()).map(move |k| (mu.clone(), k))).collect();
    cases
        .par_iter()
        .map(|(mu, k)| {
            let (a, b) = &pairs[*k];
            let expansion = transition_expand(mu, a, b)?;
            let mut sum = SymFunc::zero();
            let mut support_ok = true;
            for (nu, c) in &expansion {
                support_ok &= nu.is_contained_in(mu) && nu.depth() == mu.depth();
                sum = sum + s_mp(nu, b)?.scale(c);
            }
            Ok((support_ok && sum == s_mp(mu, a)?, format!("mu = ({mu}), a = {a}, b = {b}")))
        })
        .collect()
}

fn t8(n: usize, seed: u64) -> Vec<Outcome> {
    let half = 2 * n as i64 + 4;
    let mut rng = sample::rng(seed);
    let a = sample::distinct_custom(&mut rng, half);
    let shapes: Vec<Partition> = Partition::all_up_to(n).into_iter().filter(|m| !m.is_empty()).collect();
    shapes
        .par_iter()
        .map(|mu| {
            let base = s_mp(mu, &a)?;
            let (lo, hi) = dependence_window(mu);
            for i in (-half..=half).filter(|&i| i < lo || i > hi) {
                let perturbed = a.with_value(i, a.get(i)? + Rational::from_integer(17.into()))?;
                if s_mp(mu, &perturbed)? != base {
                    return Ok((false, format!("mu = ({mu}) depends on a_{i}")));
                }
            }
            Ok((true, format!("mu = ({mu})")))
        })
        .collect()
}

fn t9(n: usize) -> Vec<Outcome> {
    let (s, z) = (ParamSequence::special(), ParamSequence::zero());
    let mut out: Vec<Outcome> = Partition::all_up_to(n)
        .par_iter()
        .map(|mu| {
            let e = SchurExpansion::from_terms(transition_expand(mu, &s, &z)?);
            Ok((e == frobenius_schur(mu).to_schur()?, format!("mu = ({mu})")))
        })
        .collect();
    let c10 = transition_c(1, 0, &s, &z).map(|c| (c == crate::rational::ratio(-1, 2), "c_10 = -1/2".to_string()));
    let c20 = transition_c(2, 0, &s, &z).map(|c| (c == crate::rational::ratio(3, 4), "c_20 = 3/4".to_string()));
    out.push(c10);
    out.push(c20);
    out
}

fn t10(n: usize) -> Vec<Outcome> {
    let seqs = distinct_sequences(n);
    let shapes = Partition::all_up_to(n);
    let cases: Vec<(usize, Partition)> =
        (0..seqs.len()).flat_map(|k| shapes.iter().map(move |m| (k, m.clone()))).collect();
    cases
        .par_iter()
        .map(|(k, mu)| {
            let a = &seqs[*k];
            let f = s_mp(mu, a)?;
            for lambda in shapes.iter().filter(|l| !mu.is_contained_in(l)) {
                let pt = eval_point_of_diagram(lambda, a)?;
                if !f.eval_super(&pt).is_zero() {
                    return Ok((false, format!("mu = ({mu}) at lambda = ({lambda}), a = {a}")));
                }
            }
            Ok((true, format!("mu = ({mu}), a = {a}")))
        })
        .collect()
}

fn t12(n: usize, seed: u64) -> Vec<Outcome> {
    let mut rng = sample::rng(seed);
    let inputs: Vec<SymFunc> = (0..25).map(|_| sample::symfunc(&mut rng, n)).collect();
    let mut out: Vec<Outcome> = inputs
        .par_iter()
        .map(|f| {
            let c = interpolate(f, &ParamSequence::special(), n)?;
            Ok((reconstruct(&c, &ParamSequence::special())? == *f, format!("degree {} input", f.degree())))
        })
        .collect();
    let degenerate = interpolate(&SymFunc::h(1), &ParamSequence::zero(), n.max(1));
    out.push(Ok((
        matches!(degenerate, Err(Error::InterpolationDegenerate(_))),
        "zero sequence is rejected as degenerate".to_string(),
    )));
    out
}

/// Coordinates used for the tableau formula points.
fn small_coordinates() -> Vec<Rational> {
    use crate::rational::{rat, ratio};
    vec![rat(1), rat(-1), ratio(1, 2), ratio(-1, 2), rat(2), rat(3)]
}

fn t14(n: usize) -> Vec<Outcome> {
    let coords = small_coordinates();
    let mut points = Vec::new();
    for pairs in 1..=3usize {
        // a deterministic spread of points from the coordinate set
        for shift in 0..coords.len() {
            let x: Vec<Rational> = (0..pairs).map(|i| coords[(shift + i) % coords.len()].clone()).collect();
            let y: Vec<Rational> = (0..pairs).map(|i| coords[(shift + 2 * i + 1) % coords.len()].clone()).collect();
            points.push(crate::symfunc::EvalPoint::new(x, y));
        }
    }
    let seqs = all_sequences(n);
    let shapes = Partition::all_up_to(n);
    let cases: Vec<(usize, Partition)> =
        (0..seqs.len()).flat_map(|k| shapes.iter().map(move |m| (k, m.clone()))).collect();
    cases
        .par_iter()
        .map(|(k, mu)| {
            let a = &seqs[*k];
            let f = s_mp(mu, a)?;
            for pt in &points {
                if combinatorial_eval(mu, a, pt)? != f.eval_super(pt) {
                    return Ok((false, format!("mu = ({mu}), a = {a}, point {pt:?}")));
                }
            }
            Ok((true, format!("mu = ({mu}), a = {a}")))
        })
        .collect()
}

fn antisym_suite(n: usize, seed: u64, factorized: bool) -> Vec<Outcome> {
    let seqs = all_sequences(n);
    let shapes: Vec<Partition> = Partition::all_up_to(n).into_iter().filter(|m| m.depth() <= 3).collect();
    let cases: Vec<(usize, Partition)> =
        (0..seqs.len()).flat_map(|k| shapes.iter().map(move |m| (k, m.clone()))).collect();
    cases
        .par_iter()
        .enumerate()
        .map(|(idx, (k, mu))| {
            let a = &seqs[*k];
            let f = s_mp(mu, a)?;
            let mut rng = sample::rng(seed ^ (idx as u64).wrapping_mul(0x9e37_79b9));
            let sizes: Vec<usize> = if factorized { vec![mu.depth()] } else { (mu.depth().max(1)..=3).collect() };
            for &pairs in &sizes {
                for _ in 0..20 {
                    let pt = sample::distinct_point(&mut rng, pairs);
                    let v = if factorized { factorized_eval(mu, a, &pt)? } else { sergeev_pragacz_eval(mu, a, &pt)? };
                    if v != f.eval_super(&pt) {
                        return Ok((false, format!("mu = ({mu}), a = {a}, point {pt:?}")));
                    }
                }
            }
            Ok((true, format!("mu = ({mu}), a = {a}")))
        })
        .collect()
}

/// Number of standard tableaux, for reports.
pub fn dim_pair(mu: &Partition, nu: &Partition) -> (BigUint, BigUint) {
    (dim_skew(mu, nu), crate::tableaux::dim_straight(nu))
}
