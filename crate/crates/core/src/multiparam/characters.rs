//! Character ratios and dimension ratios expressed through Frobenius-Schur functions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::character::mn_character;
use crate::error::{Error, Result};
use crate::multiparam::functions::frobenius_schur;
use crate::multiparam::interpolation::eval_point_of_diagram;
use crate::params::ParamSequence;
use crate::partition::Partition;
use crate::rational::Rational;
use crate::symfunc::SymFunc;
use crate::tableaux::{dim_skew, dim_straight, falling_factorial};

/// `p^#_rho = sum_{lambda |- |rho|} chi^lambda_rho FS_lambda`.
pub fn p_sharp(rho: &Partition) -> SymFunc {
    let mut out = SymFunc::zero();
    for lambda in Partition::all_of_size(rho.size()) {
        let chi = mn_character(&lambda, rho).expect("sizes agree");
        if !chi.is_zero() {
            out = out + frobenius_schur(&lambda).scale(&Rational::from_integer(chi));
        }
    }
    out
}

/// Both sides of an exact identity, as computed by two independent routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl RatioReport {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `dim(mu, nu) / dim nu` against `FS_mu(x(nu); y(nu)) / (n)_m`.
pub fn dim_ratio_check(mu: &Partition, nu: &Partition) -> Result<RatioReport> {
    dim_ratio_check_with(mu, &frobenius_schur(mu), nu)
}

/// As [`dim_ratio_check`] with `FS_mu` supplied by the caller.
pub fn dim_ratio_check_with(mu: &Partition, fs_mu: &SymFunc, nu: &Partition) -> Result<RatioReport> {
    let (n, m) = (nu.size(), mu.size());
    if n < m {
        return Err(Error::SizeMismatch(format!("|{nu}| < |{mu}|")));
    }
    let lhs = Rational::new(BigInt::from(dim_skew(mu, nu)), BigInt::from(dim_straight(nu)));
    let pt = eval_point_of_diagram(nu, &ParamSequence::special())?;
    let rhs = fs_mu.eval_super(&pt) / Rational::from_integer(falling_factorial(n as i64, m));
    Ok(RatioReport { lhs, rhs })
}

/// `chi^nu_{rho u 1^{n-m}} / dim nu` against `p^#_rho(x(nu); y(nu)) / (n)_m`.
pub fn character_ratio_check(rho: &Partition, nu: &Partition) -> Result<RatioReport> {
    character_ratio_check_with(rho, &p_sharp(rho), nu)
}

/// As [`character_ratio_check`] with `p^#_rho` supplied by the caller.
pub fn character_ratio_check_with(rho: &Partition, p_sharp_rho: &SymFunc, nu: &Partition) -> Result<RatioReport> {
    let (n, m) = (nu.size(), rho.size());
    if n < m {
        return Err(Error::SizeMismatch(format!("|{nu}| < |{rho}|")));
    }
    let class = rho.with_ones(n - m);
    let lhs = Rational::new(mn_character(nu, &class)?, BigInt::from(dim_straight(nu)));
    let pt = eval_point_of_diagram(nu, &ParamSequence::special())?;
    let rhs = p_sharp_rho.eval_super(&pt) / Rational::from_integer(falling_factorial(n as i64, m));
    Ok(RatioReport { lhs, rhs })
}
