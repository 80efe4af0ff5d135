//! Doubly infinite parameter sequences `(a_i)_{i in Z}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, ratio, Rational};

/// How reads outside a custom window are handled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WindowPolicy {
    /// Out-of-window reads are errors.
    #[default]
    Strict,
    /// Out-of-window reads return zero, log a warning and raise the
    /// sequence's `window_exceeded` flag.
    Permissive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Zero,
    /// `a_i = i + shift - 1/2`
    Special { shift: i64 },
    /// Explicit values on `lo..=hi`; unlisted indices inside the window are zero.
    Custom { values: BTreeMap<i64, Rational>, lo: i64, hi: i64 },
}

#[derive(Clone, Debug)]
pub struct ParamSequence {
    kind: Kind,
    policy: WindowPolicy,
    exceeded: Arc<AtomicBool>,
}

impl PartialEq for ParamSequence {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for ParamSequence {}

impl ParamSequence {
    fn from_kind(kind: Kind) -> Self {
        ParamSequence { kind, policy: WindowPolicy::Strict, exceeded: Arc::new(AtomicBool::new(false)) }
    }

    /// `a_i = 0`.
    pub fn zero() -> Self {
        ParamSequence::from_kind(Kind::Zero)
    }

    /// `a_i = i - 1/2`.
    pub fn special() -> Self {
        ParamSequence::from_kind(Kind::Special { shift: 0 })
    }

    /// Values on the window `lo..=hi`, where `lo`/`hi` are the extreme listed indices.
    pub fn custom(values: impl IntoIterator<Item = (i64, Rational)>) -> Result<Self> {
        let values: BTreeMap<i64, Rational> = values.into_iter().collect();
        let (Some(&lo), Some(&hi)) = (values.keys().next(), values.keys().next_back()) else {
            return Err(Error::InvalidParams("custom sequence needs at least one value".into()));
        };
        Ok(ParamSequence::from_kind(Kind::Custom { values, lo, hi }))
    }

    /// Custom sequence with explicit window bounds.
    pub fn custom_window(lo: i64, hi: i64, values: impl IntoIterator<Item = (i64, Rational)>) -> Result<Self> {
        let values: BTreeMap<i64, Rational> = values.into_iter().collect();
        if lo > hi || values.keys().any(|&i| i < lo || i > hi) {
            return Err(Error::InvalidParams(format!("values outside window {lo}..={hi}")));
        }
        Ok(ParamSequence::from_kind(Kind::Custom { values, lo, hi }))
    }

    pub fn with_policy(mut self, policy: WindowPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn policy(&self) -> WindowPolicy {
        self.policy
    }

    pub fn is_zero_sequence(&self) -> bool {
        match &self.kind {
            Kind::Zero => true,
            Kind::Special { .. } => false,
            Kind::Custom { values, .. } => values.values().all(Zero::is_zero),
        }
    }

    /// The window `lo..=hi` of a custom sequence.
    pub fn window(&self) -> Option<(i64, i64)> {
        match &self.kind {
            Kind::Custom { lo, hi, .. } => Some((*lo, *hi)),
            _ => None,
        }
    }

    /// True once a permissive read fell outside the window.
    pub fn window_exceeded(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed)
    }

    /// `a_i`.
    pub fn get(&self, i: i64) -> Result<Rational> {
        match &self.kind {
            Kind::Zero => Ok(Rational::zero()),
            Kind::Special { shift } => Ok(ratio(2 * (i + shift) - 1, 2)),
            Kind::Custom { values, lo, hi } => {
                if i < *lo || i > *hi {
                    match self.policy {
                        WindowPolicy::Strict => Err(Error::WindowExceeded { index: i, lo: *lo, hi: *hi }),
                        WindowPolicy::Permissive => {
                            log::warn!("parameter index {i} outside window {lo}..={hi}, reading 0");
                            self.exceeded.store(true, Ordering::Relaxed);
                            Ok(Rational::zero())
                        }
                    }
                } else {
                    Ok(values.get(&i).cloned().unwrap_or_else(Rational::zero))
                }
            }
        }
    }

    /// `a_lo, ..., a_hi` (empty when `lo > hi`).
    pub fn range(&self, lo: i64, hi: i64) -> Result<Vec<Rational>> {
        (lo..=hi).map(|i| self.get(i)).collect()
    }

    /// `(tau^r a)_i = a_{i+r}`.
    pub fn shift(&self, r: i64) -> ParamSequence {
        let kind = match &self.kind {
            Kind::Zero => Kind::Zero,
            Kind::Special { shift } => Kind::Special { shift: shift + r },
            Kind::Custom { values, lo, hi } => Kind::Custom {
                values: values.iter().map(|(i, v)| (i - r, v.clone())).collect(),
                lo: lo - r,
                hi: hi - r,
            },
        };
        ParamSequence { kind, policy: self.policy, exceeded: self.exceeded.clone() }
    }

    /// `hat(a)_i = -a_{1-i}`.
    pub fn dual(&self) -> ParamSequence {
        let kind = match &self.kind {
            Kind::Zero => Kind::Zero,
            // -((1 - i) + s - 1/2) = i - s - 1/2
            Kind::Special { shift } => Kind::Special { shift: -shift },
            Kind::Custom { values, lo, hi } => Kind::Custom {
                values: values.iter().map(|(i, v)| (1 - i, -v)).collect(),
                lo: 1 - hi,
                hi: 1 - lo,
            },
        };
        ParamSequence { kind, policy: self.policy, exceeded: self.exceeded.clone() }
    }

    /// `hat(a)_i`, without building the dual sequence.
    pub fn hat(&self, i: i64) -> Result<Rational> {
        Ok(-self.get(1 - i)?)
    }

    /// Same sequence with `a_index` replaced by `value` (custom sequences are
    /// widened to include `index`).
    pub fn with_value(&self, index: i64, value: Rational) -> Result<ParamSequence> {
        match &self.kind {
            Kind::Custom { values, lo, hi } => {
                let mut values = values.clone();
                values.insert(index, value);
                Ok(ParamSequence::custom_window((*lo).min(index), (*hi).max(index), values)?.with_policy(self.policy))
            }
            _ => Err(Error::InvalidParams("only custom sequences can be modified".into())),
        }
    }
}

impl FromStr for ParamSequence {
    type Err = Error;

    /// `zero`, `special`, or `custom:i=v,i=v,...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "zero" => return Ok(ParamSequence::zero()),
            "special" => return Ok(ParamSequence::special()),
            _ => {}
        }
        let body = s
            .strip_prefix("custom:")
            .ok_or_else(|| Error::InvalidParams(format!("expected zero, special or custom:..., got {s:?}")))?;
        let mut values = BTreeMap::new();
        for item in body.split(',') {
            let (i, v) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParams(format!("expected i=v, got {item:?}")))?;
            let i: i64 = i.trim().parse().map_err(|_| Error::InvalidParams(format!("bad index {i:?}")))?;
            if values.insert(i, parse_rational(v)?).is_some() {
                return Err(Error::InvalidParams(format!("index {i} given twice")));
            }
        }
        ParamSequence::custom(values)
    }
}

impl fmt::Display for ParamSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Zero => write!(f, "zero"),
            Kind::Special { shift: 0 } => write!(f, "special"),
            Kind::Special { shift } => write!(f, "special shifted by {shift}"),
            Kind::Custom { values, lo, hi } => {
                let items: Vec<String> = (*lo..=*hi)
                    .map(|i| format!("{i}={}", format_rational(values.get(&i).unwrap_or(&Rational::zero()))))
                    .collect();
                write!(f, "custom:{}", items.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn shifts() {
        assert_eq!(ParamSequence::zero().shift(5), ParamSequence::zero());
        assert_eq!(ParamSequence::special().shift(1).get(1).unwrap(), ratio(3, 2));
        assert_eq!(ParamSequence::special().shift(-1).get(1).unwrap(), ratio(-1, 2));
        let c: ParamSequence = "custom:-1=1/3,0=0,1=2".parse().unwrap();
        assert_eq!(c.shift(1).get(0).unwrap(), rat(2));
        assert_eq!(c.shift(1).shift(-1), c);
    }

    #[test]
    fn duals() {
        assert_eq!(ParamSequence::zero().dual(), ParamSequence::zero());
        assert_eq!(ParamSequence::special().dual(), ParamSequence::special());
        let c: ParamSequence = "custom:-2=5,-1=1/3,0=-7,1=2,2=9/4".parse().unwrap();
        assert_eq!(c.dual().dual(), c);
        for i in -1..=3 {
            assert_eq!(c.dual().get(i).unwrap(), c.hat(i).unwrap());
        }
        assert_eq!(c.dual().get(1).unwrap(), rat(7));
        for r in -3..=3 {
            for i in -4..=4 {
                assert_eq!(ParamSequence::special().shift(r).dual().get(i).unwrap(),
                           -ParamSequence::special().shift(r).get(1 - i).unwrap());
            }
        }
    }

    #[test]
    fn window_policy() {
        let c: ParamSequence = "custom:0=1,2=3".parse().unwrap();
        assert_eq!(c.get(1).unwrap(), rat(0));
        assert_eq!(c.get(3), Err(Error::WindowExceeded { index: 3, lo: 0, hi: 2 }));
        let p = c.clone().with_policy(WindowPolicy::Permissive);
        assert!(!p.window_exceeded());
        assert_eq!(p.get(3).unwrap(), rat(0));
        assert!(p.window_exceeded());
    }

    #[test]
    fn parse_and_display() {
        let c: ParamSequence = "custom:-1=1/3,0=0,1=2".parse().unwrap();
        assert_eq!(c.to_string(), "custom:-1=1/3,0=0,1=2");
        assert_eq!(c.to_string().parse::<ParamSequence>().unwrap(), c);
        assert!("custom:".parse::<ParamSequence>().is_err());
        assert!("custom:1=2,1=3".parse::<ParamSequence>().is_err());
        assert!("weird".parse::<ParamSequence>().is_err());
        assert!("custom:1=0.5".parse::<ParamSequence>().is_err());
    }
}
