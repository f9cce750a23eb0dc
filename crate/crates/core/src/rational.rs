use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// A reduced fraction with positive denominator. Renders as `p/q`, always
/// with the slash.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(Ratio<i64>);

impl ExactRational {
    /// Panics if `denominator` is zero.
    pub fn new(numerator: i64, denominator: i64) -> ExactRational {
        ExactRational(Ratio::new(numerator, denominator))
    }

    pub fn from_integer(n: i64) -> ExactRational {
        ExactRational(Ratio::from_integer(n))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn recip(&self) -> ExactRational {
        ExactRational(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl FromStr for ExactRational {
    type Err = String;

    fn from_str(s: &str) -> Result<ExactRational, String> {
        let bad = || format!("malformed rational {s:?}");
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(ExactRational::new(p, q))
    }
}

impl Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
