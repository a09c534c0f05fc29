//! Exact rational scalars.
//!
//! Every coordinate, pairing and matrix entry in the crate is a [`Rational`].
//! Values are kept in lowest terms with a positive denominator by
//! `num_rational`; nothing is ever converted to floating point.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Rational = num_rational::Ratio<i128>;

/// Shorthand constructor, `q(3, 4)` is three quarters.
pub fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn half() -> Rational {
    q(1, 2)
}

/// Parses an exact fraction such as `-3/4`, `7` or `−1/2` (U+2212 accepted).
///
/// Decimal notation is rejected on purpose: the pipeline never admits floats.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = |why: &str| Error::Parse(format!("invalid rational {text:?}: {why}"));
    let s = text.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.as_str(), "1"),
    };
    let parse_int = |part: &str| -> Result<i128, Error> {
        let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected an integer or p/q"));
        }
        part.parse::<i128>()
            .map_err(|_| bad("integer out of range"))
    };
    let n = parse_int(num)?;
    let d = parse_int(den)?;
    if d == 0 {
        return Err(bad("zero denominator"));
    }
    // Ratio::new panics when reducing i128::MIN by -1.
    if (n == i128::MIN || d == i128::MIN) && d != 1 {
        return Err(bad("integer out of range"));
    }
    Ok(Rational::new(n, d))
}

/// Parses a comma- or whitespace-separated list of fractions.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, Error> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_rational)
        .collect()
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Floor of a rational as an integer.
pub fn floor(r: &Rational) -> i128 {
    r.floor().to_integer()
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Display adaptor for a slice of rationals: `(1/2, -1, 0)`.
pub struct Coords<'a>(pub &'a [Rational]);

impl fmt::Display for Coords<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rational(c))?;
        }
        write!(f, ")")
    }
}

/// Serde helpers storing rationals as exact fraction strings.
pub mod serde_rational {
    use super::{fmt_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&fmt_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let items = Vec::<String>::deserialize(d)?;
            items
                .iter()
                .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod matrix {
        use super::*;
        use serde::Serialize;

        pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            let rows: Vec<Vec<String>> = m
                .iter()
                .map(|r| r.iter().map(fmt_rational).collect())
                .collect();
            rows.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Vec<Vec<Rational>>, D::Error> {
            let rows = Vec::<Vec<String>>::deserialize(d)?;
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&fmt_rational(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let text = Option::<String>::deserialize(d)?;
            text.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
                .transpose()
        }
    }
}
