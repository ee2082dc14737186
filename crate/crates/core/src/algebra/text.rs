//! Text and JSON forms of a multivector.
//!
//! Text: signed terms such as `1 - 0.5e12 + 2e134`. A term is an optional
//! decimal coefficient followed by an optional blade `e<indices>`, so `e12`
//! means `1*e12` and `-0.5e12` means `-0.5*e12`. Coefficients never use
//! exponent notation. JSON: `{"signature":[p,q],"coeffs":[...]}` with
//! coefficients in canonical `(grade, mask)` order.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BasisBlade, Multivector, Signature};
use crate::error::{Error, Result};

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, c) in self.terms() {
            let (neg, mag) = (c < 0.0, c.abs());
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            if blade == BasisBlade::SCALAR {
                write!(f, "{mag}")?;
            } else if mag == 1.0 {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{mag}{blade}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Multivector {
    /// Parses the text form in the given signature.
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty multivector".into()));
        }
        let mut out = Multivector::zero(sig);
        let mut rest = cleaned.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1.0, &rest[1..]),
                b'-' => (-1.0, &rest[1..]),
                _ if rest.len() == cleaned.len() => (1.0, rest),
                _ => return Err(Error::Parse(format!("expected '+' or '-' before {rest:?}"))),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            let (blade, c) = parse_term(sig, term)?;
            out.coeffs_mut()[blade.mask()] += sign * c;
            rest = &body[end..];
        }
        Ok(out)
    }
}

fn parse_term(sig: Signature, term: &str) -> Result<(BasisBlade, f64)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let (num, blade) = match term.find('e') {
        Some(i) => (&term[..i], Some(&term[i + 1..])),
        None => (term, None),
    };
    let coeff = if num.is_empty() {
        if blade.is_none() {
            return Err(Error::Parse(format!("bad term {term:?}")));
        }
        1.0
    } else {
        if !num.chars().all(|c| c.is_ascii_digit() || c == '.') {
            return Err(Error::Parse(format!("bad coefficient {num:?}")));
        }
        num.parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad coefficient {num:?}")))?
    };
    let Some(digits) = blade else {
        return Ok((BasisBlade::SCALAR, coeff));
    };
    let indices: Vec<usize> = digits
        .chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Parse(format!("bad blade {digits:?}")))
        })
        .collect::<Result<_>>()?;
    if indices.is_empty() {
        return Err(Error::Parse(format!("blade without indices in {term:?}")));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > sig.dim()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            dim: sig.dim(),
        });
    }
    let (blade, sign) = BasisBlade::from_indices(&indices)
        .ok_or_else(|| Error::Parse(format!("repeated index in {term:?}")))?;
    Ok((blade, sign * coeff))
}

#[derive(Serialize, Deserialize)]
struct MultivectorJson {
    signature: Signature,
    coeffs: Vec<f64>,
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultivectorJson {
            signature: self.signature(),
            coeffs: self.canonical_coeffs(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MultivectorJson::deserialize(d)?;
        Multivector::from_canonical(raw.signature, &raw.coeffs).map_err(D::Error::custom)
    }
}
