//! Text formats for naming a curve and a computation window.
//!
//! A curve specification reads
//!
//! ```text
//! p=<prime>[,k=<degree>][,mod=<poly>];f=[a0,a1,a2,a3,a4]
//! ```
//!
//! for the curve `y^2 = x^5 + a4 x^4 + a3 x^3 + a2 x^2 + a1 x + a0` over
//! `F_{p^k}`. Coefficients are ascending, constant term first, in element
//! text: plain (possibly negative) integers, or parenthesized coordinate
//! vectors `(c0,c1,...)` in an extension field. `mod` fixes the defining
//! modulus of the extension as a parenthesized ascending coefficient vector
//! including the leading 1 — `mod=(1,0,1)` is `s^2 + 1` — and defaults to
//! the first monic irreducible in lexicographic order.
//!
//! Examples: `p=7;f=[0,5,0,0,0]` and `p=7,k=2,mod=(1,0,1);f=[(0,0),(5,0),0,0,0]`.

use std::sync::Arc;

use crate::curve::CurveParams;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Fq};
use crate::poly::split_top_level;

/// Hard cap on accepted input length; real specifications are tiny.
const MAX_SPEC_LEN: usize = 4096;

/// Parse a full curve specification into validated curve parameters.
pub fn parse_curve_spec(text: &str) -> Result<CurveParams> {
    let t = text.trim();
    if t.len() > MAX_SPEC_LEN {
        return Err(Error::Parse("curve specification too long".into()));
    }
    let parts: Vec<&str> = split_top_level(t, ';').iter().map(|s| s.trim()).collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!(
            "expected '<field>;f=[...]' with exactly one ';', got {} parts",
            parts.len()
        )));
    }
    let field = parse_field_part(parts[0])?;
    let coeffs = parse_f_part(&field, parts[1])?;
    CurveParams::new(&field, coeffs)
}

/// The field half: `p=<prime>[,k=<degree>][,mod=<poly>]` in any key order.
fn parse_field_part(text: &str) -> Result<Arc<FieldSpec>> {
    let mut p: Option<u64> = None;
    let mut k: Option<usize> = None;
    let mut modulus: Option<Vec<u64>> = None;
    for item in split_top_level(text, ',') {
        let item = item.trim();
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let fresh = match key {
            "p" => p
                .replace(
                    value
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad characteristic {value:?}")))?,
                )
                .is_none(),
            "k" => k
                .replace(
                    value
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad extension degree {value:?}")))?,
                )
                .is_none(),
            "mod" => modulus.replace(parse_int_vector(value)?).is_none(),
            _ => return Err(Error::Parse(format!("unknown field key {key:?}"))),
        };
        if !fresh {
            return Err(Error::Parse(format!("duplicate field key {key:?}")));
        }
    }
    let p = p.ok_or_else(|| Error::Parse("missing required key 'p'".into()))?;
    FieldSpec::new(p, k.unwrap_or(1), modulus)
}

/// A parenthesized ascending vector of nonnegative integers: `(1,0,1)`.
fn parse_int_vector(text: &str) -> Result<Vec<u64>> {
    let inner = text
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesized vector, got {text:?}")))?;
    let mut out = Vec::new();
    for part in inner.split(',') {
        out.push(
            part.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {part:?} in {text:?}")))?,
        );
    }
    Ok(out)
}

/// The curve half: `f=[a0,a1,a2,a3,a4]`, exactly five coefficients.
fn parse_f_part(field: &Arc<FieldSpec>, text: &str) -> Result<[Fq; 5]> {
    let value = text
        .strip_prefix("f=")
        .ok_or_else(|| Error::Parse(format!("expected 'f=[...]', got {text:?}")))?
        .trim();
    let inner = value
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected bracketed list, got {value:?}")))?;
    let parts = split_top_level(inner, ',');
    if parts.len() != 5 {
        return Err(Error::Parse(format!(
            "f needs exactly 5 coefficients a0..a4, got {}",
            parts.len()
        )));
    }
    let mut coeffs = Vec::with_capacity(5);
    for part in parts {
        coeffs.push(Fq::parse(field, part)?);
    }
    Ok(coeffs.try_into().expect("length checked above"))
}

/// Parse a window `MIN:MAX` of member indices, both ends inclusive.
pub fn parse_n_range(text: &str) -> Result<(i64, i64)> {
    let (lo, hi) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected MIN:MAX, got {text:?}")))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad lower bound {lo:?}")))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad upper bound {hi:?}")))?;
    if lo > hi {
        return Err(Error::Parse(format!("empty window {lo}:{hi}")));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_specification() {
        let curve = parse_curve_spec("p=7;f=[0,5,0,0,0]").unwrap();
        assert_eq!(curve.field().order(), 7);
        assert_eq!(curve.a(1), curve.field().from_int(5));
        // negative coefficients reduce into the field
        let other = parse_curve_spec("p=7;f=[0,-2,0,0,0]").unwrap();
        assert_eq!(other.a(1), curve.a(1));
    }

    #[test]
    fn extension_field_specification() {
        let curve = parse_curve_spec("p=7,k=2;f=[0,5,0,0,0]").unwrap();
        assert_eq!(curve.field().order(), 49);
        // explicit modulus s^2 + 1 matches the default for F_49
        let pinned = parse_curve_spec("p=7,k=2,mod=(1,0,1);f=[(0,0),(5,0),0,0,0]").unwrap();
        assert_eq!(curve.field().modulus(), pinned.field().modulus());
        assert_eq!(curve.f(), pinned.f());
        // key order is free
        assert!(parse_curve_spec("k=2,p=7;f=[0,5,0,0,0]").is_ok());
    }

    #[test]
    fn validation_errors_surface() {
        // even characteristic
        assert!(matches!(
            parse_curve_spec("p=2;f=[1,1,0,0,0]"),
            Err(Error::EvenCharacteristic)
        ));
        // squarefreeness is checked by curve construction
        assert!(matches!(
            parse_curve_spec("p=7;f=[0,0,0,0,0]"),
            Err(Error::NotSquarefree)
        ));
        // reducible modulus
        assert!(matches!(
            parse_curve_spec("p=7,k=2,mod=(0,0,1);f=[0,5,0,0,0]"),
            Err(Error::ReducibleModulus(_))
        ));
    }

    #[test]
    fn malformed_specifications_are_parse_errors() {
        for bad in [
            "",
            "p=7",
            "f=[0,5,0,0,0]",
            "p=7;f=[0,5,0,0]",
            "p=7;f=[0,5,0,0,0,0]",
            "p=7;f=0,5,0,0,0",
            "p=7,p=7;f=[0,5,0,0,0]",
            "p=seven;f=[0,5,0,0,0]",
            "p=7,junk=1;f=[0,5,0,0,0]",
            "p=7;f=[0,5,0,0,0];extra",
            "p=7,k=2,mod=1,0,1;f=[0,5,0,0,0]",
            "p=7;f=[(1,2,3),0,0,0,1]",
        ] {
            assert!(
                matches!(parse_curve_spec(bad), Err(Error::Parse(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn window_parsing() {
        assert_eq!(parse_n_range("-6:6").unwrap(), (-6, 6));
        assert_eq!(parse_n_range(" 0 : 3 ").unwrap(), (0, 3));
        assert_eq!(parse_n_range("2:2").unwrap(), (2, 2));
        for bad in ["", "5", "3:1", "a:b", "1:2:3"] {
            assert!(parse_n_range(bad).is_err(), "{bad:?}");
        }
    }
}
