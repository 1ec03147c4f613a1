//! The `[[e, num, den], ...]` encoding of a cyclotomic number at a fixed
//! conductor M, meaning `sum (num/den) * zeta_M^e`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::Value;

use super::{CycError, Cyclotomic, Rational};

/// One `(exponent, numerator, denominator)` term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycTriple {
    pub exponent: u32,
    pub num: BigInt,
    pub den: BigInt,
}

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt, CycError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| CycError::Encoding(format!("not an integer: {n}"))),
        Value::String(s) => {
            BigInt::from_str(s).map_err(|_| CycError::Encoding(format!("not an integer: {s:?}")))
        }
        other => Err(CycError::Encoding(format!("not an integer: {other}"))),
    }
}

/// Canonical triples of `x` viewed at conductor `m` (which `x`'s conductor
/// must divide).
pub fn to_triples(x: &Cyclotomic, m: u32) -> Result<Vec<CycTriple>, CycError> {
    if !m.is_multiple_of(x.conductor()) {
        return Err(CycError::Encoding(format!(
            "value of conductor {} does not live at conductor {m}",
            x.conductor()
        )));
    }
    Ok(x.lift(m)
        .terms()
        .into_iter()
        .map(|(e, c)| CycTriple {
            exponent: e,
            num: c.numer().clone(),
            den: c.denom().clone(),
        })
        .collect())
}

pub fn encode_cyclotomic(x: &Cyclotomic, m: u32) -> Result<Value, CycError> {
    Ok(Value::Array(
        to_triples(x, m)?
            .into_iter()
            .map(|t| {
                Value::Array(vec![
                    Value::from(t.exponent),
                    int_value(&t.num),
                    int_value(&t.den),
                ])
            })
            .collect(),
    ))
}

pub fn decode_cyclotomic(v: &Value, m: u32) -> Result<Cyclotomic, CycError> {
    let items = v
        .as_array()
        .ok_or_else(|| CycError::Encoding(format!("expected a list of triples, got {v}")))?;
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let t = item
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| CycError::Encoding(format!("expected [e, num, den], got {item}")))?;
        let e = parse_int(&t[0])?;
        if e < BigInt::zero() || e >= BigInt::from(m) {
            return Err(CycError::Encoding(format!(
                "exponent {e} outside 0..{m}"
            )));
        }
        let num = parse_int(&t[1])?;
        let den = parse_int(&t[2])?;
        if den.is_zero() {
            return Err(CycError::Encoding("zero denominator".into()));
        }
        terms.push((e.to_i64().unwrap(), Rational::new(num, den)));
    }
    Cyclotomic::from_terms(m, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn golden_ratio_round_trip() {
        // 1 + z5 + z5^4 written at conductor 5 is canonicalized to the power basis
        let v = json!([[0, 1, 1], [1, 1, 1], [4, 1, 1]]);
        let x = decode_cyclotomic(&v, 5).unwrap();
        let enc = encode_cyclotomic(&x, 5).unwrap();
        assert_eq!(enc, json!([[2, -1, 1], [3, -1, 1]]));
        assert_eq!(decode_cyclotomic(&enc, 5).unwrap(), x);
    }

    #[test]
    fn rejects_bad_triples() {
        assert!(decode_cyclotomic(&json!([[5, 1, 1]]), 5).is_err());
        assert!(decode_cyclotomic(&json!([[0, 1, 0]]), 5).is_err());
        assert!(decode_cyclotomic(&json!([[0, 1]]), 5).is_err());
        assert!(decode_cyclotomic(&json!([[0, "12345678901234567890123", 2]]), 5).is_ok());
    }

    #[test]
    fn emits_lowest_terms() {
        let v = json!([[0, 2, 4], [1, -6, -4]]);
        let x = decode_cyclotomic(&v, 4).unwrap();
        assert_eq!(encode_cyclotomic(&x, 4).unwrap(), json!([[0, 1, 2], [1, 3, 2]]));
        assert!(encode_cyclotomic(&Cyclotomic::root(3, 1), 4).is_err());
    }
}
