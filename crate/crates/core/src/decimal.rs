//! Big integers as canonical decimal strings in JSON.
//!
//! Only canonical spellings are accepted on input (no sign on zero, no `+`,
//! no leading zeros), so anything that parses re-serializes to the same text.

use num_bigint::{BigInt, BigUint};
use serde::{de, Deserialize, Deserializer, Serializer};

fn is_canonical(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return false;
    }
    !(s.starts_with('-') && digits == "0")
}

pub fn parse_bigint(s: &str) -> Option<BigInt> {
    if !is_canonical(s) {
        return None;
    }
    s.parse().ok()
}

pub fn parse_biguint(s: &str) -> Option<BigUint> {
    if s.starts_with('-') || !is_canonical(s) {
        return None;
    }
    s.parse().ok()
}

pub mod signed {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        parse_bigint(&s).ok_or_else(|| de::Error::custom(format!("not a canonical integer: {s:?}")))
    }
}

pub mod unsigned {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        parse_biguint(&s)
            .ok_or_else(|| de::Error::custom(format!("not a canonical nonnegative integer: {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_only() {
        assert_eq!(parse_bigint("-12"), Some(BigInt::from(-12)));
        assert_eq!(parse_bigint("0"), Some(BigInt::from(0)));
        for bad in ["", "-", "+1", "01", "-0", "1.0", " 1", "1e3"] {
            assert_eq!(parse_bigint(bad), None, "{bad:?}");
        }
        assert_eq!(parse_biguint("-1"), None);
        assert_eq!(
            parse_biguint("1307674368000"),
            Some(BigUint::from(1_307_674_368_000u64))
        );
    }
}
