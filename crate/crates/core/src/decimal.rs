//! Lossless text encodings: big integers as decimal strings, rationals as `"p/q"`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serializer};

/// Always `p/q`, including `q = 1`.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(text: &str) -> Option<BigRational> {
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (text.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if q == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(p, q))
}

pub mod big {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub mod big_opt {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| t.parse().map_err(serde::de::Error::custom)).transpose()
    }
}

pub mod big_map {
    use super::*;
    use serde::ser::SerializeMap;

    pub fn serialize<S: Serializer>(map: &BTreeMap<usize, BigUint>, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            m.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        m.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, BigUint>, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                let k = k.parse().map_err(serde::de::Error::custom)?;
                let v = v.parse().map_err(serde::de::Error::custom)?;
                Ok((k, v))
            })
            .collect()
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| serde::de::Error::custom(format!("bad rational '{text}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text() {
        let r = BigRational::new(BigInt::from(10), BigInt::from(12));
        assert_eq!(rational_to_string(&r), "5/6");
        assert_eq!(parse_rational("5/6"), Some(r));
        assert_eq!(rational_to_string(&BigRational::from_integer(BigInt::from(7))), "7/1");
        assert_eq!(parse_rational("1/0"), None);
    }
}
