//! JSON encoding of arbitrary-precision integers.
//!
//! Values up to 2^53 are written as plain JSON numbers; anything larger is
//! written as a decimal string so consumers that parse numbers as doubles do
//! not silently round. Both forms are accepted on input.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

const MAX_SAFE: u64 = 1 << 53;

pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match value.to_u64() {
        Some(v) if v <= MAX_SAFE => s.serialize_u64(v),
        _ => s.serialize_str(&value.to_str_radix(10)),
    }
}

struct BigVisitor;

impl<'de> Visitor<'de> for BigVisitor {
    type Value = BigUint;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a nonnegative integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigUint, E> {
        Ok(BigUint::from(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigUint, E> {
        u64::try_from(v)
            .map(BigUint::from)
            .map_err(|_| E::custom("expected a nonnegative integer"))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigUint, E> {
        BigUint::parse_bytes(v.trim().as_bytes(), 10)
            .ok_or_else(|| E::custom(format!("not a nonnegative integer: {v:?}")))
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    d.deserialize_any(BigVisitor)
}

/// Same encoding for sequences.
pub mod vec {
    use super::*;
    use serde::de::SeqAccess;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        struct Item<'a>(&'a BigUint);
        impl serde::Serialize for Item<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                super::serialize(self.0, s)
            }
        }
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&Item(v))?;
        }
        seq.end()
    }

    struct SeqVisitor;

    impl<'de> Visitor<'de> for SeqVisitor {
        type Value = Vec<BigUint>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a list of nonnegative integers")
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<BigUint>, A::Error> {
            struct Item(BigUint);
            impl<'de> serde::Deserialize<'de> for Item {
                fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                    super::deserialize(d).map(Item)
                }
            }
            let mut out = Vec::new();
            while let Some(Item(v)) = seq.next_element()? {
                out.push(v);
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        d.deserialize_seq(SeqVisitor)
    }
}

#[cfg(test)]
mod tests {
    use serde::{Deserialize, Serialize};

    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrap {
        #[serde(with = "super")]
        v: BigUint,
        #[serde(with = "super::vec")]
        vs: Vec<BigUint>,
    }

    #[test]
    fn small_values_are_numbers_large_are_strings() {
        let w = Wrap {
            v: BigUint::from(1u64 << 53),
            vs: vec![BigUint::from(3u8), BigUint::from((1u64 << 53) + 1)],
        };
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"v":9007199254740992,"vs":[3,"9007199254740993"]}"#);
        assert_eq!(serde_json::from_str::<Wrap>(&s).unwrap(), w);
    }

    #[test]
    fn rejects_negative_and_garbage() {
        assert!(serde_json::from_str::<Wrap>(r#"{"v":-1,"vs":[]}"#).is_err());
        assert!(serde_json::from_str::<Wrap>(r#"{"v":"12a","vs":[]}"#).is_err());
    }
}
