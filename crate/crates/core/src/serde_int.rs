//! Serializes arbitrary-precision integers as decimal strings so that machine
//! output stays exact regardless of magnitude.

use serde::{Deserialize, Deserializer, Serializer};

use crate::lattice::Int;

pub fn serialize<S: Serializer>(value: &Int, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Int, D::Error> {
    let s = String::deserialize(deserializer)?;
    s.parse().map_err(serde::de::Error::custom)
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Int>, serializer: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_some(&v.to_string()),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Option<Int>, D::Error> {
        Option::<String>::deserialize(deserializer)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// `(index, coefficient)` pairs.
pub mod indexed {
    use serde::Serialize;

    use super::*;

    pub fn serialize<S: Serializer>(value: &[(usize, Int)], serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(usize, String)> = value.iter().map(|(i, c)| (*i, c.to_string())).collect();
        v.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<(usize, Int)>, D::Error> {
        Vec::<(usize, String)>::deserialize(deserializer)?
            .into_iter()
            .map(|(i, s)| s.parse().map(|c| (i, c)).map_err(serde::de::Error::custom))
            .collect()
    }
}
