//! Exact JSON encoding of big integers as bare decimal numbers.
//!
//! Values go through `serde_json`'s raw values, so they survive at any size
//! without floating-point rounding. Non-JSON serializers see a raw-value
//! wrapper instead of a number.

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::value::RawValue;

fn raw<T: Display, E: serde::ser::Error>(v: &T) -> Result<Box<RawValue>, E> {
    RawValue::from_string(v.to_string()).map_err(E::custom)
}

pub fn one<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    raw::<_, S::Error>(v)?.serialize(s)
}

pub fn seq<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut out = s.serialize_seq(Some(v.len()))?;
    for x in v {
        out.serialize_element(&raw::<_, S::Error>(x)?)?;
    }
    out.end()
}

pub fn opt<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => one(x, s),
        None => s.serialize_none(),
    }
}

pub fn opt_seq<T: Display, S: Serializer>(v: &Option<Vec<T>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => seq(x, s),
        None => s.serialize_none(),
    }
}

/// Accepts bare numbers and decimal strings.
pub fn de_seq<'de, T, D>(d: D) -> Result<Vec<T>, D::Error>
where
    T: FromStr,
    T::Err: Display,
    D: Deserializer<'de>,
{
    let items = Vec::<Box<RawValue>>::deserialize(d)?;
    items
        .iter()
        .map(|r| {
            r.get()
                .trim_matches('"')
                .parse::<T>()
                .map_err(D::Error::custom)
        })
        .collect()
}
