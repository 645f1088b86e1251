//! Serde helpers: big integers and domain values serialize as strings.

use std::fmt::Display;

use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn display_seq<T: Display, S: Serializer>(values: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}
