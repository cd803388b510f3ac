//! Serde helpers shared by report types.

use num_bigint::BigInt;
use serde::Serializer;

/// Writes an integer as a decimal string so arbitrary precision survives JSON.
pub fn serialize_decimal<S: Serializer>(c: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&c.to_string())
}
