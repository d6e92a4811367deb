//! Ring description files: a JSON document carrying the additive orders,
//! unit, multiplication table, involution, and commutativity flag.
//!
//! Integers are JSON numbers while they fit in 64 bits and decimal strings
//! beyond that, so files stay readable without losing exactness.  The
//! `involution` field is written with row `i` holding the image of basis
//! element `i`; the in-memory matrix applies to coefficient columns, so the
//! two layouts are transposes of each other.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use thrfix::abgroup::IntMatrix;
use thrfix::ring_inv::RingWithInvolution;
use thrfix::{Error, Result};

/// Arbitrary-precision integer with a size-dependent JSON encoding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlexInt(pub BigInt);

impl From<&BigInt> for FlexInt {
    fn from(x: &BigInt) -> Self {
        FlexInt(x.clone())
    }
}

impl Serialize for FlexInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => serializer.serialize_i64(v),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

struct FlexIntVisitor;

impl Visitor<'_> for FlexIntVisitor {
    type Value = FlexInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<FlexInt, E> {
        Ok(FlexInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<FlexInt, E> {
        Ok(FlexInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<FlexInt, E> {
        BigInt::from_str(v)
            .map(FlexInt)
            .map_err(|_| E::custom(format!("not a decimal integer: {:?}", v)))
    }
}

impl<'de> Deserialize<'de> for FlexInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_any(FlexIntVisitor)
    }
}

/// The on-disk description of a ring with anti-involution.
#[derive(Clone, Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct RingSpecFile {
    pub name: String,
    /// Additive order of each basis element; 0 marks an infinite cyclic one.
    pub orders: Vec<FlexInt>,
    pub unit: Vec<FlexInt>,
    /// `mul[i][j]` is the coefficient vector of the product of basis
    /// elements `i` and `j`.
    pub mul: Vec<Vec<Vec<FlexInt>>>,
    /// Row `i` is the involution image of basis element `i`.
    pub involution: Vec<Vec<FlexInt>>,
    pub commutative: bool,
}

fn ints(xs: &[FlexInt]) -> Vec<BigInt> {
    xs.iter().map(|x| x.0.clone()).collect()
}

impl RingSpecFile {
    pub fn from_ring(ring: &RingWithInvolution) -> Self {
        let n = ring.rank();
        let inv = ring.involution_matrix();
        RingSpecFile {
            name: ring.name().to_string(),
            orders: ring.orders().iter().map(FlexInt::from).collect(),
            unit: ring.unit_vector().iter().map(FlexInt::from).collect(),
            mul: ring
                .multiplication_table()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|entry| entry.iter().map(FlexInt::from).collect())
                        .collect()
                })
                .collect(),
            involution: (0..n)
                .map(|i| (0..n).map(|j| FlexInt(inv[(j, i)].clone())).collect())
                .collect(),
            commutative: ring.is_commutative(),
        }
    }

    pub fn to_ring(&self) -> Result<RingWithInvolution> {
        let n = self.orders.len();
        if self.involution.len() != n || self.involution.iter().any(|row| row.len() != n) {
            return Err(Error::Input("involution must be an n x n matrix".into()));
        }
        let inv = IntMatrix::from_fn(n, n, |r, c| self.involution[c][r].0.clone());
        let mul = self
            .mul
            .iter()
            .map(|row| row.iter().map(|entry| ints(entry)).collect())
            .collect();
        let basis_names = (0..n).map(|i| format!("b{}", i)).collect();
        RingWithInvolution::from_parts(
            self.name.clone(),
            ints(&self.orders),
            mul,
            ints(&self.unit),
            inv,
            self.commutative,
            basis_names,
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("ring spec serializes");
        s.push('\n');
        s
    }
}

pub fn parse_ring(text: &str) -> Result<RingWithInvolution> {
    let file: RingSpecFile =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("bad ring file: {}", e)))?;
    file.to_ring()
}

pub fn load_ring(path: &Path) -> Result<RingWithInvolution> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {}", path.display(), e)))?;
    parse_ring(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use thrfix::ring_inv::construct::{
        cyclic_ring, finite_field, gaussian_integers, quaternion_ring, FieldInvolution,
    };

    #[test]
    fn round_trip_preserves_ring_data() {
        for ring in [
            cyclic_ring(6),
            gaussian_integers(),
            quaternion_ring(2),
            finite_field(2, 2, FieldInvolution::FrobeniusHalf).unwrap(),
        ] {
            let text = RingSpecFile::from_ring(&ring).to_json();
            let back = parse_ring(&text).unwrap();
            assert_eq!(back.orders(), ring.orders());
            assert_eq!(back.unit_vector(), ring.unit_vector());
            assert_eq!(back.multiplication_table(), ring.multiplication_table());
            assert_eq!(back.involution_matrix(), ring.involution_matrix());
            assert_eq!(back.is_commutative(), ring.is_commutative());
            assert!(back.validate().passed());
        }
    }

    #[test]
    fn involution_rows_are_images() {
        // Frobenius on F4 sends x to x + 1: the file must carry that image
        // as the second row, while the in-memory matrix holds it as the
        // second column.
        let f4 = finite_field(2, 2, FieldInvolution::FrobeniusHalf).unwrap();
        let file = RingSpecFile::from_ring(&f4);
        let image_of_x: Vec<BigInt> = ints(&file.involution[1]);
        assert_eq!(image_of_x, vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(file.involution[0][1].0, BigInt::from(0));
        let back = file.to_ring().unwrap();
        assert_eq!(back.involution_matrix(), f4.involution_matrix());
    }

    #[test]
    fn huge_integers_survive_as_strings() {
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let json = serde_json::to_string(&FlexInt(big.clone())).unwrap();
        assert_eq!(json, "\"123456789012345678901234567890\"");
        let back: FlexInt = serde_json::from_str(&json).unwrap();
        assert_eq!(back.0, big);
        let small: FlexInt = serde_json::from_str("-42").unwrap();
        assert_eq!(serde_json::to_string(&small).unwrap(), "-42");
    }

    #[test]
    fn malformed_documents_are_input_errors() {
        assert!(matches!(parse_ring("{"), Err(Error::Input(_))));
        assert!(matches!(
            parse_ring("{\"name\": \"x\", \"orders\": [2], \"unit\": [1], \"mul\": [[[1]]], \"involution\": [[1]], \"commutative\": true, \"extra\": 1}"),
            Err(Error::Input(_))
        ));
        // shape mismatch: 2 generators declared, 1 x 1 tables given
        let bad = "{\"name\": \"x\", \"orders\": [2, 2], \"unit\": [1], \"mul\": [[[1]]], \"involution\": [[1]], \"commutative\": true}";
        assert!(matches!(parse_ring(bad), Err(Error::Input(_))));
    }
}
