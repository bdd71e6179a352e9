//! Machine-readable report documents. Big integers are always serialized as
//! decimal strings so no consumer silently truncates them.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::poly::Polynomial;

pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn ser_matrix<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

/// Coefficient table row for one polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialRow {
    pub index: usize,
    pub degree: Option<usize>,
    /// `coefficients[i]` multiplies `x^i`.
    #[serde(serialize_with = "ser_bigints")]
    pub coefficients: Vec<BigInt>,
    pub text: String,
}

impl PolynomialRow {
    pub fn new(index: usize, p: &Polynomial) -> Self {
        PolynomialRow {
            index,
            degree: p.degree(),
            coefficients: p.coeffs().to_vec(),
            text: p.to_string(),
        }
    }
}

/// Envelope for every command output.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument<P: Serialize, R: Serialize> {
    pub command: String,
    pub parameters: P,
    pub result: R,
    /// Which route produced each number.
    pub provenance: Vec<String>,
}

impl<P: Serialize, R: Serialize> ReportDocument<P, R> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        #[derive(Serialize)]
        struct Wrap {
            #[serde(serialize_with = "ser_bigint")]
            v: BigInt,
        }
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = serde_json::to_string(&Wrap { v: big }).unwrap();
        assert_eq!(s, r#"{"v":"123456789012345678901234567890"}"#);
    }

    #[test]
    fn polynomial_row() {
        let p = Polynomial::from_coeffs(vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]);
        let row = PolynomialRow::new(2, &p);
        let s = serde_json::to_string(&row).unwrap();
        assert_eq!(s, r#"{"index":2,"degree":2,"coefficients":["-1","0","1"],"text":"x^2 - 1"}"#);
    }
}
