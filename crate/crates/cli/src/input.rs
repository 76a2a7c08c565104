//! Parsing of flag values that the core library does not already parse.

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::Deserialize;
use theta_cobordism::exact::parse_rat;
use theta_cobordism::symfun::{ChernBasis, ChernVector, Frame};
use theta_cobordism::{Error, Partition, Result};

/// `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i`.
pub fn parse_complex(src: &str) -> Result<Complex<f64>> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidParameter(format!("cannot read complex number {src:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not leading and not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| {
        (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E')
    });
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex::new(re, im))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorFile {
    #[serde(default)]
    frame: Option<String>,
    #[serde(default)]
    basis: Option<String>,
    values: BTreeMap<String, String>,
}

/// Reads `{"frame": "tangent", "basis": "chern-product", "values": {"2": "6", "1,1": "6"}}`.
/// Frame defaults to tangent and basis to chern-product.
pub fn parse_chern_vector(src: &str, weight: u32) -> Result<ChernVector> {
    let f: VectorFile =
        serde_json::from_str(src).map_err(|e| Error::InvalidParameter(format!("Chern vector file: {e}")))?;
    let frame = match f.frame.as_deref().unwrap_or("tangent") {
        "tangent" => Frame::Tangent,
        "normal" => Frame::Normal,
        other => return Err(Error::InvalidParameter(format!("unknown frame {other:?}"))),
    };
    let basis = match f.basis.as_deref().unwrap_or("chern-product") {
        "chern-product" => ChernBasis::ChernProduct,
        "monomial" => ChernBasis::Monomial,
        other => return Err(Error::InvalidParameter(format!("unknown basis {other:?}"))),
    };
    let mut values = BTreeMap::new();
    for (k, v) in f.values {
        let lam: Partition = k.parse()?;
        if values.insert(lam.clone(), parse_rat(&v)?).is_some() {
            return Err(Error::InvalidParameter(format!("partition {lam} given twice")));
        }
    }
    ChernVector::new(weight, frame, basis, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1+2i").unwrap(), Complex::new(1.0, 2.0));
        assert_eq!(parse_complex("0.3 - 1.5i").unwrap(), Complex::new(0.3, -1.5));
        assert_eq!(parse_complex("i").unwrap(), Complex::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(parse_complex("2").unwrap(), Complex::new(2.0, 0.0));
        assert_eq!(parse_complex("1e-3+2e+1i").unwrap(), Complex::new(1e-3, 20.0));
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn vector_file() {
        let v = parse_chern_vector(r#"{"values": {"2": "6", "1,1": "6"}}"#, 2).unwrap();
        assert_eq!(v.frame(), Frame::Tangent);
        assert!(parse_chern_vector(r#"{"values": {"2": "6"}}"#, 2).is_err());
        assert!(parse_chern_vector(r#"{"frame": "up", "values": {}}"#, 1).is_err());
    }
}
