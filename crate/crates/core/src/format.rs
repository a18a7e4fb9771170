//! Fixed-precision number formatting shared by every serialized report.
//!
//! All floats are written with 15 significant digits so that identical runs
//! produce byte-identical output.

use num_complex::Complex64;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Formats `x` with 15 significant digits in scientific notation.
///
/// Negative zero is normalized to zero. Non-finite values become `null` so the
/// result is always a valid JSON token.
pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return "null".to_owned();
    }
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.14e}")
}

/// A float that serializes through [`sig15`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fixed(pub f64);

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(sig15(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

/// A complex number serialized as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedComplex(pub Complex64);

impl Serialize for FixedComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [Fixed(self.0.re), Fixed(self.0.im)].serialize(s)
    }
}

pub fn fixed<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    Fixed(*x).serialize(s)
}

pub fn fixed_complex<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    FixedComplex(*z).serialize(s)
}
