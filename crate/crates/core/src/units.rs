//! Physical constants and the scales derived from them.
//!
//! The engine is agnostic about the unit system: any mutually consistent set
//! of positive constants works. Natural units (`e = B = c = ℏ = m = 1`) make
//! both the magnetic length and the cyclotron frequency equal to one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Charge, field, speed of light, reduced Planck constant and mass.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawUnits")]
pub struct PhysicalUnits {
    e: f64,
    #[serde(rename = "B")]
    b: f64,
    c: f64,
    hbar: f64,
    m: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawUnits {
    #[serde(default = "one")]
    e: f64,
    #[serde(default = "one", rename = "B")]
    b: f64,
    #[serde(default = "one")]
    c: f64,
    #[serde(default = "one")]
    hbar: f64,
    #[serde(default = "one")]
    m: f64,
}

fn one() -> f64 {
    1.0
}

impl TryFrom<RawUnits> for PhysicalUnits {
    type Error = Error;

    fn try_from(r: RawUnits) -> Result<Self> {
        PhysicalUnits::new(r.e, r.b, r.c, r.hbar, r.m)
    }
}

impl Default for PhysicalUnits {
    fn default() -> Self {
        Self::natural()
    }
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidConstant { name, value })
    }
}

impl PhysicalUnits {
    pub fn new(e: f64, b: f64, c: f64, hbar: f64, m: f64) -> Result<Self> {
        Ok(Self {
            e: positive("e", e)?,
            b: positive("B", b)?,
            c: positive("c", c)?,
            hbar: positive("hbar", hbar)?,
            m: positive("m", m)?,
        })
    }

    /// `e = B = c = ℏ = m = 1`.
    pub const fn natural() -> Self {
        Self {
            e: 1.0,
            b: 1.0,
            c: 1.0,
            hbar: 1.0,
            m: 1.0,
        }
    }

    /// Same constants with the field strength replaced.
    pub fn with_field(self, b: f64) -> Result<Self> {
        Self::new(self.e, b, self.c, self.hbar, self.m)
    }

    pub fn charge(&self) -> f64 {
        self.e
    }

    pub fn field(&self) -> f64 {
        self.b
    }

    pub fn speed_of_light(&self) -> f64 {
        self.c
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    /// `ℓ² = ℏc / (eB)`, the magnitude of the lowest-level coordinate commutator.
    pub fn magnetic_length_sq(&self) -> f64 {
        self.hbar * self.c / (self.e * self.b)
    }

    /// `ℓ = sqrt(ℏc / (eB))`.
    pub fn magnetic_length(&self) -> f64 {
        self.magnetic_length_sq().sqrt()
    }

    /// `ω = eB / (mc)`.
    pub fn cyclotron_frequency(&self) -> f64 {
        self.e * self.b / (self.m * self.c)
    }

    /// Energy gap `ℏω` between adjacent Landau levels.
    pub fn level_spacing(&self) -> f64 {
        self.hbar * self.cyclotron_frequency()
    }

    /// `c / (eB)`: converts the Landau-gauge momentum label to a guiding-center position.
    pub fn guiding_center_scale(&self) -> f64 {
        self.c / (self.e * self.b)
    }

    /// Natural momentum scale `ℏ / ℓ = eBℓ / c`.
    pub fn momentum_scale(&self) -> f64 {
        self.hbar / self.magnetic_length()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-14 * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn magnetic_length_examples() {
        assert_eq!(PhysicalUnits::natural().magnetic_length(), 1.0);
        let u = PhysicalUnits::new(1.0, 4.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(u.magnetic_length(), 0.5);
        let u = PhysicalUnits::new(2.0, 3.0, 5.0, 7.0, 1.0).unwrap();
        assert!(close(
            u.magnetic_length(),
            (7.0f64 * 5.0 / (2.0 * 3.0)).sqrt()
        ));
    }

    #[test]
    fn cyclotron_frequency_examples() {
        assert_eq!(PhysicalUnits::natural().cyclotron_frequency(), 1.0);
        let u = PhysicalUnits::new(1.0, 2.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(u.cyclotron_frequency(), 2.0);
        let u = PhysicalUnits::new(3.0, 4.0, 6.0, 1.0, 2.0).unwrap();
        assert!(close(u.cyclotron_frequency(), 1.0));
    }

    #[test]
    fn rejects_nonpositive_constants() {
        assert!(matches!(
            PhysicalUnits::new(1.0, 0.0, 1.0, 1.0, 1.0),
            Err(Error::InvalidConstant { name: "B", .. })
        ));
        assert!(PhysicalUnits::new(-1.0, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(PhysicalUnits::new(1.0, 1.0, f64::NAN, 1.0, 1.0).is_err());
        assert!(PhysicalUnits::new(1.0, 1.0, 1.0, f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn deserializes_with_defaults() {
        let u: PhysicalUnits = toml::from_str("B = 2.0\nhbar = 3.0").unwrap();
        assert_eq!(u.field(), 2.0);
        assert_eq!(u.hbar(), 3.0);
        assert_eq!(u.charge(), 1.0);
        assert!(toml::from_str::<PhysicalUnits>("m = -1.0").is_err());
    }

    proptest::proptest! {
        #[test]
        fn derived_scales_are_consistent(
            e in 1e-3f64..1e3, b in 1e-3f64..1e3, c in 1e-3f64..1e3,
            hbar in 1e-3f64..1e3, m in 1e-3f64..1e3,
        ) {
            let u = PhysicalUnits::new(e, b, c, hbar, m).unwrap();
            let l = u.magnetic_length();
            proptest::prop_assert!(((l * l) * (e * b) - hbar * c).abs() <= 1e-13 * hbar * c);
            proptest::prop_assert!((l * l * u.cyclotron_frequency() * m - hbar).abs() <= 1e-13 * hbar);
            proptest::prop_assert!((u.level_spacing() - hbar * e * b / (m * c)).abs()
                <= 1e-14 * u.level_spacing());
        }
    }
}
