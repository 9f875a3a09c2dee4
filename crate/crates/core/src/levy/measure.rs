use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single jump mark together with its arrival intensity per unit time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpAtom {
    pub location: f64,
    pub intensity: f64,
}

/// A finite-activity Lévy measure made of weighted Dirac atoms.
///
/// The empty measure describes a pure-Brownian market.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "MeasureDoc", into = "MeasureDoc")]
pub struct LevyMeasure {
    atoms: Vec<JumpAtom>,
}

impl LevyMeasure {
    pub fn new(atoms: Vec<JumpAtom>) -> Result<Self> {
        for (k, atom) in atoms.iter().enumerate() {
            if !(atom.intensity.is_finite() && atom.intensity > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "atom {k}: intensity must be finite and positive, got {}",
                    atom.intensity
                )));
            }
            if !atom.location.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "atom {k}: location must be finite"
                )));
            }
            if atoms[..k].iter().any(|a| a.location == atom.location) {
                return Err(Error::InvalidParameter(format!(
                    "atom {k}: duplicate location {}",
                    atom.location
                )));
            }
        }
        Ok(Self { atoms })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Compound Poisson measure with rate `rate` whose marks are `up` with
    /// probability `p` and `down` otherwise.
    pub fn bernoulli(rate: f64, p: f64, up: f64, down: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "bernoulli probability {p} outside [0, 1]"
            )));
        }
        let atoms = [(up, rate * p), (down, rate * (1.0 - p))]
            .into_iter()
            .filter(|&(_, w)| w > 0.0)
            .map(|(location, intensity)| JumpAtom {
                location,
                intensity,
            })
            .collect();
        Self::new(atoms)
    }

    /// Single-atom measure: a Poisson process with fixed mark.
    pub fn poisson(rate: f64, location: f64) -> Result<Self> {
        Self::new(vec![JumpAtom {
            location,
            intensity: rate,
        }])
    }

    pub fn atoms(&self) -> &[JumpAtom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_intensity(&self) -> f64 {
        self.atoms.iter().map(|a| a.intensity).sum()
    }

    pub fn intensities(&self) -> impl Iterator<Item = f64> + '_ {
        self.atoms.iter().map(|a| a.intensity)
    }

    pub fn locations(&self) -> impl Iterator<Item = f64> + '_ {
        self.atoms.iter().map(|a| a.location)
    }

    /// `∫ f(x) g(x) ν(dx)` for per-atom values `f` and `g`.
    pub(crate) fn weighted_dot(&self, f: &[f64], g: &[f64]) -> f64 {
        self.atoms
            .iter()
            .zip(f.iter().zip(g))
            .map(|(a, (x, y))| x * y * a.intensity)
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MeasureDoc {
    atoms: Vec<JumpAtom>,
}

impl TryFrom<MeasureDoc> for LevyMeasure {
    type Error = Error;

    fn try_from(doc: MeasureDoc) -> Result<Self> {
        Self::new(doc.atoms)
    }
}

impl From<LevyMeasure> for MeasureDoc {
    fn from(m: LevyMeasure) -> Self {
        MeasureDoc { atoms: m.atoms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_splits_rate() {
        let m = LevyMeasure::bernoulli(15.0, 0.5, 1.0, -1.0).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.atoms()[0].intensity, 7.5);
        assert_eq!(m.atoms()[1].location, -1.0);
        assert_eq!(m.total_intensity(), 15.0);
    }

    #[test]
    fn degenerate_bernoulli_drops_empty_atom() {
        let m = LevyMeasure::bernoulli(3.0, 1.0, 0.5, -0.5).unwrap();
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn rejects_bad_atoms() {
        let dup = vec![
            JumpAtom {
                location: 1.0,
                intensity: 1.0,
            },
            JumpAtom {
                location: 1.0,
                intensity: 2.0,
            },
        ];
        assert!(LevyMeasure::new(dup).is_err());
        let neg = vec![JumpAtom {
            location: 1.0,
            intensity: 0.0,
        }];
        assert!(LevyMeasure::new(neg).is_err());
        assert!(LevyMeasure::bernoulli(1.0, 1.5, 1.0, -1.0).is_err());
    }

    #[test]
    fn json_rejects_invalid_measure() {
        let bad = r#"{"atoms":[{"location":0.0,"intensity":-1.0}]}"#;
        assert!(serde_json::from_str::<LevyMeasure>(bad).is_err());
        let extra = r#"{"atoms":[],"foo":1}"#;
        assert!(serde_json::from_str::<LevyMeasure>(extra).is_err());
    }
}
