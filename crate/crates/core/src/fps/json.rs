use serde::{Deserialize, Serialize};

use super::{FpsError, Series};
use crate::scalar::{Ring, Scalar};

/// Wire form of a [`Series`]. With `egf: true` the listed values are
/// `n!·coeffs[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub ring: String,
    pub coeffs: Vec<String>,
    pub egf: bool,
}

impl Series {
    pub fn to_wire(&self, egf: bool) -> SeriesJson {
        let coeffs = if egf { self.egf().to_vec() } else { self.coeffs().to_vec() };
        SeriesJson {
            order: self.order(),
            ring: self.ring().as_str().to_string(),
            coeffs: coeffs.iter().map(ToString::to_string).collect(),
            egf,
        }
    }

    pub fn to_json(&self, egf: bool) -> String {
        serde_json::to_string(&self.to_wire(egf)).expect("plain data serializes")
    }

    pub fn from_wire(w: &SeriesJson) -> Result<Series, FpsError> {
        let ring = Ring::parse(&w.ring).ok_or_else(|| FpsError::Malformed(format!("ring {:?}", w.ring)))?;
        if w.coeffs.len() != w.order + 1 {
            return Err(FpsError::Malformed(format!("{} coefficients for order {}", w.coeffs.len(), w.order)));
        }
        let values = w.coeffs.iter().map(|s| s.parse::<Scalar>()).collect::<Result<Vec<_>, _>>()?;
        let series = if w.egf { Series::from_egf(values, w.order) } else { Series::new(values, w.order) };
        if series.ring() > ring {
            return Err(FpsError::Malformed(format!("coefficients need ring {} but tag says {}", series.ring(), ring)));
        }
        Ok(series.with_ring(ring))
    }

    pub fn from_json(s: &str) -> Result<Series, FpsError> {
        let w: SeriesJson = serde_json::from_str(s).map_err(|e| FpsError::Malformed(e.to_string()))?;
        Series::from_wire(&w)
    }
}
