//! Loop definitions as JSON: `{ "n": 2, "factors": [ { "alphaRe", "alphaIm", "P" } ] }`
//! with `P` a row-major array of `[re, im]` pairs.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{BasicFactor, ComplexMatrix, LoopError, MeromorphicLoop, Projection};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    #[serde(rename = "alphaRe")]
    pub alpha_re: f64,
    #[serde(rename = "alphaIm")]
    pub alpha_im: f64,
    #[serde(rename = "P")]
    pub p: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopFile {
    pub n: usize,
    pub factors: Vec<FactorFile>,
}

impl FactorFile {
    pub fn to_factor(&self, n: usize) -> Result<BasicFactor, LoopError> {
        if self.p.len() != n || self.p.iter().any(|r| r.len() != n) {
            return Err(LoopError::DimensionMismatch {
                expected: n,
                rows: self.p.len(),
                cols: self.p.first().map_or(0, Vec::len),
            });
        }
        let m = ComplexMatrix::from_fn(n, n, |i, j| {
            Complex64::new(self.p[i][j][0], self.p[i][j][1])
        });
        BasicFactor::new(
            Complex64::new(self.alpha_re, self.alpha_im),
            Projection::new(m)?,
        )
    }
}

impl From<&BasicFactor> for FactorFile {
    fn from(f: &BasicFactor) -> Self {
        let m = f.projection().matrix();
        FactorFile {
            alpha_re: f.alpha().re,
            alpha_im: f.alpha().im,
            p: (0..m.nrows())
                .map(|i| {
                    (0..m.ncols())
                        .map(|j| [m[(i, j)].re, m[(i, j)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

impl From<&MeromorphicLoop> for LoopFile {
    fn from(l: &MeromorphicLoop) -> Self {
        LoopFile {
            n: l.dim(),
            factors: l.factors().iter().map(FactorFile::from).collect(),
        }
    }
}

impl LoopFile {
    pub fn parse(text: &str) -> Result<Self, LoopError> {
        serde_json::from_str(text).map_err(|e| LoopError::Format(e.to_string()))
    }

    pub fn to_loop(&self) -> Result<MeromorphicLoop, LoopError> {
        let factors = self
            .factors
            .iter()
            .map(|f| f.to_factor(self.n))
            .collect::<Result<_, _>>()?;
        MeromorphicLoop::new(self.n, factors)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("loop files always serialize")
    }
}

impl MeromorphicLoop {
    pub fn from_json(text: &str) -> Result<Self, LoopError> {
        LoopFile::parse(text)?.to_loop()
    }

    pub fn to_json(&self) -> String {
        LoopFile::from(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{ "n": 2, "factors": [ { "alphaRe": 0.0, "alphaIm": 1.0,
            "P": [[[1,0],[0,0]],[[0,0],[0,0]]] } ] }"#;
        let l = MeromorphicLoop::from_json(text).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.factors()[0].alpha(), Complex64::new(0.0, 1.0));
        assert_eq!(MeromorphicLoop::from_json(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn rejects_bad_input() {
        let real_pole =
            r#"{ "n": 1, "factors": [ { "alphaRe": 1.0, "alphaIm": 0.0, "P": [[[1,0]]] } ] }"#;
        assert!(matches!(
            MeromorphicLoop::from_json(real_pole),
            Err(LoopError::RealPole(_))
        ));
        let not_proj =
            r#"{ "n": 1, "factors": [ { "alphaRe": 1.0, "alphaIm": 1.0, "P": [[[0.5,0]]] } ] }"#;
        assert!(matches!(
            MeromorphicLoop::from_json(not_proj),
            Err(LoopError::NotIdempotent(_))
        ));
        let ragged =
            r#"{ "n": 2, "factors": [ { "alphaRe": 1.0, "alphaIm": 1.0, "P": [[[1,0]]] } ] }"#;
        assert!(matches!(
            MeromorphicLoop::from_json(ragged),
            Err(LoopError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            MeromorphicLoop::from_json("{"),
            Err(LoopError::Format(_))
        ));
        assert!(matches!(
            MeromorphicLoop::from_json(r#"{"n":0,"factors":[]}"#),
            Err(LoopError::BadDimension(0))
        ));
    }
}
