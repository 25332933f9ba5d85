//! Witness certificates and their JSON file form.
//!
//! ```text
//! {
//!   "polyomino": [[x, y], ...],
//!   "h": 4,
//!   "kind": "critical-family",
//!   "copies": [{"t": 0, "dx": 0, "dy": 0}, ...]
//! }
//! ```
//!
//! Cells are sorted by `(y, x)`, output is pretty-printed with two-space
//! indentation and a trailing newline.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grid::{normalize, Cell, Placement, Polyomino, Transform};

/// What a certificate's family claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// Exactly `h` copies with empty intersection where dropping any one copy
    /// leaves a non-empty intersection.
    CriticalFamily,
    /// At least `h` copies with empty intersection in which every `h - 1`
    /// copies intersect.
    Witness,
}

impl CertificateKind {
    pub fn tag(self) -> &'static str {
        match self {
            CertificateKind::CriticalFamily => "critical-family",
            CertificateKind::Witness => "witness",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "critical-family" => Some(CertificateKind::CriticalFamily),
            "witness" => Some(CertificateKind::Witness),
            _ => None,
        }
    }
}

/// A family of copies of `polyomino` certifying `H(polyomino) >= h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub polyomino: Polyomino,
    pub h: usize,
    pub kind: CertificateKind,
    pub copies: Vec<Placement>,
}

impl WitnessCertificate {
    pub fn cell_sets(&self) -> Vec<Vec<Cell>> {
        self.copies.iter().map(|pl| self.polyomino.apply(pl)).collect()
    }

    pub fn to_file(&self) -> CertificateFile {
        CertificateFile {
            polyomino: self.polyomino.cells().iter().map(|c| [c.x as i64, c.y as i64]).collect(),
            h: self.h as i64,
            kind: self.kind.tag().to_string(),
            copies: self
                .copies
                .iter()
                .map(|pl| CopyEntry { t: pl.transform.index() as i64, dx: pl.dx as i64, dy: pl.dy as i64 })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }
}

/// Raw certificate as stored on disk, before any semantic validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub polyomino: Vec<[i64; 2]>,
    pub h: i64,
    pub kind: String,
    pub copies: Vec<CopyEntry>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CopyEntry {
    pub t: i64,
    pub dx: i64,
    pub dy: i64,
}

impl CertificateFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    /// Turn the raw file into a typed certificate, or name the first field that
    /// cannot be represented.
    pub fn into_certificate(self) -> Result<WitnessCertificate, String> {
        let to_i32 = |v: i64, what: &str| i32::try_from(v).map_err(|_| format!("{what} {v} out of range"));
        let mut cells = Vec::with_capacity(self.polyomino.len());
        for [x, y] in &self.polyomino {
            cells.push(Cell::new(to_i32(*x, "coordinate")?, to_i32(*y, "coordinate")?));
        }
        if cells.iter().any(|c| c.x < 0 || c.y < 0) || cells.windows(2).any(|w| w[0] >= w[1]) {
            return Err("polyomino cells must be normalized and sorted by (y, x)".into());
        }
        let polyomino = normalize(&cells).map_err(|e| format!("polyomino: {e}"))?;
        if polyomino.cells() != cells.as_slice() {
            return Err("polyomino is not normalized".into());
        }
        let h = usize::try_from(self.h).map_err(|_| format!("h {} out of range", self.h))?;
        let kind = CertificateKind::from_tag(&self.kind).ok_or_else(|| format!("unknown kind {:?}", self.kind))?;
        let copies = self
            .copies
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let t = u8::try_from(c.t)
                    .ok()
                    .and_then(Transform::new)
                    .ok_or_else(|| format!("copy {i}: transform index {} not in 0..=7", c.t))?;
                Ok(Placement::new(t, to_i32(c.dx, "dx")?, to_i32(c.dy, "dy")?))
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(WitnessCertificate { polyomino, h, kind, copies })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout() {
        let p = Polyomino::new([(0, 0), (1, 0)]).unwrap();
        let cert = WitnessCertificate {
            polyomino: p,
            h: 2,
            kind: CertificateKind::CriticalFamily,
            copies: vec![Placement::IDENTITY, Placement::new(Transform::new(1).unwrap(), 5, -1)],
        };
        let expected = r#"{
  "polyomino": [
    [
      0,
      0
    ],
    [
      1,
      0
    ]
  ],
  "h": 2,
  "kind": "critical-family",
  "copies": [
    {
      "t": 0,
      "dx": 0,
      "dy": 0
    },
    {
      "t": 1,
      "dx": 5,
      "dy": -1
    }
  ]
}
"#;
        assert_eq!(cert.to_json(), expected);
        let back = CertificateFile::parse(expected).unwrap().into_certificate().unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn rejects_bad_fields() {
        let bad_t = r#"{"polyomino": [[0,0]], "h": 2, "kind": "critical-family", "copies": [{"t": 9, "dx": 0, "dy": 0}]}"#;
        let err = CertificateFile::parse(bad_t).unwrap().into_certificate().unwrap_err();
        assert!(err.contains("transform index 9"), "{err}");
        let unsorted = r#"{"polyomino": [[1,0],[0,0]], "h": 2, "kind": "critical-family", "copies": []}"#;
        assert!(CertificateFile::parse(unsorted).unwrap().into_certificate().is_err());
        assert!(CertificateFile::parse("").is_err());
        assert!(CertificateFile::parse(r#"{"h": 2}"#).is_err());
    }
}
