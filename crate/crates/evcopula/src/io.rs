//! Wire formats: JSON documents for the model types, CSV for batches and
//! estimates, and a dependency-free SVG scatter.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimation::PickandsEstimate;
use crate::extendibility::{CondIIDSpec, DiscreteUnitMeanDF};
use crate::pickands::{NuMeasure, PiecewiseLinearPickands, QLaw};
use crate::sampling::SampleBatch;
use crate::simplex::SimplexVector;
use crate::spectral::DiscreteSpectralMeasure;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralMeasureDoc {
    pub d: usize,
    pub symmetric: bool,
    pub atoms: Vec<SpectralAtomDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralAtomDoc {
    pub q: Vec<f64>,
    pub p: f64,
}

impl From<&DiscreteSpectralMeasure> for SpectralMeasureDoc {
    fn from(m: &DiscreteSpectralMeasure) -> Self {
        Self {
            d: m.dim(),
            symmetric: m.is_symmetric(),
            atoms: m
                .atoms()
                .iter()
                .map(|a| SpectralAtomDoc {
                    q: a.point.entries().to_vec(),
                    p: a.mass,
                })
                .collect(),
        }
    }
}

impl TryFrom<SpectralMeasureDoc> for DiscreteSpectralMeasure {
    type Error = Error;

    fn try_from(doc: SpectralMeasureDoc) -> Result<Self> {
        let atoms = doc
            .atoms
            .into_iter()
            .map(|a| Ok((SimplexVector::new(a.q)?, a.p)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.d, atoms, doc.symmetric)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PickandsDoc {
    pub kinks: Vec<f64>,
    pub values: Vec<f64>,
}

impl From<&PiecewiseLinearPickands> for PickandsDoc {
    fn from(a: &PiecewiseLinearPickands) -> Self {
        Self {
            kinks: a.kinks().to_vec(),
            values: a.values().to_vec(),
        }
    }
}

impl TryFrom<PickandsDoc> for PiecewiseLinearPickands {
    type Error = Error;

    fn try_from(doc: PickandsDoc) -> Result<Self> {
        Self::new(doc.kinks, doc.values)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QLawDoc {
    pub atoms: Vec<QAtomDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QAtomDoc {
    pub q: f64,
    pub p: f64,
}

impl From<&QLaw> for QLawDoc {
    fn from(law: &QLaw) -> Self {
        Self {
            atoms: law
                .atoms()
                .iter()
                .map(|&(q, p)| QAtomDoc { q, p })
                .collect(),
        }
    }
}

impl TryFrom<QLawDoc> for QLaw {
    type Error = Error;

    fn try_from(doc: QLawDoc) -> Result<Self> {
        Self::new(doc.atoms.into_iter().map(|a| (a.q, a.p)).collect())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnitMeanDFDoc {
    pub atoms: Vec<FAtomDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FAtomDoc {
    pub x: f64,
    pub p: f64,
}

impl From<&DiscreteUnitMeanDF> for UnitMeanDFDoc {
    fn from(f: &DiscreteUnitMeanDF) -> Self {
        Self {
            atoms: f.atoms().iter().map(|&(x, p)| FAtomDoc { x, p }).collect(),
        }
    }
}

impl TryFrom<UnitMeanDFDoc> for DiscreteUnitMeanDF {
    type Error = Error;

    fn try_from(doc: UnitMeanDFDoc) -> Result<Self> {
        Self::new(doc.atoms.into_iter().map(|a| (a.x, a.p)).collect())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CondIIDDoc {
    pub b: f64,
    pub lambda: Vec<MixtureComponentDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixtureComponentDoc {
    pub w: f64,
    #[serde(rename = "F")]
    pub f: UnitMeanDFDoc,
}

impl From<&CondIIDSpec> for CondIIDDoc {
    fn from(spec: &CondIIDSpec) -> Self {
        Self {
            b: spec.drift(),
            lambda: spec
                .mixture()
                .iter()
                .map(|(w, f)| MixtureComponentDoc {
                    w: *w,
                    f: UnitMeanDFDoc::from(f),
                })
                .collect(),
        }
    }
}

impl TryFrom<CondIIDDoc> for CondIIDSpec {
    type Error = Error;

    fn try_from(doc: CondIIDDoc) -> Result<Self> {
        let mixture = doc
            .lambda
            .into_iter()
            .map(|c| Ok((c.w, DiscreteUnitMeanDF::try_from(c.f)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(doc.b, mixture)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NuMeasureDoc {
    pub atoms: Vec<NuAtomDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NuAtomDoc {
    pub q: f64,
    pub mass: f64,
}

impl From<&NuMeasure> for NuMeasureDoc {
    fn from(nu: &NuMeasure) -> Self {
        Self {
            atoms: nu
                .atoms()
                .iter()
                .map(|&(q, mass)| NuAtomDoc { q, mass })
                .collect(),
        }
    }
}

impl TryFrom<NuMeasureDoc> for NuMeasure {
    type Error = Error;

    fn try_from(doc: NuMeasureDoc) -> Result<Self> {
        Self::new(doc.atoms.into_iter().map(|a| (a.q, a.mass)).collect())
    }
}

/// Sidecar metadata written next to every simulated batch.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BatchMeta {
    pub seed: u64,
    pub stream: u64,
    pub generator: String,
    pub model: String,
    pub n: usize,
    pub d: usize,
}

impl BatchMeta {
    pub fn for_batch(batch: &SampleBatch, model: impl Into<String>) -> Self {
        Self {
            seed: batch.seed(),
            stream: batch.stream(),
            generator: batch.generator().to_string(),
            model: model.into(),
            n: batch.len(),
            d: batch.dim(),
        }
    }
}

/// Writes a batch as CSV with header `u1,...,ud`.
pub fn write_batch_csv(w: &mut impl Write, batch: &SampleBatch) -> std::io::Result<()> {
    let header: Vec<String> = (1..=batch.dim()).map(|k| format!("u{k}")).collect();
    writeln!(w, "{}", header.join(","))?;
    for row in batch.rows() {
        let line: Vec<String> = row.iter().map(|u| format!("{u}")).collect();
        writeln!(w, "{}", line.join(","))?;
    }
    Ok(())
}

/// Reads a `u1,...,ud` CSV back into a dimension and flat row data.
pub fn read_batch_csv(r: impl BufRead) -> Result<(usize, Vec<f64>)> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty CSV".into()))?
        .map_err(|e| Error::Parse(e.to_string()))?;
    let dim = header.split(',').count();
    if dim == 0
        || !header
            .split(',')
            .enumerate()
            .all(|(k, h)| h.trim() == format!("u{}", k + 1))
    {
        return Err(Error::Parse(format!("unexpected CSV header: {header}")));
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != dim {
            return Err(Error::Parse(format!(
                "line {}: expected {dim} fields, got {}",
                lineno + 2,
                fields.len()
            )));
        }
        for field in fields {
            let v: f64 = field
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 2)))?;
            rows.push(v);
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse("CSV contains no data rows".into()));
    }
    Ok((dim, rows))
}

/// Writes an estimate as CSV with header `x,A_hat_raw,A_hat_clipped`.
pub fn write_estimate_csv(w: &mut impl Write, est: &PickandsEstimate) -> std::io::Result<()> {
    writeln!(w, "x,A_hat_raw,A_hat_clipped")?;
    for ((x, raw), clipped) in est.grid().iter().zip(est.raw()).zip(est.clipped()) {
        writeln!(w, "{x},{raw},{clipped}")?;
    }
    Ok(())
}

/// Emits a bare unit-square scatter plot; no styling dependencies.
pub fn write_scatter_svg(w: &mut impl Write, points: &[(f64, f64)]) -> std::io::Result<()> {
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 1000 1000">"#
    )?;
    writeln!(
        w,
        r#"<rect x="0" y="0" width="1000" height="1000" fill="white" stroke="black" stroke-width="1"/>"#
    )?;
    for &(u, v) in points {
        let cx = 1000.0 * u;
        let cy = 1000.0 * (1.0 - v);
        writeln!(
            w,
            r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="2" fill="black"/>"#
        )?;
    }
    writeln!(w, "</svg>")
}
