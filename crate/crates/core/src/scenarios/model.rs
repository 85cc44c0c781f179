//! Scenario files: zeros of a vector field with their local data, plus
//! optional frame data for chain-level and curve-level checks.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::adelic::{AdelicFrame, Chain};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rational, parse_rational, Matrix, MultiPoly, Rational};
use crate::residues::{working_precision, LocalZeroData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Names of the local coordinates `f_1..f_n`.
    pub coords: Vec<String>,
    pub a: Vec<String>,
    pub lambda: Vec<Vec<String>>,
}

/// Transition matrices `g_x` per point label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameSpec {
    pub rank: usize,
    pub frames: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionSpec {
    pub sub: FrameSpec,
    pub quotient: FrameSpec,
    #[serde(default)]
    pub off: BTreeMap<String, Vec<Vec<String>>>,
}

/// Frame data on a chart with coordinates `base`. When `extension` is
/// present the bundle is the extension it describes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartSpec {
    pub base: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<FrameSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSpec>,
    /// Expected rendered `c_1..c_r` per chain, keyed by `"x,y,..."`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, Vec<String>>,
}

impl ChartSpec {
    fn frame_of(&self, spec: &FrameSpec) -> Result<AdelicFrame> {
        let mut f = AdelicFrame::new(&self.base, spec.rank);
        for (label, rows) in &spec.frames {
            let g = f.parse_matrix(rows)?;
            f.insert(label, g)?;
        }
        Ok(f)
    }

    pub fn sub_quotient(&self) -> Result<Option<(AdelicFrame, AdelicFrame, BTreeMap<String, Matrix<MultiPoly>>)>> {
        let Some(ext) = &self.extension else { return Ok(None) };
        let sub = self.frame_of(&ext.sub)?;
        let quotient = self.frame_of(&ext.quotient)?;
        let mut off = BTreeMap::new();
        for (label, rows) in &ext.off {
            off.insert(label.clone(), sub.parse_matrix(rows)?);
        }
        Ok(Some((sub, quotient, off)))
    }

    /// The bundle's frames: given directly, or assembled from the extension.
    pub fn frame(&self) -> Result<AdelicFrame> {
        if let Some(spec) = &self.bundle {
            return self.frame_of(spec);
        }
        match self.sub_quotient()? {
            Some((sub, quotient, off)) => AdelicFrame::extension(&sub, &quotient, &off),
            None => Err(Error::Parse("chart needs a bundle or an extension".into())),
        }
    }

    /// Fails with `UnknownChain` unless every label carries a frame.
    pub fn chain(&self, labels: &str) -> Result<Chain> {
        let chain = Chain::parse(labels)?;
        let frame = self.frame()?;
        if let Some(x) = chain.labels.iter().find(|x| frame.get(x).is_none()) {
            return Err(Error::UnknownChain(format!("no frame at {x}")));
        }
        Ok(chain)
    }
}

/// A closed point of a curve chart, or the generic point when `at` is absent.
/// `at` is a rational coordinate value or `"inf"`; the frame is `frame / over`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    pub frame: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<String>,
}

/// A line bundle on the projective line with adelic frames relative to a
/// reference trivialization over the chart with coordinate `coordinate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub coordinate: String,
    pub points: Vec<CurvePoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
}

/// On-disk form of a scenario.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioFile {
    pub name: String,
    pub n: usize,
    pub r: usize,
    #[serde(default)]
    pub zeros: Vec<ZeroSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    /// Default invariant polynomial for `bott`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<ChartSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSpec>,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub n: usize,
    pub r: usize,
    pub zeros: Vec<LocalZeroData>,
    pub expected: Option<Rational>,
    pub provenance: Option<String>,
    pub poly: Option<String>,
    pub chart: Option<ChartSpec>,
    pub curve: Option<CurveSpec>,
}

impl Scenario {
    pub fn from_file(file: &ScenarioFile, precision: Option<u32>) -> Result<Self> {
        let precision = working_precision(file.n, precision);
        let mut zeros = Vec::with_capacity(file.zeros.len());
        for (k, z) in file.zeros.iter().enumerate() {
            let label = z.label.clone().unwrap_or_else(|| format!("z{k}"));
            if z.coords.len() != file.n || z.lambda.len() != file.r {
                return Err(Error::DimensionMismatch(format!(
                    "zero {label} does not match n = {}, r = {}",
                    file.n, file.r
                )));
            }
            zeros.push(LocalZeroData::parse(&label, &z.coords, &z.a, &z.lambda, precision)?);
        }
        zeros.sort_by(|a, b| a.label.cmp(&b.label));
        let expected = file.expected.as_deref().map(parse_rational).transpose()?;
        Ok(Scenario {
            name: file.name.clone(),
            n: file.n,
            r: file.r,
            zeros,
            expected,
            provenance: file.provenance.clone(),
            poly: file.poly.clone(),
            chart: file.chart.clone(),
            curve: file.curve.clone(),
        })
    }

    pub fn from_json(src: &str, precision: Option<u32>) -> Result<Self> {
        let file: ScenarioFile = serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file, precision)
    }

    pub fn load(path: &Path, precision: Option<u32>) -> Result<Self> {
        let src = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&src, precision)
    }

    pub fn to_file(&self) -> ScenarioFile {
        let zeros = self
            .zeros
            .iter()
            .map(|z| ZeroSpec {
                label: Some(z.label.clone()),
                coords: z.coords.clone(),
                a: z.a.iter().map(|s| s.render(&z.coords)).collect(),
                lambda: (0..z.r())
                    .map(|i| (0..z.r()).map(|j| z.lambda.get(i, j).render(&z.coords)).collect())
                    .collect(),
            })
            .collect();
        ScenarioFile {
            name: self.name.clone(),
            n: self.n,
            r: self.r,
            zeros,
            expected: self.expected.as_ref().map(fmt_rational),
            provenance: self.provenance.clone(),
            poly: self.poly.clone(),
            chart: self.chart.clone(),
            curve: self.curve.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("scenario serializes")
    }
}
