//! File formats that only the command line reads.

use serde::Deserialize;

use acw_core::exactalg::{parse_poly, parse_rational, Matrix, Rational, TruncatedSeries};
use acw_core::residues::{working_precision, GeneralizedFraction};
use acw_core::{Error, Result};

/// `{ "vars": [...], "numerator": "<series>" | "jacobian", "denominators": [...] }`.
/// With `"signed": true` the reported value is the local invariant
/// `(−1)^{binom(n+1,2)}` times the residue. An explicit `"precision"`
/// declares the order to which the series are known.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionFile {
    #[serde(default)]
    pub name: Option<String>,
    pub vars: Vec<String>,
    pub numerator: String,
    pub denominators: Vec<String>,
    #[serde(default)]
    pub signed: bool,
    /// Order to which the series are known; defaults to the working precision.
    #[serde(default)]
    pub precision: Option<u32>,
    #[serde(default)]
    pub expected: Option<String>,
    #[serde(default)]
    pub provenance: Option<String>,
}

pub struct Fraction {
    pub file: FractionFile,
    pub fraction: GeneralizedFraction,
    pub jacobian: bool,
    pub expected: Option<Rational>,
}

impl FractionFile {
    pub fn parse(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(self, precision: Option<u32>) -> Result<Fraction> {
        let n = self.vars.len();
        let prec = self.precision.unwrap_or_else(|| working_precision(n, precision));
        let names: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let series = |s: &str| TruncatedSeries::new(parse_poly(s, &names)?, prec);
        let dens = self.denominators.iter().map(|s| series(s)).collect::<Result<Vec<_>>>()?;
        let jacobian = self.numerator.trim() == "jacobian";
        let num = if jacobian {
            if dens.len() != n {
                return Err(Error::Parse("jacobian numerator needs n denominators".into()));
            }
            Matrix::from_fn(n, n, |i, j| dens[i].derivative(j)).det()
        } else {
            series(&self.numerator)?
        };
        let fraction = GeneralizedFraction::new(num, dens)?;
        let expected = self.expected.as_deref().map(parse_rational).transpose()?;
        Ok(Fraction {
            file: self,
            fraction,
            jacobian,
            expected,
        })
    }
}
