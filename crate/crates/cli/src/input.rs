use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use finik::contraction::{CurveId, GraphCombination, LinkingTable, Trilinear};
use finik::io::{from_value, CombinationWire, Num};
use finik::surgery::{HandlebodyDatum, SurgerySpec};
use finik::{Error, Rational};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::Failure;

/// Where the JSON input comes from: a file, an inline string, or stdin.
#[derive(Args, Debug)]
pub struct Input {
    /// Read the JSON input from this file
    #[arg(long, conflicts_with = "json")]
    pub input: Option<PathBuf>,
    /// Inline JSON input
    #[arg(long)]
    pub json: Option<String>,
}

impl Input {
    pub fn value(&self) -> Result<serde_json::Value, Failure> {
        let text = match (&self.input, &self.json) {
            (Some(path), _) => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            (None, Some(s)) => s.clone(),
            (None, None) => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| Failure::Lib(Error::Schema(e.to_string())))
    }

    pub fn parse<T: DeserializeOwned>(&self) -> Result<T, Failure> {
        serde_json::from_value(self.value()?).map_err(|e| Failure::Lib(Error::Schema(e.to_string())))
    }
}

pub fn rational(s: &str) -> Result<Rational, Failure> {
    Ok(finik::algebra::parse_rational(s)?)
}

pub fn specs(coeffs: &[(i64, i64)]) -> Result<Vec<SurgerySpec>, Failure> {
    Ok(coeffs.iter().map(|&(p, q)| SurgerySpec::new(p, q)).collect::<finik::Result<_>>()?)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryInput {
    pub n: usize,
    pub genera: Vec<usize>,
    pub lk: Vec<(String, String, Num)>,
    pub coeffs: Vec<(i64, i64)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HandlebodyInput {
    pub g: usize,
    pub form: Vec<(usize, usize, usize, Num)>,
    pub duals: Vec<String>,
}

impl HandlebodyInput {
    pub fn datum(&self) -> Result<HandlebodyDatum, Failure> {
        let entries = self.form.iter().map(|(i, j, k, v)| Ok(((*i, *j, *k), v.to_rational()?))).collect::<finik::Result<Vec<_>>>()?;
        Ok(HandlebodyDatum { form: Trilinear::new(self.g, entries)?, duals: self.duals.iter().map(CurveId::new).collect() })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LpInput {
    pub n: usize,
    pub data: Vec<HandlebodyInput>,
    pub lk: Vec<(String, String, Num)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AsInput {
    pub mu: serde_json::Value,
    pub coeffs: Vec<(i64, i64)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AsMu0Input {
    pub n: usize,
    pub ell: serde_json::Value,
    pub coeffs: Vec<(i64, i64)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularInput {
    pub ell: Vec<Vec<Num>>,
    pub r: Num,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContractInput {
    pub n: usize,
    pub graph: CombinationWire,
    pub lk: Vec<(String, String, Num)>,
}

impl ContractInput {
    pub fn graph(self) -> Result<(usize, GraphCombination, LinkingTable), Failure> {
        let g = from_value(serde_json::to_value(self.graph).expect("wire types serialize"))?;
        Ok((self.n, g, linking(self.lk)?))
    }
}

pub fn linking(entries: Vec<(String, String, Num)>) -> Result<LinkingTable, Failure> {
    Ok(from_value(serde_json::json!({ "lk": entries }))?)
}
