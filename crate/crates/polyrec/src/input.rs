//! JSON input files.
//!
//! Coordinates are integers or `"p/q"` strings; floats are rejected so that
//! no value is silently rounded.

use std::fmt;
use std::path::Path;

use polyrec_core::algebra::parse_rational;
use polyrec_core::schurgt::{Partition, SkewShape};
use polyrec_core::{Polytope, Rational};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

/// Malformed input, reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub source: String,
    pub message: String,
}

impl InputError {
    pub fn new(source: impl Into<String>, message: impl Into<String>) -> Self {
        InputError { source: source.into(), message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.source, self.message)
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    dim: usize,
    vertices: Vec<Vec<Value>>,
}

/// Skew shape file. `kappa`, `nu` and `l_max` are only read by
/// `schur-recursion`, `weight` only by `kostka`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeFile {
    pub lambda: Vec<i64>,
    #[serde(default)]
    pub mu: Vec<i64>,
    pub n: usize,
    pub kappa: Option<Vec<i64>>,
    pub nu: Option<Vec<i64>>,
    pub l_max: Option<usize>,
    pub l_min: Option<usize>,
    pub weight: Option<Vec<i64>>,
}

fn parse_json<T: DeserializeOwned>(source: &str, text: &str) -> Result<T, InputError> {
    // serde_json reports line and column, plus the offending field name for
    // type errors and unknown fields
    serde_json::from_str(text).map_err(|e| InputError::new(source, e.to_string()))
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::new(path.display().to_string(), e.to_string()))
}

fn coordinate(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(|x| Rational::from_integer(x.into())),
        Value::String(s) => parse_rational(s),
        _ => None,
    }
}

pub fn parse_polytope(source: &str, text: &str) -> Result<Polytope, InputError> {
    let file: PolytopeFile = parse_json(source, text)?;
    if file.vertices.is_empty() {
        return Err(InputError::new(source, "field `vertices`: at least one vertex is required"));
    }
    let mut points = Vec::with_capacity(file.vertices.len());
    for (i, v) in file.vertices.iter().enumerate() {
        if v.len() != file.dim {
            return Err(InputError::new(
                source,
                format!("field `vertices[{i}]`: expected {} coordinates, found {}", file.dim, v.len()),
            ));
        }
        let row = v
            .iter()
            .enumerate()
            .map(|(j, x)| {
                coordinate(x).ok_or_else(|| {
                    InputError::new(
                        source,
                        format!("field `vertices[{i}][{j}]`: expected an integer or \"p/q\" string, found {x}"),
                    )
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        points.push(row);
    }
    Polytope::from_points(file.dim, points).map_err(|e| InputError::new(source, e.to_string()))
}

pub fn parse_shape(source: &str, text: &str) -> Result<ShapeFile, InputError> {
    parse_json(source, text)
}

pub fn load_polytope(path: &Path) -> Result<Polytope, InputError> {
    parse_polytope(&path.display().to_string(), &read(path)?)
}

pub fn load_shape(path: &Path) -> Result<ShapeFile, InputError> {
    parse_shape(&path.display().to_string(), &read(path)?)
}

impl ShapeFile {
    fn partition(&self, field: &str, parts: &[i64]) -> Result<Partition, InputError> {
        Partition::new(parts, self.n).map_err(|e| InputError::new("shape", format!("field `{field}`: {e}")))
    }

    pub fn lambda(&self) -> Result<Partition, InputError> {
        self.partition("lambda", &self.lambda)
    }

    pub fn mu(&self) -> Result<Partition, InputError> {
        self.partition("mu", &self.mu)
    }

    pub fn kappa(&self) -> Result<Partition, InputError> {
        self.partition("kappa", self.kappa.as_deref().unwrap_or(&[]))
    }

    pub fn nu(&self) -> Result<Partition, InputError> {
        self.partition("nu", self.nu.as_deref().unwrap_or(&[]))
    }

    pub fn skew_shape(&self) -> Result<SkewShape, InputError> {
        SkewShape::new(self.lambda()?, self.mu()?).map_err(|e| InputError::new("shape", e.to_string()))
    }
}
