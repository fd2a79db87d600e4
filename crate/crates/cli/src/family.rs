//! Complex families named on the command line.

use std::fs;
use std::path::PathBuf;

use polyloop_core::complex::{book_graph, cycle_graph, disjoint_points, glue, path_graph, planar_book, simplex};
use polyloop_core::{GluingSpec, SimplicialComplex};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::json::{parse_complex, parse_glue_spec, ComplexJson};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Points(usize),
    Simplex(usize),
    Book { n: usize, l: usize, p: usize },
    PlanarBook { l: usize, p: usize },
    File(PathBuf),
    GlueSpecFile(PathBuf),
}

pub const FAMILY_NAMES: &str = "path, cycle, points, simplex, book, planar-book, file, glue-spec-file";

fn numbers(name: &str, args: &[String], want: usize) -> CliResult<Vec<usize>> {
    if args.len() != want {
        return Err(CliError::Invalid(format!(
            "{name} takes {want} parameter(s), got {}",
            args.len()
        )));
    }
    args.iter()
        .map(|a| a.parse().map_err(|_| CliError::Invalid(format!("{name}: not a non-negative integer: {a}"))))
        .collect()
}

fn one_path(name: &str, args: &[String]) -> CliResult<PathBuf> {
    match args {
        [p] => Ok(PathBuf::from(p)),
        _ => Err(CliError::Invalid(format!("{name} takes one file path"))),
    }
}

impl Family {
    /// Parses `NAME PARAM...`.
    pub fn parse(words: &[String]) -> CliResult<Self> {
        let (name, args) = words
            .split_first()
            .ok_or_else(|| CliError::Invalid(format!("missing family; expected one of {FAMILY_NAMES}")))?;
        Ok(match name.as_str() {
            "path" => Family::Path(numbers(name, args, 1)?[0]),
            "cycle" => Family::Cycle(numbers(name, args, 1)?[0]),
            "points" => Family::Points(numbers(name, args, 1)?[0]),
            "simplex" => Family::Simplex(numbers(name, args, 1)?[0]),
            "book" => {
                let v = numbers(name, args, 3)?;
                Family::Book { n: v[0], l: v[1], p: v[2] }
            }
            "planar-book" => {
                let v = numbers(name, args, 2)?;
                Family::PlanarBook { l: v[0], p: v[1] }
            }
            "file" => Family::File(one_path(name, args)?),
            "glue-spec-file" => Family::GlueSpecFile(one_path(name, args)?),
            other => {
                return Err(CliError::Invalid(format!("unknown family {other}; expected one of {FAMILY_NAMES}")))
            }
        })
    }

    fn read(path: &PathBuf) -> CliResult<String> {
        fs::read_to_string(path).map_err(|e| CliError::io(path, e))
    }

    pub fn glue_spec(&self) -> CliResult<Option<GluingSpec>> {
        match self {
            Family::GlueSpecFile(path) => Ok(Some(parse_glue_spec(&Self::read(path)?)?)),
            _ => Ok(None),
        }
    }

    pub fn complex(&self) -> CliResult<SimplicialComplex> {
        Ok(match self {
            Family::Path(l) => path_graph(*l)?,
            Family::Cycle(l) => cycle_graph(*l)?,
            Family::Points(n) => disjoint_points(*n)?,
            Family::Simplex(k) => simplex(*k)?,
            Family::Book { n, l, p } => book_graph(*n, *l, *p)?,
            Family::PlanarBook { l, p } => planar_book(*l, *p)?,
            Family::File(path) => parse_complex(&Self::read(path)?)?,
            Family::GlueSpecFile(_) => glue(&self.glue_spec()?.expect("glue spec family"))?,
        })
    }

    /// Canonical description for cache keys. File families are keyed by the
    /// complex they describe, not by their path.
    pub fn canonical(&self) -> CliResult<Value> {
        Ok(match self {
            Family::Path(l) => json!(["path", l]),
            Family::Cycle(l) => json!(["cycle", l]),
            Family::Points(n) => json!(["points", n]),
            Family::Simplex(k) => json!(["simplex", k]),
            Family::Book { n, l, p } => json!(["book", n, l, p]),
            Family::PlanarBook { l, p } => json!(["planar-book", l, p]),
            Family::File(_) => json!(["file", serde_json::to_value(ComplexJson::from(&self.complex()?))?]),
            Family::GlueSpecFile(path) => {
                let raw: Value = serde_json::from_str(&Self::read(path)?)?;
                json!(["glue-spec-file", raw])
            }
        })
    }
}
