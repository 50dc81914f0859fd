//! Text formats.
//!
//! Polytope files: `#` starts a comment line, blank lines are ignored, the
//! first data line is `n v` (dimension and vertex count), followed by `v`
//! lines of `n` whitespace-separated integers.
//!
//! Diamond files are JSON: `{"n": 2, "h": [[1,0,1],[0,20,0],[1,0,1]],
//! "c1_cn1": 0, "c_n": 24}`, where `h[p][q] = h^{p,q}` and both Chern
//! numbers are optional.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge_diamond::HodgeDiamond;
use crate::lattice_polytope::LatticePoint;

/// The raw contents of a polytope file. Vertices are kept as a multiset in
/// file order; validation happens when a polytope is built from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<LatticePoint>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_polytope(text: &str) -> Result<PolytopeFile> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = data.next().ok_or_else(|| parse_err(0, "missing header line"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [dim, count] = fields[..] else {
        return Err(parse_err(line, "header must be `n v`"));
    };
    let dim: usize = dim
        .parse()
        .map_err(|_| parse_err(line, format!("bad dimension `{dim}`")))?;
    let count: usize = count
        .parse()
        .map_err(|_| parse_err(line, format!("bad vertex count `{count}`")))?;

    let mut vertices = Vec::with_capacity(count);
    for (line, text) in data {
        if vertices.len() == count {
            return Err(parse_err(line, format!("more than {count} vertex lines")));
        }
        let coords = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| parse_err(line, format!("bad coordinate `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != dim {
            return Err(parse_err(
                line,
                format!("expected {dim} coordinates, found {}", coords.len()),
            ));
        }
        vertices.push(LatticePoint::new(coords));
    }
    if vertices.len() != count {
        return Err(parse_err(
            text.lines().count(),
            format!("expected {count} vertices, found {}", vertices.len()),
        ));
    }
    Ok(PolytopeFile { dim, vertices })
}

/// Serializes vertices in the polytope file format, with optional leading
/// comment lines.
pub fn write_polytope(dim: usize, vertices: &[LatticePoint], comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(comment) = comment {
        for line in comment.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{dim} {}", vertices.len());
    for v in vertices {
        let coords: Vec<String> = v.coords().iter().map(i64::to_string).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiamondFile {
    pub n: usize,
    pub h: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1_cn1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_n: Option<i64>,
}

impl DiamondFile {
    pub fn diamond(&self) -> Result<HodgeDiamond> {
        HodgeDiamond::new(self.n, self.h.clone())
    }
}

pub fn parse_diamond(text: &str) -> Result<DiamondFile> {
    serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))
}

pub fn write_diamond(file: &DiamondFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("diamond serializes");
    s.push('\n');
    s
}

/// A parsed input file of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputFile {
    Polytope(PolytopeFile),
    Diamond(DiamondFile),
}

/// JSON objects are diamond files; everything else is a polytope file.
pub fn parse_input(text: &str) -> Result<InputFile> {
    if text.trim_start().starts_with('{') {
        parse_diamond(text).map(InputFile::Diamond)
    } else {
        parse_polytope(text).map(InputFile::Polytope)
    }
}

pub fn read_input(path: &Path) -> Result<InputFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

pub fn read_polytope(path: &Path) -> Result<PolytopeFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_polytope(&text)
}
