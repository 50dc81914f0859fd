//! Running the full verification pipeline on input files and collecting
//! per-entry and aggregate results.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::ExpectedInvariants;
use crate::error::{Error, Result};
use crate::hodge_diamond::HodgeDiamond;
use crate::identity::{
    chi_weighted, lhs_weighted_betti, verify_proposition, verify_toric, ConsistencyChecks,
    IdentityReport,
};
use crate::io::{self, DiamondFile, InputFile};
use crate::lattice_polytope::{
    enumerate_facets, AnticanonicalPolytope, FanoPolytope, LatticePoint,
};
use crate::rational::{self, to_fraction_string, Rational};
use crate::toric_invariants::ToricInvariants;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Polytope,
    DualPolytope,
    Diamond,
}

/// Ordered by severity; the worst status decides the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Violation,
    Invalid,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Violation => 1,
            Status::Invalid => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidityFlags {
    pub primitive: Option<bool>,
    pub spanning: Option<bool>,
    pub origin_interior: Option<bool>,
    pub reflexive: Option<bool>,
    pub smooth: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricSummary {
    pub n: usize,
    /// `f_k(P)` of the Fano polytope in N.
    pub f_vector_fano: Vec<usize>,
    /// `f_k(Δ)` of the anticanonical polytope in M.
    pub f_vector: Vec<usize>,
    pub dual_vertices: Vec<LatticePoint>,
    pub e_hat: String,
    pub betti: Vec<u64>,
    pub c_n: i64,
    pub c1_cn1: i64,
    pub edge_interior_total: i64,
    pub consistency: ConsistencyChecks,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_ok: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondSummary {
    pub n: usize,
    pub h: Vec<Vec<u32>>,
    pub e_polynomial: String,
    pub chi: Vec<i64>,
    pub even_betti: Vec<u64>,
    #[serde(serialize_with = "rational::serialize")]
    pub weighted_betti: Rational,
    /// `Σ χ_p (p - n/2)^2`; equals the Chern side for geometric input.
    #[serde(serialize_with = "rational::serialize_opt")]
    pub weighted_chi: Option<Rational>,
    #[serde(serialize_with = "rational::serialize")]
    pub defect: Rational,
    pub diagonal: bool,
    pub odd_vanishing: bool,
    pub c1_cn1: Option<i64>,
    pub c_n: Option<i64>,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub kind: EntryKind,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validity: Option<ValidityFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub toric: Option<ToricSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diamond: Option<DiamondSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentityReport>,
    pub notes: Vec<String>,
}

impl EntryReport {
    fn new(name: &str, kind: EntryKind) -> Self {
        EntryReport {
            name: name.to_string(),
            kind,
            status: Status::Pass,
            error_kind: None,
            error: None,
            validity: None,
            toric: None,
            diamond: None,
            identity: None,
            notes: Vec::new(),
        }
    }

    fn fail(mut self, err: &Error) -> Self {
        self.status = Status::Invalid;
        self.error_kind = Some(err.kind().to_string());
        self.error = Some(err.to_string());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub violations: usize,
    pub invalid: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn from_entries(entries: Vec<EntryReport>) -> Self {
        let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
        let worst = entries.iter().map(|e| e.status).max().unwrap_or(Status::Pass);
        let summary = Summary {
            total: entries.len(),
            passed: count(Status::Pass),
            violations: count(Status::Violation),
            invalid: count(Status::Invalid),
            exit_code: worst.exit_code(),
        };
        RunReport { entries, summary }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            render_entry(&mut out, e);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} total, {} passed, {} violations, {} invalid (exit {})",
            s.total, s.passed, s.violations, s.invalid, s.exit_code
        );
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// The polytope file holds Δ in M rather than the Fano polytope in N.
    pub dual: bool,
}

/// Full toric pipeline on an already-constructed Fano polytope.
pub fn check_fano(
    name: &str,
    fano: &FanoPolytope,
    expected: Option<&ExpectedInvariants>,
) -> EntryReport {
    let mut entry = EntryReport::new(name, EntryKind::Polytope);
    let mut flags = ValidityFlags {
        primitive: Some(true),
        spanning: Some(true),
        origin_interior: Some(true),
        reflexive: Some(fano.is_reflexive()),
        smooth: None,
    };
    match fano.is_smooth() {
        Ok(s) => flags.smooth = Some(s),
        Err(e) => {
            entry.validity = Some(flags);
            return entry.fail(&e);
        }
    }
    entry.validity = Some(flags);
    match run_toric(fano, expected) {
        Ok((summary, identity, passed)) => {
            entry.status = if passed { Status::Pass } else { Status::Violation };
            entry.toric = Some(summary);
            entry.identity = Some(identity);
            entry
        }
        Err(e) => entry.fail(&e),
    }
}

fn run_toric(
    fano: &FanoPolytope,
    expected: Option<&ExpectedInvariants>,
) -> Result<(ToricSummary, IdentityReport, bool)> {
    let dual = fano.polar_dual()?;
    let inv = ToricInvariants::compute(&dual)?;
    let verification = verify_toric(fano, &dual, &inv)?;
    let expected_ok = expected
        .map(|x| x.betti == inv.betti && x.c_n == inv.c_n && x.c1_cn1 == inv.c1_cn1);
    let passed = verification.passed() && expected_ok != Some(false);
    let summary = ToricSummary {
        n: inv.n,
        f_vector_fano: fano.face_lattice()?.f_vector(),
        f_vector: inv.f_vector.clone(),
        dual_vertices: dual.vertices().to_vec(),
        e_hat: inv.e_hat.to_string(),
        betti: inv.betti.clone(),
        c_n: inv.c_n,
        c1_cn1: inv.c1_cn1,
        edge_interior_total: inv.edge_interior_total,
        consistency: verification.consistency,
        expected_ok,
    };
    Ok((summary, verification.identity, passed))
}

/// Validates raw vertices as a Fano polytope and runs the toric pipeline.
pub fn check_polytope(name: &str, dim: usize, vertices: Vec<LatticePoint>) -> EntryReport {
    let entry = EntryReport::new(name, EntryKind::Polytope);
    let mut flags = ValidityFlags {
        primitive: Some(vertices.iter().all(LatticePoint::is_primitive)),
        ..ValidityFlags::default()
    };
    match enumerate_facets(dim, &vertices) {
        Ok(_) => {
            flags.spanning = Some(true);
            flags.origin_interior = Some(true);
        }
        Err(Error::DegenerateInput(_)) => flags.spanning = Some(false),
        Err(Error::OriginNotInterior { .. }) => {
            flags.spanning = Some(true);
            flags.origin_interior = Some(false);
        }
        Err(_) => {}
    }
    match FanoPolytope::new(dim, vertices) {
        Ok(fano) => check_fano(name, &fano, None),
        Err(e) => {
            let mut entry = entry.fail(&e);
            entry.validity = Some(flags);
            entry
        }
    }
}

/// Treats the vertices as Δ in M, reconstructs the Fano polytope, and runs
/// the toric pipeline on it.
pub fn check_dual_polytope(name: &str, dim: usize, vertices: Vec<LatticePoint>) -> EntryReport {
    let entry = EntryReport::new(name, EntryKind::DualPolytope);
    let fano = match reconstruct_fano(dim, &vertices) {
        Ok(f) => f,
        Err(e) => return entry.fail(&e),
    };
    let mut report = check_fano(name, &fano, None);
    report.kind = EntryKind::DualPolytope;
    if report.status != Status::Invalid {
        let mut given = vertices;
        given.sort();
        let mut derived = report
            .toric
            .as_ref()
            .map(|t| t.dual_vertices.clone())
            .unwrap_or_default();
        derived.sort();
        if given != derived {
            return report.fail(&Error::DualMismatch);
        }
    }
    report
}

fn reconstruct_fano(dim: usize, vertices: &[LatticePoint]) -> Result<FanoPolytope> {
    AnticanonicalPolytope::from_vertices(dim, vertices.to_vec())?.fano_polytope()
}

/// Diamond mode: Hodge-theoretic checks, plus the inequality when both
/// Chern numbers are supplied. Strict inequality is not a violation.
pub fn check_diamond(name: &str, file: &DiamondFile) -> EntryReport {
    let mut entry = EntryReport::new(name, EntryKind::Diamond);
    let diamond = match file.diamond() {
        Ok(d) => d,
        Err(e) => return entry.fail(&e),
    };
    entry.diamond = Some(summarize_diamond(&diamond, file));
    entry.notes = diamond.diagnostics().iter().map(|d| d.to_string()).collect();
    if let Err(e) = diamond.require_odd_vanishing() {
        return entry.fail(&e);
    }
    let (Some(c1_cn1), Some(c_n)) = (file.c1_cn1, file.c_n) else {
        entry
            .notes
            .push("Chern numbers not supplied; inequality not evaluated".into());
        return entry;
    };
    match verify_proposition(&diamond, c1_cn1, c_n) {
        Ok(report) => {
            if !report.inequality_ok {
                entry.status = Status::Violation;
            } else if !report.equality {
                entry.notes.push(format!(
                    "strict inequality: defect {}",
                    to_fraction_string(&report.defect)
                ));
            }
            if report.prop22_ok == Some(false) {
                entry
                    .notes
                    .push("Chern numbers inconsistent with χ_p (weighted χ sum differs)".into());
            }
            entry.identity = Some(report);
            entry
        }
        Err(e) => entry.fail(&e),
    }
}

fn summarize_diamond(d: &HodgeDiamond, file: &DiamondFile) -> DiamondSummary {
    let n = d.n();
    let even_betti = d.even_betti();
    let chi = d.chi_p();
    DiamondSummary {
        n,
        h: d.table().to_vec(),
        e_polynomial: d.e_polynomial().to_string(),
        weighted_betti: lhs_weighted_betti(&even_betti, n).expect("length n + 1"),
        weighted_chi: chi_weighted(&chi, n).ok(),
        chi,
        even_betti,
        defect: d.defect(),
        diagonal: d.is_diagonal(),
        odd_vanishing: d.odd_cohomology().is_none(),
        c1_cn1: file.c1_cn1,
        c_n: file.c_n,
        diagnostics: d.diagnostics().iter().map(|x| x.to_string()).collect(),
    }
}

/// Parses and checks one file's contents.
pub fn check_text(name: &str, text: &str, options: &CheckOptions) -> EntryReport {
    match io::parse_input(text) {
        Ok(InputFile::Polytope(p)) if options.dual => check_dual_polytope(name, p.dim, p.vertices),
        Ok(InputFile::Polytope(p)) => check_polytope(name, p.dim, p.vertices),
        Ok(InputFile::Diamond(d)) => check_diamond(name, &d),
        Err(e) => {
            let kind = if text.trim_start().starts_with('{') {
                EntryKind::Diamond
            } else {
                EntryKind::Polytope
            };
            EntryReport::new(name, kind).fail(&e)
        }
    }
}

fn check_path(path: &Path, options: &CheckOptions) -> EntryReport {
    let name = path.display().to_string();
    match fs::read_to_string(path) {
        Ok(text) => check_text(&name, &text, options),
        Err(e) => EntryReport::new(&name, EntryKind::Polytope).fail(&Error::Io(format!("{name}: {e}"))),
    }
}

pub fn run_check(path: &Path, options: &CheckOptions) -> RunReport {
    RunReport::from_entries(vec![check_path(path, options)])
}

/// Like [`run_check`], but the file must be a diamond file.
pub fn run_diamond(path: &Path) -> RunReport {
    let name = path.display().to_string();
    let entry = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{name}: {e}")))
        .and_then(|text| io::parse_diamond(&text))
        .map(|file| check_diamond(&name, &file))
        .unwrap_or_else(|e| EntryReport::new(&name, EntryKind::Diamond).fail(&e));
    RunReport::from_entries(vec![entry])
}

/// Expands directories (one level, sorted) into their regular files.
pub fn expand_paths(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            let mut files: Vec<PathBuf> = fs::read_dir(p)
                .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            out.extend(files);
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Checks many files. Entries come back in input order whether or not they
/// were processed in parallel.
pub fn run_batch(paths: &[PathBuf], options: &CheckOptions, parallel: bool) -> RunReport {
    let entries = if parallel {
        paths.par_iter().map(|p| check_path(p, options)).collect()
    } else {
        paths.iter().map(|p| check_path(p, options)).collect()
    };
    RunReport::from_entries(entries)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn render_entry(out: &mut String, e: &EntryReport) {
    let status = match e.status {
        Status::Pass => "PASS",
        Status::Violation => "VIOLATION",
        Status::Invalid => "INVALID",
    };
    let _ = writeln!(out, "== {} [{}] {status}", e.name, serde_json::to_value(e.kind).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default());
    if let Some(err) = &e.error {
        let _ = writeln!(out, "  error: {} ({err})", e.error_kind.as_deref().unwrap_or("?"));
    }
    if let Some(v) = &e.validity {
        let _ = writeln!(
            out,
            "  primitive {}  spanning {}  origin interior {}  reflexive {}  smooth {}",
            opt_flag(v.primitive),
            opt_flag(v.spanning),
            opt_flag(v.origin_interior),
            opt_flag(v.reflexive),
            opt_flag(v.smooth)
        );
    }
    if let Some(t) = &e.toric {
        let _ = writeln!(out, "  n = {}  f(P) = {:?}  f(Δ) = {:?}", t.n, t.f_vector_fano, t.f_vector);
        let _ = writeln!(out, "  Ê(t) = {}  betti = {:?}", t.e_hat, t.betti);
        let _ = writeln!(out, "  c_n = {}  c1·c_(n-1) = {}", t.c_n, t.c1_cn1);
        let c = &t.consistency;
        let _ = writeln!(
            out,
            "  strata {}  second derivative {}  simple {}  euler {}  poincare {}  face duality {}",
            yes_no(c.strata),
            yes_no(c.second_derivative),
            yes_no(c.simple),
            yes_no(c.euler),
            yes_no(c.poincare),
            yes_no(c.face_duality)
        );
        if let Some(ok) = t.expected_ok {
            let _ = writeln!(out, "  pinned values {}", yes_no(ok));
        }
    }
    if let Some(d) = &e.diamond {
        let _ = writeln!(out, "  n = {}  E(u,v) = {}", d.n, d.e_polynomial);
        let _ = writeln!(out, "  χ_p = {:?}  h^(2k) = {:?}  diagonal {}", d.chi, d.even_betti, yes_no(d.diagonal));
        if let Some(w) = &d.weighted_chi {
            let _ = writeln!(out, "  Σχ_p(p-n/2)² = {w}");
        }
    }
    if let Some(r) = &e.identity {
        let _ = writeln!(out, "  lhs = {}  rhs = {}  defect = {}", r.lhs, r.rhs, r.defect);
        let _ = writeln!(
            out,
            "  equality {}  inequality {}  balance {}  weighted χ {}  original form {}  combinatorial {}",
            yes_no(r.equality),
            yes_no(r.inequality_ok),
            yes_no(r.balance_ok),
            opt_flag(r.prop22_ok),
            opt_flag(r.ehx_ok),
            opt_flag(r.combinatorial_ok)
        );
    }
    for note in &e.notes {
        let _ = writeln!(out, "  note: {note}");
    }
}
