//! Golden tables: a pipe-separated text format, a strict parser, generation
//! from scratch, and cell-by-cell verification.
//!
//! A fixture is a title line `# T1: …`, a header row, then data rows.
//! A data row may end with `# note`; notes record where the computed value
//! differs from the printed one and are not compared.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::cycles::{c_of_x, codim, CycleSource, SigmaElement};
use crate::dynkin::CompactDual;
use crate::error::{Error, Result};
use crate::levi::summarize;
use crate::parabolic::{classify, counts, hodge_of_lambda, r_zero};
use crate::rootsys::{build, HermitianFamily, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    X1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    /// Free text without `|` or `#`.
    Label,
    Family,
    Int,
    /// Comma-separated integers.
    Counts,
    /// A weight of the row's family, or `-`.
    Weight,
    /// A product of compact Hermitian spaces joined by ` x `, or `point`.
    Space,
    /// An element of Σ, or `tau`.
    Sigma,
    /// `class` or `counts` (X1 only).
    RowKind,
    /// An integer for class rows, a count list for counts rows.
    Value,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::T4,
        TableId::T5,
        TableId::X1,
    ];

    pub fn file_name(&self) -> String {
        format!("{self}.txt")
    }

    pub fn title(&self) -> &'static str {
        match self {
            TableId::T1 => "r(g0) and the number of balanced classes up to c(X)",
            TableId::T2 => "c(X) and a minimizing involution",
            TableId::T3 => "balanced classes of e6-3 with Y_q and Euler characteristic",
            TableId::T4 => "balanced classes of e7-7 with Y_q and Euler characteristic",
            TableId::T5 => "Y_q and Euler characteristic at r(g0)",
            TableId::X1 => "low-rank exceptional classes",
        }
    }

    pub fn columns(&self) -> &'static [(&'static str, CellKind)] {
        use CellKind::*;
        match self {
            TableId::T1 => &[
                ("type", Label),
                ("family", Family),
                ("c(X)", Int),
                ("r", Int),
                ("sum N", Int),
            ],
            TableId::T2 => &[
                ("type", Label),
                ("family", Family),
                ("sigma", Sigma),
                ("codim", Int),
                ("c(X)", Int),
            ],
            TableId::T3 | TableId::T4 | TableId::T5 => &[
                ("family", Family),
                ("lambda", Weight),
                ("R", Int),
                ("Y", Space),
                ("chi", Int),
            ],
            TableId::X1 => &[
                ("kind", RowKind),
                ("family", Family),
                ("lambda", Weight),
                ("value", Value),
            ],
        }
    }

    /// Number of leading cells forming the row key.
    pub fn key_len(&self) -> usize {
        match self {
            TableId::T1 | TableId::T2 => 2,
            TableId::T3 | TableId::T4 | TableId::T5 => 2,
            TableId::X1 => 3,
        }
    }

    /// The fixture shipped with the crate.
    pub fn embedded(&self) -> &'static str {
        match self {
            TableId::T1 => include_str!("../fixtures/T1.txt"),
            TableId::T2 => include_str!("../fixtures/T2.txt"),
            TableId::T3 => include_str!("../fixtures/T3.txt"),
            TableId::T4 => include_str!("../fixtures/T4.txt"),
            TableId::T5 => include_str!("../fixtures/T5.txt"),
            TableId::X1 => include_str!("../fixtures/X1.txt"),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableId> {
        TableId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                what: "table id",
                input: s.into(),
                reason: "expected T1..T5 or X1".into(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    /// Canonical renderings.
    pub cells: Vec<String>,
    pub note: Option<String>,
}

impl Row {
    pub fn key(&self, id: TableId) -> String {
        self.cells[..id.key_len()].join(" | ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub id: TableId,
    pub rows: Vec<Row>,
}

impl GoldenTable {
    /// Canonical text; `parse(render(t)) == t`.
    pub fn render(&self) -> String {
        let mut s = format!("# {}: {}\n", self.id, self.id.title());
        let header: Vec<&str> = self.id.columns().iter().map(|c| c.0).collect();
        s.push_str(&header.join(" | "));
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.cells.join(" | "));
            if let Some(n) = &r.note {
                s.push_str("  # ");
                s.push_str(n);
            }
            s.push('\n');
        }
        s
    }

    /// Parses a fixture, validating every cell and normalizing it to the
    /// canonical rendering.
    pub fn parse(id: TableId, text: &str) -> Result<GoldenTable> {
        let bad = |line: usize, reason: String| Error::Parse {
            what: "golden table",
            input: format!("{id} line {line}"),
            reason,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (n0, title) = lines.next().ok_or_else(|| bad(1, "empty fixture".into()))?;
        let expect_title = format!("# {id}:");
        if !title.starts_with(&expect_title) {
            return Err(bad(
                n0 + 1,
                format!("expected a title starting with {expect_title:?}"),
            ));
        }
        let (n1, header) = lines
            .next()
            .ok_or_else(|| bad(n0 + 2, "missing header".into()))?;
        let names: Vec<&str> = header.split('|').map(str::trim).collect();
        let want: Vec<&str> = id.columns().iter().map(|c| c.0).collect();
        if names != want {
            return Err(bad(
                n1 + 1,
                format!("header {names:?} differs from {want:?}"),
            ));
        }
        let mut rows = Vec::new();
        let mut keys = BTreeMap::new();
        let mut rs_cache: BTreeMap<String, RootSystem> = BTreeMap::new();
        for (n, line) in lines {
            let (body, note) = match line.split_once('#') {
                Some((b, c)) => (b, Some(c.trim().to_string()).filter(|c| !c.is_empty())),
                None => (line, None),
            };
            let raw: Vec<&str> = body.split('|').map(str::trim).collect();
            if raw.len() != id.columns().len() {
                return Err(bad(
                    n + 1,
                    format!("{} cells, expected {}", raw.len(), id.columns().len()),
                ));
            }
            let row =
                normalize_row(id, &raw, &mut rs_cache).map_err(|e| bad(n + 1, e.to_string()))?;
            let row = Row { cells: row, note };
            if keys.insert(row.key(id), n).is_some() {
                return Err(bad(n + 1, format!("duplicate row {}", row.key(id))));
            }
            rows.push(row);
        }
        Ok(GoldenTable { id, rows })
    }
}

fn family_of(cells: &[&str], id: TableId) -> Option<usize> {
    id.columns()
        .iter()
        .position(|c| c.1 == CellKind::Family)
        .filter(|&i| i < cells.len())
}

fn system<'a>(cache: &'a mut BTreeMap<String, RootSystem>, fam: &str) -> Result<&'a RootSystem> {
    if !cache.contains_key(fam) {
        let rs = build(fam.parse()?)?;
        cache.insert(fam.to_string(), rs);
    }
    Ok(&cache[fam])
}

fn normalize_row(
    id: TableId,
    raw: &[&str],
    cache: &mut BTreeMap<String, RootSystem>,
) -> Result<Vec<String>> {
    let invalid = |cell: &str, reason: &str| Error::Parse {
        what: "table cell",
        input: cell.into(),
        reason: reason.into(),
    };
    let fam = match family_of(raw, id) {
        Some(i) => Some(raw[i].parse::<HermitianFamily>()?.to_string()),
        None => None,
    };
    let row_kind = if id == TableId::X1 {
        Some(raw[0])
    } else {
        None
    };
    let mut out = Vec::with_capacity(raw.len());
    for (cell, (_, kind)) in raw.iter().zip(id.columns()) {
        let v = match kind {
            CellKind::Label => {
                if cell.is_empty() {
                    return Err(invalid(cell, "empty label"));
                }
                cell.to_string()
            }
            CellKind::Family => fam.clone().expect("family column present"),
            CellKind::Int => parse_int(cell)?.to_string(),
            CellKind::Counts => render_counts(&parse_counts(cell)?),
            CellKind::RowKind => match *cell {
                "class" | "counts" => cell.to_string(),
                _ => return Err(invalid(cell, "expected class or counts")),
            },
            CellKind::Value => match row_kind {
                Some("counts") => render_counts(&parse_counts(cell)?),
                _ => parse_int(cell)?.to_string(),
            },
            CellKind::Weight => {
                if *cell == "-" {
                    if row_kind == Some("class") || id != TableId::X1 {
                        return Err(invalid(cell, "a weight is required"));
                    }
                    "-".into()
                } else {
                    if row_kind == Some("counts") {
                        return Err(invalid(cell, "counts rows take no weight"));
                    }
                    let rs = system(cache, fam.as_deref().expect("family column present"))?;
                    let lambda = rs.parse_weight(cell)?;
                    render_weight(id, rs, &lambda)
                }
            }
            CellKind::Space => render_space(&parse_space(cell)?),
            CellKind::Sigma => {
                if *cell == "tau" {
                    "tau".into()
                } else {
                    let rs = system(cache, fam.as_deref().expect("family column present"))?;
                    SigmaElement::parse(rs, cell)?.display(rs)
                }
            }
        };
        out.push(v);
    }
    Ok(out)
}

fn parse_int(s: &str) -> Result<u64> {
    s.parse().map_err(|_| Error::Parse {
        what: "integer",
        input: s.into(),
        reason: "not a non-negative integer".into(),
    })
}

fn parse_counts(s: &str) -> Result<Vec<u64>> {
    if s.is_empty() {
        return Err(Error::Parse {
            what: "count list",
            input: s.into(),
            reason: "empty".into(),
        });
    }
    s.split(',').map(|x| parse_int(x.trim())).collect()
}

fn render_counts(c: &[u64]) -> String {
    c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Weights in T3/T4 are written over fundamental weights, elsewhere in ε.
fn render_weight(id: TableId, rs: &RootSystem, lambda: &crate::rootsys::DominantVector) -> String {
    match id {
        TableId::T3 | TableId::T4 => lambda.fw_display(),
        _ => rs.display_weight(lambda),
    }
}

/// Parses `A x B x …` into canonical factors sorted by (dimension, name).
pub fn parse_space(s: &str) -> Result<Vec<CompactDual>> {
    if s.trim() == "point" {
        return Ok(Vec::new());
    }
    let mut v: Vec<CompactDual> = s
        .split(" x ")
        .map(|p| p.trim().parse())
        .collect::<Result<_>>()?;
    v.sort_by(|a, b| {
        a.dim_c()
            .cmp(&b.dim_c())
            .then_with(|| a.to_string().cmp(&b.to_string()))
    });
    Ok(v)
}

pub fn render_space(v: &[CompactDual]) -> String {
    if v.is_empty() {
        return "point".into();
    }
    v.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" x ")
}

/// Rows whose computed value differs from the printed table, with the
/// printed value.
fn erratum(id: TableId, key: &str) -> Option<&'static str> {
    match (id, key) {
        (TableId::T1, "AIII | su(4,4)") => Some("printed sum N = 4"),
        (TableId::T3, "e6-3 | ϖ4+ϖ6−2ϖ1") => Some("printed S^2 x S^2, chi 4"),
        (TableId::T4, "e7-7 | ϖ1+ϖ6−2ϖ7") => Some("printed S^2 x SO(10)/U(5), chi 32"),
        (TableId::T5, "so*(18) | ε1−ε9") => Some("printed SO(14)/U(8) for the second factor"),
        (TableId::T5, "so(2,8) | ε2") => Some("Q_6, written in its D4 form"),
        (TableId::X1, "class | so*(10) | 3ε1+ε2−ε3−ε4−2ε5") => {
            Some("printed 3e1+e2-e3-e4-e5, which has Hodge type (4,3)")
        }
        (TableId::X1, "counts | su(3,4) | -") => {
            Some("printed exception e1-e3+e4-e6 is not k-dominant")
        }
        (TableId::X1, "counts | su(2,2) | -") => Some("xi and eta coincide when p = 2"),
        _ => None,
    }
}

const T1_FAMILIES: &[&str] = &[
    "su(3,7)", "su(4,5)", "su(4,4)", "so(2,7)", "so(2,8)", "sp(5)", "so*(18)", "e6-3", "e7-7",
];
const T2_FAMILIES: &[&str] = &[
    "su(3,7)", "su(4,4)", "su(2,5)", "so(2,7)", "so(2,8)", "sp(5)", "so*(12)", "so*(18)", "e6-3",
    "e7-7",
];
const T3_WEIGHTS: &[&str] = &["w5-w1", "w2+w3-2w1", "w4+w6-2w1", "w2+w3+w5-3w1"];
const T4_WEIGHTS: &[&str] = &[
    "w2-w7",
    "w2+w4-3w7",
    "w1+w6-2w7",
    "w1+w2+w6-3w7",
    "w1+w4+w6-4w7",
    "w3+w5-3w7",
];
const T5_ROWS: &[(&str, &str)] = &[
    ("su(3,7)", "e4-e10"),
    ("su(2,6)", "e3-e8"),
    ("so(2,7)", "e2"),
    ("so(2,8)", "e2"),
    ("so(2,11)", "e2"),
    ("sp(5)", "e1-e5"),
    ("sp(6)", "e1-e6"),
    ("so*(18)", "e1-e9"),
    ("so*(20)", "e1-e10"),
];
/// (family, weight) pairs of the exceptional low-rank classes.
const X1_CLASSES: &[(&str, &str)] = &[
    ("su(2,3)", "e1-e2+e3-e5"),
    ("su(2,4)", "e1-e2+e3+e4-e5-e6"),
    ("su(3,3)", "e1-e3+e4-e6"),
    ("su(4,4)", "e1+e2-e3-e4+e5+e6-e7-e8"),
    ("sp(4)", "e1-e4"),
    ("sp(4)", "e1+e2-e3-e4"),
    ("so*(16)", "e1+e2+e3+e4-e5-e6-e7-e8"),
    ("so*(14)", "e1+e2+e3-e5-e6-e7"),
    ("so*(12)", "e1+e2+e3-e4-e5-e6"),
    ("so*(12)", "e1+e2-e5-e6"),
    ("so*(12)", "2e1+e2+e3-e4-e5-2e6"),
    ("so*(10)", "e1+e2-e4-e5"),
    ("so*(10)", "2e1+e2-e4-2e5"),
    ("so*(10)", "3e1+e2-e3-e4-2e5"),
    ("so*(10)", "2e1+e2+e3-e4-3e5"),
    ("so*(8)", "e1+e2-e3-e4"),
    ("so*(8)", "2e1-e3-e4"),
    ("so*(8)", "e1+e2-2e4"),
];
/// (family, r_max) for count rows.
const X1_COUNTS: &[(&str, usize)] = &[
    ("su(2,2)", 2),
    ("su(2,3)", 2),
    ("su(2,4)", 2),
    ("su(3,3)", 3),
    ("su(3,4)", 3),
    ("su(4,4)", 4),
    ("sp(3)", 2),
    ("sp(4)", 3),
    ("so*(8)", 3),
    ("so*(10)", 4),
    ("so*(12)", 5),
    ("so*(14)", 6),
    ("so*(16)", 7),
];

/// The involution shown for a family in T2.
pub fn table_sigma(rs: &RootSystem) -> Option<String> {
    Some(match rs.family() {
        HermitianFamily::AIII { p, q } => format!("psi_{}", p + q - 1),
        HermitianFamily::BDI { p } if p % 2 == 1 => format!("psi_{}", p.div_ceil(2)),
        HermitianFamily::BDI { .. } => "tau".into(),
        HermitianFamily::CI { .. } | HermitianFamily::DIII { .. } => "psi_1".into(),
        HermitianFamily::EIII => "psi_3,theta".into(),
        HermitianFamily::EVII => "psi_6,theta".into(),
    })
}

fn rs_of(fam: &str) -> Result<RootSystem> {
    build(fam.parse()?)
}

fn inconsistent(what: String) -> Error {
    Error::Inconsistent(what)
}

fn row(id: TableId, cells: Vec<String>) -> Row {
    let mut r = Row { cells, note: None };
    r.note = erratum(id, &r.key(id)).map(str::to_string);
    r
}

/// Σ N(p) over 1 ≤ p ≤ c, with c capped at #Φ⁺_n / 2.
pub fn sum_n_up_to(rs: &RootSystem, c: usize) -> Result<usize> {
    let cap = c.min(rs.noncompact_positive().len() / 2);
    Ok(counts(rs, cap)?.iter().sum())
}

fn space_row(id: TableId, fam: &str, weight: &str) -> Result<Row> {
    let rs = rs_of(fam)?;
    let lambda = rs.parse_weight(weight)?;
    let cls = hodge_of_lambda(&rs, &lambda)?;
    if cls.r_plus() != cls.r_minus() {
        return Err(inconsistent(format!(
            "{fam} {weight} has Hodge type ({}, {})",
            cls.r_plus(),
            cls.r_minus()
        )));
    }
    let s = summarize(&rs, &cls)?;
    let factors: Vec<CompactDual> = s.dual.factors.iter().map(|f| f.space).collect();
    Ok(row(
        id,
        vec![
            rs.family().to_string(),
            render_weight(id, &rs, &lambda),
            cls.r_plus().to_string(),
            render_space(&factors),
            s.euler.to_string(),
        ],
    ))
}

/// Computes a table from scratch.
pub fn emit(id: TableId) -> Result<GoldenTable> {
    let rows = match id {
        TableId::T1 => T1_FAMILIES
            .iter()
            .map(|f| {
                let rs = rs_of(f)?;
                let c = c_of_x(&rs)
                    .ok_or_else(|| inconsistent(format!("{f}: no proper cycle")))?
                    .c;
                let r = r_zero(&rs)?.map_or("0".to_string(), |r| r.to_string());
                let fam = rs.family();
                Ok(row(
                    id,
                    vec![
                        fam.type_label().into(),
                        fam.to_string(),
                        c.to_string(),
                        r,
                        sum_n_up_to(&rs, c)?.to_string(),
                    ],
                ))
            })
            .collect::<Result<Vec<_>>>()?,
        TableId::T2 => T2_FAMILIES
            .iter()
            .map(|f| {
                let rs = rs_of(f)?;
                let sigma = table_sigma(&rs)
                    .ok_or_else(|| inconsistent(format!("{f}: no table involution")))?;
                let cd = if sigma == "tau" {
                    1
                } else {
                    codim(&rs, &SigmaElement::parse(&rs, &sigma)?)?.codim
                };
                let m = c_of_x(&rs).ok_or_else(|| inconsistent(format!("{f}: no proper cycle")))?;
                if sigma == "tau" && m.source != CycleSource::OuterTau {
                    return Err(inconsistent(format!("{f}: tau expected")));
                }
                let fam = rs.family();
                let shown = if sigma == "tau" {
                    sigma
                } else {
                    SigmaElement::parse(&rs, &sigma)?.display(&rs)
                };
                Ok(row(
                    id,
                    vec![
                        fam.type_label().into(),
                        fam.to_string(),
                        shown,
                        cd.to_string(),
                        m.c.to_string(),
                    ],
                ))
            })
            .collect::<Result<Vec<_>>>()?,
        TableId::T3 => T3_WEIGHTS
            .iter()
            .map(|w| space_row(id, "e6-3", w))
            .collect::<Result<Vec<_>>>()?,
        TableId::T4 => T4_WEIGHTS
            .iter()
            .map(|w| space_row(id, "e7-7", w))
            .collect::<Result<Vec<_>>>()?,
        TableId::T5 => T5_ROWS
            .iter()
            .map(|(f, w)| space_row(id, f, w))
            .collect::<Result<Vec<_>>>()?,
        TableId::X1 => {
            let mut rows = Vec::new();
            for (f, w) in X1_CLASSES {
                let rs = rs_of(f)?;
                let lambda = rs.parse_weight(w)?;
                let cls = hodge_of_lambda(&rs, &lambda)?;
                if cls.r_plus() != cls.r_minus() {
                    return Err(inconsistent(format!("{f} {w} is not balanced")));
                }
                let listed = classify(&rs, cls.r_plus())?
                    .iter()
                    .any(|c| c.same_class(&cls));
                if !listed {
                    return Err(inconsistent(format!(
                        "{f} {w} is missing from the classification"
                    )));
                }
                rows.push(row(
                    id,
                    vec![
                        "class".into(),
                        rs.family().to_string(),
                        rs.display_weight(&lambda),
                        cls.r_plus().to_string(),
                    ],
                ));
            }
            for (f, r) in X1_COUNTS {
                let rs = rs_of(f)?;
                let n: Vec<u64> = counts(&rs, *r)?.into_iter().map(|x| x as u64).collect();
                rows.push(row(
                    id,
                    vec![
                        "counts".into(),
                        rs.family().to_string(),
                        "-".into(),
                        render_counts(&n),
                    ],
                ));
            }
            rows
        }
    };
    Ok(GoldenTable { id, rows })
}

/// One differing cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub table: TableId,
    pub key: String,
    pub column: String,
    pub expected: String,
    pub computed: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: golden {:?}, computed {:?}",
            self.table, self.key, self.column, self.expected, self.computed
        )
    }
}

/// Compares a golden table against a freshly computed one.
pub fn diff(golden: &GoldenTable, computed: &GoldenTable) -> Vec<Mismatch> {
    let id = golden.id;
    let mut out = Vec::new();
    let by_key: BTreeMap<String, &Row> = computed.rows.iter().map(|r| (r.key(id), r)).collect();
    let golden_keys: Vec<String> = golden.rows.iter().map(|r| r.key(id)).collect();
    for g in &golden.rows {
        let key = g.key(id);
        match by_key.get(&key) {
            None => out.push(Mismatch {
                table: id,
                key: key.clone(),
                column: "row".into(),
                expected: "present".into(),
                computed: "absent".into(),
            }),
            Some(c) => {
                for ((name, _), (a, b)) in id.columns().iter().zip(g.cells.iter().zip(&c.cells)) {
                    if a != b {
                        out.push(Mismatch {
                            table: id,
                            key: key.clone(),
                            column: name.to_string(),
                            expected: a.clone(),
                            computed: b.clone(),
                        });
                    }
                }
            }
        }
    }
    for c in &computed.rows {
        let key = c.key(id);
        if !golden_keys.contains(&key) {
            out.push(Mismatch {
                table: id,
                key,
                column: "row".into(),
                expected: "absent".into(),
                computed: "present".into(),
            });
        }
    }
    out
}

/// Parses `golden` and verifies it against a fresh computation.
pub fn verify(id: TableId, golden: &str) -> Result<Vec<Mismatch>> {
    let g = GoldenTable::parse(id, golden)?;
    Ok(diff(&g, &emit(id)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse_and_round_trip() {
        for id in TableId::ALL {
            let t = GoldenTable::parse(id, id.embedded()).unwrap();
            assert_eq!(GoldenTable::parse(id, &t.render()).unwrap(), t);
        }
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let head = "# T1: x\ntype | family | c(X) | r | sum N\n";
        for bad in [
            "AIII | su(3,7) | 3 | 3\n",
            "AIII | su(3,7) | 3 | -1 | 1\n",
            "AIII | su(0,7) | 3 | 3 | 1\n",
            "AIII | su(3,7) | 3 | 3 | 1\nAIII | su(3,7) | 3 | 3 | 1\n",
        ] {
            assert!(
                GoldenTable::parse(TableId::T1, &format!("{head}{bad}")).is_err(),
                "{bad}"
            );
        }
        assert!(GoldenTable::parse(TableId::T1, "type | family | c(X) | r | sum N\n").is_err());
        assert!(GoldenTable::parse(TableId::T2, head).is_err());
        let x1 = "# X1: x\nkind | family | lambda | value\n";
        assert!(GoldenTable::parse(TableId::X1, &format!("{x1}class | sp(4) | - | 3\n")).is_err());
        assert!(GoldenTable::parse(
            TableId::X1,
            &format!("{x1}counts | sp(4) | e1-e4 | 0,0,2\n")
        )
        .is_err());
        assert!(GoldenTable::parse(TableId::X1, &format!("{x1}other | sp(4) | - | 0\n")).is_err());
    }

    #[test]
    fn cells_are_normalized() {
        let text = "# T5: x\nfamily | lambda | R | Y | chi\nso(2,8) | e2 | 1 | Q_6 | 8\n";
        let t = GoldenTable::parse(TableId::T5, text).unwrap();
        assert_eq!(t.rows[0].cells[1], "ε2");
        assert_eq!(t.rows[0].cells[3], "SO(8)/U(4)");
    }
}
