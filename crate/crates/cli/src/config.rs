//! Job configuration: a built-in fixture or explicit algebra and group tables in TOML.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;
use thl_core::algebra::{validate_action, validate_algebra, Algebra, AlgebraMap, FiniteGroupAction};
use thl_core::fixtures::{fixture, FIXTURE_NAMES};
use thl_core::linalg::{parse_rational, SparseMatrix, SparseVec};
use toml::Spanned;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "human" => Some(Format::Human),
            "machine" => Some(Format::Machine),
            _ => None,
        }
    }
}

/// A fully validated job.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub name: String,
    pub algebra: Algebra,
    pub group: FiniteGroupAction,
    pub command: Option<String>,
    pub max_degree: usize,
    pub twist: Option<String>,
    pub lambda_coinvariants: bool,
    pub format: Format,
}

impl JobConfig {
    pub fn from_fixture(name: &str) -> Result<JobConfig, CliError> {
        let f = fixture(name).ok_or_else(|| CliError::UnknownFixture {
            name: name.to_string(),
            known: FIXTURE_NAMES.join(", "),
        })?;
        Ok(JobConfig {
            name: f.name.to_string(),
            algebra: f.algebra,
            group: f.group,
            command: None,
            max_degree: f.default_degree,
            twist: Some(f.default_twist.to_string()),
            lambda_coinvariants: true,
            format: Format::Human,
        })
    }

    /// Index of the twist element, if one is configured.
    pub fn twist_index(&self) -> Result<Option<usize>, CliError> {
        match &self.twist {
            None => Ok(None),
            Some(name) => self.group.element_index(name).map(Some).map_err(|_| CliError::Parse {
                line: None,
                field: "task.twist".into(),
                detail: format!("`{name}` is not a group element"),
            }),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    name: Option<String>,
    fixture: Option<String>,
    algebra: Option<RawAlgebra>,
    group: Option<RawGroup>,
    #[serde(default)]
    task: RawTask,
}

/// `mult[i][j]` lists the coordinates of `e_i e_j`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    basis: Vec<String>,
    unit: usize,
    mult: Vec<Vec<Vec<Spanned<String>>>>,
}

/// `table[x][y]` names `xy`; `action.x[i][j]` is the coefficient of `e_i` in `x(e_j)`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    elements: Vec<String>,
    table: Vec<Vec<String>>,
    action: BTreeMap<String, Vec<Vec<Spanned<String>>>>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawTask {
    command: Option<String>,
    max_degree: Option<usize>,
    twist: Option<String>,
    lambda_coinvariants: Option<bool>,
    format: Option<String>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn rational_at(text: &str, field: String, s: &Spanned<String>) -> Result<thl_core::linalg::Rational, CliError> {
    parse_rational(s.get_ref()).map_err(|e| CliError::Parse {
        line: Some(line_of(text, s.span().start)),
        field,
        detail: e.to_string(),
    })
}

fn shape(field: &str, detail: String) -> CliError {
    CliError::Parse { line: None, field: field.to_string(), detail }
}

fn build_algebra(text: &str, raw: &RawAlgebra) -> Result<Algebra, CliError> {
    let d = raw.basis.len();
    if d == 0 {
        return Err(shape("algebra.basis", "empty basis".into()));
    }
    if raw.unit >= d {
        return Err(shape("algebra.unit", format!("index {} out of range for dimension {d}", raw.unit)));
    }
    if raw.mult.len() != d || raw.mult.iter().any(|row| row.len() != d) {
        return Err(shape("algebra.mult", format!("expected a {d}x{d} table")));
    }
    let mut mult = Vec::with_capacity(d);
    for (i, row) in raw.mult.iter().enumerate() {
        let mut out_row = Vec::with_capacity(d);
        for (j, entry) in row.iter().enumerate() {
            if entry.len() != d {
                return Err(shape(&format!("algebra.mult[{i}][{j}]"), format!("expected {d} coordinates")));
            }
            let mut pairs = Vec::new();
            for (k, c) in entry.iter().enumerate() {
                pairs.push((k, rational_at(text, format!("algebra.mult[{i}][{j}][{k}]"), c)?));
            }
            out_row.push(SparseVec::from_pairs(pairs));
        }
        mult.push(out_row);
    }
    let a = Algebra::new_unchecked(raw.basis.clone(), SparseVec::unit(raw.unit), mult)?;
    validate_algebra(&a)?;
    Ok(a)
}

fn build_group(text: &str, raw: &RawGroup, d: usize) -> Result<FiniteGroupAction, CliError> {
    let r = raw.elements.len();
    let index = |field: String, name: &str| {
        raw.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| shape(&field, format!("unknown element `{name}`")))
    };
    if raw.table.len() != r || raw.table.iter().any(|row| row.len() != r) {
        return Err(shape("group.table", format!("expected a {r}x{r} table")));
    }
    let mut table = vec![vec![0; r]; r];
    for (x, row) in raw.table.iter().enumerate() {
        for (y, name) in row.iter().enumerate() {
            table[x][y] = index(format!("group.table[{x}][{y}]"), name)?;
        }
    }
    for name in raw.action.keys() {
        index(format!("group.action.{name}"), name)?;
    }
    let mut action = Vec::with_capacity(r);
    for name in &raw.elements {
        let field = format!("group.action.{name}");
        let rows = raw.action.get(name).ok_or_else(|| shape(&field, "missing automorphism".into()))?;
        if rows.len() != d || rows.iter().any(|row| row.len() != d) {
            return Err(shape(&field, format!("expected a {d}x{d} matrix")));
        }
        let mut triplets = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                triplets.push((i, j, rational_at(text, format!("{field}[{i}][{j}]"), c)?));
            }
        }
        action.push(AlgebraMap::new(SparseMatrix::from_triplets(d, d, triplets)));
    }
    Ok(FiniteGroupAction::new(raw.elements.clone(), table, action)?)
}

/// Parses and validates a configuration text.
pub fn parse_config(text: &str) -> Result<JobConfig, CliError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Parse {
        line: e.span().map(|s| line_of(text, s.start)),
        field: "config".into(),
        detail: e.message().to_string(),
    })?;
    let mut job = match (&raw.fixture, &raw.algebra) {
        (Some(_), Some(_)) => return Err(shape("fixture", "give either a fixture or an algebra, not both".into())),
        (Some(name), None) => {
            if raw.group.is_some() {
                return Err(shape("group", "a fixture already fixes the group".into()));
            }
            JobConfig::from_fixture(name)?
        }
        (None, Some(ra)) => {
            let algebra = build_algebra(text, ra)?;
            let group = match &raw.group {
                Some(rg) => build_group(text, rg, algebra.dim())?,
                None => FiniteGroupAction::trivial(algebra.dim()),
            };
            validate_action(&algebra, &group)?;
            JobConfig {
                name: raw.name.clone().unwrap_or_else(|| "custom".into()),
                algebra,
                group,
                command: None,
                max_degree: 3,
                twist: None,
                lambda_coinvariants: true,
                format: Format::Human,
            }
        }
        (None, None) => return Err(shape("algebra", "missing `fixture` or `[algebra]`".into())),
    };
    if let Some(name) = raw.name {
        job.name = name;
    }
    let t = raw.task;
    job.command = t.command;
    if let Some(n) = t.max_degree {
        job.max_degree = n;
    }
    if t.twist.is_some() {
        job.twist = t.twist;
    }
    if let Some(flag) = t.lambda_coinvariants {
        job.lambda_coinvariants = flag;
    }
    if let Some(f) = t.format {
        job.format = Format::parse(&f).ok_or_else(|| shape("task.format", format!("`{f}` is not human or machine")))?;
    }
    job.twist_index()?;
    Ok(job)
}

pub fn load_config(path: &Path) -> Result<JobConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    parse_config(&text)
}
