//! CSV ingestion: numeric features plus optional label columns.

use std::collections::HashMap;
use std::io::Read;
use std::str::FromStr;

use kselect::DataMatrix;

use crate::error::{CliError, CliResult};

/// Which columns hold ground-truth labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelColumns {
    None,
    First,
    Last,
    /// Zero-based column indices.
    Indices(Vec<usize>),
}

impl FromStr for LabelColumns {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(Self::None),
            "first" => Ok(Self::First),
            "last" => Ok(Self::Last),
            _ => s
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad label column '{t}'")))
                .collect::<Result<Vec<_>, _>>()
                .map(Self::Indices),
        }
    }
}

impl LabelColumns {
    fn resolve(&self, width: usize) -> CliResult<Vec<usize>> {
        let cols = match self {
            Self::None => vec![],
            Self::First => vec![0],
            Self::Last => vec![width.saturating_sub(1)],
            Self::Indices(v) => v.clone(),
        };
        if let Some(&bad) = cols.iter().find(|&&c| c >= width) {
            return Err(CliError::Config(format!("label column {bad} is out of range for {width} columns")));
        }
        if cols.len() >= width {
            return Err(CliError::Config("no feature columns left after removing labels".into()));
        }
        Ok(cols)
    }
}

/// Parsed input: feature matrix, label vectors (one per label column) and
/// feature names when a header was present.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub x: DataMatrix,
    pub truths: Vec<Vec<usize>>,
    pub feature_names: Option<Vec<String>>,
}

fn looks_numeric(field: &str) -> bool {
    field.trim().parse::<f64>().is_ok()
}

/// Reads RFC-4180 CSV. The first record is treated as a header when any of
/// its feature fields is not a number.
pub fn read_csv<R: Read>(reader: R, labels: &LabelColumns) -> CliResult<Dataset> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(reader);
    let mut records = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| match e.position() {
            Some(p) => CliError::Input(format!("line {}: {}", p.line(), e)),
            None => CliError::Input(e.to_string()),
        })?;
        let line = rec.position().map_or(0, |p| p.line());
        records.push((line, rec));
    }
    let Some((_, first)) = records.first() else {
        return Err(CliError::Input("the input has no rows".into()));
    };
    let width = first.len();
    let label_cols = labels.resolve(width)?;
    let is_feature = |c: usize| !label_cols.contains(&c);

    let has_header = first.iter().enumerate().any(|(c, f)| is_feature(c) && !looks_numeric(f));
    let feature_names = has_header.then(|| {
        first.iter().enumerate().filter(|(c, _)| is_feature(*c)).map(|(_, f)| f.trim().to_string()).collect()
    });
    let body = &records[usize::from(has_header)..];
    if body.is_empty() {
        return Err(CliError::Input("the input has a header but no data rows".into()));
    }

    let d = width - label_cols.len();
    let mut values = Vec::with_capacity(body.len() * d);
    let mut codes: Vec<HashMap<String, usize>> = vec![HashMap::new(); label_cols.len()];
    let mut truths: Vec<Vec<usize>> = vec![Vec::with_capacity(body.len()); label_cols.len()];
    for (line, rec) in body {
        for (c, field) in rec.iter().enumerate() {
            if let Some(t) = label_cols.iter().position(|&l| l == c) {
                let map = &mut codes[t];
                let next = map.len();
                truths[t].push(*map.entry(field.trim().to_string()).or_insert(next));
                continue;
            }
            let v: f64 = field.trim().parse().map_err(|_| {
                CliError::Input(format!("line {line}, column {}: '{field}' is not a number", c + 1))
            })?;
            if !v.is_finite() {
                return Err(CliError::Input(format!("line {line}, column {}: non-finite value '{field}'", c + 1)));
            }
            values.push(v);
        }
    }
    let x = DataMatrix::from_vec(body.len(), d, values)?;
    Ok(Dataset { x, truths, feature_names })
}
