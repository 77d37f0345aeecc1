//! CSV ingestion into labelled samples.
//!
//! Three layouts are accepted: one file with two (or more) value columns,
//! two files with one value column each, or a long file with a value column
//! and a binary group column. Blank and missing cells (`NA`, `NaN`, `.`)
//! are dropped and counted.

use std::collections::BTreeMap;
use std::fs::File;
use std::path::{Path, PathBuf};

use sdtest_core::{log_returns, Sample};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Default)]
pub struct InputSpec {
    pub input: PathBuf,
    pub input2: Option<PathBuf>,
    /// Group column for long-format input.
    pub by: Option<String>,
    /// Reverse the sample order.
    pub switch: bool,
    /// Cells are prices; convert each sample to log returns.
    pub prices: bool,
    /// Value columns to read. Defaults: the first two columns (two-column
    /// mode), the first column of each file (two files), or the first
    /// non-group column (long format).
    pub columns: Vec<String>,
    /// Read every value column, or accept more than two group levels, for
    /// K-sample tests.
    pub all_columns: bool,
}

#[derive(Debug, Clone)]
pub struct Ingested {
    pub samples: Vec<Sample>,
    /// Blank or missing cells that were dropped.
    pub dropped: usize,
}

struct Table {
    path: PathBuf,
    headers: Vec<String>,
    rows: Vec<csv::StringRecord>,
}

impl Table {
    fn read(path: &Path) -> Result<Self> {
        let file = File::open(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        let csv_err = |source| CliError::Csv {
            path: path.to_owned(),
            source,
        };
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
        let headers: Vec<String> = reader.headers().map_err(csv_err)?.iter().map(str::to_owned).collect();
        let rows = reader.records().collect::<std::result::Result<Vec<_>, _>>().map_err(csv_err)?;
        Ok(Self {
            path: path.to_owned(),
            headers,
            rows,
        })
    }

    fn column_index(&self, name: &str) -> Result<usize> {
        self.headers.iter().position(|h| h == name).ok_or_else(|| {
            CliError::Config(format!(
                "column '{name}' not found in {} (columns: {})",
                self.path.display(),
                self.headers.join(", ")
            ))
        })
    }

    /// 1-based line number of data row `i`, counting the header as line 1.
    fn line(i: usize) -> usize {
        i + 2
    }

    fn cell<'a>(&self, row: &'a csv::StringRecord, col: usize) -> &'a str {
        row.get(col).unwrap_or("")
    }

    fn parse(&self, i: usize, col: usize, raw: &str) -> Result<Option<f64>> {
        if is_missing(raw) {
            return Ok(None);
        }
        let err = |message: String| CliError::Parse {
            path: self.path.clone(),
            row: Self::line(i),
            column: self.headers[col].clone(),
            message,
        };
        let v: f64 = raw.parse().map_err(|_| err(format!("'{raw}' is not a number")))?;
        if !v.is_finite() {
            return Err(err(format!("'{raw}' is not finite")));
        }
        Ok(Some(v))
    }

    fn numeric_column(&self, col: usize, dropped: &mut usize) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            match self.parse(i, col, self.cell(row, col))? {
                Some(v) => out.push(v),
                None => *dropped += 1,
            }
        }
        Ok(out)
    }
}

fn is_missing(raw: &str) -> bool {
    matches!(raw, "" | "." | "NA" | "na" | "NaN" | "nan" | "NAN")
}

pub fn ingest(spec: &InputSpec) -> Result<Ingested> {
    let table = Table::read(&spec.input)?;
    let mut dropped = 0;
    let mut columns: Vec<(String, Vec<f64>)> = if let Some(by) = &spec.by {
        long_format(&table, by, spec.columns.first().map(String::as_str), spec.all_columns, &mut dropped)?
    } else if let Some(path2) = &spec.input2 {
        let second = Table::read(path2)?;
        let mut out = Vec::with_capacity(2);
        for (t, name) in [(&table, spec.columns.first()), (&second, spec.columns.get(1))] {
            let col = match name {
                Some(n) => t.column_index(n)?,
                None => 0,
            };
            out.push((t.headers[col].clone(), t.numeric_column(col, &mut dropped)?));
        }
        out
    } else {
        let indices: Vec<usize> = if !spec.columns.is_empty() {
            spec.columns.iter().map(|c| table.column_index(c)).collect::<Result<_>>()?
        } else if spec.all_columns {
            (0..table.headers.len()).collect()
        } else {
            (0..table.headers.len().min(2)).collect()
        };
        let needed = if spec.all_columns { indices.len() >= 2 } else { indices.len() == 2 };
        if !needed {
            return Err(CliError::Config(format!(
                "{} needs {} value columns, found {}",
                spec.input.display(),
                if spec.all_columns { "at least 2" } else { "exactly 2" },
                indices.len()
            )));
        }
        indices
            .into_iter()
            .map(|c| Ok((table.headers[c].clone(), table.numeric_column(c, &mut dropped)?)))
            .collect::<Result<_>>()?
    };

    if spec.switch {
        columns.reverse();
    }
    let samples = columns
        .into_iter()
        .map(|(label, values)| {
            let values = if spec.prices { log_returns(&values)? } else { values };
            Ok(Sample::new(label, values)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ingested { samples, dropped })
}

fn long_format(
    table: &Table,
    by: &str,
    value: Option<&str>,
    many: bool,
    dropped: &mut usize,
) -> Result<Vec<(String, Vec<f64>)>> {
    let group_col = table.column_index(by)?;
    let value_col = match value {
        Some(v) => table.column_index(v)?,
        None => (0..table.headers.len()).find(|&c| c != group_col).ok_or_else(|| {
            CliError::Config(format!("{} has no value column besides '{by}'", table.path.display()))
        })?,
    };
    let mut groups: BTreeMap<GroupKey, Vec<f64>> = BTreeMap::new();
    for (i, row) in table.rows.iter().enumerate() {
        let level = table.cell(row, group_col);
        if is_missing(level) {
            *dropped += 1;
            continue;
        }
        match table.parse(i, value_col, table.cell(row, value_col))? {
            Some(v) => groups.entry(GroupKey::new(level)).or_default().push(v),
            None => *dropped += 1,
        }
    }
    if groups.len() < 2 || (!many && groups.len() != 2) {
        return Err(CliError::GroupArity {
            column: by.to_owned(),
            levels: groups.len(),
        });
    }
    Ok(groups
        .into_iter()
        .map(|(k, v)| (format!("{by}={}", k.raw), v))
        .collect())
}

/// Group levels order numerically when they parse as numbers, else lexically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct GroupKey {
    numeric: Option<OrderedF64>,
    raw: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct OrderedF64(f64);

impl Eq for OrderedF64 {}

impl PartialOrd for OrderedF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl GroupKey {
    fn new(raw: &str) -> Self {
        Self {
            numeric: raw.parse::<f64>().ok().map(OrderedF64),
            raw: raw.to_owned(),
        }
    }
}
