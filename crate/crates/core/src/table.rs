//! Column-oriented input records and CSV ingestion.

use std::io::Read;
use std::path::Path;

use crate::civil::Date;
use crate::error::{Error, Result};
use crate::format::format_number;

/// Column names bound to each role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleMap {
    pub date: String,
    pub x: String,
    pub y: String,
    pub group: Option<String>,
    pub facet: Option<String>,
}

impl RoleMap {
    pub fn new(date: impl Into<String>, x: impl Into<String>, y: impl Into<String>) -> Self {
        Self {
            date: date.into(),
            x: x.into(),
            y: y.into(),
            group: None,
            facet: None,
        }
    }

    pub fn with_group(mut self, name: impl Into<String>) -> Self {
        self.group = Some(name.into());
        self
    }

    pub fn with_facet(mut self, name: impl Into<String>) -> Self {
        self.facet = Some(name.into());
        self
    }
}

/// Tidy input: one row per observation.
///
/// The raw text of every input column is kept so it can be written back out
/// unchanged next to the computed coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct TidyTable {
    headers: Vec<String>,
    records: Vec<Vec<String>>,
    dates: Vec<Date>,
    x: Vec<f64>,
    y: Vec<Option<f64>>,
    group: Option<Vec<String>>,
    facet: Option<Vec<String>>,
}

fn check_finite(v: f64, row: usize, column: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Parse {
            row,
            message: format!("non-finite value in column '{column}'"),
        })
    }
}

impl TidyTable {
    /// Build a table from typed columns; raw columns are named `date`, `x`, `y`.
    pub fn from_parts(dates: Vec<Date>, x: Vec<f64>, y: Vec<Option<f64>>) -> Result<Self> {
        if dates.len() != x.len() || dates.len() != y.len() {
            return Err(Error::InvalidArgument(format!(
                "column lengths differ: {} dates, {} x, {} y",
                dates.len(),
                x.len(),
                y.len()
            )));
        }
        for (row, (&xv, yv)) in x.iter().zip(&y).enumerate() {
            check_finite(xv, row + 1, "x")?;
            if let Some(v) = yv {
                check_finite(*v, row + 1, "y")?;
            }
        }
        let records = dates
            .iter()
            .zip(&x)
            .zip(&y)
            .map(|((d, x), y)| {
                vec![
                    d.to_string(),
                    format_number(*x),
                    y.map(format_number).unwrap_or_default(),
                ]
            })
            .collect();
        Ok(Self {
            headers: vec!["date".into(), "x".into(), "y".into()],
            records,
            dates,
            x,
            y,
            group: None,
            facet: None,
        })
    }

    fn push_column(&mut self, name: &str, values: &[String]) -> Result<()> {
        if values.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "column '{name}' has {} values for {} rows",
                values.len(),
                self.len()
            )));
        }
        self.headers.push(name.to_string());
        for (rec, v) in self.records.iter_mut().zip(values) {
            rec.push(v.clone());
        }
        Ok(())
    }

    pub fn with_group(mut self, name: &str, values: Vec<String>) -> Result<Self> {
        self.push_column(name, &values)?;
        self.group = Some(values);
        Ok(self)
    }

    pub fn with_facet(mut self, name: &str, values: Vec<String>) -> Result<Self> {
        self.push_column(name, &values)?;
        self.facet = Some(values);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.dates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dates.is_empty()
    }

    pub fn headers(&self) -> &[String] {
        &self.headers
    }

    pub fn records(&self) -> &[Vec<String>] {
        &self.records
    }

    pub fn dates(&self) -> &[Date] {
        &self.dates
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[Option<f64>] {
        &self.y
    }

    pub fn group(&self) -> Option<&[String]> {
        self.group.as_deref()
    }

    pub fn facet(&self) -> Option<&[String]> {
        self.facet.as_deref()
    }
}

/// Read a CSV file, binding columns by the names in `roles`.
pub fn read_csv(path: impl AsRef<Path>, roles: &RoleMap) -> Result<TidyTable> {
    let file = std::fs::File::open(path.as_ref())?;
    read_csv_from(file, roles)
}

/// Like [`read_csv`] but from any reader. Row numbers in errors count data
/// records from 1, excluding the header.
pub fn read_csv_from<R: Read>(reader: R, roles: &RoleMap) -> Result<TidyTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let headers: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();

    let find = |role: &str, name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Schema(format!("{role} column '{name}' not found")))
    };
    let date_col = find("date", &roles.date)?;
    let x_col = find("x", &roles.x)?;
    let y_col = find("y", &roles.y)?;
    let group_col = roles.group.as_deref().map(|g| find("group", g)).transpose()?;
    let facet_col = roles.facet.as_deref().map(|f| find("facet", f)).transpose()?;

    let mut table = TidyTable {
        headers: headers.clone(),
        records: Vec::new(),
        dates: Vec::new(),
        x: Vec::new(),
        y: Vec::new(),
        group: group_col.map(|_| Vec::new()),
        facet: facet_col.map(|_| Vec::new()),
    };

    for (idx, rec) in rdr.records().enumerate() {
        let row = idx + 1;
        let rec = rec.map_err(|e| Error::Parse {
            row,
            message: e.to_string(),
        })?;
        let field = |col: usize| rec.get(col).unwrap_or("").trim();

        let date: Date = field(date_col).parse().map_err(|e: Error| Error::Parse {
            row,
            message: format!("column '{}': {e}", roles.date),
        })?;
        let number = |col: usize, name: &str| -> Result<f64> {
            let text = field(col);
            let v: f64 = text.parse().map_err(|_| Error::Parse {
                row,
                message: format!("column '{name}': '{text}' is not a number"),
            })?;
            check_finite(v, row, name)
        };
        let x = number(x_col, &roles.x)?;
        let y = if field(y_col).is_empty() {
            None
        } else {
            Some(number(y_col, &roles.y)?)
        };

        table.dates.push(date);
        table.x.push(x);
        table.y.push(y);
        if let (Some(col), Some(g)) = (group_col, table.group.as_mut()) {
            g.push(field(col).to_string());
        }
        if let (Some(col), Some(f)) = (facet_col, table.facet.as_mut()) {
            f.push(field(col).to_string());
        }
        table.records.push(rec.iter().map(str::to_string).collect());
    }
    Ok(table)
}
