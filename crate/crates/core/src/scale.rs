//! Min-max rescaling of the raw `x`/`y` columns into unit-cell coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::civil::WeekStart;
use crate::error::{Error, Result};
use crate::table::TidyTable;

/// Which rows share a `y` range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScaleMode {
    /// One range for the whole table.
    #[default]
    Fixed,
    /// One range per date (cell).
    Free,
    /// One range per weekday.
    FreeWday,
    /// One range per day of month.
    FreeMday,
}

impl ScaleMode {
    pub const ALL: [ScaleMode; 4] = [Self::Fixed, Self::Free, Self::FreeWday, Self::FreeMday];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Fixed => "fixed",
            Self::Free => "free",
            Self::FreeWday => "free_wday",
            Self::FreeMday => "free_mday",
        }
    }
}

impl fmt::Display for ScaleMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScaleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scale mode '{s}'")))
    }
}

/// Rescale to `[0, 1]` by the min and max of the non-missing values.
///
/// A constant series maps to 0.5. Missing values stay missing.
pub fn rescale01(values: &[Option<f64>]) -> Result<Vec<Option<f64>>> {
    let (lo, hi) = values
        .iter()
        .flatten()
        .fold(None, |acc: Option<(f64, f64)>, &v| match acc {
            None => Some((v, v)),
            Some((lo, hi)) => Some((lo.min(v), hi.max(v))),
        })
        .ok_or(Error::EmptyDomain)?;
    let range = hi - lo;
    Ok(values
        .iter()
        .map(|v| {
            v.map(|v| {
                if range > 0.0 {
                    ((v - lo) / range).clamp(0.0, 1.0)
                } else {
                    0.5
                }
            })
        })
        .collect())
}

/// Scaled within-cell position per row.
#[derive(Debug, Clone, PartialEq)]
pub struct Scaled {
    pub h: Vec<f64>,
    pub c: Vec<Option<f64>>,
}

/// Grouping key for one row under `mode`.
fn group_key(table: &TidyTable, row: usize, mode: ScaleMode) -> i64 {
    let date = table.dates()[row];
    match mode {
        ScaleMode::Fixed => 0,
        ScaleMode::Free => date.to_days(),
        ScaleMode::FreeWday => i64::from(date.day_of_week(WeekStart::Monday).index()),
        ScaleMode::FreeMday => i64::from(date.day()),
    }
}

/// Scale `x` globally and `y` within the groups selected by `mode`.
///
/// A group whose `y` values are all missing stays missing; the call fails
/// only when the whole `y` column is missing.
pub fn apply_scale(table: &TidyTable, mode: ScaleMode) -> Result<Scaled> {
    let x: Vec<Option<f64>> = table.x().iter().map(|&v| Some(v)).collect();
    let h = rescale01(&x)?.into_iter().flatten().collect();

    let y = table.y();
    if y.iter().all(Option::is_none) {
        return Err(Error::EmptyDomain);
    }

    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for row in 0..table.len() {
        groups.entry(group_key(table, row, mode)).or_default().push(row);
    }

    let mut c = vec![None; table.len()];
    for rows in groups.values() {
        let values: Vec<Option<f64>> = rows.iter().map(|&r| y[r]).collect();
        if values.iter().all(Option::is_none) {
            continue;
        }
        for (&r, v) in rows.iter().zip(rescale01(&values)?) {
            c[r] = v;
        }
    }
    Ok(Scaled { h, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::civil::Date;

    fn close(a: &[Option<f64>], b: &[Option<f64>]) -> bool {
        a.len() == b.len()
            && a.iter().zip(b).all(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => (a - b).abs() < 1e-15,
                (None, None) => true,
                _ => false,
            })
    }

    #[test]
    fn rescale_examples() {
        let out = rescale01(&[Some(10.0), Some(20.0), Some(30.0)]).unwrap();
        assert!(close(&out, &[Some(0.0), Some(0.5), Some(1.0)]));
        let out = rescale01(&[Some(7.0); 3]).unwrap();
        assert!(close(&out, &[Some(0.5); 3]));
        let out = rescale01(&[Some(0.0), Some(1.0), None, Some(3.0)]).unwrap();
        assert!(close(&out, &[Some(0.0), Some(1.0 / 3.0), None, Some(1.0)]));
        assert!(matches!(rescale01(&[None, None]), Err(Error::EmptyDomain)));
        assert!(matches!(rescale01(&[]), Err(Error::EmptyDomain)));
    }

    #[test]
    fn mode_names_round_trip() {
        for m in ScaleMode::ALL {
            assert_eq!(m.as_str().parse::<ScaleMode>().unwrap(), m);
        }
        assert!("bogus".parse::<ScaleMode>().is_err());
    }

    fn two_days() -> TidyTable {
        let d1: Date = "2016-01-04".parse().unwrap();
        let d2: Date = "2016-01-05".parse().unwrap();
        TidyTable::from_parts(
            vec![d1, d1, d2, d2],
            vec![0.0, 23.0, 0.0, 23.0],
            vec![Some(0.0), Some(10.0), Some(0.0), Some(100.0)],
        )
        .unwrap()
    }

    #[test]
    fn fixed_uses_global_range() {
        let s = apply_scale(&two_days(), ScaleMode::Fixed).unwrap();
        assert!(close(&s.c, &[Some(0.0), Some(0.1), Some(0.0), Some(1.0)]));
        assert_eq!(s.h, vec![0.0, 1.0, 0.0, 1.0]);
    }

    #[test]
    fn free_uses_per_day_range() {
        let s = apply_scale(&two_days(), ScaleMode::Free).unwrap();
        assert!(close(&s.c, &[Some(0.0), Some(1.0), Some(0.0), Some(1.0)]));
    }

    #[test]
    fn all_missing_group_stays_missing() {
        let d1: Date = "2016-01-04".parse().unwrap();
        let d2: Date = "2016-01-05".parse().unwrap();
        let t = TidyTable::from_parts(
            vec![d1, d2, d2],
            vec![0.0, 1.0, 2.0],
            vec![None, Some(3.0), Some(4.0)],
        )
        .unwrap();
        let s = apply_scale(&t, ScaleMode::Free).unwrap();
        assert_eq!(s.c, vec![None, Some(0.0), Some(1.0)]);

        let t = TidyTable::from_parts(vec![d1], vec![0.0], vec![None]).unwrap();
        assert!(matches!(apply_scale(&t, ScaleMode::Fixed), Err(Error::EmptyDomain)));
    }
}
