//! Composes scaling, cell addressing and projection into a [`LayoutFrame`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::civil::{Date, WeekStart, YearMonth};
use crate::decor::{label_positions, reference_lines, LabelAnchor, LabelLayout, Locale, Segment};
use crate::error::{Error, Result};
use crate::layout::{
    auto_grid, cell_position, daily_cell, month_slot, polar_project, weekly_cell, BlockShape,
    Bounds, CellAddress, Direction, Geometry, GridDims, LayoutPoint, MonthFrame, ScaledPoint,
    DEFAULT_GAP,
};
use crate::scale::{apply_scale, ScaleMode, Scaled};
use crate::table::TidyTable;

/// Calendar variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Calendar {
    /// 5 x 7 block per month, blocks arranged on a grid.
    #[default]
    Monthly,
    /// One row per week, one column per weekday.
    Weekly,
    /// One row per month, one column per day of month.
    Daily,
}

impl Calendar {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Monthly => "monthly",
            Self::Weekly => "weekly",
            Self::Daily => "daily",
        }
    }
}

impl fmt::Display for Calendar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Calendar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monthly" => Ok(Self::Monthly),
            "weekly" => Ok(Self::Weekly),
            "daily" => Ok(Self::Daily),
            _ => Err(Error::InvalidArgument(format!("unknown calendar '{s}'"))),
        }
    }
}

/// Layout options.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalendarSpec {
    pub calendar: Calendar,
    pub dir: Direction,
    /// Weeks start on Sunday instead of Monday.
    pub sunday: bool,
    /// Rows of month blocks (monthly calendar only).
    pub nrow: Option<u32>,
    /// Columns of month blocks (monthly calendar only).
    pub ncol: Option<u32>,
    pub polar: bool,
    pub scale: ScaleMode,
    pub width: f64,
    pub height: f64,
    /// Gap between blocks in cell units; [`DEFAULT_GAP`] when unset.
    pub margin: Option<f64>,
}

impl Default for CalendarSpec {
    fn default() -> Self {
        Self {
            calendar: Calendar::Monthly,
            dir: Direction::Horizontal,
            sunday: false,
            nrow: None,
            ncol: None,
            polar: false,
            scale: ScaleMode::Fixed,
            width: 0.95,
            height: 0.95,
            margin: None,
        }
    }
}

impl CalendarSpec {
    pub fn week_start(&self) -> WeekStart {
        if self.sunday {
            WeekStart::Sunday
        } else {
            WeekStart::Monday
        }
    }

    pub fn gap(&self) -> f64 {
        self.margin.unwrap_or(DEFAULT_GAP)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("width", self.width), ("height", self.height)] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::InvalidArgument(format!("{name} {v} not in (0, 1]")));
            }
        }
        if let Some(m) = self.margin {
            if !(m.is_finite() && m >= 0.0) {
                return Err(Error::InvalidArgument(format!("margin {m} must be >= 0")));
            }
        }
        if self.nrow == Some(0) || self.ncol == Some(0) {
            return Err(Error::InvalidArgument("nrow and ncol must be positive".into()));
        }
        Ok(())
    }
}

/// Every month from the earliest to the latest date, gaps included.
pub fn span_months(table: &TidyTable) -> Vec<YearMonth> {
    let (Some(first), Some(last)) = (table.dates().iter().min(), table.dates().iter().max()) else {
        return Vec::new();
    };
    let (first, last) = (first.year_month(), last.year_month());
    std::iter::successors(Some(first), |ym| Some(ym.next()))
        .take_while(|ym| *ym <= last)
        .collect()
}

/// Input rows with their calendar coordinates and decorations.
#[derive(Debug, Clone)]
pub struct LayoutFrame {
    table: TidyTable,
    spec: CalendarSpec,
    months: Vec<YearMonth>,
    geometry: Geometry,
    blocks: Vec<(u32, u32)>,
    cells: Vec<CellAddress>,
    scaled: Scaled,
    x_cal: Vec<Option<f64>>,
    y_cal: Vec<Option<f64>>,
    segments: Vec<Segment>,
    labels: Vec<LabelAnchor>,
    extents: Bounds,
}

impl LayoutFrame {
    pub fn table(&self) -> &TidyTable {
        &self.table
    }

    pub fn spec(&self) -> &CalendarSpec {
        &self.spec
    }

    pub fn months(&self) -> &[YearMonth] {
        &self.months
    }

    pub fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    /// Grid slot of each laid-out block, parallel to [`LayoutFrame::months`]
    /// for monthly and daily calendars.
    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    pub fn cells(&self) -> &[CellAddress] {
        &self.cells
    }

    pub fn scaled(&self) -> &Scaled {
        &self.scaled
    }

    pub fn x_cal(&self) -> &[Option<f64>] {
        &self.x_cal
    }

    pub fn y_cal(&self) -> &[Option<f64>] {
        &self.y_cal
    }

    /// Canvas point of a row, if it has one.
    pub fn point(&self, row: usize) -> Option<LayoutPoint> {
        Some(LayoutPoint {
            x: self.x_cal[row]?,
            y: self.y_cal[row]?,
        })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn labels(&self) -> &[LabelAnchor] {
        &self.labels
    }

    /// Bounding box of all laid-out blocks.
    pub fn extents(&self) -> Bounds {
        self.extents
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of distinct cells holding at least one row.
    pub fn populated_cells(&self) -> usize {
        self.cells.iter().collect::<BTreeSet<_>>().len()
    }

    /// Recompute label text for another locale.
    pub fn relabel(&mut self, locale: &Locale) {
        self.labels = label_positions(&self.label_layout(), locale);
    }

    fn label_layout(&self) -> LabelLayout {
        let g = &self.geometry;
        let start = self.spec.week_start();
        let months = match self.spec.calendar {
            Calendar::Monthly | Calendar::Daily => self
                .months
                .iter()
                .zip(&self.blocks)
                .map(|(ym, &(m, n))| (*ym, g.block_bounds(m, n)))
                .collect(),
            Calendar::Weekly => {
                let span_start = self.table.dates().iter().min().copied();
                self.months
                    .iter()
                    .filter_map(|ym| {
                        let first = ym.first_day().ok()?.max(span_start?);
                        let (i, j) = weekly_cell(first, span_start?, start).ok()?;
                        let cell = g.cell_bounds(&CellAddress { m: 1, n: 1, i, j });
                        let ext = self.extents;
                        let region = match g.dir {
                            Direction::Horizontal => Bounds {
                                min_y: cell.min_y,
                                max_y: cell.max_y,
                                ..ext
                            },
                            Direction::Vertical => Bounds {
                                min_x: cell.min_x,
                                max_x: cell.max_x,
                                ..ext
                            },
                        };
                        Some((*ym, region))
                    })
                    .collect()
            }
        };
        let weekday_cells = match self.spec.calendar {
            Calendar::Monthly | Calendar::Weekly => Some(std::array::from_fn(|idx| {
                g.cell_bounds(&CellAddress {
                    m: 1,
                    n: 1,
                    i: 1,
                    j: idx as u32 + 1,
                })
            })),
            Calendar::Daily => None,
        };
        LabelLayout {
            months,
            weekday_cells,
            extents: self.extents,
            dir: g.dir,
            week_start: start,
        }
    }
}

fn monthly_dims(n_months: usize, spec: &CalendarSpec) -> Result<GridDims> {
    let n = n_months as u32;
    let (rows, cols) = match (spec.nrow, spec.ncol) {
        (Some(r), Some(c)) => (r, c),
        (Some(r), None) => (r, n.div_ceil(r)),
        (None, Some(c)) => (n.div_ceil(c), c),
        (None, None) => auto_grid(n_months),
    };
    let dims = GridDims::new(rows, cols, spec.gap())?;
    if dims.capacity() < n_months {
        return Err(Error::Capacity {
            needed: n_months,
            rows: rows as usize,
            cols: cols as usize,
        });
    }
    Ok(dims)
}

/// Lay out `table` on a calendar with English labels.
pub fn frame_calendar(table: &TidyTable, spec: &CalendarSpec) -> Result<LayoutFrame> {
    frame_calendar_with_locale(table, spec, &Locale::english())
}

pub fn frame_calendar_with_locale(
    table: &TidyTable,
    spec: &CalendarSpec,
    locale: &Locale,
) -> Result<LayoutFrame> {
    spec.validate()?;
    if table.is_empty() {
        return Err(Error::EmptyInput);
    }
    let months = span_months(table);
    let start = spec.week_start();
    let dates = table.dates();
    let span_start: Date = *dates.iter().min().expect("non-empty");
    let span_end: Date = *dates.iter().max().expect("non-empty");

    let (shape, dims, blocks) = match spec.calendar {
        Calendar::Monthly => {
            let dims = monthly_dims(months.len(), spec)?;
            let blocks = (1..=months.len())
                .map(|seq| month_slot(seq, &dims, spec.dir))
                .collect::<Result<Vec<_>>>()?;
            (BlockShape::MONTH, dims, blocks)
        }
        Calendar::Weekly => {
            let (weeks, _) = weekly_cell(span_end, span_start, start)?;
            let shape = BlockShape { rows: weeks, cols: 7 };
            (shape, GridDims::new(1, 1, spec.gap())?, vec![(1, 1)])
        }
        Calendar::Daily => {
            let n = months.len() as u32;
            let dims = match spec.dir {
                Direction::Horizontal => GridDims::new(n, 1, spec.gap())?,
                Direction::Vertical => GridDims::new(1, n, spec.gap())?,
            };
            let blocks = (1..=months.len())
                .map(|seq| month_slot(seq, &dims, spec.dir))
                .collect::<Result<Vec<_>>>()?;
            (BlockShape { rows: 1, cols: 31 }, dims, blocks)
        }
    };
    let geometry = Geometry::new(shape, dims, spec.dir, spec.width, spec.height)?;

    let first_month = months[0];
    let month_frames = months
        .iter()
        .map(|ym| MonthFrame::of(*ym, start))
        .collect::<Result<Vec<_>>>()?;
    let month_index = |ym: YearMonth| -> usize {
        ((ym.year - first_month.year) * 12 + ym.month as i32 - first_month.month as i32) as usize
    };

    let cells = dates
        .iter()
        .map(|&date| -> Result<CellAddress> {
            Ok(match spec.calendar {
                Calendar::Monthly => {
                    let idx = month_index(date.year_month());
                    let (m, n) = blocks[idx];
                    let (i, j) = cell_position(month_frames[idx].slot(date.day())?);
                    CellAddress { m, n, i, j }
                }
                Calendar::Weekly => {
                    let (i, j) = weekly_cell(date, span_start, start)?;
                    CellAddress { m: 1, n: 1, i, j }
                }
                Calendar::Daily => {
                    let (row, day) = daily_cell(date, first_month)?;
                    let (m, n) = blocks[row as usize - 1];
                    CellAddress { m, n, i: 1, j: day }
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let scaled = apply_scale(table, spec.scale)?;
    let mut x_cal = Vec::with_capacity(cells.len());
    let mut y_cal = Vec::with_capacity(cells.len());
    for (row, addr) in cells.iter().enumerate() {
        let h = scaled.h[row];
        match scaled.c[row] {
            Some(c) => {
                let mut p = ScaledPoint { h, c };
                if spec.polar {
                    p = polar_project(p);
                }
                let out = geometry.project(addr, p);
                x_cal.push(Some(out.x));
                y_cal.push(Some(out.y));
            }
            None if spec.polar => {
                x_cal.push(None);
                y_cal.push(None);
            }
            None => {
                x_cal.push(Some(geometry.project(addr, ScaledPoint { h, c: 0.0 }).x));
                y_cal.push(None);
            }
        }
    }

    let extents = blocks
        .iter()
        .map(|&(m, n)| geometry.block_bounds(m, n))
        .reduce(Bounds::union)
        .expect("at least one block");
    let segments = reference_lines(&geometry, &blocks);

    let mut frame = LayoutFrame {
        table: table.clone(),
        spec: *spec,
        months,
        geometry,
        blocks,
        cells,
        scaled,
        x_cal,
        y_cal,
        segments,
        labels: Vec::new(),
        extents,
    };
    frame.relabel(locale);
    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decor::{LabelKind, SegmentWeight};

    fn d(s: &str) -> Date {
        s.parse().unwrap()
    }

    fn table(dates: &[&str]) -> TidyTable {
        let dates: Vec<Date> = dates.iter().map(|s| d(s)).collect();
        let n = dates.len();
        TidyTable::from_parts(
            dates,
            (0..n).map(|i| i as f64).collect(),
            (0..n).map(|i| Some((i * 7 % 5) as f64)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn span_includes_empty_months() {
        let t = table(&["2016-12-05", "2017-02-10"]);
        let months: Vec<String> = span_months(&t).iter().map(|m| m.to_string()).collect();
        assert_eq!(months, ["2016-12", "2017-01", "2017-02"]);
        assert_eq!(span_months(&table(&["2016-03-03"])).len(), 1);
    }

    #[test]
    fn single_row_sits_mid_cell() {
        let t = table(&["2016-01-01"]);
        let f = frame_calendar(&t, &CalendarSpec::default()).unwrap();
        assert_eq!(f.cells()[0], CellAddress { m: 1, n: 1, i: 1, j: 5 });
        assert_eq!(f.scaled().c[0], Some(0.5));
        let p = f.point(0).unwrap();
        assert_eq!(p.x, 5.0 + 0.5 * 0.95);
        assert_eq!(p.y, -1.0 + 0.5 * 0.95);
        let months = f.labels().iter().filter(|l| l.kind == LabelKind::Month).count();
        assert_eq!(months, 1);
        assert_eq!(f.labels().len(), 8);
    }

    #[test]
    fn rejects_empty_and_bad_specs() {
        let empty = TidyTable::from_parts(vec![], vec![], vec![]).unwrap();
        assert!(matches!(
            frame_calendar(&empty, &CalendarSpec::default()),
            Err(Error::EmptyInput)
        ));
        let t = table(&["2016-01-01", "2016-12-31"]);
        let spec = CalendarSpec {
            nrow: Some(2),
            ncol: Some(5),
            ..Default::default()
        };
        assert!(matches!(frame_calendar(&t, &spec), Err(Error::Capacity { .. })));
        let spec = CalendarSpec {
            width: 0.0,
            ..Default::default()
        };
        assert!(frame_calendar(&t, &spec).is_err());
        let spec = CalendarSpec {
            margin: Some(-1.0),
            ..Default::default()
        };
        assert!(frame_calendar(&t, &spec).is_err());
    }

    #[test]
    fn partial_grid_dims() {
        let t = table(&["2016-01-01", "2016-12-31"]);
        let spec = CalendarSpec {
            nrow: Some(6),
            ..Default::default()
        };
        let f = frame_calendar(&t, &spec).unwrap();
        assert_eq!((f.geometry().dims.rows, f.geometry().dims.cols), (6, 2));
        let spec = CalendarSpec {
            ncol: Some(5),
            ..Default::default()
        };
        let f = frame_calendar(&t, &spec).unwrap();
        assert_eq!((f.geometry().dims.rows, f.geometry().dims.cols), (3, 5));
        // trailing slots stay empty
        assert_eq!(f.blocks().len(), 12);
    }

    #[test]
    fn weekly_layout() {
        let t = table(&["2016-01-01", "2016-01-04", "2016-12-31"]);
        let spec = CalendarSpec {
            calendar: Calendar::Weekly,
            ..Default::default()
        };
        let f = frame_calendar(&t, &spec).unwrap();
        assert_eq!(f.geometry().shape.rows, 53);
        assert_eq!(f.cells()[1], CellAddress { m: 1, n: 1, i: 2, j: 1 });
        assert_eq!(f.cells()[2], CellAddress { m: 1, n: 1, i: 53, j: 6 });
        let majors = f.segments().iter().filter(|s| s.weight == SegmentWeight::Major).count();
        assert_eq!(majors, 4);
        assert_eq!(f.labels().len(), 12 + 7);
    }

    #[test]
    fn daily_layout() {
        let t = table(&["2016-01-01", "2016-02-29", "2016-12-31"]);
        for dir in [Direction::Horizontal, Direction::Vertical] {
            let spec = CalendarSpec {
                calendar: Calendar::Daily,
                dir,
                ..Default::default()
            };
            let f = frame_calendar(&t, &spec).unwrap();
            let expected_block = |seq: u32| match dir {
                Direction::Horizontal => (seq, 1),
                Direction::Vertical => (1, seq),
            };
            let (m, n) = expected_block(2);
            assert_eq!(f.cells()[1], CellAddress { m, n, i: 1, j: 29 });
            let (m, n) = expected_block(12);
            assert_eq!(f.cells()[2], CellAddress { m, n, i: 1, j: 31 });
            assert_eq!(f.labels().len(), 12);
        }
    }

    #[test]
    fn missing_values_propagate() {
        let t = TidyTable::from_parts(
            vec![d("2016-01-01"); 3],
            vec![0.0, 1.0, 2.0],
            vec![Some(1.0), None, Some(3.0)],
        )
        .unwrap();
        let f = frame_calendar(&t, &CalendarSpec::default()).unwrap();
        assert!(f.x_cal()[1].is_some());
        assert!(f.y_cal()[1].is_none());
        let spec = CalendarSpec {
            polar: true,
            ..Default::default()
        };
        let f = frame_calendar(&t, &spec).unwrap();
        assert!(f.point(1).is_none());
        assert!(f.point(0).is_some());
    }

    #[test]
    fn sunday_start_shifts_columns() {
        let t = table(&["2016-01-03"]);
        let spec = CalendarSpec {
            sunday: true,
            ..Default::default()
        };
        let f = frame_calendar(&t, &spec).unwrap();
        // Jan 2016 starts on Friday = 6 under Sunday start; the 3rd is a Sunday.
        assert_eq!(f.cells()[0], CellAddress { m: 1, n: 1, i: 2, j: 1 });
        let first = f.labels().iter().find(|l| l.kind == LabelKind::Weekday).unwrap();
        assert_eq!(first.text, "Sun");
    }

    #[test]
    fn enum_parsing() {
        assert_eq!("weekly".parse::<Calendar>().unwrap(), Calendar::Weekly);
        assert!("yearly".parse::<Calendar>().is_err());
    }
}
