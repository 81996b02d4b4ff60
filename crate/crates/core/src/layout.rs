//! Cell addressing and projection onto the calendar canvas.
//!
//! A day is addressed by `(m, n, i, j)`: the block (month) at row `m` and
//! column `n` of the macro grid, and the cell at week row `i` and weekday
//! column `j` inside that block. Inside a cell, a scaled point `(h, c)` in
//! the unit square is placed with its origin at the cell's bottom-left.
//!
//! The canvas is y-up: later weeks and later block rows sit lower.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::civil::{Date, WeekStart, YearMonth};
use crate::error::{Error, Result};

/// Inter-block gap used when no margin is given, in cell units.
pub const DEFAULT_GAP: f64 = 0.3;

/// Tolerance used to snap recovered coordinates onto cell boundaries.
const SNAP: f64 = 1e-9;

/// Orientation of the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Direction {
    /// Weekdays run left to right, weeks top to bottom; blocks fill row-major.
    #[default]
    Horizontal,
    /// Transposed: weekdays run top to bottom; blocks fill column-major.
    Vertical,
}

/// Weekday of a month's first day (`k`) and its length (`d`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonthFrame {
    first_weekday: u32,
    days: u32,
}

impl MonthFrame {
    pub fn new(first_weekday: u32, days: u32) -> Result<Self> {
        if !(1..=7).contains(&first_weekday) || !(28..=31).contains(&days) {
            return Err(Error::InvalidArgument(format!(
                "month frame k={first_weekday}, d={days} out of range"
            )));
        }
        Ok(Self {
            first_weekday,
            days,
        })
    }

    pub fn of(month: YearMonth, start: WeekStart) -> Result<Self> {
        let first = month.first_day()?;
        Self::new(first.day_of_week(start).index(), month.days())
    }

    pub fn first_weekday(self) -> u32 {
        self.first_weekday
    }

    pub fn days(self) -> u32 {
        self.days
    }

    /// Slot of the given day of month: `g = k + day - 1`.
    pub fn slot(self, day: u32) -> Result<DaySlot> {
        if day == 0 || day > self.days {
            return Err(Error::InvalidArgument(format!(
                "day {day} outside a {}-day month",
                self.days
            )));
        }
        Ok(DaySlot(self.first_weekday + day - 1))
    }
}

/// Index of a day inside a month's 35-cell frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DaySlot(u32);

impl DaySlot {
    pub fn new(g: u32) -> Result<Self> {
        if g == 0 || g > 37 {
            return Err(Error::InvalidArgument(format!("day slot {g} not in 1..=37")));
        }
        Ok(Self(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Residue in `1..=modulus` (a zero residue maps to the modulus).
fn mod_star(value: u32, modulus: u32) -> u32 {
    match value % modulus {
        0 => modulus,
        r => r,
    }
}

/// Week row `i` and weekday column `j` for a day slot.
///
/// Slots past 35 wrap back onto the first row.
pub fn cell_position(slot: DaySlot) -> (u32, u32) {
    let g = slot.get();
    let i = mod_star(g, 35).div_ceil(7);
    let j = mod_star(g, 7);
    (i, j)
}

/// Location of one day's cell in the macro grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellAddress {
    pub m: u32,
    pub n: u32,
    pub i: u32,
    pub j: u32,
}

/// Macro-grid dimensions: `rows` x `cols` blocks separated by `gap`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridDims {
    pub rows: u32,
    pub cols: u32,
    pub gap: f64,
}

impl GridDims {
    pub fn new(rows: u32, cols: u32, gap: f64) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("grid needs at least one row and column".into()));
        }
        if !(gap.is_finite() && gap >= 0.0) {
            return Err(Error::InvalidArgument(format!("gap {gap} must be >= 0")));
        }
        Ok(Self { rows, cols, gap })
    }

    pub fn capacity(&self) -> usize {
        self.rows as usize * self.cols as usize
    }
}

/// Near-square grid for `n_months` blocks: `cols = ceil(sqrt(n))`, `rows = ceil(n / cols)`.
pub fn auto_grid(n_months: usize) -> (u32, u32) {
    let n = n_months.max(1);
    let mut cols = (n as f64).sqrt().ceil() as usize;
    // guard against float error on perfect squares
    while cols * cols < n {
        cols += 1;
    }
    while cols > 1 && (cols - 1) * (cols - 1) >= n {
        cols -= 1;
    }
    let rows = n.div_ceil(cols);
    (rows as u32, cols as u32)
}

/// Grid slot `(m, n)` of the `seq`-th block (1-based).
pub fn month_slot(seq: usize, dims: &GridDims, dir: Direction) -> Result<(u32, u32)> {
    if seq == 0 || seq > dims.capacity() {
        return Err(Error::Capacity {
            needed: seq,
            rows: dims.rows as usize,
            cols: dims.cols as usize,
        });
    }
    let k = (seq - 1) as u32;
    Ok(match dir {
        Direction::Horizontal => (k / dims.cols + 1, k % dims.cols + 1),
        Direction::Vertical => (k % dims.rows + 1, k / dims.rows + 1),
    })
}

/// Position inside a unit cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledPoint {
    pub h: f64,
    pub c: f64,
}

/// Final canvas coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayoutPoint {
    pub x: f64,
    pub y: f64,
}

/// Axis-aligned box on the canvas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Bounds {
    pub fn union(self, other: Bounds) -> Bounds {
        Bounds {
            min_x: self.min_x.min(other.min_x),
            min_y: self.min_y.min(other.min_y),
            max_x: self.max_x.max(other.max_x),
            max_y: self.max_y.max(other.max_y),
        }
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn contains(&self, p: LayoutPoint) -> bool {
        p.x >= self.min_x && p.x <= self.max_x && p.y >= self.min_y && p.y <= self.max_y
    }
}

/// Cells per block, as week rows by weekday columns before any transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockShape {
    pub rows: u32,
    pub cols: u32,
}

impl BlockShape {
    pub const MONTH: BlockShape = BlockShape { rows: 5, cols: 7 };
}

/// Everything needed to place a cell address on the canvas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub shape: BlockShape,
    pub dims: GridDims,
    pub dir: Direction,
    /// Fraction of a cell's width occupied by data.
    pub width: f64,
    /// Fraction of a cell's height occupied by data.
    pub height: f64,
}

impl Geometry {
    pub fn new(
        shape: BlockShape,
        dims: GridDims,
        dir: Direction,
        width: f64,
        height: f64,
    ) -> Result<Self> {
        for (name, v) in [("width", width), ("height", height)] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::InvalidArgument(format!("{name} {v} not in (0, 1]")));
            }
        }
        Ok(Self {
            shape,
            dims,
            dir,
            width,
            height,
        })
    }

    /// Visual (columns, rows) of one block after orientation.
    fn block_extent(&self) -> (u32, u32) {
        match self.dir {
            Direction::Horizontal => (self.shape.cols, self.shape.rows),
            Direction::Vertical => (self.shape.rows, self.shape.cols),
        }
    }

    /// Visual (column, row) of a cell within its block.
    fn visual(&self, addr: &CellAddress) -> (u32, u32) {
        match self.dir {
            Direction::Horizontal => (addr.j, addr.i),
            Direction::Vertical => (addr.i, addr.j),
        }
    }

    fn offsets(&self, m: u32, n: u32) -> (f64, f64) {
        let (w, h) = self.block_extent();
        let b = self.dims.gap;
        (
            f64::from(n - 1) * f64::from(w) + f64::from(n - 1) * b,
            f64::from(m - 1) * f64::from(h) + f64::from(m - 1) * b,
        )
    }

    pub fn project(&self, addr: &CellAddress, p: ScaledPoint) -> LayoutPoint {
        let (col, row) = self.visual(addr);
        let (dx, dy) = self.offsets(addr.m, addr.n);
        LayoutPoint {
            x: f64::from(col) + dx + p.h * self.width,
            y: -(f64::from(row) + dy) + p.c * self.height,
        }
    }

    /// Unit box of a cell; its bottom-left corner is `project(addr, (0, 0))`.
    pub fn cell_bounds(&self, addr: &CellAddress) -> Bounds {
        let origin = self.project(addr, ScaledPoint { h: 0.0, c: 0.0 });
        Bounds {
            min_x: origin.x,
            min_y: origin.y,
            max_x: origin.x + 1.0,
            max_y: origin.y + 1.0,
        }
    }

    pub fn block_bounds(&self, m: u32, n: u32) -> Bounds {
        let (w, h) = self.block_extent();
        let (dx, dy) = self.offsets(m, n);
        Bounds {
            min_x: 1.0 + dx,
            min_y: -(f64::from(h) + dy),
            max_x: 1.0 + f64::from(w) + dx,
            max_y: -dy,
        }
    }

    /// Recover the cell address and within-cell point from a canvas point.
    ///
    /// Exact for points with `h, c` in `[0, 1)`; a point on the far edge of
    /// a full-size cell is indistinguishable from the next cell's origin.
    pub fn invert(&self, p: LayoutPoint) -> (CellAddress, ScaledPoint) {
        let (w, h) = self.block_extent();
        let b = self.dims.gap;
        let pitch_x = f64::from(w) + b;
        let pitch_y = f64::from(h) + b;

        let n = ((p.x - 1.0 + SNAP) / pitch_x).floor().max(0.0) as u32 + 1;
        let rem_x = p.x - 1.0 - f64::from(n - 1) * pitch_x;
        let col = ((rem_x + SNAP).floor().clamp(0.0, f64::from(w - 1))) as u32 + 1;

        let s = -p.y;
        let m = ((s - SNAP) / pitch_y).floor().max(0.0) as u32 + 1;
        let rem_y = s - f64::from(m - 1) * pitch_y;
        let row = ((rem_y - SNAP).ceil().clamp(1.0, f64::from(h))) as u32;

        let (i, j) = match self.dir {
            Direction::Horizontal => (row, col),
            Direction::Vertical => (col, row),
        };
        let addr = CellAddress { m, n, i, j };
        let origin = self.project(&addr, ScaledPoint { h: 0.0, c: 0.0 });
        let point = ScaledPoint {
            h: (p.x - origin.x) / self.width,
            c: (p.y - origin.y) / self.height,
        };
        (addr, point)
    }
}

/// Project a point inside a month cell onto the canvas.
pub fn project_point(
    addr: &CellAddress,
    p: ScaledPoint,
    dims: &GridDims,
    dir: Direction,
    width: f64,
    height: f64,
) -> LayoutPoint {
    Geometry {
        shape: BlockShape::MONTH,
        dims: *dims,
        dir,
        width,
        height,
    }
    .project(addr, p)
}

/// Map `(h, c)` onto a star glyph inside the unit cell.
///
/// `h` is the angle, starting at 12 o'clock and running clockwise over one
/// full turn; `c` is the radius as a fraction of half the cell.
pub fn polar_project(p: ScaledPoint) -> ScaledPoint {
    let theta = FRAC_PI_2 - TAU * p.h;
    let r = p.c / 2.0;
    ScaledPoint {
        h: 0.5 + r * theta.cos(),
        c: 0.5 + r * theta.sin(),
    }
}

/// Row and column of `date` in a weekly calendar whose first row holds `span_start`.
pub fn weekly_cell(date: Date, span_start: Date, start: WeekStart) -> Result<(u32, u32)> {
    if date < span_start {
        return Err(Error::InvalidArgument(format!(
            "{date} precedes span start {span_start}"
        )));
    }
    let first_col = i64::from(span_start.day_of_week(start).index());
    let anchor = span_start.to_days() - (first_col - 1);
    let row = (date.to_days() - anchor) / 7 + 1;
    Ok((row as u32, date.day_of_week(start).index()))
}

/// Row (month sequence from `first_month`) and column (day of month) in a daily calendar.
pub fn daily_cell(date: Date, first_month: YearMonth) -> Result<(u32, u32)> {
    let ym = date.year_month();
    if ym < first_month {
        return Err(Error::InvalidArgument(format!(
            "{date} precedes span start {first_month}"
        )));
    }
    let months = (ym.year - first_month.year) * 12 + ym.month as i32 - first_month.month as i32;
    Ok((months as u32 + 1, date.day()))
}
