//! Reference lines, label anchors and label text.

use std::path::Path;

use crate::civil::{WeekStart, YearMonth};
use crate::error::{Error, Result};
use crate::layout::{Bounds, CellAddress, Direction, Geometry, ScaledPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SegmentWeight {
    Major,
    Minor,
}

/// An axis-aligned reference line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub x1: f64,
    pub y1: f64,
    pub x2: f64,
    pub y2: f64,
    pub weight: SegmentWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelKind {
    Month,
    Weekday,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabelAnchor {
    pub x: f64,
    pub y: f64,
    pub text: String,
    pub kind: LabelKind,
}

/// Month and weekday names for labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Locale {
    pub id: String,
    month_names: Vec<String>,
    /// Monday first.
    weekday_names: Vec<String>,
}

const LOCALE_LINES: usize = 19;

impl Locale {
    pub fn new(id: impl Into<String>, month_names: Vec<String>, weekday_names: Vec<String>) -> Result<Self> {
        if month_names.len() != 12 || weekday_names.len() != 7 {
            return Err(Error::InvalidArgument(format!(
                "locale needs 12 month and 7 weekday names, got {} and {}",
                month_names.len(),
                weekday_names.len()
            )));
        }
        if month_names.iter().chain(&weekday_names).any(|s| s.trim().is_empty()) {
            return Err(Error::InvalidArgument("locale names must be non-empty".into()));
        }
        Ok(Self {
            id: id.into(),
            month_names,
            weekday_names,
        })
    }

    pub fn english() -> Self {
        let months = [
            "Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec",
        ];
        let days = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"];
        Self::from_static("en", &months, &days)
    }

    pub fn simplified_chinese() -> Self {
        let months = [
            "一月", "二月", "三月", "四月", "五月", "六月", "七月", "八月", "九月", "十月", "十一月",
            "十二月",
        ];
        let days = ["星期一", "星期二", "星期三", "星期四", "星期五", "星期六", "星期日"];
        Self::from_static("zh-Hans", &months, &days)
    }

    fn from_static(id: &str, months: &[&str], days: &[&str]) -> Self {
        Self {
            id: id.into(),
            month_names: months.iter().map(|s| s.to_string()).collect(),
            weekday_names: days.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn builtin(id: &str) -> Option<Self> {
        match id {
            "en" => Some(Self::english()),
            "zh-Hans" => Some(Self::simplified_chinese()),
            _ => None,
        }
    }

    pub fn month_names(&self) -> &[String] {
        &self.month_names
    }

    /// Monday-first weekday names.
    pub fn weekday_names(&self) -> &[String] {
        &self.weekday_names
    }

    pub fn month_name(&self, month: u32) -> &str {
        &self.month_names[(month as usize - 1) % 12]
    }

    /// Name of weekday `index` (1..=7) under the given week start.
    pub fn weekday_name(&self, index: u32, start: WeekStart) -> &str {
        let shift = match start {
            WeekStart::Monday => 0,
            WeekStart::Sunday => 6,
        };
        &self.weekday_names[(index as usize - 1 + shift) % 7]
    }

    /// Parse the line-oriented locale format: 12 month names then 7
    /// weekday names (Monday first), one per line.
    pub fn parse(id: impl Into<String>, text: &str, path: &Path) -> Result<Self> {
        let err = |line: usize, message: String| Error::LocaleParse {
            path: path.to_path_buf(),
            line,
            message,
        };
        let mut names = Vec::with_capacity(LOCALE_LINES);
        let text = text.strip_prefix('\u{feff}').unwrap_or(text);
        let mut lines: Vec<&str> = text.split('\n').map(|l| l.trim_end_matches('\r')).collect();
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
        for (idx, line) in lines.iter().enumerate() {
            let lineno = idx + 1;
            if lineno > LOCALE_LINES {
                return Err(err(lineno, format!("expected {LOCALE_LINES} lines, found more")));
            }
            let name = line.trim();
            if name.is_empty() {
                return Err(err(lineno, "empty name".into()));
            }
            names.push(name.to_string());
        }
        if names.len() < LOCALE_LINES {
            return Err(err(
                names.len() + 1,
                format!("expected {LOCALE_LINES} lines, found {}", names.len()),
            ));
        }
        let weekdays = names.split_off(12);
        Self::new(id, names, weekdays)
    }

    /// Serialize in the format accepted by [`Locale::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        for name in self.month_names.iter().chain(&self.weekday_names) {
            out.push_str(name);
            out.push('\n');
        }
        out
    }
}

/// Resolve a built-in locale id or load a locale file.
pub fn load_locale(id_or_path: &str) -> Result<Locale> {
    if let Some(locale) = Locale::builtin(id_or_path) {
        return Ok(locale);
    }
    let path = Path::new(id_or_path);
    if !path.is_file() {
        return Err(Error::UnknownLocale(id_or_path.to_string()));
    }
    let text = std::fs::read_to_string(path)?;
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| id_or_path.to_string());
    Locale::parse(id, &text, path)
}

/// Major lines around each listed block and minor lines on the left and
/// bottom edge of every cell of those blocks, filled or not.
pub fn reference_lines(geometry: &Geometry, blocks: &[(u32, u32)]) -> Vec<Segment> {
    let mut majors = Vec::with_capacity(blocks.len() * 4);
    let mut minors = Vec::new();
    for &(m, n) in blocks {
        let b = geometry.block_bounds(m, n);
        let major = |x1, y1, x2, y2| Segment {
            x1,
            y1,
            x2,
            y2,
            weight: SegmentWeight::Major,
        };
        majors.push(major(b.min_x, b.min_y, b.min_x, b.max_y));
        majors.push(major(b.max_x, b.min_y, b.max_x, b.max_y));
        majors.push(major(b.min_x, b.min_y, b.max_x, b.min_y));
        majors.push(major(b.min_x, b.max_y, b.max_x, b.max_y));

        for i in 1..=geometry.shape.rows {
            for j in 1..=geometry.shape.cols {
                let origin = geometry.project(&CellAddress { m, n, i, j }, ScaledPoint { h: 0.0, c: 0.0 });
                let minor = |x1, y1, x2, y2| Segment {
                    x1,
                    y1,
                    x2,
                    y2,
                    weight: SegmentWeight::Minor,
                };
                minors.push(minor(origin.x, origin.y, origin.x, origin.y + 1.0));
                minors.push(minor(origin.x, origin.y, origin.x + 1.0, origin.y));
            }
        }
    }
    minors.extend(majors);
    minors
}

/// Where labels go for one laid-out calendar.
#[derive(Debug, Clone)]
pub struct LabelLayout {
    /// Region whose top-left corner anchors each month's label.
    pub months: Vec<(YearMonth, Bounds)>,
    /// One representative cell per weekday column, in column order.
    pub weekday_cells: Option<[Bounds; 7]>,
    pub extents: Bounds,
    pub dir: Direction,
    pub week_start: WeekStart,
}

pub fn label_positions(layout: &LabelLayout, locale: &Locale) -> Vec<LabelAnchor> {
    let multi_year = layout
        .months
        .first()
        .zip(layout.months.last())
        .is_some_and(|(a, b)| a.0.year != b.0.year);
    let mut labels: Vec<LabelAnchor> = layout
        .months
        .iter()
        .map(|(ym, b)| LabelAnchor {
            x: b.min_x,
            y: b.max_y,
            text: if multi_year {
                format!("{} {}", locale.month_name(ym.month), ym.year)
            } else {
                locale.month_name(ym.month).to_string()
            },
            kind: LabelKind::Month,
        })
        .collect();

    if let Some(cells) = &layout.weekday_cells {
        for (idx, cell) in cells.iter().enumerate() {
            let (x, y) = match layout.dir {
                Direction::Horizontal => ((cell.min_x + cell.max_x) / 2.0, layout.extents.min_y),
                Direction::Vertical => (layout.extents.min_x, (cell.min_y + cell.max_y) / 2.0),
            };
            labels.push(LabelAnchor {
                x,
                y,
                text: locale.weekday_name(idx as u32 + 1, layout.week_start).to_string(),
                kind: LabelKind::Weekday,
            });
        }
    }
    labels
}
