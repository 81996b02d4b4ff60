//! Calendar-grid layout for sub-daily time series.
//!
//! Each day of the data becomes a small canvas laid out like a wall
//! calendar: monthly blocks of 5 x 7 cells, a weekly grid with one row per
//! week, or a daily grid with one row per month. Every observation is
//! rescaled into its day's cell and projected to shared canvas
//! coordinates, which can be exported as CSV or rendered as SVG.
//!
//! ```
//! use calgrid::{frame_calendar, CalendarSpec, Date, TidyTable};
//!
//! let day: Date = "2016-01-01".parse().unwrap();
//! let table = TidyTable::from_parts(
//!     vec![day; 3],
//!     vec![0.0, 12.0, 23.0],
//!     vec![Some(10.0), Some(50.0), Some(20.0)],
//! )
//! .unwrap();
//! let frame = frame_calendar(&table, &CalendarSpec::default()).unwrap();
//! assert_eq!(frame.cells()[0].j, 5); // Friday, weeks starting Monday
//! ```

pub mod civil;
pub mod decor;
pub mod error;
pub mod export;
pub mod format;
pub mod frame;
pub mod layout;
pub mod scale;
pub mod svg;
pub mod synthetic;
pub mod table;

pub use civil::{day_of_week, days_in_month, is_leap_year, next_day, Date, WeekStart, Weekday, YearMonth};
pub use decor::{
    label_positions, load_locale, reference_lines, LabelAnchor, LabelKind, Locale, Segment,
    SegmentWeight,
};
pub use error::{Error, Result};
pub use export::{write_coords_csv, write_coords_to};
pub use frame::{
    frame_calendar, frame_calendar_with_locale, span_months, Calendar, CalendarSpec, LayoutFrame,
};
pub use layout::{
    auto_grid, cell_position, daily_cell, month_slot, polar_project, project_point, weekly_cell,
    BlockShape, Bounds, CellAddress, DaySlot, Direction, Geometry, GridDims, LayoutPoint,
    MonthFrame, ScaledPoint,
};
pub use scale::{apply_scale, rescale01, ScaleMode, Scaled};
pub use svg::{render_svg, render_svg_string, Glyph, RenderStyle, RenderSummary, Viewport};
pub use table::{read_csv, read_csv_from, RoleMap, TidyTable};
