//! Argument parsing and orchestration for the `calgrid` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use calgrid::{
    frame_calendar_with_locale, load_locale, read_csv, render_svg_string, write_coords_to,
    Calendar, CalendarSpec, Direction, Glyph, Locale, RenderStyle, RoleMap, ScaleMode,
};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "calgrid", version, about = "Lay out sub-daily time series on calendar grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the input rows with calendar coordinates appended as CSV.
    Coords(CommonArgs),
    /// Draw the calendar as an SVG document.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CalendarArg {
    Monthly,
    Weekly,
    Daily,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DirArg {
    H,
    V,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScaleArg {
    Fixed,
    Free,
    #[value(name = "free_wday")]
    FreeWday,
    #[value(name = "free_mday")]
    FreeMday,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GlyphArg {
    Line,
    Point,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Input CSV with a header row.
    #[arg(long)]
    input: PathBuf,
    /// Output file, or `-` for standard output.
    #[arg(long)]
    output: PathBuf,

    /// Column holding YYYY-MM-DD dates.
    #[arg(long)]
    date: String,
    /// Column plotted horizontally inside each cell.
    #[arg(long)]
    x: String,
    /// Column plotted vertically inside each cell.
    #[arg(long)]
    y: String,
    /// Column whose values are overlaid in different colors.
    #[arg(long)]
    group: Option<String>,
    /// Column whose values get separate panels.
    #[arg(long)]
    facet: Option<String>,

    #[arg(long, value_enum, default_value = "monthly")]
    calendar: CalendarArg,
    #[arg(long, value_enum, default_value = "h")]
    dir: DirArg,
    /// Start weeks on Sunday.
    #[arg(long)]
    sunday: bool,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    nrow: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    ncol: Option<u32>,
    /// Draw star glyphs in polar coordinates.
    #[arg(long)]
    polar: bool,
    #[arg(long, value_enum, default_value = "fixed")]
    scale: ScaleArg,
    /// Fraction of each cell's width used by data, in (0, 1].
    #[arg(long, default_value_t = 0.95)]
    width: f64,
    /// Fraction of each cell's height used by data, in (0, 1].
    #[arg(long, default_value_t = 0.95)]
    height: f64,
    /// Gap between month blocks, in cells.
    #[arg(long)]
    margin: Option<f64>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value = "line")]
    glyph: GlyphArg,
    #[arg(long, default_value_t = 1200.0)]
    canvas_width: f64,
    #[arg(long, default_value_t = 900.0)]
    canvas_height: f64,
    /// Built-in locale id (en, zh-Hans) or path to a locale file.
    #[arg(long, default_value = "en")]
    locale: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Coords,
    Render,
}

/// Fully validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub subcommand: Mode,
    pub input: PathBuf,
    pub output: PathBuf,
    pub roles: RoleMap,
    pub spec: CalendarSpec,
    pub style: RenderStyle,
    pub locale: String,
}

impl CliConfig {
    pub fn writes_stdout(&self) -> bool {
        self.output.as_os_str() == "-"
    }
}

fn build_spec(a: &CommonArgs) -> CalendarSpec {
    CalendarSpec {
        calendar: match a.calendar {
            CalendarArg::Monthly => Calendar::Monthly,
            CalendarArg::Weekly => Calendar::Weekly,
            CalendarArg::Daily => Calendar::Daily,
        },
        dir: match a.dir {
            DirArg::H => Direction::Horizontal,
            DirArg::V => Direction::Vertical,
        },
        sunday: a.sunday,
        nrow: a.nrow,
        ncol: a.ncol,
        polar: a.polar,
        scale: match a.scale {
            ScaleArg::Fixed => ScaleMode::Fixed,
            ScaleArg::Free => ScaleMode::Free,
            ScaleArg::FreeWday => ScaleMode::FreeWday,
            ScaleArg::FreeMday => ScaleMode::FreeMday,
        },
        width: a.width,
        height: a.height,
        margin: a.margin,
    }
}

fn build_roles(a: &CommonArgs) -> RoleMap {
    RoleMap {
        date: a.date.clone(),
        x: a.x.clone(),
        y: a.y.clone(),
        group: a.group.clone(),
        facet: a.facet.clone(),
    }
}

/// Parse `argv` (including the program name).
///
/// Usage errors carry exit code 2 when passed to [`clap::Error::exit`].
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let (subcommand, common, style, locale) = match cli.command {
        Command::Coords(c) => (Mode::Coords, c, RenderStyle::default(), "en".to_string()),
        Command::Render(r) => {
            let style = RenderStyle {
                glyph: match r.glyph {
                    GlyphArg::Line => Glyph::Line,
                    GlyphArg::Point => Glyph::Point,
                },
                canvas_width: r.canvas_width,
                canvas_height: r.canvas_height,
                ..RenderStyle::default()
            };
            if !(style.canvas_width > 0.0 && style.canvas_height > 0.0) {
                return Err(Cli::command().error(
                    ErrorKind::ValueValidation,
                    "canvas width and height must be positive",
                ));
            }
            (Mode::Render, r.common, style, r.locale)
        }
    };
    let spec = build_spec(&common);
    if let Err(e) = spec.validate() {
        return Err(Cli::command().error(ErrorKind::ValueValidation, e));
    }
    Ok(CliConfig {
        subcommand,
        input: common.input.clone(),
        output: common.output.clone(),
        roles: build_roles(&common),
        spec,
        style,
        locale,
    })
}

/// What a run produced, for the summary line.
#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub rows: usize,
    pub months: usize,
    pub cells: usize,
    pub output: PathBuf,
    pub warnings: Vec<String>,
}

impl std::fmt::Display for RunSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} rows, {} months, {} cells -> {}",
            self.rows,
            self.months,
            self.cells,
            self.output.display()
        )
    }
}

/// Read, lay out, and write according to `config`.
pub fn run(config: &CliConfig) -> calgrid::Result<RunSummary> {
    let locale = match config.subcommand {
        Mode::Coords => Locale::english(),
        Mode::Render => load_locale(&config.locale)?,
    };
    let table = read_csv(&config.input, &config.roles)?;
    let frame = frame_calendar_with_locale(&table, &config.spec, &locale)?;

    let mut warnings = Vec::new();
    let bytes = match config.subcommand {
        Mode::Coords => {
            let mut buf = Vec::new();
            write_coords_to(&frame, &mut buf)?;
            buf
        }
        Mode::Render => {
            let (svg, summary) = render_svg_string(&frame, &config.style)?;
            warnings = summary.warnings;
            svg.into_bytes()
        }
    };
    if config.writes_stdout() {
        let mut out = std::io::stdout().lock();
        out.write_all(&bytes)?;
        out.flush()?;
    } else {
        std::fs::write(&config.output, bytes)?;
    }
    Ok(RunSummary {
        rows: frame.len(),
        months: frame.months().len(),
        cells: frame.populated_cells(),
        output: config.output.clone(),
        warnings,
    })
}
