//! SVG rendering of a [`LayoutFrame`] with line or point glyphs.
//!
//! Grid lines and glyphs are written in canvas coordinates inside a group
//! carrying the panel's viewport transform `matrix(s 0 0 -s tx ty)`, so a
//! canvas point `(x, y)` lands on pixel `(s*x + tx, ty - s*y)`. Labels are
//! written directly in pixels so text stays upright.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::civil::Date;
use crate::decor::{LabelKind, SegmentWeight};
use crate::error::{Error, Result};
use crate::format::format_number;
use crate::frame::LayoutFrame;
use crate::layout::{auto_grid, Bounds, Direction, LayoutPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Glyph {
    #[default]
    Line,
    Point,
}

impl std::str::FromStr for Glyph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" => Ok(Self::Line),
            "point" => Ok(Self::Point),
            _ => Err(Error::InvalidArgument(format!("unknown glyph '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    pub glyph: Glyph,
    /// Group colors, assigned in order of first appearance.
    pub palette: Vec<String>,
    /// Line width in pixels.
    pub stroke_width: f64,
    /// Marker radius in pixels.
    pub point_radius: f64,
    pub canvas_width: f64,
    pub canvas_height: f64,
    pub background: String,
    pub minor_color: String,
    pub major_color: String,
    pub text_color: String,
    pub font_family: String,
    pub font_size: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        let palette = [
            "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
        ];
        Self {
            glyph: Glyph::Line,
            palette: palette.iter().map(|s| s.to_string()).collect(),
            stroke_width: 0.8,
            point_radius: 0.8,
            canvas_width: 1200.0,
            canvas_height: 900.0,
            background: "#ffffff".into(),
            minor_color: "#e0e0e0".into(),
            major_color: "#808080".into(),
            text_color: "#333333".into(),
            font_family: "sans-serif".into(),
            font_size: 10.0,
        }
    }
}

/// Affine map from canvas to pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    pub scale: f64,
    pub tx: f64,
    pub ty: f64,
}

impl Viewport {
    pub fn to_pixel(&self, p: LayoutPoint) -> (f64, f64) {
        (self.scale * p.x + self.tx, self.ty - self.scale * p.y)
    }

    fn matrix(&self) -> String {
        format!(
            "matrix({} 0 0 {} {} {})",
            format_number(self.scale),
            format_number(-self.scale),
            format_number(self.tx),
            format_number(self.ty)
        )
    }
}

/// Counts of what was drawn, plus any non-fatal warnings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RenderSummary {
    pub panels: usize,
    pub polylines: usize,
    pub markers: usize,
    pub month_labels: usize,
    pub weekday_labels: usize,
    pub warnings: Vec<String>,
}

/// Distinct values in order of first appearance, and each row's index into them.
fn first_appearance(values: Option<&[String]>, len: usize) -> (Vec<String>, Vec<usize>) {
    let Some(values) = values else {
        return (vec![String::new()], vec![0; len]);
    };
    let mut seen: HashMap<&str, usize> = HashMap::new();
    let mut order = Vec::new();
    let idx = values
        .iter()
        .map(|v| {
            *seen.entry(v.as_str()).or_insert_with(|| {
                order.push(v.clone());
                order.len() - 1
            })
        })
        .collect();
    (order, idx)
}

/// Consecutive runs of rows with a point; missing rows split runs.
pub fn split_runs(frame: &LayoutFrame, rows: &[usize]) -> Vec<Vec<LayoutPoint>> {
    let mut runs = Vec::new();
    let mut current = Vec::new();
    for &row in rows {
        match frame.point(row) {
            Some(p) => current.push(p),
            None if !current.is_empty() => runs.push(std::mem::take(&mut current)),
            None => {}
        }
    }
    if !current.is_empty() {
        runs.push(current);
    }
    runs
}

/// Row indices of one facet grouped by (date, group), each sorted by raw `x`.
///
/// Keys are ordered by date, then by group first appearance.
pub fn glyph_series(frame: &LayoutFrame, facet_rows: &[usize]) -> Vec<((Date, usize), Vec<usize>)> {
    let table = frame.table();
    let (_, group_idx) = first_appearance(table.group(), table.len());
    let mut series: HashMap<(Date, usize), Vec<usize>> = HashMap::new();
    for &row in facet_rows {
        series
            .entry((table.dates()[row], group_idx[row]))
            .or_default()
            .push(row);
    }
    let mut series: Vec<_> = series.into_iter().collect();
    series.sort_by_key(|(k, _)| *k);
    for (_, rows) in &mut series {
        rows.sort_by(|&a, &b| table.x()[a].total_cmp(&table.x()[b]));
    }
    series
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(ch),
        }
    }
    out
}

struct Panel {
    x: f64,
    y: f64,
    width: f64,
    height: f64,
}

fn panel_viewport(panel: &Panel, ext: Bounds, style: &RenderStyle, dir: Direction, titled: bool) -> Viewport {
    let fs = style.font_size;
    let pad_top = fs + 6.0 + if titled { fs + 8.0 } else { 0.0 };
    let pad_bottom = fs + 8.0;
    let pad_left = match dir {
        Direction::Horizontal => 6.0,
        Direction::Vertical => 4.0 * fs,
    };
    let pad_right = 6.0;
    let avail_w = (panel.width - pad_left - pad_right).max(1.0);
    let avail_h = (panel.height - pad_top - pad_bottom).max(1.0);
    let scale = (avail_w / ext.width()).min(avail_h / ext.height());
    Viewport {
        scale,
        tx: panel.x + pad_left + (avail_w - scale * ext.width()) / 2.0 - scale * ext.min_x,
        ty: panel.y + pad_top + (avail_h - scale * ext.height()) / 2.0 + scale * ext.max_y,
    }
}

/// Render `frame` as a standalone SVG document.
pub fn render_svg_string(frame: &LayoutFrame, style: &RenderStyle) -> Result<(String, RenderSummary)> {
    if !(style.canvas_width > 0.0 && style.canvas_height > 0.0) {
        return Err(Error::InvalidArgument("canvas size must be positive".into()));
    }
    let table = frame.table();
    let mut summary = RenderSummary::default();

    let (groups, group_idx) = first_appearance(table.group(), table.len());
    if style.palette.is_empty() {
        return Err(Error::InvalidArgument("palette is empty".into()));
    }
    if groups.len() > style.palette.len() {
        summary.warnings.push(format!(
            "{} groups but only {} colors; palette is cycled",
            groups.len(),
            style.palette.len()
        ));
    }
    let color = |g: usize| style.palette[g % style.palette.len()].as_str();

    let (facets, facet_idx) = first_appearance(table.facet(), table.len());
    let titled = table.facet().is_some();
    let (grid_rows, grid_cols) = auto_grid(facets.len());
    let panel_w = style.canvas_width / f64::from(grid_cols);
    let panel_h = style.canvas_height / f64::from(grid_rows);

    let mut svg = String::new();
    let w = format_number(style.canvas_width);
    let h = format_number(style.canvas_height);
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="{}"/>"#,
        escape(&style.background)
    );

    let ext = frame.extents();
    let dir = frame.geometry().dir;
    let fs = style.font_size;
    for (f, facet) in facets.iter().enumerate() {
        let panel = Panel {
            x: f64::from(f as u32 % grid_cols) * panel_w,
            y: f64::from(f as u32 / grid_cols) * panel_h,
            width: panel_w,
            height: panel_h,
        };
        let vp = panel_viewport(&panel, ext, style, dir, titled);
        let unit = |px: f64| format_number(px / vp.scale);
        summary.panels += 1;

        if titled {
            let _ = writeln!(svg, r#"<g class="panel" id="panel-{}">"#, f + 1);
            let _ = writeln!(
                svg,
                r#"<text class="title" x="{}" y="{}" font-family="{}" font-size="{}" font-weight="bold" fill="{}">{}</text>"#,
                format_number(panel.x + 6.0),
                format_number(panel.y + fs + 4.0),
                escape(&style.font_family),
                format_number(fs + 2.0),
                escape(&style.text_color),
                escape(facet)
            );
        } else {
            let _ = writeln!(svg, r#"<g class="panel" id="panel-1">"#);
        }

        // grid lines
        let _ = writeln!(svg, r#"<g class="grid" transform="{}" fill="none">"#, vp.matrix());
        for (weight, class, color, px) in [
            (SegmentWeight::Minor, "minor", &style.minor_color, 0.5),
            (SegmentWeight::Major, "major", &style.major_color, 1.0),
        ] {
            let mut d = String::new();
            for s in frame.segments().iter().filter(|s| s.weight == weight) {
                if !d.is_empty() {
                    d.push(' ');
                }
                let _ = write!(
                    d,
                    "M{} {}L{} {}",
                    format_number(s.x1),
                    format_number(s.y1),
                    format_number(s.x2),
                    format_number(s.y2)
                );
            }
            if !d.is_empty() {
                let _ = writeln!(
                    svg,
                    r#"<path class="{class}" stroke="{}" stroke-width="{}" d="{d}"/>"#,
                    escape(color),
                    unit(px)
                );
            }
        }
        let _ = writeln!(svg, "</g>");

        // labels
        let _ = writeln!(
            svg,
            r#"<g class="labels" font-family="{}" font-size="{}" fill="{}">"#,
            escape(&style.font_family),
            format_number(fs),
            escape(&style.text_color)
        );
        for label in frame.labels() {
            let (px, py) = vp.to_pixel(LayoutPoint { x: label.x, y: label.y });
            let (class, x, y, anchor) = match (label.kind, dir) {
                (LabelKind::Month, _) => ("month", px, py - 3.0, "start"),
                (LabelKind::Weekday, Direction::Horizontal) => ("weekday", px, py + fs + 2.0, "middle"),
                (LabelKind::Weekday, Direction::Vertical) => ("weekday", px - 4.0, py + fs / 3.0, "end"),
            };
            match label.kind {
                LabelKind::Month => summary.month_labels += 1,
                LabelKind::Weekday => summary.weekday_labels += 1,
            }
            let _ = writeln!(
                svg,
                r#"<text class="{class}" x="{}" y="{}" text-anchor="{anchor}">{}</text>"#,
                format_number(x),
                format_number(y),
                escape(&label.text)
            );
        }
        let _ = writeln!(svg, "</g>");

        // glyphs
        let rows: Vec<usize> = (0..table.len()).filter(|&r| facet_idx[r] == f).collect();
        match style.glyph {
            Glyph::Line => {
                let _ = writeln!(
                    svg,
                    r#"<g class="glyphs" transform="{}" fill="none" stroke-width="{}" stroke-linejoin="round">"#,
                    vp.matrix(),
                    unit(style.stroke_width)
                );
                for ((_, group), series) in glyph_series(frame, &rows) {
                    for run in split_runs(frame, &series) {
                        let points: Vec<String> = run
                            .iter()
                            .map(|p| format!("{},{}", format_number(p.x), format_number(p.y)))
                            .collect();
                        let _ = writeln!(
                            svg,
                            r#"<polyline stroke="{}" points="{}"/>"#,
                            escape(color(group)),
                            points.join(" ")
                        );
                        summary.polylines += 1;
                    }
                }
            }
            Glyph::Point => {
                let _ = writeln!(svg, r#"<g class="glyphs" transform="{}" stroke="none">"#, vp.matrix());
                let r = unit(style.point_radius);
                for &row in &rows {
                    if let Some(p) = frame.point(row) {
                        let _ = writeln!(
                            svg,
                            r#"<circle cx="{}" cy="{}" r="{r}" fill="{}"/>"#,
                            format_number(p.x),
                            format_number(p.y),
                            escape(color(group_idx[row]))
                        );
                        summary.markers += 1;
                    }
                }
            }
        }
        let _ = writeln!(svg, "</g>");
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    Ok((svg, summary))
}

pub fn render_svg(frame: &LayoutFrame, style: &RenderStyle, path: impl AsRef<Path>) -> Result<RenderSummary> {
    let (svg, summary) = render_svg_string(frame, style)?;
    std::fs::write(path.as_ref(), svg)?;
    Ok(summary)
}
