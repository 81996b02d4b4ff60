use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use calgrid::synthetic::pedestrian_csv;
use calgrid::{
    frame_calendar, read_csv, render_svg_string, write_coords_to, CalendarSpec, Date, Locale,
    RenderStyle, RoleMap,
};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_calgrid"))
}

fn fixture(dir: &Path) -> PathBuf {
    let path = dir.join("ped.csv");
    let start: Date = "2016-01-01".parse().unwrap();
    let end: Date = "2016-12-31".parse().unwrap();
    std::fs::write(&path, pedestrian_csv(start, end, &["Flagstaff"])).unwrap();
    path
}

fn run(sub: &str, input: &Path, output: &Path, extra: &[&str]) -> Output {
    bin()
        .arg(sub)
        .args(["--input", input.to_str().unwrap(), "--output", output.to_str().unwrap()])
        .args(["--date", "Date", "--x", "Time", "--y", "Count"])
        .args(extra)
        .output()
        .unwrap()
}

#[test]
fn coords_preserves_rows_and_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture(dir.path());
    let out = dir.path().join("coords.csv");
    let o = run("coords", &input, &out, &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let stderr = String::from_utf8(o.stderr).unwrap();
    assert!(stderr.contains("8784 rows, 12 months, 366 cells"), "{stderr}");

    let cli_bytes = std::fs::read(&out).unwrap();
    assert_eq!(cli_bytes.iter().filter(|&&b| b == b'\n').count(), 8784 + 1);

    let table = read_csv(&input, &RoleMap::new("Date", "Time", "Count")).unwrap();
    let frame = frame_calendar(&table, &CalendarSpec::default()).unwrap();
    let mut lib_bytes = Vec::new();
    write_coords_to(&frame, &mut lib_bytes).unwrap();
    assert_eq!(cli_bytes, lib_bytes);
}

#[test]
fn render_defaults_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture(dir.path());
    let out = dir.path().join("cal.svg");
    let o = run("render", &input, &out, &[]);
    assert!(o.status.success());
    let table = read_csv(&input, &RoleMap::new("Date", "Time", "Count")).unwrap();
    let frame = frame_calendar(&table, &CalendarSpec::default()).unwrap();
    let (svg, _) = render_svg_string(&frame, &RenderStyle::default()).unwrap();
    assert_eq!(std::fs::read_to_string(&out).unwrap(), svg);
}

#[test]
fn stdout_streaming() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture(dir.path());
    let o = run("coords", &input, Path::new("-"), &["--calendar", "weekly"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("Date,Time,Count,Sensor,x_cal,y_cal\n"));
    assert_eq!(text.lines().count(), 8785);
}

#[test]
fn chinese_labels() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture(dir.path());
    let out = dir.path().join("zh.svg");
    let o = run("render", &input, &out, &["--locale", "zh-Hans"]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    let zh = Locale::simplified_chinese();
    for name in zh.month_names().iter().chain(zh.weekday_names()) {
        assert!(svg.contains(&format!(">{name}<")), "{name}");
    }
}

#[test]
fn bad_date_names_row() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.csv");
    let mut text = String::from("Date,Time,Count\n");
    for h in 0..24 {
        let date = if h == 16 { "2016-02-30" } else { "2016-02-01" };
        text.push_str(&format!("{date},{h},{}\n", h * 3));
    }
    std::fs::write(&input, text).unwrap();
    let o = run("coords", &input, &dir.path().join("o.csv"), &[]);
    assert_eq!(o.status.code(), Some(1));
    let stderr = String::from_utf8(o.stderr).unwrap();
    assert!(stderr.contains("row 17"), "{stderr}");
}

#[test]
fn runtime_and_usage_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture(dir.path());
    let out = dir.path().join("o.svg");

    let o = run("render", &input, &out, &["--scale", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bogus"));

    let o = run("render", &input, &out, &["--locale", "tlh"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown locale 'tlh'"));

    let o = run("render", &input, &out, &["--nrow", "2", "--ncol", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("grid too small"));

    let o = bin()
        .args(["coords", "--input", input.to_str().unwrap(), "--output", "x.csv"])
        .args(["--date", "Date_Time", "--x", "Time", "--y", "Count"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("date column 'Date_Time' not found"));

    let o = run("coords", &dir.path().join("missing.csv"), &out, &[]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn locale_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture(dir.path());
    let locale = dir.path().join("shout.txt");
    let en = Locale::english();
    let upper: String = en.to_file_string().to_uppercase();
    std::fs::write(&locale, upper).unwrap();
    let out = dir.path().join("o.svg");
    let o = run("render", &input, &out, &["--locale", locale.to_str().unwrap(), "--sunday"]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    let sun = svg.find(">SUN<").unwrap();
    let mon = svg.find(">MON<").unwrap();
    assert!(sun < mon);
}
