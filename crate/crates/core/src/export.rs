//! Coordinate CSV output: the input columns followed by `x_cal` and `y_cal`.

use std::io::Write;
use std::path::Path;

use crate::error::Result;
use crate::format::format_number;
use crate::frame::LayoutFrame;

pub fn write_coords_csv(frame: &LayoutFrame, path: impl AsRef<Path>) -> Result<()> {
    let file = std::fs::File::create(path.as_ref())?;
    write_coords_to(frame, std::io::BufWriter::new(file))
}

pub fn write_coords_to<W: Write>(frame: &LayoutFrame, writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    let table = frame.table();
    let mut header: Vec<&str> = table.headers().iter().map(String::as_str).collect();
    header.extend(["x_cal", "y_cal"]);
    wtr.write_record(&header)?;

    let cell = |v: Option<f64>| v.map(format_number).unwrap_or_default();
    for (row, rec) in table.records().iter().enumerate() {
        let mut out: Vec<String> = rec.clone();
        out.push(cell(frame.x_cal()[row]));
        out.push(cell(frame.y_cal()[row]));
        wtr.write_record(&out)?;
    }
    wtr.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::civil::Date;
    use crate::frame::{frame_calendar, CalendarSpec};
    use crate::table::TidyTable;

    #[test]
    fn appends_coordinate_columns() {
        let d: Date = "2016-01-01".parse().unwrap();
        let t = TidyTable::from_parts(vec![d, d], vec![0.0, 1.0], vec![Some(2.0), None]).unwrap();
        let f = frame_calendar(&t, &CalendarSpec::default()).unwrap();
        let mut buf = Vec::new();
        write_coords_to(&f, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "date,x,y,x_cal,y_cal");
        assert_eq!(lines[1], "2016-01-01,0,2,5,-0.525");
        assert_eq!(lines[2], "2016-01-01,1,,5.95,");
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let d: Date = "2016-01-01".parse().unwrap();
        let t = TidyTable::from_parts(vec![d], vec![0.0], vec![Some(2.0)]).unwrap();
        let f = frame_calendar(&t, &CalendarSpec::default()).unwrap();
        let err = write_coords_csv(&f, "/nonexistent-dir/out.csv").unwrap_err();
        assert!(matches!(err, crate::Error::Io(_)));
    }
}
