//! Deterministic hourly foot-traffic style fixtures.
//!
//! Work days have morning and evening commuter peaks; weekends have one
//! broad afternoon hump. Each sensor has its own level and a small
//! pseudo-random wobble derived from a hash of (day, hour, sensor).

use std::fmt::Write as _;

use crate::civil::{Date, WeekStart};
use crate::error::Result;
use crate::table::TidyTable;

fn bump(hour: f64, centre: f64, spread: f64) -> f64 {
    (-(hour - centre).powi(2) / spread).exp()
}

fn wobble(day: i64, hour: u32, sensor: usize) -> f64 {
    let mut z = (day as u64)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(u64::from(hour) << 32)
        .wrapping_add((sensor as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z ^= z >> 31;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 29;
    (z % 1001) as f64 / 1000.0 - 0.5
}

/// Count for one sensor at one hour of one day.
pub fn hourly_count(date: Date, hour: u32, sensor: usize) -> f64 {
    let h = f64::from(hour);
    let weekend = date.day_of_week(WeekStart::Monday).index() >= 6;
    let base = if weekend || sensor % 3 == 2 {
        40.0 + 900.0 * bump(h, 14.0, 10.0)
    } else {
        40.0 + 1500.0 * bump(h, 8.0, 2.0) + 1200.0 * bump(h, 17.0, 3.0) + 300.0 * bump(h, 12.5, 4.0)
    };
    let level = [1.0, 0.6, 1.4][sensor % 3];
    (base * level * (1.0 + 0.1 * wobble(date.to_days(), hour, sensor))).round()
}

/// CSV text with columns `Date,Time,Count,Sensor`, one row per sensor-hour.
pub fn pedestrian_csv(start: Date, end: Date, sensors: &[&str]) -> String {
    let mut out = String::from("Date,Time,Count,Sensor\n");
    for (s, name) in sensors.iter().enumerate() {
        for date in start.iter_through(end) {
            for hour in 0..24 {
                let _ = writeln!(out, "{date},{hour},{},{name}", hourly_count(date, hour, s));
            }
        }
    }
    out
}

/// Hourly table for one sensor, columns `date`, `x` (hour) and `y` (count).
pub fn pedestrian_counts(start: Date, end: Date) -> Result<TidyTable> {
    let mut dates = Vec::new();
    let mut x = Vec::new();
    let mut y = Vec::new();
    for date in start.iter_through(end) {
        for hour in 0..24 {
            dates.push(date);
            x.push(f64::from(hour));
            y.push(Some(hourly_count(date, hour, 0)));
        }
    }
    TidyTable::from_parts(dates, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_shaped() {
        let monday: Date = "2016-01-04".parse().unwrap();
        let sunday: Date = "2016-01-03".parse().unwrap();
        assert_eq!(hourly_count(monday, 8, 0), hourly_count(monday, 8, 0));
        assert!(hourly_count(monday, 8, 0) > hourly_count(monday, 3, 0));
        assert!(hourly_count(sunday, 14, 0) > hourly_count(sunday, 8, 0));
        assert!(wobble(1, 2, 3).abs() <= 0.5);
    }

    #[test]
    fn csv_shape() {
        let d: Date = "2016-01-01".parse().unwrap();
        let text = pedestrian_csv(d, d.next_day().unwrap(), &["A", "B"]);
        assert_eq!(text.lines().count(), 1 + 2 * 2 * 24);
        assert_eq!(pedestrian_counts(d, d).unwrap().len(), 24);
    }
}
