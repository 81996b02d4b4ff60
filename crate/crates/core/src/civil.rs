//! Proleptic Gregorian date arithmetic.
//!
//! Only the years 1583 through 9999 are representable. Weekdays are always
//! paired with the week-start convention they were computed under.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MIN_YEAR: i32 = 1583;
pub const MAX_YEAR: i32 = 9999;

pub fn is_leap_year(year: i32) -> bool {
    year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)
}

pub fn days_in_month(year: i32, month: u32) -> Result<u32> {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => Ok(31),
        4 | 6 | 9 | 11 => Ok(30),
        2 if is_leap_year(year) => Ok(29),
        2 => Ok(28),
        _ => Err(Error::InvalidArgument(format!("month {month} not in 1..=12"))),
    }
}

/// First day of the week.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WeekStart {
    #[default]
    Monday,
    Sunday,
}

/// A 1-based weekday index together with the convention that produced it.
///
/// Under [`WeekStart::Monday`], Monday is 1 and Sunday is 7. Under
/// [`WeekStart::Sunday`], Sunday is 1 and Saturday is 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weekday {
    index: u32,
    start: WeekStart,
}

impl Weekday {
    pub fn new(index: u32, start: WeekStart) -> Result<Self> {
        if !(1..=7).contains(&index) {
            return Err(Error::InvalidArgument(format!(
                "weekday index {index} not in 1..=7"
            )));
        }
        Ok(Self { index, start })
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn start(self) -> WeekStart {
        self.start
    }

    /// Monday-first index (Monday = 1 .. Sunday = 7) regardless of convention.
    pub fn iso_index(self) -> u32 {
        match self.start {
            WeekStart::Monday => self.index,
            WeekStart::Sunday => (self.index + 5) % 7 + 1,
        }
    }

    /// Re-express this weekday under another week-start convention.
    pub fn with_start(self, start: WeekStart) -> Self {
        let iso = self.iso_index();
        let index = match start {
            WeekStart::Monday => iso,
            WeekStart::Sunday => iso % 7 + 1,
        };
        Self { index, start }
    }
}

/// A calendar date in the proleptic Gregorian calendar.
///
/// Field order gives chronological ordering for the derived `Ord`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Date {
    year: i32,
    month: u32,
    day: u32,
}

impl Date {
    pub fn new(year: i32, month: u32, day: u32) -> Result<Self> {
        if !(MIN_YEAR..=MAX_YEAR).contains(&year) {
            return Err(Error::Range(format!(
                "year {year} outside {MIN_YEAR}..={MAX_YEAR}"
            )));
        }
        let last = days_in_month(year, month)?;
        if day == 0 || day > last {
            return Err(Error::InvalidArgument(format!(
                "day {day} not valid for {year}-{month:02}"
            )));
        }
        Ok(Self { year, month, day })
    }

    pub fn year(self) -> i32 {
        self.year
    }

    pub fn month(self) -> u32 {
        self.month
    }

    pub fn day(self) -> u32 {
        self.day
    }

    pub fn year_month(self) -> YearMonth {
        YearMonth {
            year: self.year,
            month: self.month,
        }
    }

    /// Days since 1970-01-01 (negative before it).
    pub fn to_days(self) -> i64 {
        let y = i64::from(self.year) - i64::from(self.month <= 2);
        let era = y.div_euclid(400);
        let yoe = y - era * 400;
        let m = i64::from(self.month);
        let mp = (m + 9) % 12;
        let doy = (153 * mp + 2) / 5 + i64::from(self.day) - 1;
        let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        era * 146_097 + doe - 719_468
    }

    /// Inverse of [`Date::to_days`].
    pub fn from_days(days: i64) -> Result<Self> {
        let z = days + 719_468;
        let era = z.div_euclid(146_097);
        let doe = z - era * 146_097;
        let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
        let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
        let mp = (5 * doy + 2) / 153;
        let day = (doy - (153 * mp + 2) / 5 + 1) as u32;
        let month = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
        let year = yoe + era * 400 + i64::from(month <= 2);
        let year = i32::try_from(year).map_err(|_| Error::Range(format!("day count {days}")))?;
        Self::new(year, month, day)
    }

    pub fn day_of_week(self, start: WeekStart) -> Weekday {
        // 1970-01-01 was a Thursday (ISO 4).
        let iso = ((self.to_days() + 3).rem_euclid(7) + 1) as u32;
        Weekday {
            index: iso,
            start: WeekStart::Monday,
        }
        .with_start(start)
    }

    pub fn next_day(self) -> Result<Self> {
        let last = days_in_month(self.year, self.month)?;
        if self.day < last {
            Ok(Self {
                day: self.day + 1,
                ..self
            })
        } else if self.month < 12 {
            Ok(Self {
                month: self.month + 1,
                day: 1,
                ..self
            })
        } else if self.year < MAX_YEAR {
            Ok(Self {
                year: self.year + 1,
                month: 1,
                day: 1,
            })
        } else {
            Err(Error::Range(format!("no date after {self}")))
        }
    }

    /// Iterate from `self` through `end`, inclusive.
    pub fn iter_through(self, end: Date) -> impl Iterator<Item = Date> {
        let mut next = (self <= end).then_some(self);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current < end {
                current.next_day().ok()
            } else {
                None
            };
            Some(current)
        })
    }
}

pub fn day_of_week(date: Date, start: WeekStart) -> Weekday {
    date.day_of_week(start)
}

pub fn next_day(date: Date) -> Result<Date> {
    date.next_day()
}

impl fmt::Display for Date {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

impl FromStr for Date {
    type Err = Error;

    /// Accepts `YYYY-MM-DD` only.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("'{s}' is not a YYYY-MM-DD date"));
        let b = s.as_bytes();
        if b.len() != 10 || b[4] != b'-' || b[7] != b'-' {
            return Err(bad());
        }
        let digits = |r: std::ops::Range<usize>| -> Result<u32> {
            let part = &s[r];
            if !part.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            part.parse().map_err(|_| bad())
        };
        let year = digits(0..4)? as i32;
        Date::new(year, digits(5..7)?, digits(8..10)?)
    }
}

/// A (year, month) pair, ordered chronologically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YearMonth {
    pub year: i32,
    pub month: u32,
}

impl YearMonth {
    pub fn next(self) -> Self {
        if self.month == 12 {
            Self {
                year: self.year + 1,
                month: 1,
            }
        } else {
            Self {
                month: self.month + 1,
                ..self
            }
        }
    }

    pub fn first_day(self) -> Result<Date> {
        Date::new(self.year, self.month, 1)
    }

    pub fn days(self) -> u32 {
        days_in_month(self.year, self.month).unwrap_or(31)
    }
}

impl fmt::Display for YearMonth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}", self.year, self.month)
    }
}
