use std::collections::{HashMap, HashSet};

use calgrid::{
    cell_position, polar_project, project_point, weekly_cell, BlockShape, CellAddress, Date,
    Direction, Geometry, GridDims, MonthFrame, ScaledPoint, WeekStart, YearMonth,
};
use proptest::prelude::*;

/// Walk a month day by day: advance the column, start a new week row after
/// the last column, and send a sixth row back to the top.
fn day_walk(first_weekday: u32, days: u32) -> Vec<(u32, u32)> {
    let (mut i, mut j) = (1, first_weekday);
    let mut out = Vec::new();
    for _ in 0..days {
        out.push((i, j));
        j += 1;
        if j > 7 {
            j = 1;
            i += 1;
            if i > 5 {
                i = 1;
            }
        }
    }
    out
}

#[test]
fn day_walk_matches_formula_for_every_month_shape() {
    for k in 1..=7 {
        for d in 28..=31 {
            let frame = MonthFrame::new(k, d).unwrap();
            let formula: Vec<_> = (1..=d)
                .map(|day| cell_position(frame.slot(day).unwrap()))
                .collect();
            assert_eq!(formula, day_walk(k, d), "k={k} d={d}");

            let distinct: HashSet<_> = formula.iter().collect();
            assert_eq!(distinct.len(), d as usize, "injective for k={k} d={d}");
            assert!(formula.iter().all(|&(i, j)| (1..=5).contains(&i) && (1..=7).contains(&j)));
        }
    }
}

#[test]
fn every_day_of_2016_matches_day_walk_and_weekday() {
    for start in [WeekStart::Monday, WeekStart::Sunday] {
        let mut ym = YearMonth { year: 2016, month: 1 };
        for _ in 0..12 {
            let frame = MonthFrame::of(ym, start).unwrap();
            let walk = day_walk(frame.first_weekday(), frame.days());
            for day in 1..=frame.days() {
                let (i, j) = cell_position(frame.slot(day).unwrap());
                assert_eq!((i, j), walk[day as usize - 1]);
                let date = Date::new(ym.year, ym.month, day).unwrap();
                assert_eq!(j, date.day_of_week(start).index());
            }
            ym = ym.next();
        }
    }
}

#[test]
fn weekly_rows_by_walking() {
    let start: Date = "2016-01-01".parse().unwrap();
    let end: Date = "2016-12-31".parse().unwrap();
    for ws in [WeekStart::Monday, WeekStart::Sunday] {
        let mut row = 1;
        for date in start.iter_through(end) {
            if date != start && date.day_of_week(ws).index() == 1 {
                row += 1;
            }
            assert_eq!(
                weekly_cell(date, start, ws).unwrap(),
                (row, date.day_of_week(ws).index())
            );
        }
    }
}

/// Direct transcription of the projection with y pointing up.
fn reference_projection(a: &CellAddress, p: ScaledPoint, b: f64, w: f64, h: f64) -> (f64, f64) {
    let (m, n, i, j) = (a.m as f64, a.n as f64, a.i as f64, a.j as f64);
    let x = j + (n - 1.0) * 7.0 + (n - 1.0) * b + p.h * w;
    let y = -i - (m - 1.0) * 5.0 - (m - 1.0) * b + p.c * h;
    (x, y)
}

fn address() -> impl Strategy<Value = CellAddress> {
    (1u32..=4, 1u32..=4, 1u32..=5, 1u32..=7).prop_map(|(m, n, i, j)| CellAddress { m, n, i, j })
}

fn unit() -> impl Strategy<Value = f64> {
    0.0f64..1.0
}

proptest! {
    #[test]
    fn projection_matches_reference(
        a in address(), h in unit(), c in unit(),
        b in 0.0f64..2.0, w in 0.05f64..=1.0, ht in 0.05f64..=1.0,
    ) {
        let dims = GridDims::new(4, 4, b).unwrap();
        let p = ScaledPoint { h, c };
        let out = project_point(&a, p, &dims, Direction::Horizontal, w, ht);
        let (x, y) = reference_projection(&a, p, b, w, ht);
        prop_assert!((out.x - x).abs() < 1e-12 && (out.y - y).abs() < 1e-12);
    }

    #[test]
    fn projection_inverts(
        a in address(), h in unit(), c in unit(),
        b in 0.0f64..2.0, w in 0.05f64..=1.0, ht in 0.05f64..=1.0,
        vertical in any::<bool>(),
    ) {
        let dir = if vertical { Direction::Vertical } else { Direction::Horizontal };
        let g = Geometry::new(BlockShape::MONTH, GridDims::new(4, 4, b).unwrap(), dir, w, ht).unwrap();
        let (back, p) = g.invert(g.project(&a, ScaledPoint { h, c }));
        prop_assert_eq!(back, a);
        prop_assert!((p.h - h).abs() < 1e-9 && (p.c - c).abs() < 1e-9);
    }

    #[test]
    fn distinct_cells_are_disjoint(
        a in address(), b_addr in address(), gap in 0.0f64..1.0, vertical in any::<bool>(),
    ) {
        prop_assume!(a != b_addr);
        let dir = if vertical { Direction::Vertical } else { Direction::Horizontal };
        let g = Geometry::new(BlockShape::MONTH, GridDims::new(4, 4, gap).unwrap(), dir, 1.0, 1.0).unwrap();
        let (p, q) = (g.cell_bounds(&a), g.cell_bounds(&b_addr));
        let overlap_x = p.max_x.min(q.max_x) - p.min_x.max(q.min_x);
        let overlap_y = p.max_y.min(q.max_y) - p.min_y.max(q.min_y);
        prop_assert!(overlap_x <= 1e-12 || overlap_y <= 1e-12);
    }

    #[test]
    fn polar_radius_is_half_c(h in unit(), c in 0.0f64..=1.0) {
        let p = polar_project(ScaledPoint { h, c });
        let r = ((p.h - 0.5).powi(2) + (p.c - 0.5).powi(2)).sqrt();
        prop_assert!((r - c / 2.0).abs() < 1e-9);
        prop_assert!((0.0..=1.0).contains(&p.h) && (0.0..=1.0).contains(&p.c));
    }
}

#[test]
fn week_rows_descend_and_months_stack() {
    let g = Geometry::new(
        BlockShape::MONTH,
        GridDims::new(3, 4, 0.3).unwrap(),
        Direction::Horizontal,
        1.0,
        1.0,
    )
    .unwrap();
    let origin = ScaledPoint { h: 0.0, c: 0.0 };
    let mut ys: HashMap<(u32, u32), f64> = HashMap::new();
    for m in 1..=3 {
        for i in 1..=5 {
            ys.insert((m, i), g.project(&CellAddress { m, n: 1, i, j: 1 }, origin).y);
        }
    }
    for m in 1..=3 {
        for i in 1..5 {
            assert!(ys[&(m, i + 1)] < ys[&(m, i)]);
        }
    }
    assert!(ys[&(2, 1)] < ys[&(1, 5)]);
}
