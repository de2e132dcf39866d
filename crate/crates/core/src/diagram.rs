//! Strip diagrams: `X` on the lower line `D`, `Xi` on the upper line `Delta`, both
//! oriented to the left, with one path per orbit joining `i` to `w(i)`.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::germ::{Germ, GermElement};
use crate::perm::PeriodicPermutation;
use crate::strip::{Side, Strip};

const UNIT: i64 = 40;
const MARGIN: i64 = 60;
const TOP: i64 = 40;
const BOTTOM: i64 = 200;
const PALETTE: [&str; 6] = ["#1f4e9c", "#b2361f", "#2f7d32", "#8a4fa3", "#c07b00", "#00838f"];

/// One edge `from -> to` of a path. Endpoints are integers; either may lie outside the
/// displayed range, in which case the edge is drawn to the matching side of the strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: i64,
    pub to: i64,
    pub orbit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StripDiagram {
    strip_period: usize,
    x_residues: Vec<i64>,
    periods: usize,
    segments: Vec<Segment>,
    #[serde(skip)]
    strip: Strip,
}

impl StripDiagram {
    /// Diagram of `w` over `periods` periods, values `1..=periods * N`.
    pub fn new(strip: &Strip, w: &PeriodicPermutation, periods: usize) -> Self {
        let n = strip.n();
        let hi = periods as i64 * n;
        let inverse = w.inverse();
        let mut sources: Vec<i64> = (1..=hi).chain((1..=hi).map(|v| inverse.apply(v))).collect();
        sources.sort_unstable();
        sources.dedup();
        let cycles = w.cycles().cycles;
        let mut orbit_ids: BTreeMap<(usize, i64), usize> = BTreeMap::new();
        let mut segments = Vec::new();
        for i in sources {
            let j = w.apply(i);
            if i == j {
                continue;
            }
            let key = cycles
                .iter()
                .enumerate()
                .find_map(|(idx, c)| {
                    c.elements.iter().find(|&&e| (i - e).rem_euclid(n) == 0).map(|&e| {
                        let k = (i - e).div_euclid(n);
                        (idx, if c.shift == 0 { k } else { k.rem_euclid(c.shift.abs()) })
                    })
                })
                .expect("non-fixed point lies on a cycle");
            let next = orbit_ids.len();
            let orbit = *orbit_ids.entry(key).or_insert(next);
            segments.push(Segment { from: i, to: j, orbit });
        }
        StripDiagram { strip_period: strip.period(), x_residues: strip.x_residues(), periods, segments, strip: *strip }
    }

    /// Diagram of a germ element over two periods.
    pub fn of_element(germ: &Germ, x: &GermElement) -> Self {
        StripDiagram::new(germ.strip(), x.perm(), 2)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn orbit_count(&self) -> usize {
        self.segments.iter().map(|s| s.orbit + 1).max().unwrap_or(0)
    }

    /// Segments starting in the first displayed period.
    pub fn first_period(&self) -> Vec<(i64, i64)> {
        let n = self.strip.n();
        self.segments.iter().filter(|s| (1..=n).contains(&s.from)).map(|s| (s.from, s.to)).collect()
    }

    /// Pairs of segments whose endpoints interleave along the boundary of the strip
    /// (`D` read left to right in increasing order, then `Delta` back).
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        let key = |v: i64| self.strip.boundary_key(v);
        let mut out = Vec::new();
        for (a, s) in self.segments.iter().enumerate() {
            let (lo, hi) = if key(s.from) < key(s.to) { (s.from, s.to) } else { (s.to, s.from) };
            let inside = |v: i64| key(lo) < key(v) && key(v) < key(hi);
            for (b, t) in self.segments.iter().enumerate().skip(a + 1) {
                if [t.from, t.to].iter().any(|v| *v == lo || *v == hi) {
                    continue;
                }
                if inside(t.from) != inside(t.to) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn slots(&self) -> i64 {
        let x = self.x_residues.len();
        x.max(self.strip_period - x) as i64
    }

    fn total_slots(&self) -> i64 {
        self.slots() * self.periods as i64
    }

    fn rank_on_side(&self, v: i64) -> i64 {
        let r = self.strip.residue(v);
        let side = self.strip.side(v);
        (1..r).filter(|&s| self.strip.side(s) == side).count() as i64
    }

    fn line_y(&self, v: i64) -> i64 {
        match self.strip.side(v) {
            Side::X => BOTTOM,
            Side::Xi => TOP,
        }
    }

    fn in_range(&self, v: i64) -> bool {
        (1..=self.periods as i64 * self.strip.n()).contains(&v)
    }

    /// Position of `v`; values beyond the range map to the side they leave by.
    fn position(&self, v: i64) -> (i64, i64) {
        let y = self.line_y(v);
        if !self.in_range(v) {
            let inward = if y == BOTTOM { -UNIT / 2 } else { UNIT / 2 };
            let x = if v < 1 { MARGIN + self.total_slots() * UNIT } else { MARGIN - UNIT };
            return (x, y + inward);
        }
        let q = (v - 1).div_euclid(self.strip.n());
        let slot = q * self.slots() + self.rank_on_side(v);
        (MARGIN + (self.total_slots() - 1 - slot) * UNIT, y)
    }

    fn path_data(&self, s: &Segment) -> String {
        let (x1, y1) = self.position(s.from);
        let (x2, y2) = self.position(s.to);
        let (cx, cy) = if self.strip.side(s.from) == self.strip.side(s.to) {
            let depth = ((x1 - x2).abs() / 2 + 10).min((BOTTOM - TOP) / 2 - 10);
            let y = self.line_y(s.from);
            ((x1 + x2) / 2, if y == BOTTOM { y - depth } else { y + depth })
        } else {
            ((x1 + x2) / 2, (y1 + y2) / 2)
        };
        format!("M {x1} {y1} Q {cx} {cy} {x2} {y2}")
    }

    pub fn to_svg(&self) -> String {
        let width = 2 * MARGIN + self.total_slots() * UNIT;
        let height = BOTTOM + TOP;
        let right = MARGIN + self.total_slots() * UNIT;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(
            s,
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="5" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#
        );
        for (y, name) in [(TOP, "Delta"), (BOTTOM, "D")] {
            let _ = writeln!(
                s,
                r#"<line class="boundary" x1="{right}" y1="{y}" x2="{}" y2="{y}" stroke="black" marker-end="url(#arrow)"/>"#,
                MARGIN - UNIT
            );
            let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="14">{name}</text>"#, right + 8, y + 5);
        }
        for v in 1..=self.periods as i64 * self.strip.n() {
            let (x, y) = self.position(v);
            let ty = if y == BOTTOM { y + 20 } else { y - 10 };
            let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="4"/>"#);
            let _ = writeln!(s, r#"<text x="{x}" y="{ty}" font-size="12" text-anchor="middle">{v}</text>"#);
        }
        for seg in &self.segments {
            let color = PALETTE[seg.orbit % PALETTE.len()];
            let _ = writeln!(
                s,
                r#"<path class="orbit-{}" d="{}" fill="none" stroke="{color}" stroke-width="2" marker-end="url(#arrow)"/>"#,
                seg.orbit,
                self.path_data(seg)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nine_strip() -> Strip {
        Strip::new(9, &[5, 6, 7, 8, 9]).unwrap()
    }

    #[test]
    fn nine_cycle_topology() {
        let strip = nine_strip();
        let germ = Germ::new(strip);
        let x = germ.member(&PeriodicPermutation::parse("(5,7,8,3,2)", 9).unwrap()).unwrap();
        let d = StripDiagram::of_element(&germ, &x);
        assert!(d.crossings().is_empty());
        let mut first = d.first_period();
        first.sort();
        assert_eq!(first, vec![(2, 5), (3, 2), (5, 7), (7, 8), (8, 3)]);
        assert!(d.orbit_count() >= 2);
        assert!(d.segments().iter().all(|s| s.orbit == usize::from(s.from > 9 || (s.from < 1))));
    }

    #[test]
    fn nine_pseudo_cycle_topology() {
        let strip = nine_strip();
        let w = PeriodicPermutation::parse("(5,7,8)[1](3,2)[-1]", 9).unwrap();
        let d = StripDiagram::new(&strip, &w, 2);
        assert!(d.crossings().is_empty());
        assert_eq!(d.orbit_count(), 2);
        let mut first = d.first_period();
        first.sort();
        assert_eq!(first, vec![(2, -6), (3, 2), (5, 7), (7, 8), (8, 14)]);
    }

    #[test]
    fn identity_has_no_paths() {
        let germ = Germ::ctilde(2).unwrap();
        let d = StripDiagram::of_element(&germ, &germ.identity());
        assert!(d.segments().is_empty());
        let svg = d.to_svg();
        assert!(!svg.contains("<path class"));
        assert_eq!(svg.matches("<circle").count(), 8);
    }

    #[test]
    fn coxeter_has_opposite_drifts() {
        let germ = Germ::ctilde(2).unwrap();
        let d = StripDiagram::of_element(&germ, &germ.coxeter());
        assert_eq!(d.orbit_count(), 2);
        assert!(d.crossings().is_empty());
        for s in d.segments() {
            let drift = s.to - s.from;
            match germ.strip().side(s.from) {
                Side::X => assert!(drift > 0),
                Side::Xi => assert!(drift < 0),
            }
        }
    }

    #[test]
    fn crossing_pair_is_detected() {
        let strip = Strip::ctilde(2).unwrap();
        let germ = Germ::new(strip);
        let cross = PeriodicPermutation::parse("(1,4)(2,3)", 4).unwrap();
        assert!(!germ.is_member(&cross));
        assert!(!StripDiagram::new(&strip, &cross, 2).crossings().is_empty());
    }

    #[test]
    fn svg_is_deterministic() {
        let germ = Germ::ctilde(3).unwrap();
        let c = germ.coxeter();
        let a = StripDiagram::of_element(&germ, &c).to_svg();
        let b = StripDiagram::of_element(&germ, &c).to_svg();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
    }
}
