//! Periodic non-crossing partitions of `Z`.
//!
//! A part is either finite (stored by the translate whose minimum lies in `[1, N]`) or
//! infinite (stored as a set of residues). Two parts cross when they intersect or when
//! some translates interleave in the boundary order of the strip: `X` ascending, then
//! `Xi` descending.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{parse_int_list, Cycle, CycleDecomposition, PeriodicPermutation};
use crate::strip::{Side, Strip};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    /// Sorted elements of one representative.
    Finite(Vec<i64>),
    /// Sorted residues in `1..=N`.
    Infinite(Vec<i64>),
}

impl Part {
    pub fn finite(elements: impl IntoIterator<Item = i64>, strip: &Strip) -> Part {
        let mut v: Vec<i64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&m) = v.first() {
            let t = strip.residue(m) - m;
            v.iter_mut().for_each(|x| *x += t);
        }
        Part::Finite(v)
    }

    pub fn infinite(residues: impl IntoIterator<Item = i64>, strip: &Strip) -> Part {
        let set: BTreeSet<i64> = residues.into_iter().map(|r| strip.residue(r)).collect();
        Part::Infinite(set.into_iter().collect())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Part::Infinite(_))
    }

    fn values(&self) -> &[i64] {
        match self {
            Part::Finite(v) | Part::Infinite(v) => v,
        }
    }

    pub fn residues(&self, strip: &Strip) -> BTreeSet<i64> {
        self.values().iter().map(|&v| strip.residue(v)).collect()
    }

    pub fn meets(&self, side: Side, strip: &Strip) -> bool {
        self.values().iter().any(|&v| strip.side(v) == side)
    }

    /// Largest distance between two elements of a finite part (0 for infinite parts).
    pub fn diameter(&self) -> i64 {
        match self {
            Part::Finite(v) => v.last().unwrap_or(&0) - v.first().unwrap_or(&0),
            Part::Infinite(_) => 0,
        }
    }

    fn sigma(&self, strip: &Strip) -> Part {
        match self {
            Part::Finite(v) => Part::finite(v.iter().map(|x| 1 - x), strip),
            Part::Infinite(r) => Part::infinite(r.iter().map(|x| 1 - x), strip),
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Part::Finite(v) => write!(f, "{{{}}}", body(v)),
            Part::Infinite(v) => write!(f, "inf:{{{}}}", body(v)),
        }
    }
}

/// Interleaving test for two plain finite sets (no translates). Intersecting sets cross.
pub fn finite_sets_cross(a: &[i64], b: &[i64], strip: &Strip) -> bool {
    let mut labelled: Vec<((u8, i64), bool)> = Vec::with_capacity(a.len() + b.len());
    labelled.extend(a.iter().map(|&v| (strip.boundary_key(v), false)));
    labelled.extend(b.iter().map(|&v| (strip.boundary_key(v), true)));
    labelled.sort_unstable();
    if labelled.windows(2).any(|w| w[0].0 == w[1].0) {
        return true;
    }
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let changes = labelled.windows(2).filter(|w| w[0].1 != w[1].1).count();
    let wrap = usize::from(labelled.first().unwrap().1 != labelled.last().unwrap().1);
    changes + wrap > 2
}

fn translate_range(a: &[i64], b: &[i64], n: i64) -> std::ops::RangeInclusive<i64> {
    let (amin, amax) = (a[0], *a.last().unwrap());
    let (bmin, bmax) = (b[0], *b.last().unwrap());
    ((amin - bmax).div_euclid(n) - 1)..=((amax - bmin).div_euclid(n) + 1)
}

fn shifted(v: &[i64], d: i64) -> Vec<i64> {
    v.iter().map(|x| x + d).collect()
}

fn window_of(residues: &[i64], lo: i64, hi: i64, strip: &Strip) -> Vec<i64> {
    (lo..=hi).filter(|&v| residues.contains(&strip.residue(v))).collect()
}

/// Translates `t` such that `a` crosses `b + tN`. Infinite parts are translation
/// invariant and report `t = 0` only.
pub(crate) fn crossing_translates(a: &Part, b: &Part, strip: &Strip) -> Vec<i64> {
    let n = strip.n();
    match (a, b) {
        (Part::Finite(s), Part::Finite(t)) => {
            translate_range(s, t, n).filter(|&j| finite_sets_cross(s, &shifted(t, j * n), strip)).collect()
        }
        (Part::Finite(s), Part::Infinite(r)) | (Part::Infinite(r), Part::Finite(s)) => {
            let w = window_of(r, s[0] - n, s.last().unwrap() + n, strip);
            if finite_sets_cross(s, &w, strip) {
                vec![0]
            } else {
                vec![]
            }
        }
        (Part::Infinite(_), Part::Infinite(_)) => {
            let shares = [Side::X, Side::Xi].iter().any(|&side| a.meets(side, strip) && b.meets(side, strip));
            if shares {
                vec![0]
            } else {
                vec![]
            }
        }
    }
}

/// Whether two parts (with all their translates) cross or intersect.
pub fn sets_cross(a: &Part, b: &Part, strip: &Strip) -> bool {
    !crossing_translates(a, b, strip).is_empty()
}

/// Nonzero translates `t` such that a finite part crosses (or meets) its own translate by `tN`.
pub(crate) fn self_crossing_translates(a: &Part, strip: &Strip) -> Vec<i64> {
    match a {
        Part::Finite(s) => {
            let n = strip.n();
            translate_range(s, s, n).filter(|&j| j != 0 && finite_sets_cross(s, &shifted(s, j * n), strip)).collect()
        }
        Part::Infinite(_) => vec![],
    }
}

/// An `N`-periodic partition of `Z`; singletons are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicPartition {
    strip: Strip,
    finite: Vec<Vec<i64>>,
    infinite: Option<Vec<i64>>,
}

impl PeriodicPartition {
    /// Validates and canonicalizes: parts pairwise disjoint (modulo translation), pairwise
    /// non-crossing, each non-crossing with its own translates, at most one infinite part.
    pub fn new(strip: Strip, parts: Vec<Part>) -> Result<Self> {
        let parts = canonical_parts(parts, &strip);
        let mut used = BTreeSet::new();
        for p in &parts {
            for r in p.residues(&strip) {
                if !used.insert(r) {
                    return Err(Error::InvalidPartition(format!("residue {r} lies in two parts")));
                }
            }
            if let Part::Finite(v) = p {
                if p.residues(&strip).len() != v.len() {
                    return Err(Error::InvalidPartition(format!("{p} meets its own translate")));
                }
            }
            if !self_crossing_translates(p, &strip).is_empty() {
                return Err(Error::InvalidPartition(format!("{p} crosses its own translate")));
            }
        }
        if parts.iter().filter(|p| p.is_infinite()).count() > 1 {
            return Err(Error::InvalidPartition("more than one infinite part".into()));
        }
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                if sets_cross(a, b, &strip) {
                    return Err(Error::InvalidPartition(format!("{a} crosses {b}")));
                }
            }
        }
        Ok(Self::from_canonical(strip, parts))
    }

    fn from_canonical(strip: Strip, parts: Vec<Part>) -> Self {
        let mut finite = Vec::new();
        let mut infinite = None;
        for p in parts {
            match p {
                Part::Finite(v) => finite.push(v),
                Part::Infinite(r) => infinite = Some(r),
            }
        }
        finite.sort();
        PeriodicPartition { strip, finite, infinite }
    }

    /// The partition into singletons.
    pub fn trivial(strip: Strip) -> Self {
        PeriodicPartition { strip, finite: vec![], infinite: None }
    }

    pub fn strip(&self) -> &Strip {
        &self.strip
    }

    pub fn period(&self) -> usize {
        self.strip.period()
    }

    pub fn finite_parts(&self) -> &[Vec<i64>] {
        &self.finite
    }

    pub fn infinite_part(&self) -> Option<&[i64]> {
        self.infinite.as_deref()
    }

    pub fn parts(&self) -> Vec<Part> {
        let mut v: Vec<Part> = self.finite.iter().cloned().map(Part::Finite).collect();
        if let Some(r) = &self.infinite {
            v.push(Part::Infinite(r.clone()));
        }
        v
    }

    pub fn is_trivial(&self) -> bool {
        self.finite.is_empty() && self.infinite.is_none()
    }

    /// The partition `p_w`: finite orbits, plus the union of the infinite orbits.
    pub fn of_permutation(w: &PeriodicPermutation, strip: Strip) -> Result<Self> {
        if w.period() != strip.period() {
            return Err(Error::PeriodMismatch(w.period(), strip.period()));
        }
        let cycles = w.cycles();
        let mut parts: Vec<Part> = cycles.finite_cycles().map(|c| Part::finite(c.elements.clone(), &strip)).collect();
        let inf: Vec<i64> = cycles.infinite_cycles().flat_map(|c| c.elements.iter().copied()).collect();
        if !inf.is_empty() {
            parts.push(Part::infinite(inf, &strip));
        }
        Self::new(strip, parts)
    }

    /// True when every infinite part meets both `X` and `Xi`.
    pub fn is_element_shaped(&self) -> bool {
        self.infinite.as_ref().is_none_or(|r| {
            let p = Part::Infinite(r.clone());
            p.meets(Side::X, &self.strip) && p.meets(Side::Xi, &self.strip)
        })
    }

    /// The permutation whose partition is `self`: positive cycles on finite parts
    /// (`X` ascending, then `Xi` descending) and a pseudo-cycle on the infinite part.
    pub fn to_permutation(&self) -> Result<PeriodicPermutation> {
        let s = &self.strip;
        let mut cycles = Vec::new();
        for part in &self.finite {
            let mut v = part.clone();
            v.sort_by_key(|&x| s.boundary_key(x));
            cycles.push(Cycle::finite(v));
        }
        if let Some(r) = &self.infinite {
            if !self.is_element_shaped() {
                return Err(Error::InvalidPartition(format!(
                    "infinite part {} does not meet both sides",
                    Part::Infinite(r.clone())
                )));
            }
            let xs: Vec<i64> = r.iter().copied().filter(|&v| s.is_x(v)).collect();
            let mut xis: Vec<i64> = r.iter().copied().filter(|&v| !s.is_x(v)).collect();
            xis.reverse();
            cycles.push(Cycle::infinite(xs, 1));
            cycles.push(Cycle::infinite(xis, -1));
        }
        PeriodicPermutation::from_cycles(&CycleDecomposition::new(s.period(), cycles))
    }

    /// Every part of `self` lies in a part of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        let n = self.strip.n();
        let inf_other: BTreeSet<i64> = other.infinite.iter().flatten().copied().collect();
        if let Some(r) = &self.infinite {
            if !r.iter().all(|x| inf_other.contains(x)) {
                return false;
            }
        }
        self.finite.iter().all(|a| {
            if a.iter().all(|&v| inf_other.contains(&self.strip.residue(v))) {
                return true;
            }
            other.finite.iter().any(|b| {
                translate_range(a, b, n).any(|t| {
                    let set: BTreeSet<i64> = b.iter().map(|x| x + t * n).collect();
                    a.iter().all(|x| set.contains(x))
                })
            })
        })
    }

    /// Common refinement: the nonempty intersections of parts.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.strip != other.strip {
            return Err(Error::PeriodMismatch(self.period(), other.period()));
        }
        let s = &self.strip;
        let n = s.n();
        let mut parts = Vec::new();
        for a in self.parts() {
            for b in other.parts() {
                match (&a, &b) {
                    (Part::Finite(x), Part::Finite(y)) => {
                        for t in translate_range(x, y, n) {
                            let ys: BTreeSet<i64> = y.iter().map(|v| v + t * n).collect();
                            let common: Vec<i64> = x.iter().copied().filter(|v| ys.contains(v)).collect();
                            if common.len() >= 2 {
                                parts.push(Part::finite(common, s));
                            }
                        }
                    }
                    (Part::Finite(x), Part::Infinite(r)) | (Part::Infinite(r), Part::Finite(x)) => {
                        let common: Vec<i64> = x.iter().copied().filter(|&v| r.contains(&s.residue(v))).collect();
                        if common.len() >= 2 {
                            parts.push(Part::finite(common, s));
                        }
                    }
                    (Part::Infinite(r), Part::Infinite(q)) => {
                        let common: Vec<i64> = r.iter().copied().filter(|v| q.contains(v)).collect();
                        if !common.is_empty() {
                            parts.push(Part::Infinite(common));
                        }
                    }
                }
            }
        }
        Self::new(*s, parts)
    }

    /// Image under `i -> 1 - i`.
    pub fn sigma(&self) -> Result<Self> {
        if !self.strip.is_parity() {
            return Err(Error::OddPeriod(self.period()));
        }
        let parts = self.parts().iter().map(|p| p.sigma(&self.strip)).collect();
        Ok(Self::from_canonical(self.strip, canonical_parts(parts, &self.strip)))
    }

    pub fn is_sigma_stable(&self) -> bool {
        self.sigma().is_ok_and(|s| &s == self)
    }

    /// Minimal non-crossing partition coarser than both, with at most one infinite
    /// part. On the odd/even strip the sigma-images of both inputs are included, so the
    /// result is the minimal sigma-stable coarsening; two leftover infinite parts are merged.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.strip != other.strip {
            return Err(Error::PeriodMismatch(self.period(), other.period()));
        }
        let s = self.strip;
        let mut parts = self.parts();
        parts.extend(other.parts());
        if s.is_parity() {
            let images: Vec<Part> = parts.iter().map(|p| p.sigma(&s)).collect();
            parts.extend(images);
        }
        let parts = join_closure(parts, &s).0;
        Self::new(s, parts)
    }

    /// Number of passes of the crossing-graph closure needed to reach a fixpoint
    /// (ignoring the final infinite-part merge).
    pub fn join_passes(&self, other: &Self) -> usize {
        let mut parts = self.parts();
        parts.extend(other.parts());
        if self.strip.is_parity() {
            let images: Vec<Part> = parts.iter().map(|p| p.sigma(&self.strip)).collect();
            parts.extend(images);
        }
        join_closure(parts, &self.strip).1
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson {
            period: self.period(),
            x_residues: self.strip.x_residues(),
            finite_parts: self.finite.clone(),
            infinite_part: self.infinite.clone(),
        }
    }

    pub fn from_json(j: &PartitionJson) -> Result<Self> {
        let strip = Strip::new(j.period, &j.x_residues)?;
        let mut parts: Vec<Part> = j.finite_parts.iter().map(|v| Part::finite(v.clone(), &strip)).collect();
        if let Some(r) = &j.infinite_part {
            parts.push(Part::infinite(r.clone(), &strip));
        }
        Self::new(strip, parts)
    }

    /// Parses the text form `{1,2,3,4} {6,7} | inf:{1,4}`.
    pub fn parse(s: &str, strip: Strip) -> Result<Self> {
        let mut parts = Vec::new();
        let mut rest = s.trim();
        loop {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == '|');
            if rest.is_empty() {
                break;
            }
            let (infinite, body) = match rest.strip_prefix("inf:") {
                Some(b) => (true, b),
                None => (false, rest),
            };
            let body = body.strip_prefix('{').ok_or_else(|| Error::Parse(format!("expected '{{' at {rest:?}")))?;
            let close = body.find('}').ok_or_else(|| Error::Parse(format!("unclosed part in {s:?}")))?;
            let values = parse_int_list(&body[..close])?;
            rest = &body[close + 1..];
            if infinite {
                parts.push(Part::infinite(values, &strip));
            } else if !values.is_empty() {
                parts.push(Part::finite(values, &strip));
            }
        }
        Self::new(strip, parts)
    }
}

impl fmt::Display for PeriodicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let finite: Vec<String> = self.finite.iter().map(|v| Part::Finite(v.clone()).to_string()).collect();
        let inf = self.infinite.as_ref().map(|r| Part::Infinite(r.clone()).to_string());
        match (finite.is_empty(), inf) {
            (true, None) => write!(f, "{{}}"),
            (true, Some(i)) => write!(f, "{i}"),
            (false, None) => write!(f, "{}", finite.join(" ")),
            (false, Some(i)) => write!(f, "{} | {i}", finite.join(" ")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub period: usize,
    pub x_residues: Vec<i64>,
    pub finite_parts: Vec<Vec<i64>>,
    pub infinite_part: Option<Vec<i64>>,
}

fn canonical_parts(parts: Vec<Part>, strip: &Strip) -> Vec<Part> {
    let set: BTreeSet<Part> = parts
        .into_iter()
        .map(|p| match p {
            Part::Finite(v) => Part::finite(v, strip),
            Part::Infinite(r) => Part::infinite(r, strip),
        })
        .filter(|p| !matches!(p, Part::Finite(v) if v.len() < 2))
        .filter(|p| !matches!(p, Part::Infinite(r) if r.is_empty()))
        .collect();
    set.into_iter().collect()
}

/// Union-find over parts where each node carries a translate relative to its root.
struct TranslateUnionFind {
    parent: Vec<usize>,
    offset: Vec<i64>,
    period: Vec<i64>,
    infinite: Vec<bool>,
}

impl TranslateUnionFind {
    fn new(parts: &[Part]) -> Self {
        let m = parts.len();
        TranslateUnionFind {
            parent: (0..m).collect(),
            offset: vec![0; m],
            period: vec![0; m],
            infinite: parts.iter().map(Part::is_infinite).collect(),
        }
    }

    fn find(&mut self, i: usize) -> (usize, i64) {
        if self.parent[i] == i {
            return (i, 0);
        }
        let (root, off) = self.find(self.parent[i]);
        self.offset[i] += off;
        self.parent[i] = root;
        (root, self.offset[i])
    }

    /// Connects part `i` with the translate of part `j` by `t` periods.
    fn union(&mut self, i: usize, j: usize, t: i64) {
        let (ri, oi) = self.find(i);
        let (rj, oj) = self.find(j);
        if ri == rj {
            self.period[ri] = gcd(self.period[ri], (oi + t - oj).abs());
        } else {
            self.parent[rj] = ri;
            self.offset[rj] = oi + t - oj;
            self.period[ri] = gcd(self.period[ri], self.period[rj]);
            self.infinite[ri] |= self.infinite[rj];
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Merges crossing parts (connected components of the crossing graph) until no two
/// parts cross, then merges infinite parts if more than one remains. Returns the parts
/// and the number of graph passes that changed something.
fn join_closure(mut parts: Vec<Part>, strip: &Strip) -> (Vec<Part>, usize) {
    let mut passes = 0;
    loop {
        parts = canonical_parts(parts, strip);
        let m = parts.len();
        let mut uf = TranslateUnionFind::new(&parts);
        let mut changed = false;
        for i in 0..m {
            for t in self_crossing_translates(&parts[i], strip) {
                uf.union(i, i, t);
                changed = true;
            }
            for j in i + 1..m {
                for t in crossing_translates(&parts[i], &parts[j], strip) {
                    uf.union(i, j, t);
                    changed = true;
                }
            }
        }
        if !changed {
            let infinite: Vec<usize> = (0..m).filter(|&i| parts[i].is_infinite()).collect();
            if infinite.len() <= 1 {
                return (parts, passes);
            }
            let merged: Vec<i64> = infinite.iter().flat_map(|&i| parts[i].values().to_vec()).collect();
            let mut next: Vec<Part> = (0..m).filter(|i| !infinite.contains(i)).map(|i| parts[i].clone()).collect();
            next.push(Part::infinite(merged, strip));
            parts = next;
            continue;
        }
        passes += 1;
        let mut components: std::collections::BTreeMap<usize, Vec<(usize, i64)>> = Default::default();
        for i in 0..m {
            let (r, o) = uf.find(i);
            components.entry(r).or_default().push((i, o));
        }
        let n = strip.n();
        parts = components
            .into_iter()
            .map(|(root, members)| {
                let values = members.iter().flat_map(|&(i, o)| parts[i].values().iter().map(move |v| v + o * n));
                if uf.infinite[root] || uf.period[root] != 0 {
                    Part::infinite(values, strip)
                } else {
                    Part::finite(values, strip)
                }
            })
            .collect();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strip(n: usize) -> Strip {
        Strip::ctilde(n).unwrap()
    }

    fn part(s: &str, st: &Strip) -> PeriodicPartition {
        PeriodicPartition::parse(s, *st).unwrap()
    }

    #[test]
    fn crossing_examples() {
        let s8 = strip(4);
        assert!(sets_cross(&Part::finite([1, 5], &s8), &Part::finite([3, 7], &s8), &s8));
        let s4 = strip(2);
        assert!(!sets_cross(&Part::finite([1, 2], &s4), &Part::finite([3, 4], &s4), &s4));
        assert!(sets_cross(&Part::infinite([1, 4], &s4), &Part::infinite([2, 3], &s4), &s4));
        // an X-only infinite part and an Xi-only infinite part do not cross
        assert!(!sets_cross(&Part::infinite([1], &s4), &Part::infinite([2], &s4), &s4));
        // an X-only infinite part crosses every mixed finite part
        assert!(sets_cross(&Part::infinite([1, 3], &s4), &Part::finite([3, 100], &s4), &s4));
        assert!(sets_cross(&Part::infinite([1], &s4), &Part::finite([3, 2], &s4), &s4));
        assert!(!sets_cross(&Part::infinite([1], &s4), &Part::finite([2, 4], &s4), &s4));
    }

    #[test]
    fn far_translates_do_not_cross() {
        let s = strip(2);
        assert!(!finite_sets_cross(&[1, 2], &[101, 102], &s));
        assert!(finite_sets_cross(&[1, 102], &[101, 2], &s));
    }

    #[test]
    fn partition_of_c_and_back() {
        let s = strip(2);
        let c = PeriodicPermutation::coxeter(&s);
        let p = PeriodicPartition::of_permutation(&c, s).unwrap();
        assert_eq!(p.infinite_part(), Some(&[1, 2, 3, 4][..]));
        assert!(p.finite_parts().is_empty());
        assert_eq!(p.to_permutation().unwrap(), c);
        assert_eq!(p.to_string(), "inf:{1,2,3,4}");
    }

    #[test]
    fn element_of_finite_part() {
        let s = strip(2);
        let p = part("{1,2,3,4}", &s);
        assert_eq!(p.to_permutation().unwrap(), PeriodicPermutation::parse("(1,3,4,2)", 4).unwrap());
        assert!(PeriodicPartition::trivial(s).to_permutation().unwrap().is_identity());
        assert!(part("inf:{1,3}", &s).to_permutation().is_err());
    }

    #[test]
    fn identity_partition() {
        let s = strip(2);
        let p = PeriodicPartition::of_permutation(&PeriodicPermutation::identity(4), s).unwrap();
        assert!(p.is_trivial());
        assert_eq!(p.to_string(), "{}");
    }

    #[test]
    fn refinement_examples() {
        let s = strip(2);
        let a = part("{2,3}", &s);
        let b = part("{1,2,3,4}", &s);
        assert!(a.refines(&b));
        assert!(!b.refines(&a));
        assert!(b.refines(&b));
        // {1,3} against a partition pairing 1 with 3 - 4 = -1 (the part {3,5})
        let c = part("{1,3}", &s);
        let d = part("{3,5}", &s);
        assert!(!c.refines(&d));
        let inf = part("inf:{1,2,3,4}", &s);
        assert!(b.refines(&inf) && c.refines(&inf));
    }

    #[test]
    fn meet_examples() {
        let s = strip(2);
        let a = part("{1,2,3,4}", &s);
        let b = part("{4,5} {2,3}", &s);
        assert_eq!(a.meet(&b).unwrap(), part("{2,3}", &s));
        assert_eq!(a.meet(&a).unwrap(), a);
        let t = PeriodicPartition::trivial(s);
        assert_eq!(a.meet(&t).unwrap(), t);
    }

    #[test]
    fn join_examples() {
        let s = strip(2);
        let a = part("{1,2} {3,4}", &s);
        let b = part("{2,3}", &s);
        assert_eq!(a.join(&b).unwrap(), part("{1,2,3,4}", &s));
        let c = part("{4,5}", &s);
        assert_eq!(c.join(&b).unwrap(), part("{4,5} {2,3}", &s));
        let x = PeriodicPartition::new(s, vec![Part::infinite([1, 4], &s)]).unwrap();
        let y = PeriodicPartition::new(s, vec![Part::infinite([2, 3], &s)]).unwrap();
        assert_eq!(x.join(&y).unwrap(), part("inf:{1,2,3,4}", &s));
    }

    #[test]
    fn join_merges_two_infinite_parts() {
        let s = strip(2);
        let x = PeriodicPartition::new(s, vec![Part::infinite([1], &s)]).unwrap();
        let j = x.join(&x).unwrap();
        assert_eq!(j.infinite_part(), Some(&[1, 4][..]));
    }

    #[test]
    fn text_round_trip() {
        let s = strip(3);
        for text in ["{}", "{1,2}", "{1,2} {3,4}", "{3,5} | inf:{1,2,6}", "inf:{1,2,3,4,5,6}"] {
            assert_eq!(part(text, &s).to_string(), text);
        }
        assert!(PeriodicPartition::parse("{1,3} {3,4}", s).is_err());
        assert!(PeriodicPartition::parse("{1,4} {2,3}", strip(2)).is_err());
        assert!(PeriodicPartition::parse("{1,2", s).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = strip(3);
        let p = part("{3,5} | inf:{1,2,6}", &s);
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back: PartitionJson = serde_json::from_str(&j).unwrap();
        assert_eq!(PeriodicPartition::from_json(&back).unwrap(), p);
    }
}
