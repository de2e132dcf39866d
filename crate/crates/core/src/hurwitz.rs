//! Reduced decompositions into reflections and the Hurwitz action on them.
//!
//! The move at position `i` sends `(.., g_i, g_{i+1}, ..)` to
//! `(.., g_i g_{i+1} g_i^-1, g_i, ..)`; its inverse sends it to
//! `(.., g_{i+1}, g_{i+1}^-1 g_i g_{i+1}, ..)`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::germ::{CtildeReflection, Germ, GermElement};
use crate::perm::PeriodicPermutation;

/// A sequence of reflections together with the element it multiplies to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ReflectionTuple {
    pub entries: Vec<CtildeReflection>,
    #[serde(skip)]
    pub target: PeriodicPermutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionSet {
    pub tuples: BTreeSet<Vec<CtildeReflection>>,
    pub window: usize,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub tuples: BTreeSet<Vec<CtildeReflection>>,
    pub cap: usize,
    pub truncated: bool,
}

/// Which simple reflection class a reflection belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConjugacyClass {
    /// Long reflections `(a, kN + 1 - a)` with `k` even.
    Sigma0,
    /// Paired reflections `(a, b)(1 - a, 1 - b)`.
    Middle,
    /// Long reflections with `k` odd.
    SigmaN,
}

/// Which rank-`n` finite parabolic a classification target lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parabolic {
    /// Generated by `sigma_1, ..., sigma_n`.
    WPrime,
    /// Generated by `sigma_0, ..., sigma_{n-1}`.
    WSecond,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub power: i64,
    pub target: CtildeReflection,
    pub parabolic: Parabolic,
}

/// Hurwitz action on reduced decompositions of divisors of `c`.
#[derive(Debug, Clone)]
pub struct Hurwitz {
    germ: Germ,
}

impl Hurwitz {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Hurwitz { germ: Germ::ctilde(n)? })
    }

    pub fn germ(&self) -> &Germ {
        &self.germ
    }

    fn perm(&self, r: &CtildeReflection) -> PeriodicPermutation {
        r.to_perm(self.germ.period()).expect("reflections are valid permutations")
    }

    pub fn product(&self, entries: &[CtildeReflection]) -> PeriodicPermutation {
        entries.iter().fold(PeriodicPermutation::identity(self.germ.period()), |acc, r| {
            acc.compose(&self.perm(r)).expect("same period")
        })
    }

    pub fn tuple(&self, entries: Vec<CtildeReflection>) -> ReflectionTuple {
        let target = self.product(&entries);
        ReflectionTuple { entries, target }
    }

    /// Conjugate of `t` by `r`: `r t r`.
    fn conjugate(&self, r: &CtildeReflection, t: &CtildeReflection) -> CtildeReflection {
        let rp = self.perm(r);
        let w = rp.compose(&self.perm(t)).and_then(|x| x.compose(&rp)).expect("same period");
        CtildeReflection::from_perm(&w).expect("conjugates of reflections are reflections")
    }

    /// Hurwitz move at the 1-based position `i` in direction `+1` or `-1`.
    pub fn hurwitz_move(&self, t: &ReflectionTuple, i: usize, direction: i8) -> Result<ReflectionTuple> {
        if i == 0 || i >= t.entries.len() {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut entries = t.entries.clone();
        let (a, b) = (entries[i - 1], entries[i]);
        if direction > 0 {
            entries[i - 1] = self.conjugate(&a, &b);
            entries[i] = a;
        } else {
            entries[i - 1] = b;
            entries[i] = self.conjugate(&b, &a);
        }
        Ok(ReflectionTuple { entries, target: t.target.clone() })
    }

    fn moves(&self, entries: &[CtildeReflection]) -> Vec<Vec<CtildeReflection>> {
        let mut out = Vec::new();
        for i in 1..entries.len() {
            let (a, b) = (entries[i - 1], entries[i]);
            let mut up = entries.to_vec();
            up[i - 1] = self.conjugate(&a, &b);
            up[i] = a;
            out.push(up);
            let mut down = entries.to_vec();
            down[i - 1] = b;
            down[i] = self.conjugate(&b, &a);
            out.push(down);
        }
        out
    }

    /// All reduced decompositions obtained by peeling off a dividing atom `rho` and
    /// decomposing `rho w`. Complete when `w` has no infinite part; otherwise atoms
    /// of the infinite parts are taken in window `K` and `truncated` is set.
    pub fn reduced_decompositions(&self, w: &GermElement, window: usize) -> Result<DecompositionSet> {
        let mut memo = HashMap::new();
        let mut truncated = false;
        let tuples = self.decompose(w, window, &mut memo, &mut truncated)?;
        Ok(DecompositionSet { tuples: tuples.into_iter().collect(), window, truncated })
    }

    fn decompose(
        &self,
        w: &GermElement,
        window: usize,
        memo: &mut HashMap<PeriodicPermutation, Vec<Vec<CtildeReflection>>>,
        truncated: &mut bool,
    ) -> Result<Vec<Vec<CtildeReflection>>> {
        if w.is_identity() {
            return Ok(vec![vec![]]);
        }
        if let Some(found) = memo.get(w.perm()) {
            return Ok(found.clone());
        }
        let atoms = self.germ.atoms_dividing(w, window)?;
        *truncated |= atoms.truncated;
        let mut out = Vec::new();
        for rho in atoms.atoms {
            let rest = self.germ.quotient_by_reflection(&rho, w)?;
            for tail in self.decompose(&rest, window, memo, truncated)? {
                let mut t = vec![rho];
                t.extend(tail);
                out.push(t);
            }
        }
        memo.insert(w.perm().clone(), out.clone());
        Ok(out)
    }

    /// Breadth-first closure of `t` under Hurwitz moves, stopping at `cap` tuples.
    pub fn orbit(&self, t: &ReflectionTuple, cap: usize) -> Orbit {
        let (tuples, truncated) = self.bfs(&t.entries, cap, |_| true);
        Orbit { tuples, cap, truncated }
    }

    /// Orbit restricted to tuples whose reflections all lie in window `K`.
    pub fn orbit_in_window(&self, t: &ReflectionTuple, window: usize, cap: usize) -> Orbit {
        let period = self.germ.period();
        let (tuples, truncated) = self.bfs(&t.entries, cap, |e| e.iter().all(|r| in_window(r, window, period)));
        Orbit { tuples, cap, truncated }
    }

    fn bfs(
        &self,
        start: &[CtildeReflection],
        cap: usize,
        keep: impl Fn(&[CtildeReflection]) -> bool,
    ) -> (BTreeSet<Vec<CtildeReflection>>, bool) {
        let mut seen = BTreeSet::from([start.to_vec()]);
        let mut queue = VecDeque::from([start.to_vec()]);
        let mut truncated = false;
        while let Some(entries) = queue.pop_front() {
            for next in self.moves(&entries) {
                if seen.contains(&next) || !keep(&next) {
                    continue;
                }
                if seen.len() >= cap {
                    truncated = true;
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        (seen, truncated)
    }

    /// `(rho_2, ..., rho_{n+1}, c^-1 rho_1 c)` for a decomposition of `c`.
    pub fn rotate(&self, t: &ReflectionTuple) -> Result<ReflectionTuple> {
        if t.target != *self.germ.coxeter_perm() || t.entries.is_empty() {
            return Err(Error::TargetNotCoxeter);
        }
        let first = self.germ.reflection(&t.entries[0])?;
        let moved = CtildeReflection::from_perm(self.germ.garside_automorphism(&first)?.perm())?;
        let mut entries = t.entries[1..].to_vec();
        entries.push(moved);
        Ok(ReflectionTuple { entries, target: t.target.clone() })
    }

    /// Finds `m` with `c^m rho c^-m` in one of the two finite parabolics, following the
    /// three cases: same parity, different parity, long.
    pub fn classify_reflection(&self, rho: &CtildeReflection) -> Result<Classification> {
        let period = self.germ.period();
        let n = self.germ.rank() as i64;
        let (a, b) = rho.pair();
        let (power, target) = match *rho {
            CtildeReflection::Paired { .. } if (a - b).rem_euclid(2) == 0 => {
                let (p, q) = if a.rem_euclid(2) == 1 { (a, b) } else { (1 - b, 1 - a) };
                let m = (1 - p) / 2;
                (m, CtildeReflection::from_pair(1, q + 1 - p, period)?)
            }
            CtildeReflection::Paired { .. } => {
                let s = a + b;
                let odd = if a.rem_euclid(2) == 1 { a } else { b };
                let lo = (s - 1) / 2;
                let dest = if lo.rem_euclid(2) == 1 { lo } else { lo + 1 };
                ((dest - odd) / 2, CtildeReflection::from_pair(lo, lo + 1, period)?)
            }
            CtildeReflection::Long { .. } => {
                let k = (a + b - 1) / (2 * n);
                let odd = if a.rem_euclid(2) == 1 { a } else { b };
                let dest = if (k * n).rem_euclid(2) == 1 { k * n } else { k * n + 1 };
                ((dest - odd) / 2, CtildeReflection::from_pair(k * n, k * n + 1, period)?)
            }
        };
        let r = self.germ.reflection(rho)?;
        let conj = CtildeReflection::from_perm(self.germ.conjugate_by_c_power(&r, power)?.perm())?;
        if conj != target {
            return Err(Error::NotReflection(format!("c^{power} {rho} c^{} is {conj}, expected {target}", -power)));
        }
        let parabolic = if w_prime_reflections(n as usize).contains(&target) {
            Parabolic::WPrime
        } else if w_second_reflections(n as usize).contains(&target) {
            Parabolic::WSecond
        } else {
            return Err(Error::NotReflection(format!("{target} lies in neither finite parabolic")));
        };
        Ok(Classification { power, target, parabolic })
    }

    /// Conjugacy class read off kind and parity: long reflections with `k` even are
    /// conjugate to `sigma_0`, with `k` odd to `sigma_n`, paired ones to `sigma_1`.
    pub fn conjugacy_class(&self, rho: &CtildeReflection) -> ConjugacyClass {
        match rho.long_k(self.germ.period()) {
            Some(k) if k.rem_euclid(2) == 0 => ConjugacyClass::Sigma0,
            Some(_) => ConjugacyClass::SigmaN,
            None => ConjugacyClass::Middle,
        }
    }
}

/// Whether the defining transposition `(a, b)` satisfies `b - a < K N`.
pub fn in_window(r: &CtildeReflection, window: usize, period: usize) -> bool {
    let (a, b) = r.pair();
    b - a < window as i64 * period as i64
}

/// Reflections of the parabolic generated by `sigma_1, ..., sigma_n`.
pub fn w_prime_reflections(n: usize) -> BTreeSet<CtildeReflection> {
    let period = 2 * n;
    let m = 2 * n as i64;
    let mut out = BTreeSet::new();
    for a in 1..=m {
        for b in a + 1..=m {
            if a + b != m + 1 {
                out.insert(CtildeReflection::from_pair(a, b, period).unwrap());
            }
        }
        out.insert(CtildeReflection::from_pair(a, m + 1 - a, period).unwrap());
    }
    out
}

/// Reflections of the parabolic generated by `sigma_0, ..., sigma_{n-1}`.
pub fn w_second_reflections(n: usize) -> BTreeSet<CtildeReflection> {
    let period = 2 * n;
    let ni = n as i64;
    let mut out = BTreeSet::new();
    for a in 1 - ni..=ni {
        for b in a + 1..=ni {
            if a + b != 1 {
                out.insert(CtildeReflection::from_pair(a, b, period).unwrap());
            }
        }
        if a != 1 - a {
            out.insert(CtildeReflection::from_pair(a, 1 - a, period).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(n: usize) -> Hurwitz {
        Hurwitz::new(n).unwrap()
    }

    fn refl(s: &str, period: usize) -> CtildeReflection {
        CtildeReflection::parse(s, period).unwrap()
    }

    fn standard(hz: &Hurwitz) -> ReflectionTuple {
        let n = hz.germ().rank();
        let gs = crate::garside::Garside::new(n).unwrap();
        let order: Vec<usize> = (0..=n).filter(|i| i % 2 == 0).chain((0..=n).filter(|i| i % 2 == 1)).collect();
        hz.tuple(order.into_iter().map(|i| gs.generator_reflection(i).unwrap()).collect())
    }

    /// Every sequence of `length` reflections from `pool` multiplying to `w`.
    fn brute_decompositions(
        pool: &[CtildeReflection],
        w: &PeriodicPermutation,
        length: usize,
    ) -> BTreeSet<Vec<CtildeReflection>> {
        let mut out = BTreeSet::new();
        let mut prefix = Vec::new();
        fn rec(
            pool: &[CtildeReflection],
            rest: &PeriodicPermutation,
            left: usize,
            prefix: &mut Vec<CtildeReflection>,
            out: &mut BTreeSet<Vec<CtildeReflection>>,
        ) {
            if left == 0 {
                if rest.is_identity() {
                    out.insert(prefix.clone());
                }
                return;
            }
            for r in pool {
                let next = r.to_perm(rest.period()).unwrap().compose(rest).unwrap();
                prefix.push(*r);
                rec(pool, &next, left - 1, prefix, out);
                prefix.pop();
            }
        }
        rec(pool, w, length, &mut prefix, &mut out);
        out
    }

    fn pool(period: usize, span: i64) -> Vec<CtildeReflection> {
        let np = period as i64;
        let set: BTreeSet<CtildeReflection> = (1..=np)
            .flat_map(|a| (a + 1..a + span).map(move |b| (a, b)))
            .filter_map(|(a, b)| CtildeReflection::from_pair(a, b, period).ok())
            .collect();
        set.into_iter().collect()
    }

    #[test]
    fn move_on_commuting_pair() {
        let hz = h(2);
        let t = hz.tuple(vec![refl("(4,5)", 4), refl("(2,3)", 4), refl("(1,2)(3,4)", 4)]);
        assert_eq!(t.target, *hz.germ().coxeter_perm());
        let moved = hz.hurwitz_move(&t, 1, 1).unwrap();
        assert_eq!(moved.entries, vec![refl("(2,3)", 4), refl("(4,5)", 4), refl("(1,2)(3,4)", 4)]);
        assert_eq!(hz.hurwitz_move(&moved, 1, -1).unwrap(), t);
        assert!(hz.hurwitz_move(&t, 3, 1).is_err());
        assert!(hz.hurwitz_move(&t, 0, 1).is_err());
    }

    #[test]
    fn decompositions_of_a_reflection() {
        let hz = h(2);
        let w = hz.germ().parse("(1,4)").unwrap();
        let set = hz.reduced_decompositions(&w, 1).unwrap();
        assert_eq!(set.tuples.len(), 1);
        assert!(!set.truncated);
    }

    #[test]
    fn decompositions_match_depth_first_oracle() {
        for n in [2usize, 3] {
            let hz = h(n);
            let period = 2 * n;
            let candidates = pool(period, 3 * period as i64);
            for w in hz.germ().enumerate_sigma(1) {
                if w.partition().infinite_part().is_some() || w.is_identity() {
                    continue;
                }
                let f = hz.germ().reflection_length_c(&w).unwrap();
                if n == 3 && f > 2 {
                    continue;
                }
                let expected = brute_decompositions(&candidates, w.perm(), f);
                let got = hz.reduced_decompositions(&w, 1).unwrap();
                assert!(!got.truncated);
                assert_eq!(got.tuples, expected, "{w}");
            }
        }
    }

    #[test]
    fn orbit_of_finite_divisor_is_everything() {
        let hz = h(2);
        let w = hz.germ().parse("(1,3,4,2)").unwrap();
        let all = hz.reduced_decompositions(&w, 1).unwrap();
        let first = hz.tuple(all.tuples.iter().next().unwrap().clone());
        let orbit = hz.orbit(&first, 10_000);
        assert!(!orbit.truncated);
        assert_eq!(orbit.tuples, all.tuples);
        let single = hz.tuple(vec![refl("(1,4)", 4)]);
        assert_eq!(hz.orbit(&single, 10).tuples.len(), 1);
    }

    #[test]
    fn decompositions_of_c_grow_with_window() {
        let hz = h(2);
        let c = hz.germ().coxeter();
        let one = hz.reduced_decompositions(&c, 1).unwrap();
        let two = hz.reduced_decompositions(&c, 2).unwrap();
        assert!(one.truncated && two.truncated);
        assert!(two.tuples.len() > one.tuples.len());
        assert!(one.tuples.is_subset(&two.tuples));
    }

    #[test]
    fn windowed_orbit_of_c_reaches_window_one() {
        let hz = h(2);
        let start = standard(&hz);
        let orbit = hz.orbit_in_window(&start, 3, 1_000_000);
        let one = hz.reduced_decompositions(&hz.germ().coxeter(), 1).unwrap();
        assert!(one.tuples.is_subset(&orbit.tuples));
    }

    #[test]
    fn rotation() {
        let hz = h(2);
        let t = standard(&hz);
        let r = hz.rotate(&t).unwrap();
        assert_eq!(&r.entries[..2], &t.entries[1..]);
        let s0 = hz.germ().reflection(&t.entries[0]).unwrap();
        let moved = hz.germ().garside_automorphism(&s0).unwrap();
        assert_eq!(r.entries[2], CtildeReflection::from_perm(moved.perm()).unwrap());
        assert_eq!(hz.product(&r.entries), r.target);
        assert!(hz.orbit(&t, 100_000).tuples.contains(&r.entries));
        for n in 2..=4 {
            let hz = h(n);
            let t = standard(&hz);
            let mut r = t.clone();
            for _ in 0..=n {
                r = hz.rotate(&r).unwrap();
            }
            let conj: Vec<CtildeReflection> = t
                .entries
                .iter()
                .map(|e| {
                    let x = hz.germ().reflection(e).unwrap();
                    CtildeReflection::from_perm(hz.germ().conjugate_by_c_power(&x, -1).unwrap().perm()).unwrap()
                })
                .collect();
            assert_eq!(r.entries, conj);
        }
        let not_c = hz.tuple(vec![refl("(1,4)", 4)]);
        assert_eq!(hz.rotate(&not_c), Err(Error::TargetNotCoxeter));
    }

    #[test]
    fn classification_cases() {
        let hz = h(3);
        let r = refl("(1,3)(0,-2)", 6);
        let cl = hz.classify_reflection(&r).unwrap();
        assert_eq!(cl.power, 0);
        assert_eq!(cl.target, CtildeReflection::from_pair(1, 3, 6).unwrap());
        let r = CtildeReflection::from_pair(5, 9, 6).unwrap();
        let cl = hz.classify_reflection(&r).unwrap();
        assert_eq!(cl.target, CtildeReflection::from_pair(1, 5, 6).unwrap());
        assert_eq!(cl.parabolic, Parabolic::WPrime);
        for k in 1..=4 {
            let r = CtildeReflection::long(1, k, 6).unwrap();
            let cl = hz.classify_reflection(&r).unwrap();
            let expected = if k % 2 == 1 { (3, 4) } else { (0, 1) };
            assert_eq!(cl.target, CtildeReflection::from_pair(expected.0, expected.1, 6).unwrap());
        }
    }

    #[test]
    fn every_atom_is_classified() {
        for n in [2usize, 3, 4] {
            let hz = h(n);
            for rho in hz.germ().atoms(3) {
                let cl = hz.classify_reflection(&rho).unwrap();
                let r = hz.germ().reflection(&rho).unwrap();
                let conj = hz.germ().conjugate_by_c_power(&r, cl.power).unwrap();
                assert_eq!(CtildeReflection::from_perm(conj.perm()).unwrap(), cl.target);
            }
        }
    }

    #[test]
    fn decompositions_of_c_have_two_long_reflections() {
        for n in [2usize, 3] {
            let hz = h(n);
            let set = hz.reduced_decompositions(&hz.germ().coxeter(), 2).unwrap();
            for t in &set.tuples {
                assert_eq!(t.len(), n + 1);
                let special = t.iter().filter(|r| hz.conjugacy_class(r) != ConjugacyClass::Middle).count();
                assert_eq!(special, 2);
                assert_eq!(t.iter().map(|r| r.a_length()).sum::<usize>(), 2 * n);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn moves_preserve_product(steps in prop::collection::vec((1usize..3, prop::bool::ANY), 1..12)) {
            let hz = h(2);
            let mut t = standard(&hz);
            for (i, up) in steps {
                let next = hz.hurwitz_move(&t, i, if up { 1 } else { -1 }).unwrap();
                prop_assert_eq!(hz.product(&next.entries), t.target.clone());
                prop_assert_eq!(&hz.hurwitz_move(&next, i, if up { -1 } else { 1 }).unwrap(), &t);
                t = next;
            }
            let germ = hz.germ();
            let f: usize = t.entries.iter().map(|r| germ.reflection_length_c(&germ.reflection(r).unwrap()).unwrap()).sum();
            prop_assert_eq!(f, 3);
        }
    }
}
