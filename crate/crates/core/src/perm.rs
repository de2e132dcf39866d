//! Periodic permutations of the integers.
//!
//! A permutation `w` of `Z` is `N`-periodic when `w(i + N) = w(i) + N`; it is stored
//! through its window images `w(1), ..., w(N)`. Products are functional: `w.compose(v)`
//! applies `v` first.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::strip::{residue, Strip};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicPermutation {
    images: Vec<i64>,
}

impl PeriodicPermutation {
    /// Builds a permutation from its window images `w(1), ..., w(N)`.
    pub fn new(images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroPeriod);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let r = (residue(v, n) - 1) as usize;
            if seen[r] {
                return Err(Error::NotBijective(n));
            }
            seen[r] = true;
        }
        Ok(PeriodicPermutation { images })
    }

    pub fn identity(period: usize) -> Self {
        PeriodicPermutation { images: (1..=period as i64).collect() }
    }

    /// The periodic transposition swapping `a + jN` and `b + jN` for every `j`.
    pub fn transposition(a: i64, b: i64, period: usize) -> Result<Self> {
        Self::from_cycles(&CycleDecomposition::new(period, vec![Cycle::finite(vec![a, b])]))
    }

    /// The simple reflection `s_i = (i, i + 1)`.
    pub fn simple_reflection(i: i64, period: usize) -> Result<Self> {
        Self::transposition(i, i + 1, period)
    }

    pub fn period(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    pub fn apply(&self, x: i64) -> i64 {
        let n = self.images.len() as i64;
        let q = (x - 1).div_euclid(n);
        let r = (x - 1).rem_euclid(n) as usize;
        self.images[r] + q * n
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.period() != other.period() {
            return Err(Error::PeriodMismatch(self.period(), other.period()));
        }
        let images = (1..=self.period() as i64).map(|i| self.apply(other.apply(i))).collect();
        Ok(PeriodicPermutation { images })
    }

    pub fn inverse(&self) -> Self {
        let n = self.period() as i64;
        let mut images = vec![0; self.period()];
        for i in 1..=n {
            let v = self.apply(i);
            let r = residue(v, self.period());
            // w(i) = v, so w^-1(r) = i + (r - v)
            images[(r - 1) as usize] = i + (r - v);
        }
        PeriodicPermutation { images }
    }

    /// `self^m` for any integer `m`.
    pub fn pow(&self, m: i64) -> Self {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.period());
        for _ in 0..m.unsigned_abs() {
            acc = acc.compose(&base).expect("same period");
        }
        acc
    }

    /// `g ∘ self ∘ g^-1`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// `(1/N) Σ_{i=1..N} (w(i) - i)`; always an integer for a periodic bijection.
    pub fn total_shift(&self) -> i64 {
        let n = self.period() as i64;
        let s: i64 = self.images.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        s / n
    }

    /// Conjugation by the involution `i -> 1 - i`.
    pub fn sigma(&self) -> Result<Self> {
        if !self.period().is_multiple_of(2) {
            return Err(Error::OddPeriod(self.period()));
        }
        let images = (1..=self.period() as i64).map(|i| 1 - self.apply(1 - i)).collect();
        Ok(PeriodicPermutation { images })
    }

    /// The Coxeter element attached to a strip: `x_i -> x_{i+1}` on `X` and
    /// `xi_i -> xi_{i-1}` on `Xi`.
    pub fn coxeter(strip: &Strip) -> Self {
        let n = strip.n();
        let images = (1..=n)
            .map(|v| {
                if strip.is_x(v) {
                    (v + 1..=v + n).find(|&u| strip.is_x(u)).unwrap()
                } else {
                    (v - n..v).rev().find(|&u| !strip.is_x(u)).unwrap()
                }
            })
            .collect();
        PeriodicPermutation { images }
    }

    /// Decomposition into disjoint cycles, in canonical form.
    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.period();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for r in 1..=n as i64 {
            if seen[(r - 1) as usize] {
                continue;
            }
            let mut orbit = vec![r];
            seen[(r - 1) as usize] = true;
            let mut x = self.apply(r);
            while residue(x, n) != r {
                seen[(residue(x, n) - 1) as usize] = true;
                orbit.push(x);
                x = self.apply(x);
            }
            let shift = (x - r) / n as i64;
            if shift == 0 && orbit.len() == 1 {
                continue;
            }
            cycles.push(Cycle { elements: orbit, shift });
        }
        CycleDecomposition::new(n, cycles)
    }

    pub fn from_cycles(decomposition: &CycleDecomposition) -> Result<Self> {
        let n = decomposition.period;
        if n == 0 {
            return Err(Error::ZeroPeriod);
        }
        let ni = n as i64;
        let mut images: Vec<i64> = (1..=ni).collect();
        let mut used = HashSet::new();
        for c in &decomposition.cycles {
            if c.elements.is_empty() {
                continue;
            }
            for &a in &c.elements {
                if !used.insert(residue(a, n)) {
                    return Err(Error::InvalidCycle(format!("{c} repeats residue {} modulo {n}", residue(a, n))));
                }
            }
            let k = c.elements.len();
            for i in 0..k {
                let from = c.elements[i];
                let to = if i + 1 < k { c.elements[i + 1] } else { c.elements[0] + ni * c.shift };
                let r = residue(from, n);
                images[(r - 1) as usize] = to + (r - from);
            }
        }
        PeriodicPermutation::new(images)
    }

    /// Parses cycle notation such as `(1,3)[1](4,2)[-1]` for the given period.
    pub fn parse(s: &str, period: usize) -> Result<Self> {
        Self::from_cycles(&CycleDecomposition::parse(s, period)?)
    }
}

impl fmt::Display for PeriodicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles())
    }
}

/// A finite cycle (`shift == 0`) or an infinite cycle `(a_1, ..., a_k)[shift]`
/// where the image of `a_k` is `a_1 + N * shift`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub elements: Vec<i64>,
    pub shift: i64,
}

impl Cycle {
    pub fn finite(elements: Vec<i64>) -> Self {
        Cycle { elements, shift: 0 }
    }

    pub fn infinite(elements: Vec<i64>, shift: i64) -> Self {
        Cycle { elements, shift }
    }

    pub fn is_finite(&self) -> bool {
        self.shift == 0
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Finite cycles start at their minimum, translated into `[1, N]`. Infinite cycles
    /// start at the element of smallest residue when the shift is positive and of
    /// largest residue when it is negative, again translated into `[1, N]`.
    pub fn canonical(&self, period: usize) -> Cycle {
        let n = period as i64;
        let k = self.elements.len();
        if k == 0 {
            return self.clone();
        }
        let start = if self.shift == 0 {
            (0..k).min_by_key(|&i| self.elements[i]).unwrap()
        } else if self.shift > 0 {
            (0..k).min_by_key(|&i| residue(self.elements[i], period)).unwrap()
        } else {
            (0..k).max_by_key(|&i| residue(self.elements[i], period)).unwrap()
        };
        let mut rotated: Vec<i64> = self.elements[start..].to_vec();
        rotated.extend(self.elements[..start].iter().map(|&a| a + n * self.shift));
        let t = residue(rotated[0], period) - rotated[0];
        Cycle { elements: rotated.into_iter().map(|a| a + t).collect(), shift: self.shift }
    }

    /// The translate of this cycle by `t * N`.
    pub fn translated(&self, t: i64, period: usize) -> Cycle {
        let d = t * period as i64;
        Cycle { elements: self.elements.iter().map(|a| a + d).collect(), shift: self.shift }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")?;
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleDecomposition {
    pub period: usize,
    pub cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    /// Canonicalizes every cycle and sorts: finite cycles, then positive shifts, then
    /// negative shifts.
    pub fn new(period: usize, cycles: Vec<Cycle>) -> Self {
        let mut cycles: Vec<Cycle> =
            cycles.into_iter().filter(|c| !(c.shift == 0 && c.len() <= 1)).map(|c| c.canonical(period)).collect();
        cycles.sort_by_key(|c| {
            let class = match c.shift.signum() {
                0 => 0,
                1 => 1,
                _ => 2,
            };
            (class, c.elements.clone(), c.shift)
        });
        CycleDecomposition { period, cycles }
    }

    pub fn finite_cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| c.is_finite())
    }

    pub fn infinite_cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.cycles.iter().filter(|c| !c.is_finite())
    }

    pub fn parse(s: &str, period: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let close = body_start.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let elements = parse_int_list(&body_start[..close])?;
            rest = body_start[close + 1..].trim_start();
            let mut shift = 0;
            if let Some(after) = rest.strip_prefix('[') {
                let end = after.find(']').ok_or_else(|| Error::Parse(format!("unclosed shift in {s:?}")))?;
                shift =
                    after[..end].trim().parse().map_err(|_| Error::Parse(format!("bad shift {:?}", &after[..end])))?;
                if shift == 0 {
                    return Err(Error::Parse("shift [0] is not allowed".into()));
                }
                rest = after[end + 1..].trim_start();
            }
            cycles.push(Cycle { elements, shift });
        }
        Ok(CycleDecomposition::new(period, cycles))
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}")))).collect()
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The Coxeter element `c` of rank `n`: the `2n`-periodic map `i -> i + 2` on odd
/// integers and `i -> i - 2` on even integers.
pub fn coxeter_element(n: usize) -> Result<PeriodicPermutation> {
    Ok(PeriodicPermutation::coxeter(&Strip::ctilde(n)?))
}

#[derive(Serialize, Deserialize)]
struct PermJson {
    period: usize,
    cycles: String,
}

impl Serialize for PeriodicPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermJson { period: self.period(), cycles: self.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PeriodicPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PermJson::deserialize(d)?;
        PeriodicPermutation::parse(&j.cycles, j.period).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> PeriodicPermutation {
        PeriodicPermutation::parse(s, n).unwrap()
    }

    #[test]
    fn compose_sigma2_sigma1() {
        let s2 = p("(2,3)", 4);
        let s1 = p("(1,2)(3,4)", 4);
        let w = s2.compose(&s1).unwrap();
        assert_eq!(w, p("(1,3,4,2)", 4));
        assert_eq!((w.apply(1), w.apply(3), w.apply(4), w.apply(2)), (3, 4, 2, 1));
    }

    #[test]
    fn compose_identity_and_inverse() {
        let c = coxeter_element(2).unwrap();
        let id = PeriodicPermutation::identity(4);
        assert_eq!(c.compose(&id).unwrap(), c);
        assert_eq!(c.compose(&c.inverse()).unwrap(), id);
        assert!(c.compose(&PeriodicPermutation::identity(6)).is_err());
    }

    #[test]
    fn coxeter_window_and_cycles() {
        let c = coxeter_element(2).unwrap();
        assert_eq!(c.images(), &[3, 0, 5, 2]);
        assert_eq!(c.to_string(), "(1,3)[1](4,2)[-1]");
        for n in 2..=5 {
            assert_eq!(coxeter_element(n).unwrap().total_shift(), 0);
        }
        assert!(coxeter_element(1).is_err());
    }

    #[test]
    fn coxeter_is_product_of_simple_reflections() {
        // s2 s4 ... s2n s1 s3 ... s(2n-1), applied right to left
        for n in 2..=5usize {
            let period = 2 * n;
            let mut order: Vec<i64> = (1..=n as i64).map(|i| 2 * i).collect();
            order.extend((1..=n as i64).map(|i| 2 * i - 1));
            let prod = order.iter().fold(PeriodicPermutation::identity(period), |acc, &i| {
                acc.compose(&PeriodicPermutation::simple_reflection(i, period).unwrap()).unwrap()
            });
            assert_eq!(prod, coxeter_element(n).unwrap());
        }
    }

    #[test]
    fn mixed_shift_decomposition() {
        let w = p("(5,7,8)[1](3,2)[-1]", 9);
        assert_eq!(w.to_string(), "(5,7,8)[1](3,2)[-1]");
        assert_eq!(w.total_shift(), 0);
    }

    #[test]
    fn identity_has_no_cycles() {
        let id = PeriodicPermutation::identity(5);
        assert!(id.cycles().cycles.is_empty());
        assert_eq!(id.to_string(), "()");
        assert_eq!(p("()", 5), id);
        assert_eq!(p("", 5), id);
    }

    #[test]
    fn total_shift_examples() {
        assert_eq!(p("(2,3)", 4).total_shift(), 0);
        assert_eq!(p("(1,3)[1]", 4).total_shift(), 1);
    }

    #[test]
    fn sigma_examples() {
        let c = coxeter_element(3).unwrap();
        assert_eq!(c.sigma().unwrap(), c);
        let t = p("(2,3)", 4);
        assert_eq!(t.sigma().unwrap(), p("(-1,-2)", 4));
        assert_eq!(t.sigma().unwrap(), p("(3,2)", 4));
        assert_eq!(t.sigma().unwrap().sigma().unwrap(), t);
        assert_eq!(PeriodicPermutation::identity(3).sigma(), Err(Error::OddPeriod(3)));
    }

    #[test]
    fn transposition_is_periodic() {
        // (4,5) with N = 4 also swaps 0 and 1
        let t = p("(4,5)", 4);
        assert_eq!(t.apply(0), 1);
        assert_eq!(t.apply(1), 0);
        assert_eq!(t.apply(8), 9);
    }

    #[test]
    fn parse_errors() {
        assert!(PeriodicPermutation::parse("(1,5)", 4).is_err());
        assert!(PeriodicPermutation::parse("(1,2", 4).is_err());
        assert!(PeriodicPermutation::parse("(1,x)", 4).is_err());
        assert!(PeriodicPermutation::parse("(1,2)[0]", 4).is_err());
        assert!(PeriodicPermutation::parse("(1,2)(2,3)", 4).is_err());
        assert!(PeriodicPermutation::new(vec![1, 5]).is_err());
    }

    #[test]
    fn cycle_product_identities() {
        // (a1,...,ah) = (a1,a2)(a2,a3)...(a(h-1),ah) for tuples in a window
        let n = 5usize;
        let tuples = [vec![1, 2, 3], vec![2, 4, 8, 6], vec![1, 3], vec![5, 2, 9, 13]];
        for t in tuples {
            let cyc =
                PeriodicPermutation::from_cycles(&CycleDecomposition::new(n, vec![Cycle::finite(t.clone())])).unwrap();
            let prod = t.windows(2).fold(PeriodicPermutation::identity(n), |acc, w| {
                acc.compose(&PeriodicPermutation::transposition(w[0], w[1], n).unwrap()).unwrap()
            });
            assert_eq!(prod, cyc, "{t:?}");
        }
    }

    #[test]
    fn pseudo_cycle_factorization() {
        // (a1..ah)[1](α1..αl)[-1] = (a1,a2)...(a(h-1),ah)(ah,α1)(ah,n+α1)(α1,α2)...(α(l-1),αl)
        let cases: [(usize, Vec<i64>, Vec<i64>); 3] =
            [(9, vec![5, 7, 8], vec![3, 2]), (4, vec![1, 3], vec![4, 2]), (6, vec![1, 3, 5], vec![6, 4, 2])];
        for (n, a, alpha) in cases {
            let lhs = PeriodicPermutation::from_cycles(&CycleDecomposition::new(
                n,
                vec![Cycle::infinite(a.clone(), 1), Cycle::infinite(alpha.clone(), -1)],
            ))
            .unwrap();
            let h = *a.last().unwrap();
            let mut pairs: Vec<(i64, i64)> = a.windows(2).map(|w| (w[0], w[1])).collect();
            pairs.push((h, alpha[0]));
            pairs.push((h, n as i64 + alpha[0]));
            pairs.extend(alpha.windows(2).map(|w| (w[0], w[1])));
            let rhs = pairs.iter().fold(PeriodicPermutation::identity(n), |acc, &(x, y)| {
                acc.compose(&PeriodicPermutation::transposition(x, y, n).unwrap()).unwrap()
            });
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    fn arb_perm_of(n: usize) -> impl Strategy<Value = PeriodicPermutation> {
        (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(-3i64..=3, n)).prop_map(
            move |(perm, lifts)| {
                let images = (0..n).map(|i| perm[i] as i64 + 1 + lifts[i] * n as i64).collect();
                PeriodicPermutation::new(images).unwrap()
            },
        )
    }

    fn arb_perm() -> impl Strategy<Value = PeriodicPermutation> {
        (1usize..8).prop_flat_map(arb_perm_of)
    }

    proptest! {
        #[test]
        fn cycles_round_trip(w in arb_perm()) {
            let d = w.cycles();
            prop_assert_eq!(PeriodicPermutation::from_cycles(&d).unwrap(), w.clone());
            let text = w.to_string();
            let back = PeriodicPermutation::parse(&text, w.period()).unwrap();
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn shift_is_additive((w, v) in (1usize..7).prop_flat_map(|n| (arb_perm_of(n), arb_perm_of(n)))) {
            {
                let wv = w.compose(&v).unwrap();
                prop_assert_eq!(wv.total_shift(), w.total_shift() + v.total_shift());
                prop_assert_eq!(w.inverse().total_shift(), -w.total_shift());
                prop_assert!(PeriodicPermutation::new(wv.images().to_vec()).is_ok());
                prop_assert_eq!(wv.compose(&v.inverse()).unwrap(), w.clone());
            }
        }

        #[test]
        fn sigma_is_involutive(w in arb_perm()) {
            if w.period() % 2 == 0 {
                let s = w.sigma().unwrap();
                prop_assert_eq!(s.sigma().unwrap(), w.clone());
                prop_assert_eq!(s.total_shift(), -w.total_shift());
            }
        }
    }
}
