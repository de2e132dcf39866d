//! The germ `P` of divisors of the Coxeter element and its sigma-fixed subgerm.
//!
//! Elements of `P` are the periodic permutations with total shift 0 that are products of
//! positive self non-crossing, pairwise non-crossing cycles. The product `x * y` is
//! defined in the germ when `xy` is again in `P` and `l_A(xy) = l_A(x) + l_A(y)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::noncrossing::{Part, PeriodicPartition};
use crate::perm::{Cycle, CycleDecomposition, PeriodicPermutation};
use crate::strip::Strip;

/// A validated divisor of `c` with its cached partition and length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GermElement {
    perm: PeriodicPermutation,
    partition: PeriodicPartition,
    length_a: usize,
    sigma_stable: bool,
}

impl GermElement {
    pub fn perm(&self) -> &PeriodicPermutation {
        &self.perm
    }

    pub fn partition(&self) -> &PeriodicPartition {
        &self.partition
    }

    /// Reflection length in the affine `A` group.
    pub fn length_a(&self) -> usize {
        self.length_a
    }

    pub fn is_sigma_stable(&self) -> bool {
        self.sigma_stable
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn period(&self) -> usize {
        self.perm.period()
    }
}

impl fmt::Display for GermElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl Serialize for GermElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.perm.serialize(s)
    }
}

impl PartialOrd for GermElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GermElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.perm.cmp(&other.perm)
    }
}

/// A cycle rotated into the shape required by the definition of positive self
/// non-crossing cycles.
#[derive(Debug, Clone)]
enum Shape {
    /// Finite cycle `(a_1..a_k, alpha_1..alpha_l)`, `a` ascending on `X`, `alpha`
    /// descending on `Xi`; either block may be empty.
    Finite { xs: Vec<i64>, xis: Vec<i64> },
    /// `(a_1..a_k)[1]` on `X`.
    InfX(Vec<i64>),
    /// `(alpha_1..alpha_k)[-1]` on `Xi`.
    InfXi(Vec<i64>),
}

impl Shape {
    fn has_x(&self) -> bool {
        match self {
            Shape::Finite { xs, .. } => !xs.is_empty(),
            Shape::InfX(_) => true,
            Shape::InfXi(_) => false,
        }
    }

    fn has_xi(&self) -> bool {
        match self {
            Shape::Finite { xis, .. } => !xis.is_empty(),
            Shape::InfX(_) => false,
            Shape::InfXi(_) => true,
        }
    }

    fn is_mixed_finite(&self) -> bool {
        matches!(self, Shape::Finite { .. }) && self.has_x() && self.has_xi()
    }

    fn is_single_sided_finite(&self) -> bool {
        matches!(self, Shape::Finite { .. }) && !self.is_mixed_finite()
    }

    /// Elements on the side of `self` that carries `single`.
    fn block_on_side_of(&self, single: &Shape) -> &[i64] {
        let (xs, xis): (&[i64], &[i64]) = match self {
            Shape::Finite { xs, xis } => (xs, xis),
            Shape::InfX(v) => (v, &[]),
            Shape::InfXi(v) => (&[], v),
        };
        if single.has_x() {
            xs
        } else {
            xis
        }
    }

    fn all(&self) -> Vec<i64> {
        match self {
            Shape::Finite { xs, xis } => xs.iter().chain(xis).copied().collect(),
            Shape::InfX(v) | Shape::InfXi(v) => v.clone(),
        }
    }
}

fn strictly_monotone(v: &[i64], ascending: bool, n: i64) -> bool {
    let ok_steps = v.windows(2).all(|w| if ascending { w[0] < w[1] } else { w[0] > w[1] });
    let span_ok = match (v.first(), v.last()) {
        (Some(&f), Some(&l)) => (l - f).abs() < n,
        _ => true,
    };
    ok_steps && span_ok
}

fn shape_of(cycle: &Cycle, strip: &Strip) -> std::result::Result<Shape, String> {
    let n = strip.n();
    let k = cycle.elements.len();
    match cycle.shift {
        0 => {
            for r in 0..k {
                let rot: Vec<i64> = cycle.elements[r..].iter().chain(&cycle.elements[..r]).copied().collect();
                let split = rot.iter().position(|&v| !strip.is_x(v)).unwrap_or(k);
                let (xs, xis) = rot.split_at(split);
                if xis.iter().any(|&v| strip.is_x(v)) {
                    continue;
                }
                if strictly_monotone(xs, true, n) && strictly_monotone(xis, false, n) {
                    return Ok(Shape::Finite { xs: xs.to_vec(), xis: xis.to_vec() });
                }
            }
            Err(format!("cycle {cycle} is not positive self non-crossing"))
        }
        1 | -1 => {
            let on_x = cycle.shift == 1;
            if cycle.elements.iter().any(|&v| strip.is_x(v) != on_x) {
                return Err(format!("infinite cycle {cycle} leaves its side"));
            }
            let mut rot = cycle.elements.clone();
            for _ in 0..k {
                if strictly_monotone(&rot, on_x, n) {
                    return Ok(if on_x { Shape::InfX(rot) } else { Shape::InfXi(rot) });
                }
                let first = rot.remove(0);
                rot.push(first + n * cycle.shift);
            }
            Err(format!("infinite cycle {cycle} is not monotone within one period"))
        }
        h => Err(format!("infinite cycle {cycle} has shift {h}")),
    }
}

/// Index of the gap of the periodic set `block + NZ` containing `b`, up to a constant.
fn gap_index(block: &[i64], b: i64, n: i64) -> i64 {
    block.iter().map(|&a| (b - a + n - 1).div_euclid(n)).sum()
}

fn in_one_gap(block: &[i64], others: &[i64], n: i64) -> bool {
    let mut gaps = others.iter().map(|&b| gap_index(block, b, n));
    match gaps.next() {
        Some(g) => gaps.all(|h| h == g),
        None => true,
    }
}

fn single_in_gap(container: &Shape, single: &Shape, n: i64) -> bool {
    let block = container.block_on_side_of(single);
    block.is_empty() || in_one_gap(block, &single.all(), n)
}

/// The four-case non-crossing condition on a pair of shaped cycles.
fn shapes_noncrossing(a: &Shape, b: &Shape, n: i64) -> bool {
    let x_only = |s: &Shape| s.has_x() && !s.has_xi();
    let xi_only = |s: &Shape| s.has_xi() && !s.has_x();
    if (x_only(a) && xi_only(b)) || (xi_only(a) && x_only(b)) {
        return true;
    }
    match (a, b) {
        (Shape::Finite { xs: ax, xis: axi }, Shape::Finite { xs: bx, xis: bxi })
            if a.is_mixed_finite() && b.is_mixed_finite() =>
        {
            let (a1, ak) = (ax[0], *ax.last().unwrap());
            let (al1, all) = (axi[0], *axi.last().unwrap());
            let t = (ak - bx[0]).div_euclid(n) + 1;
            let d = t * n;
            bx.iter().all(|&v| ak < v + d && v + d < a1 + n) && bxi.iter().all(|&v| al1 < v + d && v + d < all + n)
        }
        _ => {
            let finite_pair = matches!(a, Shape::Finite { .. }) && matches!(b, Shape::Finite { .. });
            let mut ok = false;
            if b.is_single_sided_finite() && (finite_pair || matches!(a, Shape::InfX(_) | Shape::InfXi(_))) {
                ok |= single_in_gap(a, b, n);
            }
            if a.is_single_sided_finite() && (finite_pair || matches!(b, Shape::InfX(_) | Shape::InfXi(_))) {
                ok |= single_in_gap(b, a, n);
            }
            ok
        }
    }
}

fn length_a_of(decomposition: &CycleDecomposition) -> usize {
    decomposition.cycles.iter().map(|c| if c.shift == 0 { c.len() - 1 } else { c.len() }).sum()
}

/// The germ of divisors of the Coxeter element attached to a strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Germ {
    strip: Strip,
    c: PeriodicPermutation,
    c_inv: PeriodicPermutation,
}

impl Germ {
    pub fn new(strip: Strip) -> Self {
        let c = PeriodicPermutation::coxeter(&strip);
        let c_inv = c.inverse();
        Germ { strip, c, c_inv }
    }

    /// The germ for the affine `C` group of rank `n`: period `2n`, `X` the odd integers.
    pub fn ctilde(n: usize) -> Result<Self> {
        Ok(Self::new(Strip::ctilde(n)?))
    }

    pub fn strip(&self) -> &Strip {
        &self.strip
    }

    pub fn period(&self) -> usize {
        self.strip.period()
    }

    /// The rank `n` of the affine `C` group (half the period).
    pub fn rank(&self) -> usize {
        self.period() / 2
    }

    pub fn coxeter_perm(&self) -> &PeriodicPermutation {
        &self.c
    }

    pub fn coxeter_inverse_perm(&self) -> &PeriodicPermutation {
        &self.c_inv
    }

    pub fn identity(&self) -> GermElement {
        self.member(&PeriodicPermutation::identity(self.period())).expect("identity is a member")
    }

    /// The Garside element `c`.
    pub fn coxeter(&self) -> GermElement {
        self.member(&self.c).expect("c is a member")
    }

    /// Checks the definition clause by clause and explains the first violation.
    pub fn check_membership(&self, w: &PeriodicPermutation) -> std::result::Result<(), String> {
        self.shapes(w).map(|_| ())
    }

    fn shapes(&self, w: &PeriodicPermutation) -> std::result::Result<Vec<Shape>, String> {
        if w.period() != self.period() {
            return Err(format!("period {} differs from {}", w.period(), self.period()));
        }
        if w.total_shift() != 0 {
            return Err(format!("total shift {} is not 0", w.total_shift()));
        }
        let decomposition = w.cycles();
        let shapes = decomposition
            .cycles
            .iter()
            .map(|c| shape_of(c, &self.strip))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let n = self.strip.n();
        for i in 0..shapes.len() {
            for j in i + 1..shapes.len() {
                if !shapes_noncrossing(&shapes[i], &shapes[j], n) {
                    return Err(format!("cycles {} and {} cross", decomposition.cycles[i], decomposition.cycles[j]));
                }
            }
        }
        Ok(shapes)
    }

    /// Validates `w` as an element of `P`.
    pub fn member(&self, w: &PeriodicPermutation) -> Result<GermElement> {
        self.check_membership(w).map_err(Error::NotMember)?;
        let partition = PeriodicPartition::of_permutation(w, self.strip)?;
        let sigma_stable = self.strip.is_parity() && w.sigma()? == *w;
        Ok(GermElement { perm: w.clone(), partition, length_a: length_a_of(&w.cycles()), sigma_stable })
    }

    pub fn is_member(&self, w: &PeriodicPermutation) -> bool {
        self.check_membership(w).is_ok()
    }

    pub fn parse(&self, s: &str) -> Result<GermElement> {
        self.member(&PeriodicPermutation::parse(s, self.period())?)
    }

    /// The element whose partition is `p`.
    pub fn element_of(&self, p: &PeriodicPartition) -> Result<GermElement> {
        self.member(&p.to_permutation()?)
    }

    /// `x * y` in the germ, or `None` when the product is not defined.
    pub fn product(&self, x: &GermElement, y: &GermElement) -> Option<GermElement> {
        let w = x.perm.compose(&y.perm).ok()?;
        let z = self.member(&w).ok()?;
        (z.length_a == x.length_a + y.length_a).then_some(z)
    }

    /// Left divisibility `x ≼ y`, read off the partitions.
    pub fn divides(&self, x: &GermElement, y: &GermElement) -> bool {
        x.partition.refines(&y.partition)
    }

    /// Left divisibility through the germ product: `x^-1 y` is in `P` with lengths adding.
    pub fn divides_by_length(&self, x: &GermElement, y: &GermElement) -> bool {
        self.left_quotient(x, y).is_some()
    }

    /// The element `z` with `x * z = y`, when it exists.
    pub fn left_quotient(&self, x: &GermElement, y: &GermElement) -> Option<GermElement> {
        let w = x.perm.inverse().compose(&y.perm).ok()?;
        let z = self.member(&w).ok()?;
        (x.length_a + z.length_a == y.length_a).then_some(z)
    }

    /// `x^-1 c`.
    pub fn right_complement(&self, x: &GermElement) -> Result<GermElement> {
        self.member(&x.perm.inverse().compose(&self.c)?)
    }

    /// `c x^-1`.
    pub fn left_complement(&self, x: &GermElement) -> Result<GermElement> {
        self.member(&self.c.compose(&x.perm.inverse())?)
    }

    fn require_sigma(&self, xs: &[&GermElement]) -> Result<()> {
        if xs.iter().all(|x| x.sigma_stable) {
            Ok(())
        } else {
            Err(Error::NotSigmaStable)
        }
    }

    /// Least common right multiple in `P^sigma`.
    pub fn lcm(&self, x: &GermElement, y: &GermElement) -> Result<GermElement> {
        self.require_sigma(&[x, y])?;
        self.element_of(&x.partition.join(&y.partition)?)
    }

    /// Greatest common left divisor in `P^sigma`.
    pub fn gcd(&self, x: &GermElement, y: &GermElement) -> Result<GermElement> {
        self.require_sigma(&[x, y])?;
        self.element_of(&x.partition.meet(&y.partition)?)
    }

    /// Reflection length in the affine `C` group of a sigma-stable element.
    pub fn reflection_length_c(&self, x: &GermElement) -> Result<usize> {
        self.require_sigma(&[x])?;
        let decomposition = x.perm.cycles();
        let n = self.period();
        let mut doubled = 0;
        let mut infinite_support = 0;
        for c in &decomposition.cycles {
            if c.shift != 0 {
                infinite_support += c.len();
                continue;
            }
            let image = Cycle::finite(c.elements.iter().map(|v| 1 - v).collect()).canonical(n);
            if image == c.canonical(n) {
                doubled += c.len();
            } else {
                doubled += c.len() - 1;
            }
        }
        if infinite_support > 0 {
            doubled += infinite_support + 2;
        }
        Ok(doubled / 2)
    }

    /// `c^-1 x c`, the Garside automorphism attached to `c`.
    pub fn garside_automorphism(&self, x: &GermElement) -> Result<GermElement> {
        self.member(&self.c_inv.compose(&x.perm)?.compose(&self.c)?)
    }

    /// `c x c^-1`, the inverse of the Garside automorphism.
    pub fn garside_automorphism_inverse(&self, x: &GermElement) -> Result<GermElement> {
        self.member(&x.perm.conjugate_by(&self.c)?)
    }

    /// `c^m x c^-m`.
    pub fn conjugate_by_c_power(&self, x: &GermElement, m: i64) -> Result<GermElement> {
        self.member(&x.perm.conjugate_by(&self.c.pow(m))?)
    }

    /// `rho * u`, which is `u` with the reflection `rho` divided off on the left.
    pub fn quotient_by_reflection(&self, rho: &CtildeReflection, u: &GermElement) -> Result<GermElement> {
        let r = self.member(&rho.to_perm(self.period())?)?;
        if !self.divides(&r, u) {
            return Err(Error::NotDivisible);
        }
        self.member(&r.perm.compose(&u.perm)?)
    }

    /// The germ element of a reflection.
    pub fn reflection(&self, rho: &CtildeReflection) -> Result<GermElement> {
        self.member(&rho.to_perm(self.period())?)
    }
}

/// A reflection of the affine `C` group inside the `2n`-periodic permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CtildeReflection {
    /// The sigma-stable transposition `(a, b)` with `a + b ≡ 1 (mod N)`.
    Long { a: i64, b: i64 },
    /// `(a, b)(1 - a, 1 - b)` with `a + b ≢ 1 (mod N)`.
    Paired { a: i64, b: i64 },
}

fn normal_pair(a: i64, b: i64, period: usize) -> (i64, i64) {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let t = crate::strip::residue(lo, period) - lo;
    (lo + t, hi + t)
}

impl CtildeReflection {
    /// Builds the reflection generated by the transposition `(a, b)` and its sigma-image.
    pub fn from_pair(a: i64, b: i64, period: usize) -> Result<Self> {
        let n = period as i64;
        if !period.is_multiple_of(2) {
            return Err(Error::OddPeriod(period));
        }
        if (a - b).rem_euclid(n) == 0 {
            return Err(Error::NotReflection(format!("({a},{b}) is not a transposition modulo {n}")));
        }
        if (a + b - 1).rem_euclid(n) == 0 {
            let (a, b) = normal_pair(a, b, period);
            return Ok(CtildeReflection::Long { a, b });
        }
        let p = normal_pair(a, b, period);
        let q = normal_pair(1 - a, 1 - b, period);
        let (a, b) = p.min(q);
        Ok(CtildeReflection::Paired { a, b })
    }

    /// The long reflection `(a, kN + 1 - a)`.
    pub fn long(a: i64, k: i64, period: usize) -> Result<Self> {
        Self::from_pair(a, k * period as i64 + 1 - a, period)
    }

    pub fn from_perm(w: &PeriodicPermutation) -> Result<Self> {
        let d = w.cycles();
        let bad = || Error::NotReflection(w.to_string());
        if d.cycles.iter().any(|c| c.shift != 0 || c.len() != 2) || d.cycles.is_empty() || d.cycles.len() > 2 {
            return Err(bad());
        }
        let c = &d.cycles[0];
        let r = Self::from_pair(c.elements[0], c.elements[1], w.period())?;
        if r.to_perm(w.period())? == *w {
            Ok(r)
        } else {
            Err(bad())
        }
    }

    pub fn parse(s: &str, period: usize) -> Result<Self> {
        Self::from_perm(&PeriodicPermutation::parse(s, period)?)
    }

    pub fn is_long(&self) -> bool {
        matches!(self, CtildeReflection::Long { .. })
    }

    /// The defining transposition `(a, b)`.
    pub fn pair(&self) -> (i64, i64) {
        match *self {
            CtildeReflection::Long { a, b } | CtildeReflection::Paired { a, b } => (a, b),
        }
    }

    /// For a long reflection `(a, kN + 1 - a)`, the integer `k`.
    pub fn long_k(&self, period: usize) -> Option<i64> {
        match *self {
            CtildeReflection::Long { a, b } => Some((a + b - 1) / period as i64),
            CtildeReflection::Paired { .. } => None,
        }
    }

    pub fn to_perm(&self, period: usize) -> Result<PeriodicPermutation> {
        match *self {
            CtildeReflection::Long { a, b } => PeriodicPermutation::transposition(a, b, period),
            CtildeReflection::Paired { a, b } => PeriodicPermutation::from_cycles(&CycleDecomposition::new(
                period,
                vec![Cycle::finite(vec![a, b]), Cycle::finite(vec![1 - a, 1 - b])],
            )),
        }
    }

    /// Number of transpositions of the affine `A` group in the reflection (1 or 2).
    pub fn a_length(&self) -> usize {
        if self.is_long() {
            1
        } else {
            2
        }
    }
}

impl fmt::Display for CtildeReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CtildeReflection::Long { a, b } => write!(f, "({a},{b})"),
            CtildeReflection::Paired { a, b } => write!(f, "({a},{b})({},{})", 1 - a, 1 - b),
        }
    }
}

/// Reflections dividing an element, with a flag telling whether a window cut the list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtomList {
    pub atoms: Vec<CtildeReflection>,
    pub window: usize,
    pub truncated: bool,
}

impl Germ {
    /// All reflections `rho` with `rho ≼ x`. Pairs inside finite parts are listed
    /// completely; inside the infinite part only pairs `a < b < a + K N` with
    /// `a` in `[1, N]` are listed, and `truncated` is set.
    pub fn atoms_dividing(&self, x: &GermElement, window: usize) -> Result<AtomList> {
        self.require_sigma(&[x])?;
        let period = self.period();
        let n = self.strip.n();
        let mut pairs: Vec<(i64, i64)> = Vec::new();
        for part in x.partition.finite_parts() {
            for (i, &a) in part.iter().enumerate() {
                for &b in &part[i + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        let inf = x.partition.infinite_part().map(|r| r.to_vec());
        if let Some(r) = &inf {
            for &a in r {
                for b in a + 1..a + window as i64 * n {
                    if r.contains(&self.strip.residue(b)) && (b - a) % n != 0 {
                        pairs.push((a, b));
                    }
                }
            }
        }
        let mut atoms = BTreeSet::new();
        for (a, b) in pairs {
            let rho = CtildeReflection::from_pair(a, b, period)?;
            if let Ok(r) = self.reflection(&rho) {
                if self.divides(&r, x) {
                    atoms.insert(rho);
                }
            }
        }
        Ok(AtomList { atoms: atoms.into_iter().collect(), window, truncated: inf.is_some() })
    }

    /// All reflections dividing `c` inside the window `K`.
    pub fn atoms(&self, window: usize) -> Vec<CtildeReflection> {
        self.atoms_dividing(&self.coxeter(), window).expect("c is sigma-stable").atoms
    }

    /// Candidate finite parts of diameter below `K N`, keyed by their smallest residue.
    fn candidate_parts(&self, window: usize) -> Vec<Vec<Part>> {
        let period = self.period();
        let n = self.strip.n();
        let mut by_residue = vec![Vec::new(); period];
        for m in 1..=n {
            let mut current = vec![m];
            let mut used = vec![false; period];
            used[(m - 1) as usize] = true;
            self.extend_parts(&mut current, &mut used, m + 1, m + window as i64 * n, &mut by_residue);
        }
        by_residue
    }

    fn extend_parts(&self, current: &mut Vec<i64>, used: &mut [bool], from: i64, to: i64, out: &mut [Vec<Part>]) {
        if current.len() >= 2 {
            let part = Part::finite(current.clone(), &self.strip);
            if crate::noncrossing::self_crossing_translates(&part, &self.strip).is_empty() {
                let min_residue = current.iter().map(|&v| self.strip.residue(v)).min().unwrap();
                out[(min_residue - 1) as usize].push(part);
            }
        }
        for v in from..to {
            let r = (self.strip.residue(v) - 1) as usize;
            if used[r] {
                continue;
            }
            used[r] = true;
            current.push(v);
            self.extend_parts(current, used, v + 1, to, out);
            current.pop();
            used[r] = false;
        }
    }

    /// All elements of `P` whose finite parts have diameter below `K N`, sorted.
    pub fn enumerate(&self, window: usize) -> Vec<GermElement> {
        let period = self.period();
        let candidates = self.candidate_parts(window);
        let mut out = Vec::new();
        for mask in 0u64..(1 << period) {
            let residues: Vec<i64> = (1..=period as i64).filter(|r| mask >> (r - 1) & 1 == 1).collect();
            let mut chosen = Vec::new();
            if !residues.is_empty() {
                let inf = Part::Infinite(residues.clone());
                if !(inf.meets(crate::strip::Side::X, &self.strip) && inf.meets(crate::strip::Side::Xi, &self.strip)) {
                    continue;
                }
                chosen.push(inf);
            }
            let mut used = vec![false; period];
            for r in &residues {
                used[(r - 1) as usize] = true;
            }
            self.choose_parts(&candidates, &mut used, &mut chosen, &mut out);
        }
        out.sort();
        out
    }

    fn choose_parts(
        &self,
        candidates: &[Vec<Part>],
        used: &mut [bool],
        chosen: &mut Vec<Part>,
        out: &mut Vec<GermElement>,
    ) {
        let Some(r) = used.iter().position(|u| !u) else {
            let p = PeriodicPartition::new(self.strip, chosen.clone()).expect("enumerated parts are non-crossing");
            out.push(self.element_of(&p).expect("enumerated partitions give members"));
            return;
        };
        used[r] = true;
        self.choose_parts(candidates, used, chosen, out);
        used[r] = false;
        for part in &candidates[r] {
            let residues = part.residues(&self.strip);
            if residues.iter().any(|&s| used[(s - 1) as usize]) {
                continue;
            }
            if chosen.iter().any(|q| crate::noncrossing::sets_cross(q, part, &self.strip)) {
                continue;
            }
            for &s in &residues {
                used[(s - 1) as usize] = true;
            }
            chosen.push(part.clone());
            self.choose_parts(candidates, used, chosen, out);
            chosen.pop();
            for &s in &residues {
                used[(s - 1) as usize] = false;
            }
        }
    }

    /// The sigma-stable elements of [`Germ::enumerate`].
    pub fn enumerate_sigma(&self, window: usize) -> Vec<GermElement> {
        self.enumerate(window).into_iter().filter(|x| x.sigma_stable).collect()
    }
}
