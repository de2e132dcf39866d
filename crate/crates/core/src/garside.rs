//! Garside normal forms in the monoid and group of fractions of `P^sigma`.
//!
//! A group element is `D^k x_1 ... x_m` with `D = c` and each `x_i` a proper nontrivial
//! divisor of `c`, every adjacent pair left-weighted: `gcd(x_i^-1 c, x_{i+1}) = 1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::germ::{CtildeReflection, Germ, GermElement};
use crate::perm::{Cycle, CycleDecomposition, PeriodicPermutation};

/// A word in the classical generators `s0, ..., sn` and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Word {
    pub letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        Word { letters }
    }

    /// Parses `s0 s1 s2^-1 s0`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in s.split_whitespace() {
            let body = token.strip_prefix('s').ok_or_else(|| Error::Parse(format!("bad letter {token:?}")))?;
            let (index, exponent) = match body.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) => (i, 1),
                Some(_) => return Err(Error::Parse(format!("bad exponent in {token:?}"))),
                None => (body, 1),
            };
            let i = index.parse::<usize>().map_err(|_| Error::Parse(format!("bad index in {token:?}")))?;
            letters.push((i, exponent));
        }
        Ok(Word { letters })
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&(_, e)| e > 0)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> =
            self.letters.iter().map(|&(i, e)| if e < 0 { format!("s{i}^-1") } else { format!("s{i}") }).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

/// `D^delta_power * body[0] * ... * body[m-1]` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub delta_power: i64,
    pub body: Vec<GermElement>,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta_power)?;
        if !self.body.is_empty() {
            let parts: Vec<String> = self.body.iter().map(|x| x.to_string()).collect();
            write!(f, " {}", parts.join(" . "))?;
        }
        Ok(())
    }
}

/// A dual relation `r . t = (r t r) . r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualRelation {
    pub left: [CtildeReflection; 2],
    pub right: [CtildeReflection; 2],
}

impl fmt::Display for DualRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{} = {}.{}", self.left[0], self.left[1], self.right[0], self.right[1])
    }
}

/// The relations coming from window-`K` atoms; always a truncation of an infinite list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub rank: usize,
    pub window: usize,
    pub truncated: bool,
    pub generators: Vec<CtildeReflection>,
    pub relations: Vec<DualRelation>,
}

/// Normal-form machinery for the affine `C` group of a given rank.
#[derive(Debug, Clone)]
pub struct Garside {
    germ: Germ,
    c: GermElement,
}

impl Garside {
    pub fn new(n: usize) -> Result<Self> {
        let germ = Germ::ctilde(n)?;
        let c = germ.coxeter();
        Ok(Garside { germ, c })
    }

    pub fn germ(&self) -> &Germ {
        &self.germ
    }

    pub fn rank(&self) -> usize {
        self.germ.rank()
    }

    /// The reflection `sigma_i`: `(2n, 2n+1)`, `(i, i+1)(2n-i, 2n+1-i)` or `(n, n+1)`.
    pub fn generator_reflection(&self, i: usize) -> Result<CtildeReflection> {
        let n = self.rank();
        let period = 2 * n;
        let (a, b) = match i {
            0 => (2 * n as i64, 2 * n as i64 + 1),
            _ if i < n => (i as i64, i as i64 + 1),
            _ if i == n => (n as i64, n as i64 + 1),
            _ => return Err(Error::IndexOutOfRange(i)),
        };
        CtildeReflection::from_pair(a, b, period)
    }

    pub fn classical_generator(&self, i: usize) -> Result<GermElement> {
        self.germ.reflection(&self.generator_reflection(i)?)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { delta_power: 0, body: vec![] }
    }

    pub fn delta_power(&self, k: i64) -> GroupElement {
        GroupElement { delta_power: k, body: vec![] }
    }

    /// Left-weights the pair `(x, y)`: moves `gcd(x^-1 c, y)` from `y` into `x`.
    pub fn left_weight(&self, x: &GermElement, y: &GermElement) -> Result<(GermElement, GermElement)> {
        let complement = self.germ.right_complement(x)?;
        let a = self.germ.gcd(&complement, y)?;
        if a.is_identity() {
            return Ok((x.clone(), y.clone()));
        }
        let x2 = self.germ.product(x, &a).ok_or_else(|| Error::NotMember(format!("{x} * {a}")))?;
        let y2 = self.germ.left_quotient(&a, y).ok_or(Error::NotDivisible)?;
        Ok((x2, y2))
    }

    /// Normal form of `D^k x_1 ... x_m` for arbitrary divisors `x_i` of `c`.
    pub fn normalize_factors(&self, k: i64, factors: Vec<GermElement>) -> Result<GroupElement> {
        let mut body: Vec<GermElement> = factors.into_iter().filter(|x| !x.is_identity()).collect();
        loop {
            let mut changed = false;
            for i in 0..body.len().saturating_sub(1) {
                let (x, y) = self.left_weight(&body[i], &body[i + 1])?;
                if x != body[i] {
                    body[i] = x;
                    body[i + 1] = y;
                    changed = true;
                }
            }
            body.retain(|x| !x.is_identity());
            if !changed {
                break;
            }
        }
        let leading = body.iter().take_while(|x| **x == self.c).count();
        Ok(GroupElement { delta_power: k + leading as i64, body: body.split_off(leading) })
    }

    /// `phi^l(x) = c^-l x c^l`.
    fn phi_power(&self, x: &GermElement, l: i64) -> Result<GermElement> {
        self.germ.conjugate_by_c_power(x, -l)
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        let mut factors = g.body.iter().map(|x| self.phi_power(x, h.delta_power)).collect::<Result<Vec<_>>>()?;
        factors.extend(h.body.iter().cloned());
        self.normalize_factors(g.delta_power + h.delta_power, factors)
    }

    /// `x^-1 = D^-1 phi^-1(x^-1 c)`, applied factor by factor.
    pub fn invert(&self, g: &GroupElement) -> Result<GroupElement> {
        let mut result = self.identity();
        for x in g.body.iter().rev() {
            let complement = self.germ.right_complement(x)?;
            let factor = GroupElement { delta_power: -1, body: vec![self.phi_power(&complement, -1)?] };
            result = self.multiply(&result, &factor)?;
        }
        self.multiply(&result, &self.delta_power(-g.delta_power))
    }

    pub fn from_germ(&self, x: &GermElement) -> Result<GroupElement> {
        self.normalize_factors(0, vec![x.clone()])
    }

    pub fn normalize(&self, word: &Word) -> Result<GroupElement> {
        let mut g = self.identity();
        for &(i, e) in &word.letters {
            let letter = self.from_germ(&self.classical_generator(i)?)?;
            let letter = if e < 0 { self.invert(&letter)? } else { letter };
            g = self.multiply(&g, &letter)?;
        }
        Ok(g)
    }

    /// Normal form of a positive word in the dual generators.
    pub fn normalize_atoms(&self, atoms: &[CtildeReflection]) -> Result<GroupElement> {
        let factors = atoms.iter().map(|r| self.germ.reflection(r)).collect::<Result<Vec<_>>>()?;
        self.normalize_factors(0, factors)
    }

    pub fn equals(&self, w1: &Word, w2: &Word) -> Result<bool> {
        Ok(self.normalize(w1)? == self.normalize(w2)?)
    }

    /// A reduced decomposition of a germ element into atoms, reflection by reflection.
    pub fn atom_word(&self, x: &GermElement) -> Result<Vec<CtildeReflection>> {
        let mut out = Vec::new();
        let mut rest = x.clone();
        while !rest.is_identity() {
            let rho = (1..=8)
                .find_map(|k| self.germ.atoms_dividing(&rest, k).ok().and_then(|l| l.atoms.first().copied()))
                .ok_or(Error::NotDivisible)?;
            rest = self.germ.quotient_by_reflection(&rho, &rest)?;
            out.push(rho);
        }
        Ok(out)
    }

    /// The positive part of a normal form spelled in atoms (`D` powers kept apart).
    pub fn spell(&self, g: &GroupElement) -> Result<(i64, Vec<CtildeReflection>)> {
        let mut atoms = Vec::new();
        for x in &g.body {
            atoms.extend(self.atom_word(x)?);
        }
        Ok((g.delta_power, atoms))
    }

    /// Whether `r . t` is a defined product in the germ, i.e. `r t ≼ c` with lengths adding.
    pub fn relation_applies(&self, r: &CtildeReflection, t: &CtildeReflection) -> bool {
        match (self.germ.reflection(r), self.germ.reflection(t)) {
            (Ok(x), Ok(y)) => self.germ.product(&x, &y).is_some(),
            _ => false,
        }
    }

    /// Rewrites `r . t` at position `pos` into `(r t r) . r` (forward) or `u . r` into
    /// `r . (r u r)` (backward), when the relation applies.
    pub fn apply_relation(
        &self,
        word: &[CtildeReflection],
        pos: usize,
        forward: bool,
    ) -> Option<Vec<CtildeReflection>> {
        if pos + 1 >= word.len() {
            return None;
        }
        let period = self.germ.period();
        let (left, right) = (word[pos], word[pos + 1]);
        let conj = |r: &CtildeReflection, t: &CtildeReflection| -> Option<CtildeReflection> {
            let rp = r.to_perm(period).ok()?;
            let tp = t.to_perm(period).ok()?;
            CtildeReflection::from_perm(&rp.compose(&tp).ok()?.compose(&rp).ok()?).ok()
        };
        let (new_left, new_right) = if forward {
            if !self.relation_applies(&left, &right) {
                return None;
            }
            (conj(&left, &right)?, left)
        } else {
            let t = conj(&right, &left)?;
            if !self.relation_applies(&right, &t) {
                return None;
            }
            (right, t)
        };
        let mut out = word.to_vec();
        out[pos] = new_left;
        out[pos + 1] = new_right;
        Some(out)
    }

    /// Order of `sigma_i sigma_j` in the Coxeter group: the bond of the diagram.
    pub fn braid_length(&self, i: usize, j: usize) -> usize {
        let n = self.rank();
        let (lo, hi) = (i.min(j), i.max(j));
        if hi - lo != 1 {
            2
        } else if lo == 0 || hi == n {
            4
        } else {
            3
        }
    }

    /// Replays the braid relation between `sigma_i` and `sigma_j` as a chain of dual
    /// relations: starting from the alternating word of length `m` whose letter at
    /// position `m - 2` is the left factor of a defined product, apply the forward
    /// relation at positions `m - 2, ..., 0`. Returns every intermediate word. For bonds of
    /// length 4 the second rewrite needs `sigma_j sigma_i sigma_j sigma_i ≼ c`, which fails;
    /// [`Garside::relation_path`] finds a valid route instead.
    pub fn braid_relation_chain(&self, i: usize, j: usize) -> Result<Vec<Vec<CtildeReflection>>> {
        let (ri, rj) = (self.generator_reflection(i)?, self.generator_reflection(j)?);
        let (first, second) = if self.relation_applies(&ri, &rj) {
            (ri, rj)
        } else if self.relation_applies(&rj, &ri) {
            (rj, ri)
        } else {
            return Err(Error::NotMember(format!("neither {ri}.{rj} nor {rj}.{ri} divides c")));
        };
        let m = self.braid_length(i, j);
        let word: Vec<CtildeReflection> =
            (0..m).map(|p| if (m + p).is_multiple_of(2) { first } else { second }).collect();
        let mut chain = vec![word];
        for pos in (0..m - 1).rev() {
            let next = self
                .apply_relation(chain.last().unwrap(), pos, true)
                .ok_or_else(|| Error::NotMember(format!("relation fails at position {pos}")))?;
            chain.push(next);
        }
        Ok(chain)
    }

    /// Shortest sequence of single dual-relation rewrites (either direction) from
    /// `start` to `goal`, exploring at most `cap` words.
    pub fn relation_path(
        &self,
        start: &[CtildeReflection],
        goal: &[CtildeReflection],
        cap: usize,
    ) -> Option<Vec<Vec<CtildeReflection>>> {
        use std::collections::{HashMap, VecDeque};
        let mut parent: HashMap<Vec<CtildeReflection>, Option<Vec<CtildeReflection>>> = HashMap::new();
        parent.insert(start.to_vec(), None);
        let mut queue = VecDeque::from([start.to_vec()]);
        while let Some(word) = queue.pop_front() {
            if word == goal {
                let mut path = vec![word];
                while let Some(Some(p)) = parent.get(path.last().unwrap()) {
                    path.push(p.clone());
                }
                path.reverse();
                return Some(path);
            }
            for pos in 0..word.len().saturating_sub(1) {
                for forward in [true, false] {
                    if let Some(next) = self.apply_relation(&word, pos, forward) {
                        if parent.len() < cap && !parent.contains_key(&next) {
                            parent.insert(next.clone(), Some(word.clone()));
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
        None
    }

    /// Dual relations `r . t = (r t r) . r` for all window-`K` atoms `r, t` with
    /// `r t ≼ c`.
    pub fn emit_presentation(&self, window: usize) -> Result<Presentation> {
        let atoms = self.germ.atoms(window);
        let elements = atoms.iter().map(|r| self.germ.reflection(r)).collect::<Result<Vec<_>>>()?;
        let mut relations = Vec::new();
        for (x, r) in elements.iter().zip(&atoms) {
            for (y, t) in elements.iter().zip(&atoms) {
                if self.germ.product(x, y).is_none() {
                    continue;
                }
                let rtr = x.perm().compose(y.perm())?.compose(x.perm())?;
                relations.push(DualRelation { left: [*r, *t], right: [CtildeReflection::from_perm(&rtr)?, *r] });
            }
        }
        Ok(Presentation { rank: self.rank(), window, truncated: true, generators: atoms, relations })
    }
}

/// The permutation of a classical generator, built from its cycles.
pub fn classical_generator_perm(i: usize, n: usize) -> Result<PeriodicPermutation> {
    let period = 2 * n;
    let ni = n as i64;
    let cycles = match i {
        0 => vec![Cycle::finite(vec![2 * ni, 2 * ni + 1])],
        _ if i < n => {
            let i = i as i64;
            vec![Cycle::finite(vec![i, i + 1]), Cycle::finite(vec![2 * ni - i, 2 * ni + 1 - i])]
        }
        _ if i == n => vec![Cycle::finite(vec![ni, ni + 1])],
        _ => return Err(Error::IndexOutOfRange(i)),
    };
    PeriodicPermutation::from_cycles(&CycleDecomposition::new(period, cycles))
}
