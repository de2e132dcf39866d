//! Elements of `P^sigma` fixed by conjugation by powers of `c`, and the dual germ of
//! the finite type `C_k` they are compared with.
//!
//! A part meeting both `X` and `Xi` is moved in opposite directions by `c^h`, so a fixed
//! element has single-sided finite parts (of diameter below `N`) and possibly one
//! infinite part. The window-1 enumeration therefore already contains every fixed element.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::germ::{Germ, GermElement};
use crate::perm::PeriodicPermutation;

/// An element of the dual germ of type `C_k`: a `k`-periodic non-crossing permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TypeCGermElement {
    pub perm: PeriodicPermutation,
    pub length: usize,
}

/// The dual germ of type `C_k`: `k`-periodic permutations whose cycles are ascending
/// finite cycles of span below `k` and at most one ascending infinite cycle of shift 1,
/// pairwise non-crossing on the line. The Garside element is `j -> j + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeCGerm {
    rank: usize,
}

fn ascending_within(v: &[i64], k: i64) -> Option<Vec<i64>> {
    let m = v.len();
    (0..m)
        .map(|r| v[r..].iter().chain(&v[..r]).copied().collect::<Vec<_>>())
        .find(|rot| rot.windows(2).all(|w| w[0] < w[1]) && rot[m - 1] - rot[0] < k)
}

fn gap(block: &[i64], b: i64, k: i64) -> i64 {
    block.iter().map(|&a| (b - a + k - 1).div_euclid(k)).sum()
}

impl TypeCGerm {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroPeriod);
        }
        Ok(TypeCGerm { rank })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn garside_element(&self) -> TypeCGermElement {
        let images = (2..=self.rank as i64 + 1).collect();
        self.member(&PeriodicPermutation::new(images).unwrap()).unwrap()
    }

    pub fn identity(&self) -> TypeCGermElement {
        self.member(&PeriodicPermutation::identity(self.rank)).unwrap()
    }

    pub fn member(&self, w: &PeriodicPermutation) -> Result<TypeCGermElement> {
        let k = self.rank as i64;
        if w.period() != self.rank {
            return Err(Error::PeriodMismatch(w.period(), self.rank));
        }
        let mut blocks: Vec<(Vec<i64>, bool)> = Vec::new();
        let mut length = 0;
        for c in w.cycles().cycles {
            let not_member = || Error::NotMember(format!("{c} is not an ascending cycle"));
            let rot = match c.shift {
                0 => ascending_within(&c.elements, k).ok_or_else(not_member)?,
                1 => {
                    let mut rot = c.elements.clone();
                    (0..rot.len())
                        .find_map(|_| {
                            let ok = rot.windows(2).all(|w| w[0] < w[1]) && rot[rot.len() - 1] - rot[0] < k;
                            let out = ok.then(|| rot.clone());
                            let first = rot.remove(0);
                            rot.push(first + k);
                            out
                        })
                        .ok_or_else(not_member)?
                }
                _ => return Err(Error::NotMember(format!("{c} has shift {}", c.shift))),
            };
            length += if c.shift == 0 { rot.len() - 1 } else { rot.len() };
            blocks.push((rot, c.shift != 0));
        }
        if blocks.iter().filter(|b| b.1).count() > 1 {
            return Err(Error::NotMember("two infinite cycles".into()));
        }
        for (i, (a, a_inf)) in blocks.iter().enumerate() {
            for (b, b_inf) in &blocks[i + 1..] {
                let ok = (!*b_inf && b.iter().all(|&x| gap(a, x, k) == gap(a, b[0], k)))
                    || (!*a_inf && a.iter().all(|&x| gap(b, x, k) == gap(b, a[0], k)));
                if !ok {
                    return Err(Error::NotMember(format!("{a:?} and {b:?} cross")));
                }
            }
        }
        Ok(TypeCGermElement { perm: w.clone(), length })
    }

    pub fn product(&self, x: &TypeCGermElement, y: &TypeCGermElement) -> Option<TypeCGermElement> {
        let z = self.member(&x.perm.compose(&y.perm).ok()?).ok()?;
        (z.length == x.length + y.length).then_some(z)
    }

    pub fn divides(&self, x: &TypeCGermElement, y: &TypeCGermElement) -> bool {
        match x.perm.inverse().compose(&y.perm).ok().and_then(|q| self.member(&q).ok()) {
            Some(q) => x.length + q.length == y.length,
            None => false,
        }
    }

    /// Every element, by brute force over window images `w(i)` in `[i - k + 1, i + k]`.
    pub fn enumerate(&self) -> Vec<TypeCGermElement> {
        let k = self.rank as i64;
        let mut out = Vec::new();
        let mut images = Vec::new();
        self.fill(&mut images, k, &mut out);
        out.sort();
        out
    }

    fn fill(&self, images: &mut Vec<i64>, k: i64, out: &mut Vec<TypeCGermElement>) {
        if images.len() == self.rank {
            if let Ok(w) = PeriodicPermutation::new(images.clone()) {
                if let Ok(x) = self.member(&w) {
                    out.push(x);
                }
            }
            return;
        }
        let i = images.len() as i64 + 1;
        for v in i - k + 1..=i + k {
            if images.iter().any(|u| (u - v).rem_euclid(k) == 0) {
                continue;
            }
            images.push(v);
            self.fill(images, k, out);
            images.pop();
        }
    }
}

/// Whether `c^h x c^-h = x`.
pub fn is_fixed_by(germ: &Germ, x: &GermElement, h: i64) -> Result<bool> {
    Ok(x.perm().conjugate_by(&germ.coxeter_perm().pow(h))? == *x.perm())
}

/// The elements of `P^sigma` fixed by `c^h` (complete; see the module note).
pub fn fixed_subgerm(germ: &Germ, h: i64) -> Result<Vec<GermElement>> {
    let mut out = Vec::new();
    for x in germ.enumerate_sigma(1) {
        if is_fixed_by(germ, &x, h)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Restriction to `X` reindexed by `2j + 1 -> j`, as a `d`-periodic permutation where
/// `d` divides `n` and `x` is fixed by `c^d`.
pub fn iso_to_typec(germ: &Germ, x: &GermElement, d: usize) -> Result<TypeCGermElement> {
    let n = germ.rank();
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::IndexOutOfRange(d));
    }
    if !is_fixed_by(germ, x, d as i64)? {
        return Err(Error::NotFixed);
    }
    let images = (1..=d as i64)
        .map(|j| {
            let v = x.perm().apply(2 * j + 1);
            if v.rem_euclid(2) == 1 {
                Ok((v - 1) / 2)
            } else {
                Err(Error::NotFixed)
            }
        })
        .collect::<Result<Vec<i64>>>()?;
    TypeCGerm::new(d)?.member(&PeriodicPermutation::new(images)?)
}

/// Minimal nontrivial elements of a finite poset given by its order relation.
fn minimal_nontrivial<T>(items: &[T], leq: impl Fn(&T, &T) -> bool, is_bottom: impl Fn(&T) -> bool) -> Vec<usize> {
    (0..items.len())
        .filter(|&i| !is_bottom(&items[i]))
        .filter(|&i| (0..items.len()).all(|j| j == i || is_bottom(&items[j]) || !leq(&items[j], &items[i])))
        .collect()
}

/// Whether two finite posets, given by their order matrices, are isomorphic.
pub fn posets_isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let m = a.len();
    if m != b.len() {
        return false;
    }
    let signature = |p: &[Vec<bool>], i: usize| {
        let down = (0..m).filter(|&j| p[j][i]).count();
        let up = (0..m).filter(|&j| p[i][j]).count();
        (down, up)
    };
    let sa: Vec<_> = (0..m).map(|i| signature(a, i)).collect();
    let sb: Vec<_> = (0..m).map(|i| signature(b, i)).collect();
    let mut ca = sa.clone();
    let mut cb = sb.clone();
    ca.sort();
    cb.sort();
    if ca != cb {
        return false;
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| sa[i]);
    Matcher { order, a, b, sa, sb, image: vec![usize::MAX; m], used: vec![false; m] }.extend(0)
}

/// Backtracking search for an order isomorphism, assigning `order[pos]` at depth `pos`.
struct Matcher<'a> {
    order: Vec<usize>,
    a: &'a [Vec<bool>],
    b: &'a [Vec<bool>],
    sa: Vec<(usize, usize)>,
    sb: Vec<(usize, usize)>,
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let i = self.order[pos];
        for j in 0..self.b.len() {
            if self.used[j] || self.sa[i] != self.sb[j] {
                continue;
            }
            let consistent = self.order[..pos].iter().all(|&p| {
                let q = self.image[p];
                self.a[p][i] == self.b[q][j] && self.a[i][p] == self.b[j][q]
            });
            if !consistent {
                continue;
            }
            self.image[i] = j;
            self.used[j] = true;
            if self.extend(pos + 1) {
                return true;
            }
            self.used[j] = false;
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GermCounts {
    pub atoms: usize,
    pub divisors: usize,
}

/// Comparison of the `c^h`-fixed subgerm with the dual germ of type `C_gcd(h, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerReport {
    pub h: i64,
    pub n: usize,
    pub expected_rank: usize,
    pub window: usize,
    pub complete: bool,
    pub fixed: GermCounts,
    pub type_c: GermCounts,
    pub counts_match: bool,
    pub lattice_isomorphic: bool,
    pub reindexing_is_isomorphism: bool,
    pub matches: bool,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds the report for `h` and rank `n`. The reindexing map is checked to be a
/// bijection carrying defined products to defined products and back.
pub fn verify_centralizer_type(h: i64, n: usize, window: usize) -> Result<CentralizerReport> {
    let germ = Germ::ctilde(n)?;
    let d = gcd(h.unsigned_abs() as usize, n);
    let fixed = fixed_subgerm(&germ, h)?;
    let tc = TypeCGerm::new(d)?;
    let typec = tc.enumerate();

    let fixed_order: Vec<Vec<bool>> =
        fixed.iter().map(|x| fixed.iter().map(|y| germ.divides(x, y)).collect()).collect();
    let typec_order: Vec<Vec<bool>> = typec.iter().map(|x| typec.iter().map(|y| tc.divides(x, y)).collect()).collect();
    let fixed_atoms = minimal_nontrivial(&fixed, |x, y| germ.divides(x, y), |x| x.is_identity()).len();
    let typec_atoms = minimal_nontrivial(&typec, |x, y| tc.divides(x, y), |x| x.length == 0).len();

    let images: Vec<Option<TypeCGermElement>> = fixed.iter().map(|x| iso_to_typec(&germ, x, d).ok()).collect();
    let image_set: BTreeSet<&TypeCGermElement> = images.iter().flatten().collect();
    let bijective =
        images.iter().all(Option::is_some) && image_set.len() == fixed.len() && image_set.len() == typec.len();
    let reindexing_is_isomorphism = bijective && {
        let index: BTreeMap<&PeriodicPermutation, &TypeCGermElement> =
            fixed.iter().zip(&images).map(|(x, y)| (x.perm(), y.as_ref().unwrap())).collect();
        fixed.iter().all(|x| {
            fixed.iter().all(|y| {
                let (ix, iy) = (index[x.perm()], index[y.perm()]);
                match (germ.product(x, y), tc.product(ix, iy)) {
                    (Some(z), Some(w)) => index.get(z.perm()).is_some_and(|iz| **iz == w),
                    (None, None) => true,
                    _ => false,
                }
            })
        })
    };
    let counts_match = fixed.len() == typec.len() && fixed_atoms == typec_atoms;
    let lattice_isomorphic = posets_isomorphic(&fixed_order, &typec_order);
    Ok(CentralizerReport {
        h,
        n,
        expected_rank: d,
        window,
        complete: true,
        fixed: GermCounts { atoms: fixed_atoms, divisors: fixed.len() },
        type_c: GermCounts { atoms: typec_atoms, divisors: typec.len() },
        counts_match,
        lattice_isomorphic,
        reindexing_is_isomorphism,
        matches: counts_match && lattice_isomorphic && reindexing_is_isomorphism,
    })
}
