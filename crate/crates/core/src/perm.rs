//! Permutations of `{1..d}` and the small-degree group algorithms the census
//! relies on.
//!
//! Points are stored 0-based internally; every textual form (cycle notation,
//! image lists handed to callers) is 1-based. Composition is right-to-left:
//! `p.compose(&q)` maps `i` to `p(q(i))`.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest degree accepted by [`group_order`].
pub const GROUP_ORDER_MAX_DEGREE: usize = 16;
/// Largest degree accepted by [`centralizer_order`].
pub const CENTRALIZER_MAX_DEGREE: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Cycle lengths of a permutation (fixed points included), weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    /// Builds a cycle type from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be positive, got {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        CycleType(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts (cycles).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Least common multiple of the parts: the order of any permutation of this type.
    pub fn lcm(&self) -> u64 {
        self.0.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    /// Number of permutations in `S_d` with this cycle type.
    pub fn class_size(&self) -> BigUint {
        let d = self.degree();
        let mut denom = BigUint::one();
        let mut i = 0;
        while i < self.0.len() {
            let len = self.0[i];
            let mut mult = 0u32;
            while i < self.0.len() && self.0[i] == len {
                mult += 1;
                i += 1;
            }
            denom *= BigUint::from(len).pow(mult) * factorial(mult as usize);
        }
        factorial(d) / denom
    }

    /// The lexicographically smallest permutation of this type: fixed points
    /// first, then consecutive cycles `(a a+1 .. a+k-1)` in increasing length.
    pub fn canonical_permutation(&self) -> Permutation {
        let d = self.degree();
        let mut images: Vec<u32> = (0..d as u32).collect();
        let mut start = 0usize;
        for &len in self.0.iter().rev() {
            for j in 0..len {
                images[start + j] = (start + (j + 1) % len) as u32;
            }
            start += len;
        }
        Permutation { images }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in &images {
            let v = v as usize;
            if v >= d || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection of 0..{d}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as they appear in reports.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let zero: Vec<u32> = images
            .iter()
            .map(|&v| {
                if v == 0 {
                    Err(Error::InvalidPermutation("point label 0 in 1-based images".into()))
                } else {
                    Ok((v - 1) as u32)
                }
            })
            .collect::<Result<_>>()?;
        Self::from_images(zero)
    }

    /// From disjoint cycles given with 1-based labels.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} outside 1..={degree}"
                    )));
                }
                if used[pt - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears twice in {cycles:?}"
                    )));
                }
                used[pt - 1] = true;
                let next = cycle[(idx + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle text such as `"(1 2 3)(4 5)"` or `"()"`.
    /// Points inside a cycle may be separated by spaces or commas.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in cycle text {text:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {text:?}")));
            };
            let inner = &body[..close];
            let pts: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<_>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 0-based image sequence.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&q| self.images[q as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`: relabels every point `i` as `g(i)`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_degree(g)?;
        Ok(self.conjugate_unchecked(g))
    }

    pub(crate) fn conjugate_unchecked(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[v as usize];
        }
        Permutation { images }
    }

    /// Disjoint cycles with 0-based points, each starting at its smallest point,
    /// ordered by that point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.apply(j);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut count = 0;
        for start in 0..d {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.apply(j);
            }
        }
        count
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    /// Order of the permutation (lcm of its cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycle_type().lcm()
    }

    pub fn is_even(&self) -> bool {
        (self.degree() - self.cycle_count()).is_multiple_of(2)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    p.cycle_type()
}

pub fn conjugate(p: &Permutation, g: &Permutation) -> Result<Permutation> {
    p.conjugate(g)
}

fn common_degree(gens: &[Permutation]) -> Result<Option<usize>> {
    let Some(first) = gens.first() else {
        return Ok(None);
    };
    for g in &gens[1..] {
        first.check_degree(g)?;
    }
    Ok(Some(first.degree()))
}

/// Orbit of the 0-based point `start` under the group generated by `gens`.
pub fn orbit(gens: &[Permutation], start: usize, degree: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut out = vec![start];
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                out.push(q);
                queue.push_back(q);
            }
        }
    }
    out
}

/// True iff the orbit of point 1 under `⟨gens⟩` is all of `{1..d}`.
/// Generators whose degree differs from `d` make the answer false.
pub fn is_transitive(gens: &[Permutation], d: usize) -> bool {
    if d == 0 || gens.iter().any(|g| g.degree() != d) {
        return false;
    }
    orbit(gens, 0, d).len() == d
}

/// Exact order of `⟨gens⟩` via a Schreier–Sims stabilizer chain on the full
/// base `0, 1, .., d-1`.
pub fn group_order(gens: &[Permutation]) -> Result<BigUint> {
    let d = common_degree(gens)?
        .ok_or_else(|| Error::InvalidArgument("group_order needs at least one generator".into()))?;
    if d > GROUP_ORDER_MAX_DEGREE {
        return Err(Error::ResourceLimit {
            operation: "group_order",
            limit: GROUP_ORDER_MAX_DEGREE,
            requested: d,
        });
    }
    let mut chain = StabilizerChain::new(d);
    for g in gens {
        chain.add(0, g.clone());
    }
    Ok(chain.order())
}

/// Knuth's incremental Schreier–Sims. Level `k` stores generators fixing
/// points `0..k` and a transversal `u[j]` with `u[j](k) = j`.
struct StabilizerChain {
    degree: usize,
    gens: Vec<Vec<Permutation>>,
    transversal: Vec<Vec<Option<Permutation>>>,
}

impl StabilizerChain {
    fn new(degree: usize) -> Self {
        let mut transversal = vec![vec![None; degree]; degree];
        for (k, level) in transversal.iter_mut().enumerate() {
            level[k] = Some(Permutation::identity(degree));
        }
        StabilizerChain {
            degree,
            gens: vec![Vec::new(); degree],
            transversal,
        }
    }

    fn contains_from(&self, k: usize, p: &Permutation) -> bool {
        let mut p = p.clone();
        for level in k..self.degree {
            let j = p.apply(level);
            match &self.transversal[level][j] {
                Some(u) => p = u.inverse().compose_unchecked(&p),
                None => return false,
            }
        }
        p.is_identity()
    }

    fn add(&mut self, k: usize, p: Permutation) {
        if k >= self.degree || self.contains_from(k, &p) {
            return;
        }
        self.gens[k].push(p.clone());
        let reps: Vec<Permutation> = self.transversal[k].iter().flatten().cloned().collect();
        for u in reps {
            self.extend(k, p.compose_unchecked(&u));
        }
    }

    fn extend(&mut self, k: usize, p: Permutation) {
        let j = p.apply(k);
        match &self.transversal[k][j] {
            None => {
                self.transversal[k][j] = Some(p.clone());
                let gens = self.gens[k].clone();
                for t in gens {
                    self.extend(k, t.compose_unchecked(&p));
                }
            }
            Some(u) => {
                let h = u.inverse().compose_unchecked(&p);
                self.add(k + 1, h);
            }
        }
    }

    fn order(&self) -> BigUint {
        self.transversal
            .iter()
            .map(|level| BigUint::from(level.iter().filter(|u| u.is_some()).count()))
            .product()
    }
}

/// Attempts to build `c` with `c(g(x)) = g(c(x))` for all generators, on the
/// orbit `src` (as a set containing `src_base`) mapping `src_base ↦ dst_base`.
/// Returns the partial map on success.
fn equivariant_map(
    gens: &[Permutation],
    degree: usize,
    src_base: usize,
    dst_base: usize,
) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; degree];
    let mut used = vec![false; degree];
    map[src_base] = Some(dst_base);
    used[dst_base] = true;
    let mut queue = VecDeque::from([src_base]);
    while let Some(x) = queue.pop_front() {
        let cx = map[x].expect("queued points are mapped");
        for g in gens {
            let gx = g.apply(x);
            let want = g.apply(cx);
            match map[gx] {
                Some(v) if v != want => return None,
                Some(_) => {}
                None => {
                    if used[want] {
                        return None;
                    }
                    map[gx] = Some(want);
                    used[want] = true;
                    queue.push_back(gx);
                }
            }
        }
    }
    Some(map)
}

/// Order of the simultaneous centralizer of `gens` in `S_d`.
///
/// The centralizer permutes the orbits of `⟨gens⟩`, sending each orbit to an
/// isomorphic one. Writing the orbits as `n_i` copies of pairwise
/// non-isomorphic transitive actions with self-centralizers `C_i`, the order
/// is `∏ |C_i|^{n_i} · n_i!`. Each equivariant map is determined by the image
/// of one base point, so every test is a single propagation.
pub fn centralizer_order(gens: &[Permutation]) -> Result<BigUint> {
    let d = common_degree(gens)?
        .ok_or_else(|| Error::InvalidArgument("centralizer_order needs at least one generator".into()))?;
    if d > CENTRALIZER_MAX_DEGREE {
        return Err(Error::ResourceLimit {
            operation: "centralizer_order",
            limit: CENTRALIZER_MAX_DEGREE,
            requested: d,
        });
    }
    let mut assigned = vec![false; d];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for p in 0..d {
        if !assigned[p] {
            let o = orbit(gens, p, d);
            for &q in &o {
                assigned[q] = true;
            }
            orbits.push(o);
        }
    }

    // Group orbits into isomorphism classes of G-sets.
    let mut class_of: Vec<Option<usize>> = vec![None; orbits.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..orbits.len() {
        if class_of[i].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[i] = Some(id);
        let mut members = vec![i];
        for j in i + 1..orbits.len() {
            if class_of[j].is_some() || orbits[j].len() != orbits[i].len() {
                continue;
            }
            let base = orbits[i][0];
            if orbits[j]
                .iter()
                .any(|&t| equivariant_map(gens, d, base, t).is_some())
            {
                class_of[j] = Some(id);
                members.push(j);
            }
        }
        classes.push(members);
    }

    let mut total = BigUint::one();
    for members in &classes {
        let o = &orbits[members[0]];
        let base = o[0];
        let self_maps = o
            .iter()
            .filter(|&&t| equivariant_map(gens, d, base, t).is_some())
            .count();
        total *= BigUint::from(self_maps).pow(members.len() as u32) * factorial(members.len());
    }
    Ok(total)
}

/// All permutations of degree `d` with the given cycle type. Each permutation
/// is produced once: the cycle through the smallest unused point is written
/// starting at that point.
pub fn conjugacy_class(ct: &CycleType) -> Vec<Permutation> {
    let d = ct.degree();
    let mut lengths: Vec<(usize, usize)> = Vec::new();
    for &p in ct.parts() {
        match lengths.last_mut() {
            Some((len, mult)) if *len == p => *mult += 1,
            _ => lengths.push((p, 1)),
        }
    }
    let mut out = Vec::new();
    let mut images = vec![u32::MAX; d];
    let mut used = vec![false; d];
    class_rec(&mut images, &mut used, &mut lengths, &mut out);
    out
}

fn class_rec(
    images: &mut Vec<u32>,
    used: &mut Vec<bool>,
    lengths: &mut Vec<(usize, usize)>,
    out: &mut Vec<Permutation>,
) {
    let Some(start) = used.iter().position(|u| !u) else {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    };
    for li in 0..lengths.len() {
        let (len, mult) = lengths[li];
        if mult == 0 {
            continue;
        }
        lengths[li].1 -= 1;
        used[start] = true;
        let mut cycle = vec![start];
        fill_cycle(images, used, lengths, out, &mut cycle, len);
        used[start] = false;
        lengths[li].1 += 1;
    }
}

fn fill_cycle(
    images: &mut Vec<u32>,
    used: &mut Vec<bool>,
    lengths: &mut Vec<(usize, usize)>,
    out: &mut Vec<Permutation>,
    cycle: &mut Vec<usize>,
    len: usize,
) {
    if cycle.len() == len {
        for i in 0..len {
            images[cycle[i]] = cycle[(i + 1) % len] as u32;
        }
        class_rec(images, used, lengths, out);
        return;
    }
    for p in cycle[0] + 1..used.len() {
        if used[p] {
            continue;
        }
        used[p] = true;
        cycle.push(p);
        fill_cycle(images, used, lengths, out, cycle, len);
        cycle.pop();
        used[p] = false;
    }
}

/// Every permutation of `{0..d-1}` in lexicographic order of image sequences.
pub fn all_permutations(d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..d as u32).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (1..d).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..d).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(3, "(1 2)").compose(&Permutation::identity(3)).unwrap(), p(3, "(1 2)"));
        assert_eq!(p(3, "(1 2 3)").compose(&p(3, "(1 2 3)")).unwrap(), p(3, "(1 3 2)"));
        // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(p(3, "(1 2)").compose(&p(3, "(2 3)")).unwrap(), p(3, "(1 2 3)"));
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let err = p(3, "(1 2)").compose(&p(4, "(1 2)")).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
        assert!(p(3, "()").conjugate(&p(2, "()")).is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(p(7, "(1 2 3 4 5 6 7)").cycle_type().parts(), &[7]);
        assert_eq!(p(5, "(1 2 3)(4 5)").cycle_type().parts(), &[3, 2]);
    }

    #[test]
    fn conjugate_examples() {
        let q = p(5, "(1 4 2)(3 5)");
        assert_eq!(q.conjugate(&Permutation::identity(5)).unwrap(), q);
        assert_eq!(p(3, "(1 2)").conjugate(&p(3, "(1 3)")).unwrap(), p(3, "(2 3)"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p(4, "()").to_string(), "()");
        assert_eq!(p(5, "(4 5)(1,2,3)").to_string(), "(1 2 3)(4 5)");
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("1 2", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&[p(7, "(1 2 3 4 5 6 7)")], 7));
        assert!(!is_transitive(&[p(4, "(1 2)"), p(4, "(3 4)")], 4));
        assert!(is_transitive(&[p(3, "(1 2)"), p(3, "(1 2 3)")], 3));
    }

    #[test]
    fn group_order_examples() {
        assert_eq!(group_order(&[p(7, "(1 2 3 4 5 6 7)")]).unwrap(), BigUint::from(7u32));
        assert_eq!(
            group_order(&[p(5, "(1 2)"), p(5, "(1 2 3 4 5)")]).unwrap(),
            BigUint::from(120u32)
        );
        // PSL(2,7) acting on the 7 points of the Fano plane
        let a = p(7, "(1 2 3 4 5 6 7)");
        let b = p(7, "(2 3 5)(4 7 6)");
        let c = p(7, "(1 2)(3 6)");
        assert_eq!(group_order(&[a, b, c]).unwrap(), BigUint::from(168u32));
        assert_eq!(group_order(&[Permutation::identity(16)]).unwrap(), BigUint::one());
        assert!(group_order(&[Permutation::identity(17)]).unwrap_err().is_resource_limit());
        assert!(group_order(&[]).is_err());
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(
            centralizer_order(&[p(7, "(1 2 3 4 5 6 7)")]).unwrap(),
            BigUint::from(7u32)
        );
        for n in 3..=8 {
            let cycle: Vec<usize> = (1..=n).collect();
            let gens = [p(n, "(1 2)"), Permutation::from_cycles(n, &[cycle]).unwrap()];
            assert_eq!(centralizer_order(&gens).unwrap(), BigUint::one());
        }
        // identity: everything commutes
        assert_eq!(centralizer_order(&[Permutation::identity(5)]).unwrap(), factorial(5));
        // (1 2)(3 4): C_2 wr S_2 has order 8; the fixed point 5 contributes 1
        assert_eq!(centralizer_order(&[p(5, "(1 2)(3 4)")]).unwrap(), BigUint::from(8u32));
        assert!(centralizer_order(&[Permutation::identity(13)])
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn centralizer_matches_brute_force_small() {
        let perms = all_permutations(5);
        for x in perms.iter().step_by(7) {
            for y in perms.iter().step_by(11) {
                let brute = perms
                    .iter()
                    .filter(|c| {
                        c.compose_unchecked(x) == x.compose_unchecked(c)
                            && c.compose_unchecked(y) == y.compose_unchecked(c)
                    })
                    .count();
                let fast = centralizer_order(&[x.clone(), y.clone()]).unwrap();
                assert_eq!(fast, BigUint::from(brute), "{x} {y}");
            }
        }
    }

    #[test]
    fn conjugacy_class_sizes() {
        for parts in [vec![7], vec![3, 2], vec![2, 2, 1], vec![1, 1, 1], vec![4, 2, 2, 1]] {
            let ct = CycleType::new(parts).unwrap();
            let class = conjugacy_class(&ct);
            assert_eq!(BigUint::from(class.len()), ct.class_size());
            assert!(class.iter().all(|q| q.cycle_type() == ct));
            let mut sorted = class.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), class.len());
        }
    }

    #[test]
    fn canonical_permutation_is_lex_min_of_its_class() {
        for parts in [vec![3, 2], vec![2, 1, 1], vec![4, 1], vec![2, 2, 1]] {
            let ct = CycleType::new(parts).unwrap();
            let min = conjugacy_class(&ct).into_iter().min().unwrap();
            assert_eq!(ct.canonical_permutation(), min);
        }
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let v = all_permutations(4);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
}
