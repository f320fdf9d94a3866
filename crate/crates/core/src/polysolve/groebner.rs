//! Buchberger's algorithm over the rationals.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{total, Exponents, MonomialOrder, MultiPoly};
use crate::error::{Error, Result};

/// Terms sorted from the largest monomial down.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Exponents, BigRational)>,
}

impl Sorted {
    fn from_poly(p: &MultiPoly, order: MonomialOrder) -> Self {
        Sorted {
            terms: p
                .sorted_terms(order)
                .into_iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn to_poly(&self, arity: usize) -> MultiPoly {
        MultiPoly::from_terms(arity, self.terms.iter().cloned()).expect("consistent arity")
    }

    fn lm(&self) -> &Exponents {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self - c·x^m·g`, merging sorted term lists.
    fn sub_mul(&self, c: &BigRational, m: &[u32], g: &Sorted, order: MonomialOrder) -> Sorted {
        let shifted = g.terms.iter().map(|(e, v)| {
            let f: Exponents = e.iter().zip(m).map(|(a, b)| a + b).collect();
            (f, v * c)
        });
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => {
                    let (e, v) = b.next().unwrap();
                    out.push((e, -v));
                }
                Ordering::Equal => {
                    let (e, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = v - w;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                }
            }
        }
        Sorted { terms: out }
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            let inv = c.recip();
            for (_, v) in self.terms.iter_mut() {
                *v *= &inv;
            }
        }
    }
}

/// A critical pair; the heap yields the smallest lcm first, ties by the
/// later index and then the earlier one.
struct Pair {
    lcm: Exponents,
    i: usize,
    j: usize,
    order: MonomialOrder,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&self.lcm, &other.lcm)
            .then_with(|| (self.j, self.i).cmp(&(other.j, other.i)))
            .reverse()
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair {}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full normal form of `p` with respect to `basis`.
fn normal_form(p: &Sorted, basis: &[Sorted], order: MonomialOrder) -> Sorted {
    let mut rest = p.clone();
    let mut out: Vec<(Exponents, BigRational)> = Vec::new();
    while !rest.is_zero() {
        let (lm, lc) = rest.terms[0].clone();
        match basis.iter().find(|g| divides(g.lm(), &lm)) {
            Some(g) => {
                let m: Exponents = lm.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                let c = &lc / &g.terms[0].1;
                rest = rest.sub_mul(&c, &m, g, order);
            }
            None => {
                out.push((lm, lc));
                rest.terms.remove(0);
            }
        }
    }
    Sorted { terms: out }
}

fn s_polynomial(f: &Sorted, g: &Sorted, order: MonomialOrder) -> Sorted {
    let l = lcm(f.lm(), g.lm());
    let mf: Exponents = l.iter().zip(f.lm()).map(|(a, b)| a - b).collect();
    let mg: Exponents = l.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
    Sorted { terms: vec![] }
        .sub_mul(&(-f.terms[0].1.recip()), &mf, f, order)
        .sub_mul(&g.terms[0].1.recip(), &mg, g, order)
}

fn check_arity(arity: usize, polys: &[MultiPoly]) -> Result<()> {
    for p in polys {
        if p.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: p.arity(),
            });
        }
    }
    Ok(())
}

/// Normal form of `p` modulo `basis`: no remaining term is divisible by a
/// leading monomial of the basis.
pub fn reduce(p: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> Result<MultiPoly> {
    check_arity(p.arity(), basis)?;
    let b: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, order))
        .collect();
    Ok(normal_form(&Sorted::from_poly(p, order), &b, order).to_poly(p.arity()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Pairs reduced before giving up.
    pub max_steps: usize,
    /// Largest total degree allowed in the basis.
    pub max_degree: u32,
    /// Largest basis size allowed.
    pub max_basis: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_steps: 20_000,
            max_degree: 40,
            max_basis: 2_000,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub pairs_skipped: usize,
    pub basis_size: usize,
    pub max_degree: u32,
    pub pending_pairs: usize,
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} pairs reduced ({} to zero, {} skipped), basis size {}, max degree {}, {} pairs pending",
            self.pairs_reduced,
            self.zero_reductions,
            self.pairs_skipped,
            self.basis_size,
            self.max_degree,
            self.pending_pairs
        )
    }
}

/// A limit stopped the computation; nothing is claimed about the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interrupted {
    pub reason: String,
    pub stats: Stats,
}

impl fmt::Display for Interrupted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} after {}", self.reason, self.stats)
    }
}

impl From<Interrupted> for Error {
    fn from(i: Interrupted) -> Self {
        Error::ResourceLimit {
            operation: "buchberger",
            limit: i.stats.pairs_reduced,
            requested: i.stats.pairs_reduced + i.stats.pending_pairs,
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub basis: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub stats: Stats,
}

impl GroebnerBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }
}

/// Reduced Gröbner basis by Buchberger's algorithm with the normal selection
/// strategy (smallest lcm first, ties by basis index) and both of
/// Buchberger's criteria.
pub fn buchberger(
    gens: &[MultiPoly],
    order: MonomialOrder,
    limits: Limits,
) -> Result<std::result::Result<GroebnerBasis, Interrupted>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidArgument("no generators".into()));
    };
    let arity = first.arity();
    check_arity(arity, gens)?;

    let mut stats = Stats::default();
    let mut g: Vec<Sorted> = Vec::new();
    let mut pairs: BinaryHeap<Pair> = BinaryHeap::new();

    let push = |g: &mut Vec<Sorted>, pairs: &mut BinaryHeap<Pair>, mut h: Sorted| {
        h.make_monic();
        let j = g.len();
        for (i, gi) in g.iter().enumerate() {
            pairs.push(Pair {
                lcm: lcm(gi.lm(), h.lm()),
                i,
                j,
                order,
            });
        }
        g.push(h);
    };

    for p in gens {
        let s = Sorted::from_poly(p, order);
        let h = normal_form(&s, &g, order);
        if !h.is_zero() {
            push(&mut g, &mut pairs, h);
        }
    }

    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    while !pairs.is_empty() {
        if g.iter().any(|p| p.lm().iter().all(|&e| e == 0)) {
            break;
        }
        let Pair { lcm: l, i, j, .. } = pairs.pop().unwrap();
        done.insert((i, j));

        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(g[k].lm(), &l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if coprime(g[i].lm(), g[j].lm()) || chain {
            stats.pairs_skipped += 1;
            continue;
        }

        if stats.pairs_reduced >= limits.max_steps {
            stats.pending_pairs = pairs.len() + 1;
            stats.basis_size = g.len();
            return Ok(Err(Interrupted {
                reason: format!("step limit {} reached", limits.max_steps),
                stats,
            }));
        }
        stats.pairs_reduced += 1;
        let s = s_polynomial(&g[i], &g[j], order);
        let h = normal_form(&s, &g, order);
        if h.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let deg = h.terms.iter().map(|(e, _)| total(e)).max().unwrap();
        stats.max_degree = stats.max_degree.max(deg);
        if deg > limits.max_degree || g.len() >= limits.max_basis {
            stats.pending_pairs = pairs.len();
            stats.basis_size = g.len();
            return Ok(Err(Interrupted {
                reason: if deg > limits.max_degree {
                    format!("degree limit {} exceeded", limits.max_degree)
                } else {
                    format!("basis size limit {} reached", limits.max_basis)
                },
                stats,
            }));
        }
        push(&mut g, &mut pairs, h);
    }

    let basis = interreduce(g, order);
    stats.basis_size = basis.len();
    Ok(Ok(GroebnerBasis {
        basis: basis.iter().map(|s| s.to_poly(arity)).collect(),
        order,
        stats,
    }))
}

/// Minimal, fully reduced, monic basis sorted by leading monomial.
fn interreduce(g: Vec<Sorted>, order: MonomialOrder) -> Vec<Sorted> {
    if let Some(unit) = g.iter().find(|p| p.lm().iter().all(|&e| e == 0)) {
        let mut u = unit.clone();
        u.terms.truncate(1);
        u.make_monic();
        return vec![u];
    }
    let mut minimal: Vec<Sorted> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(k, q)| {
            k != i && divides(q.lm(), p.lm()) && (q.lm() != p.lm() || k < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let head = Sorted {
            terms: vec![minimal[i].terms[0].clone()],
        };
        let tail = Sorted {
            terms: minimal[i].terms[1..].to_vec(),
        };
        let mut r = normal_form(&tail, &others, order);
        r.terms.insert(0, head.terms[0].clone());
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out
}

/// Checks, independently of how `basis` was produced, that every S-polynomial
/// of basis pairs reduces to zero.
pub fn verify_groebner(basis: &[MultiPoly], order: MonomialOrder) -> bool {
    let b: Vec<Sorted> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Sorted::from_poly(p, order))
        .collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !normal_form(&s_polynomial(&b[i], &b[j], order), &b, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Checks that the basis is reduced: monic, and no term of any element is
/// divisible by the leading monomial of another.
pub fn is_reduced(basis: &[MultiPoly], order: MonomialOrder) -> bool {
    let lms: Vec<Exponents> = basis.iter().map(|p| p.leading(order).unwrap().0.clone()).collect();
    basis.iter().enumerate().all(|(i, p)| {
        p.leading(order).unwrap().1.is_one()
            && p
                .terms()
                .keys()
                .all(|e| lms.iter().enumerate().all(|(k, m)| k == i || !divides(m, e)))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Empty,
    Nonempty,
    Unknown(Interrupted),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Empty => write!(f, "empty"),
            Verdict::Nonempty => write!(f, "nonempty"),
            Verdict::Unknown(i) => write!(f, "unknown ({i})"),
        }
    }
}

/// Decides whether the generators have a common zero over the algebraic
/// closure: the variety is empty exactly when the reduced basis is `{1}`.
pub fn is_empty_variety(gens: &[MultiPoly], order: MonomialOrder, limits: Limits) -> Result<(Verdict, Stats)> {
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok((Verdict::Nonempty, Stats::default()));
    }
    Ok(match buchberger(&nonzero, order, limits)? {
        Ok(gb) => {
            let v = if gb.is_unit_ideal() {
                Verdict::Empty
            } else {
                Verdict::Nonempty
            };
            (v, gb.stats)
        }
        Err(i) => {
            let stats = i.stats.clone();
            (Verdict::Unknown(i), stats)
        }
    })
}
