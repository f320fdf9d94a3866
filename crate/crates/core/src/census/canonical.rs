//! Lexicographically minimal simultaneous conjugate of a pair `(σ₀, σ₁)`.
//!
//! The minimum over all of `S_d` has `σ₀` equal to the canonical permutation
//! `c₀` of its cycle type, so the search reduces to the centralizer of `c₀`:
//! an element of that centralizer sends each block (cycle) of `c₀` to a block
//! of the same length with some rotation. The image sequence of the new `σ₁`
//! is built position by position; a point whose block is still free gets the
//! earliest free block of the right length (any other choice is strictly
//! larger at that position), so branching only happens when a label's
//! preimage is undetermined.

use std::cmp::Ordering;

use crate::perm::{CycleType, Permutation};

#[derive(Clone)]
struct Blocks {
    /// block index of each label
    block_of: Vec<usize>,
    start: Vec<usize>,
    len: Vec<usize>,
}

impl Blocks {
    fn of_canonical(ct: &CycleType) -> Self {
        let d = ct.degree();
        let mut block_of = vec![0; d];
        let mut start = Vec::new();
        let mut len = Vec::new();
        let mut s = 0;
        for &l in ct.parts().iter().rev() {
            for j in 0..l {
                block_of[s + j] = start.len();
            }
            start.push(s);
            len.push(l);
            s += l;
        }
        Blocks { block_of, start, len }
    }
}

#[derive(Clone)]
struct State {
    /// old point -> new label
    fwd: Vec<Option<u32>>,
    /// new label -> old point
    back: Vec<Option<u32>>,
    old_used: Vec<bool>,
    new_used: Vec<bool>,
}

impl State {
    /// Sends old block `ob` to new block `nb` so that `point ↦ label`.
    fn assign(&mut self, blocks: &Blocks, ob: usize, nb: usize, point: usize, label: usize) {
        let len = blocks.len[ob];
        let (os, ns) = (blocks.start[ob], blocks.start[nb]);
        let shift = (label - ns + len - (point - os)) % len;
        for j in 0..len {
            let old = os + j;
            let new = ns + (j + shift) % len;
            self.fwd[old] = Some(new as u32);
            self.back[new] = Some(old as u32);
        }
        self.old_used[ob] = true;
        self.new_used[nb] = true;
    }
}

/// Returns the image sequence of the minimal `h σ₁ h⁻¹` over `h` centralizing
/// the canonical permutation of `ct`. `sigma1` must already be expressed in
/// labels where `σ₀ = ct.canonical_permutation()`.
pub(crate) fn minimize_over_centralizer(ct: &CycleType, sigma1: &Permutation) -> Vec<u32> {
    let d = sigma1.degree();
    let blocks = Blocks::of_canonical(ct);
    let nb = blocks.start.len();
    let state = State {
        fwd: vec![None; d],
        back: vec![None; d],
        old_used: vec![false; nb],
        new_used: vec![false; nb],
    };
    let mut best: Option<Vec<u32>> = None;
    let mut seq = Vec::with_capacity(d);
    search(&blocks, sigma1, state, &mut seq, &mut best);
    best.expect("the centralizer is nonempty")
}

fn search(
    blocks: &Blocks,
    sigma1: &Permutation,
    mut state: State,
    seq: &mut Vec<u32>,
    best: &mut Option<Vec<u32>>,
) {
    let d = sigma1.degree();
    let base_len = seq.len();
    let mut cmp = match best {
        Some(b) => seq[..].cmp(&b[..seq.len()]),
        None => Ordering::Less,
    };
    if cmp == Ordering::Greater {
        return;
    }
    let mut pos = seq.len();
    while pos < d {
        let point = match state.back[pos] {
            Some(p) => p as usize,
            None => {
                // `pos` starts a free block; try every compatible old point.
                let target = blocks.block_of[pos];
                let len = blocks.len[target];
                for ob in 0..blocks.start.len() {
                    if state.old_used[ob] || blocks.len[ob] != len {
                        continue;
                    }
                    for j in 0..len {
                        let mut next = state.clone();
                        next.assign(blocks, ob, target, blocks.start[ob] + j, pos);
                        search(blocks, sigma1, next, seq, best);
                    }
                }
                seq.truncate(base_len);
                return;
            }
        };
        let q = sigma1.apply(point);
        let value = match state.fwd[q] {
            Some(v) => v as usize,
            None => {
                let ob = blocks.block_of[q];
                let len = blocks.len[ob];
                let nb = (0..blocks.start.len())
                    .find(|&b| !state.new_used[b] && blocks.len[b] == len)
                    .expect("block lengths match between old and new labels");
                let label = blocks.start[nb];
                state.assign(blocks, ob, nb, q, label);
                label
            }
        };
        if cmp == Ordering::Equal {
            let b = best.as_ref().unwrap();
            match (value as u32).cmp(&b[pos]) {
                Ordering::Greater => {
                    seq.truncate(base_len);
                    return;
                }
                Ordering::Less => cmp = Ordering::Less,
                Ordering::Equal => {}
            }
        }
        seq.push(value as u32);
        pos += 1;
    }
    if cmp == Ordering::Less {
        *best = Some(seq.clone());
    }
    seq.truncate(base_len);
}

/// A permutation `g` with `g σ₀ g⁻¹ = c₀` (the canonical permutation of σ₀'s type).
pub(crate) fn conjugator_to_canonical(sigma0: &Permutation) -> Permutation {
    let d = sigma0.degree();
    let mut cycles = sigma0.cycles();
    cycles.sort_by_key(|c| (c.len(), c[0]));
    let mut images = vec![0u32; d];
    let mut label = 0usize;
    for cycle in cycles {
        for &p in &cycle {
            images[p] = label as u32;
            label += 1;
        }
    }
    Permutation::from_images(images).expect("relabelling is a bijection")
}
