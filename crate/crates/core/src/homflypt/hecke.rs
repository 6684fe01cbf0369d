//! Annular closures of braids, computed as a trace on the Hecke algebra.
//!
//! The closure of a braid in the solid torus depends only on the image of
//! the braid in `H_n`, where each generator satisfies `g² = a·g + b`, and is
//! a trace: invariant under `x·y ↦ y·x`. Such a trace is fixed by its values
//! on minimal-length permutations of each cycle type, and the closure of a
//! minimal-length element of type `λ` is `t_{λ_1} ⋯ t_{λ_r}`.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};

use super::basis::{BElement, SkeinVectorB};
use crate::LaurentVZ;

/// A permutation in one-line notation, `w[i]` the image of `i`.
pub(crate) type Perm = Vec<u8>;

fn length(w: &[u8]) -> usize {
    let mut inv = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// `s_i·w·s_i`.
fn conjugate(w: &[u8], s: usize) -> Perm {
    let mut u = w.to_vec();
    u.swap(s, s + 1);
    for x in &mut u {
        if *x as usize == s {
            *x += 1;
        } else if *x as usize == s + 1 {
            *x -= 1;
        }
    }
    u
}

fn times_s(w: &[u8], s: usize) -> Perm {
    let mut u = w.to_vec();
    u.swap(s, s + 1);
    u
}

fn cycle_type(w: &[u8]) -> Vec<i64> {
    let mut seen = vec![false; w.len()];
    let mut parts = Vec::new();
    for start in 0..w.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = w[i] as usize;
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    parts
}

/// Braid letter: generator index and whether it is inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Letter {
    pub s: usize,
    pub inverse: bool,
}

pub(crate) fn pos(s: usize) -> Letter {
    Letter { s, inverse: false }
}

pub(crate) fn neg(s: usize) -> Letter {
    Letter { s, inverse: true }
}

/// Hecke algebra on `strands` strands with `g² = a·g + b`, `b` a unit.
pub(crate) struct Hecke {
    a: LaurentVZ,
    b: LaurentVZ,
    b_inv: LaurentVZ,
    memo: HashMap<Perm, SkeinVectorB>,
}

impl Hecke {
    pub fn new(a: LaurentVZ, b: LaurentVZ) -> Self {
        let b_inv = b.inverse().expect("quadratic relation needs a unit constant term");
        Hecke { a, b, b_inv, memo: HashMap::new() }
    }

    /// Expands a braid word into the standard basis `{g_w}`.
    pub fn expand(&self, strands: usize, word: &[Letter]) -> HashMap<Perm, LaurentVZ> {
        let id: Perm = (0..strands as u8).collect();
        let mut cur: HashMap<Perm, LaurentVZ> = HashMap::from([(id, LaurentVZ::one())]);
        for l in word {
            let mut next: HashMap<Perm, LaurentVZ> = HashMap::new();
            let mut put = |w: Perm, c: LaurentVZ| {
                let slot = next.entry(w).or_insert_with(LaurentVZ::zero);
                *slot += &c;
            };
            for (w, c) in cur {
                let ascent = w[l.s] < w[l.s + 1];
                let ws = times_s(&w, l.s);
                match (l.inverse, ascent) {
                    (false, true) | (true, false) => put(ws, c),
                    (false, false) => {
                        put(ws, &c * &self.b);
                        put(w, &c * &self.a);
                    }
                    // g_s^-1 = b^-1·g_s - a·b^-1
                    (true, true) => {
                        put(ws, &c * &self.b_inv);
                        put(w, -(&(&c * &self.a) * &self.b_inv));
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            cur = next;
        }
        cur
    }

    /// Closure of `g_w` in the basis of side-by-side ovals.
    pub fn trace(&mut self, w: &[u8]) -> SkeinVectorB {
        if let Some(t) = self.memo.get(w) {
            return t.clone();
        }
        let len = length(w);
        let parts = cycle_type(w);
        // Length n - (number of cycles) is the minimum over the class.
        if len + parts.len() == w.len() {
            let value = SkeinVectorB::basis(BElement::from_nonzero(parts));
            self.memo.insert(w.to_vec(), value.clone());
            return value;
        }
        let mut class: Vec<Perm> = vec![w.to_vec()];
        let mut seen: HashSet<Perm> = class.iter().cloned().collect();
        let mut reduction = None;
        let mut idx = 0;
        'search: while idx < class.len() {
            let u = class[idx].clone();
            idx += 1;
            for s in 0..u.len().saturating_sub(1) {
                let c = conjugate(&u, s);
                let lc = length(&c);
                if lc < len {
                    reduction = Some((times_s(&u, s), c));
                    break 'search;
                }
                if lc == len && seen.insert(c.clone()) {
                    class.push(c);
                }
            }
        }
        // tr(g_u) = a·tr(g_us) + b·tr(g_sus) when l(sus) = l(u) - 2; length-preserving
        // conjugation by a simple reflection keeps the trace.
        let value = match reduction {
            Some((us, sus)) => {
                let mut v = self.trace(&us).scale(&self.a);
                let rest = self.trace(&sus);
                v.add_scaled(&rest, &self.b);
                v
            }
            None => SkeinVectorB::basis(BElement::from_nonzero(parts)),
        };
        for u in class {
            self.memo.insert(u, value.clone());
        }
        value
    }

    /// Closure of a braid word.
    pub fn closure(&mut self, strands: usize, word: &[Letter]) -> SkeinVectorB {
        let mut out = SkeinVectorB::zero();
        for (w, c) in self.expand(strands, word) {
            let t = self.trace(&w);
            out.add_scaled(&t, &c);
        }
        out
    }
}
