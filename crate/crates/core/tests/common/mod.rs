//! Test-only oracles that share no evaluation code with the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use skein_core::diagram::{CrossSign, Dir, Event, Sense};
use skein_core::convert::ClassicalDiagram;
use skein_core::{LaurentA, MorseWord};

/// Annulus diagram events: the arrow diagram redrawn on a cylinder whose
/// seam every arrow's strand crosses once.
#[derive(Clone, Copy, Debug)]
enum Ann {
    /// Cup at `p`; the flag says whether its left strand points up.
    Cup(usize, bool),
    Cap(usize),
    /// Crossing of positions `p`, `p+1`; `a_is_pass` says whether the
    /// A-smoothing keeps both strands running through.
    Cross(usize, bool),
    /// Strand at the top position moves to the bottom across the seam, or back.
    Wrap { top_to_bottom: bool },
}

/// Redraws an arrow word on the annulus. An arrow becomes a strand that
/// circles the cylinder once, passing under the strands on one side of it
/// and over those on the other. `up_is_positive` picks which way an up
/// arrow winds.
fn to_annulus(w: &MorseWord, up_is_positive: bool) -> Vec<Ann> {
    let mut out = Vec::new();
    let mut n = 0usize;
    for e in w.events() {
        match *e {
            Event::Cup { pos, sense } => {
                out.push(Ann::Cup(pos, sense != Some(Sense::Right)));
                n += 2;
            }
            Event::Cap { pos } => {
                out.push(Ann::Cap(pos));
                n -= 2;
            }
            Event::Cross { pos, sign } => out.push(Ann::Cross(pos, sign == CrossSign::Pos)),
            Event::Arrow { pos: i, dir } => {
                let upward = (dir == Dir::Up) == up_is_positive;
                if upward {
                    for k in i..n {
                        out.push(Ann::Cross(k, true));
                    }
                    out.push(Ann::Wrap { top_to_bottom: true });
                    for k in 1..i {
                        out.push(Ann::Cross(k, false));
                    }
                } else {
                    for k in (1..i).rev() {
                        out.push(Ann::Cross(k, true));
                    }
                    out.push(Ann::Wrap { top_to_bottom: false });
                    for k in (i..n).rev() {
                        out.push(Ann::Cross(k, false));
                    }
                }
            }
        }
    }
    out
}

struct Dsu {
    parent: Vec<usize>,
    odd: Vec<bool>,
}

impl Dsu {
    fn add(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.odd.push(false);
        self.parent.len() - 1
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.odd[rb] ^= self.odd[ra];
        }
    }
}

/// Kauffman bracket on the annulus: coefficients of powers of the core
/// circle (annulus blackboard framing).
fn annulus_bracket(events: &[Ann]) -> BTreeMap<usize, LaurentA> {
    closed_bracket(0, events)
}

/// Annulus bracket of a diagram that starts with `open` strands at the
/// bottom and ends with as many at the top, bottom `i` joined to top `i`
/// across a seam.
fn closed_bracket(open: usize, events: &[Ann]) -> BTreeMap<usize, LaurentA> {
    let crossings = events.iter().filter(|e| matches!(e, Ann::Cross(..))).count();
    assert!(crossings < 26, "oracle limited to small diagrams");
    let delta = LaurentA::delta();
    let mut out: BTreeMap<usize, LaurentA> = BTreeMap::new();
    for bits in 0u64..(1 << crossings) {
        let mut dsu = Dsu { parent: Vec::new(), odd: Vec::new() };
        let mut strands: Vec<usize> = (0..open).map(|_| dsu.add()).collect();
        let bottom = strands.clone();
        let mut k = 0;
        let mut exp = 0i64;
        for e in events {
            match *e {
                Ann::Cup(p, _) => {
                    let a = dsu.add();
                    strands.splice(p - 1..p - 1, [a, a]);
                }
                Ann::Cap(p) => {
                    dsu.union(strands[p - 1], strands[p]);
                    strands.drain(p - 1..p + 1);
                }
                Ann::Cross(p, a_is_pass) => {
                    let b = bits >> k & 1 == 1;
                    k += 1;
                    exp += if b { -1 } else { 1 };
                    if b == a_is_pass {
                        dsu.union(strands[p - 1], strands[p]);
                        let a = dsu.add();
                        strands[p - 1] = a;
                        strands[p] = a;
                    }
                }
                Ann::Wrap { top_to_bottom } => {
                    let s = if top_to_bottom { strands.pop().unwrap() } else { strands.remove(0) };
                    let r = dsu.find(s);
                    dsu.odd[r] ^= true;
                    if top_to_bottom {
                        strands.insert(0, s);
                    } else {
                        strands.push(s);
                    }
                }
            }
        }
        assert_eq!(strands.len(), open);
        for (b, t) in bottom.iter().zip(strands.iter()) {
            dsu.union(*b, *t);
            let r = dsu.find(*b);
            dsu.odd[r] ^= true;
        }
        let mut roots: Vec<usize> = (0..dsu.parent.len()).map(|x| dsu.find(x)).collect();
        roots.sort();
        roots.dedup();
        let essential = roots.iter().filter(|r| dsu.odd[**r]).count();
        let trivial = roots.len() - essential;
        let term = delta.pow(trivial as u32).mul_monomial(exp, &BigInt::from(1));
        *out.entry(essential).or_default() += term;
    }
    out.retain(|_, v| !v.is_empty());
    out
}

/// Raw annulus bracket of an arrow word, before framing normalisation.
pub fn annulus_raw(w: &MorseWord, up_is_positive: bool) -> BTreeMap<usize, LaurentA> {
    annulus_bracket(&to_annulus(w, up_is_positive))
}

/// Plain Kauffman bracket of an arrow-free word by brute force over all
/// states, counting loops on a planar graph.
pub fn naive_bracket(w: &MorseWord) -> LaurentA {
    assert_eq!(w.arrow_count(), 0);
    let v = annulus_raw(w, true);
    assert!(v.keys().all(|k| *k == 0));
    v.get(&0).cloned().unwrap_or_default()
}

/// Class of an arrow word in the basis `{x^n}`, computed on the annulus.
///
/// With up arrows winding negatively the annulus picture carries the same
/// framing as the arrow picture, and the annulus core is `-A^-3 x`.
pub fn annulus_eval(w: &MorseWord) -> BTreeMap<usize, LaurentA> {
    annulus_raw(w, false)
        .into_iter()
        .map(|(k, c)| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (k, c.mul_monomial(-3 * k as i64, &BigInt::from(sign)))
        })
        .collect()
}

/// Writhe of the annulus picture of an oriented word.
fn annulus_writhe(events: &[Ann]) -> i64 {
    let mut up: Vec<bool> = Vec::new();
    let mut writhe = 0;
    for e in events {
        match *e {
            Ann::Cup(p, left_up) => {
                up.splice(p - 1..p - 1, [left_up, !left_up]);
            }
            Ann::Cap(p) => {
                up.drain(p - 1..p + 1);
            }
            Ann::Cross(p, a_is_pass) => {
                let parallel = up[p - 1] == up[p];
                writhe += if a_is_pass == parallel { 1 } else { -1 };
                up.swap(p - 1, p);
            }
            Ann::Wrap { top_to_bottom } => {
                if top_to_bottom {
                    let s = up.pop().unwrap();
                    up.insert(0, s);
                } else {
                    let s = up.remove(0);
                    up.push(s);
                }
            }
        }
    }
    writhe
}

/// Writhe-normalised annulus bracket `(-A^3)^-w <D>` of an oriented word, in
/// powers of the unoriented core. An invariant of oriented links, and the
/// image of the HOMFLYPT class under `v = A^-4`, `z = A^-2 - A^2`.
pub fn annulus_phi(w: &MorseWord) -> BTreeMap<usize, LaurentA> {
    assert!(w.is_empty() || w.is_oriented());
    let events = to_annulus(w, false);
    let writhe = annulus_writhe(&events);
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    annulus_bracket(&events).into_iter().map(|(k, c)| (k, c.mul_monomial(-3 * writhe, &BigInt::from(sign)))).collect()
}

/// Annulus bracket of a classical diagram, in powers of the core circle,
/// by brute force over all states of the closed tangle.
pub fn classical_bracket(c: &ClassicalDiagram) -> BTreeMap<usize, LaurentA> {
    let events: Vec<Ann> = c
        .tangle()
        .iter()
        .map(|e| match *e {
            Event::Cup { pos, .. } => Ann::Cup(pos, true),
            Event::Cap { pos } => Ann::Cap(pos),
            Event::Cross { pos, sign } => Ann::Cross(pos, sign == CrossSign::Pos),
            Event::Arrow { .. } => unreachable!("classical diagrams carry no arrows"),
        })
        .collect();
    closed_bracket(c.n(), &events)
}
