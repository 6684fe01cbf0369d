//! Kauffman bracket of an arrow word in the solid torus by a bottom-to-top
//! sweep.
//!
//! Partial states that agree below the sweep line are merged, so the work
//! grows with the width of the diagram rather than with `2^c`. Closed ovals
//! are evaluated as soon as they close: whatever lies in one face of the
//! picture sits in a disk times the circle, so it can be replaced by its
//! class `x^j`, drawn as `j` one-arrow ovals.

use std::collections::HashMap;

use super::{reduce_forest, SkeinVectorX};
use crate::diagram::{CrossSign, Event, Forest, Tree};
use crate::{LaurentA, MorseWord};

/// The smoothed diagram below the sweep line.
///
/// Open arcs hang from the line; `strands[i]` is the arc at position `i`.
/// `twist[a]` counts arrows on arc `a` pointing along it when it is walked
/// from its left end to its right end. Gap `g` lies between positions
/// `g - 1` and `g`; `gaps[g]` is the region of the lower half-plane it
/// opens onto, and the closed ovals in region `r` have class `x^power[r]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Partial {
    strands: Vec<usize>,
    twist: Vec<i64>,
    gaps: Vec<usize>,
    power: Vec<usize>,
}

/// Class of the oval with `arrows` net counterclockwise arrows around `x^inside`.
struct OvalTable(HashMap<(i64, usize), SkeinVectorX>);

impl OvalTable {
    fn get(&mut self, arrows: i64, inside: usize) -> &SkeinVectorX {
        self.0.entry((arrows, inside)).or_insert_with(|| {
            let oval = Tree::with_children(arrows, vec![Tree::leaf(1); inside]);
            reduce_forest(&Forest::new(vec![oval]))
        })
    }
}

impl Partial {
    fn empty() -> Self {
        Partial { strands: Vec::new(), twist: Vec::new(), gaps: vec![0], power: vec![0] }
    }

    fn cup(&mut self, i: usize) {
        let arc = self.twist.len();
        self.twist.push(0);
        self.strands.splice(i..i, [arc, arc]);
        let outside = self.gaps[i];
        let inside = self.power.len();
        self.power.push(0);
        self.gaps.splice(i + 1..i + 1, [inside, outside]);
    }

    /// Joins the strands at `i` and `i + 1`. When they are the two ends of
    /// one arc, returns the closed oval's arrows and inner power; the
    /// caller adds its class to region `gaps[i]`.
    fn cap(&mut self, i: usize) -> Option<(i64, usize)> {
        let (a, b) = (self.strands[i], self.strands[i + 1]);
        let (left, middle, right) = (self.gaps[i], self.gaps[i + 1], self.gaps[i + 2]);
        let mut closed = None;
        if a == b {
            // Walking the arc from its left end runs clockwise around the oval.
            closed = Some((-self.twist[a], self.power[middle]));
            self.power[middle] = 0;
        } else {
            let other = |arc: usize, here: usize| {
                (0..self.strands.len()).find(|&k| k != here && self.strands[k] == arc).expect("arc has two ends")
            };
            let (oa, ob) = (other(a, i), other(b, i + 1));
            let along = |arc: usize, from: usize, to: usize| if from < to { self.twist[arc] } else { -self.twist[arc] };
            let twist = if oa < ob { along(a, oa, i) + along(b, i + 1, ob) } else { along(b, ob, i + 1) + along(a, i, oa) };
            self.twist[a] = twist;
            self.strands[ob] = a;
        }
        if left != right {
            self.power[left] += std::mem::take(&mut self.power[right]);
            for g in &mut self.gaps {
                if *g == right {
                    *g = left;
                }
            }
        }
        self.strands.drain(i..i + 2);
        self.gaps.drain(i + 1..i + 3);
        closed
    }

    fn arrow(&mut self, i: usize, sign: i64) {
        let arc = self.strands[i];
        let at_left_end = self.strands[..i].iter().all(|&s| s != arc);
        // The walk runs down the left end and up the right end.
        self.twist[arc] += if at_left_end { -sign } else { sign };
    }

    /// Renumbers arcs and regions by first appearance, so equal
    /// configurations hash equal.
    fn canonical(mut self) -> Self {
        let mut arc_map = vec![usize::MAX; self.twist.len()];
        let mut twist = Vec::with_capacity(self.strands.len() / 2);
        for s in &mut self.strands {
            if arc_map[*s] == usize::MAX {
                arc_map[*s] = twist.len();
                twist.push(self.twist[*s]);
            }
            *s = arc_map[*s];
        }
        let mut region_map = vec![usize::MAX; self.power.len()];
        let mut power = Vec::with_capacity(self.gaps.len());
        for g in &mut self.gaps {
            if region_map[*g] == usize::MAX {
                region_map[*g] = power.len();
                power.push(self.power[*g]);
            }
            *g = region_map[*g];
        }
        Partial { strands: self.strands, twist, gaps: self.gaps, power }
    }
}

/// `state` after a cap at `i`, with a closed oval replaced by its class.
fn capped(mut state: Partial, i: usize, coeff: LaurentA, ovals: &mut OvalTable) -> Vec<(Partial, LaurentA)> {
    match state.cap(i) {
        None => vec![(state, coeff)],
        Some((arrows, inside)) => {
            let region = state.gaps[i];
            ovals
                .get(arrows, inside)
                .terms()
                .map(|(k, c)| {
                    let mut s = state.clone();
                    s.power[region] += k;
                    (s, &coeff * c)
                })
                .collect()
        }
    }
}

/// Class in `Z[A^±1][x]` of an unoriented arrow word with any number of crossings.
pub(super) fn sweep_bracket(w: &MorseWord) -> SkeinVectorX {
    let mut ovals = OvalTable(HashMap::new());
    let mut layer: HashMap<Partial, LaurentA> = HashMap::from([(Partial::empty(), LaurentA::a_pow(0))]);
    for e in w.events() {
        let i = e.pos() - 1;
        let mut next: HashMap<Partial, LaurentA> = HashMap::with_capacity(layer.len() * 2);
        let mut add = |p: Partial, coeff: LaurentA| {
            *next.entry(p.canonical()).or_default() += &coeff;
        };
        for (mut state, coeff) in layer {
            match *e {
                Event::Cup { .. } => {
                    state.cup(i);
                    add(state, coeff);
                }
                Event::Cap { .. } => {
                    for (s, c) in capped(state, i, coeff, &mut ovals) {
                        add(s, c);
                    }
                }
                Event::Arrow { dir, .. } => {
                    state.arrow(i, dir.sign());
                    add(state, coeff);
                }
                Event::Cross { sign, .. } => {
                    // The A-smoothing of a negative crossing and the
                    // B-smoothing of a positive one are the turnback.
                    let (straight, turned) = if sign == CrossSign::Pos { (1, -1) } else { (-1, 1) };
                    for (mut s, c) in capped(state.clone(), i, coeff.mul_monomial(turned, &1.into()), &mut ovals) {
                        s.cup(i);
                        add(s, c);
                    }
                    add(state, coeff.mul_monomial(straight, &1.into()));
                }
            }
        }
        next.retain(|_, v| !v.is_empty());
        layer = next;
    }
    let mut out = SkeinVectorX::zero();
    for (state, coeff) in layer {
        out.add_term(state.power[0], coeff);
    }
    out
}
