//! Mixed diagrams to classical diagrams and back.
//!
//! Crossings along the fixed component `U` split into a run where the moving
//! part passes over `U` and a run where it passes under. Pushing the first
//! run below the page and the second above it leaves `U` meeting the page in
//! one point of each gap between the runs, and the complement of `U` is the
//! page minus those two points, thickened. With one point moved to infinity
//! the page is cut along a ray from the other, and each half of the cut page
//! is unrolled around that point into half of the tangle.

use super::{ClassicalDiagram, ConvertError, MixedDiagram};
use crate::diagram::{CrossSign, Event, MorseWord};

/// Component labels (1-based, in order of first cup) of the strands below
/// each event; entry `events.len()` is the empty top.
fn labels(events: &[Event]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = Vec::new();
    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    let mut raw: Vec<Vec<usize>> = vec![Vec::new()];
    let mut cur: Vec<usize> = Vec::new();
    for e in events {
        let p = e.pos() - 1;
        match *e {
            Event::Cup { .. } => {
                parent.push(parent.len());
                let id = parent.len() - 1;
                cur.splice(p..p, [id, id]);
            }
            Event::Cap { .. } => {
                let (a, b) = (find(&parent, cur[p]), find(&parent, cur[p + 1]));
                parent[a.max(b)] = a.min(b);
                cur.drain(p..p + 2);
            }
            Event::Cross { .. } => cur.swap(p, p + 1),
            Event::Arrow { .. } => {}
        }
        raw.push(cur.clone());
    }
    // Roots are the smallest id of each component, so sorting them orders
    // components by first cup.
    let mut roots: Vec<usize> = (0..parent.len()).map(|x| find(&parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    raw.iter()
        .map(|h| h.iter().map(|&id| roots.binary_search(&find(&parent, id)).expect("root") + 1).collect())
        .collect()
}

pub(super) fn component_count(events: &[Event]) -> usize {
    let labels = labels(events);
    labels.iter().flatten().copied().max().unwrap_or(0)
}

/// Component label of every strand, read between events: entry `k` lists
/// the strands just below event `k`, left to right.
pub fn components(w: &MorseWord) -> Vec<Vec<usize>> {
    labels(w.events())
}

/// A point of the fixed component: the strand at `pos` just below event `height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Segment {
    height: usize,
    pos: usize,
}

/// Walks a closed component from one of its segments, listing its
/// segments and, between them, whether the other strand passes over it at
/// each crossing.
fn walk(events: &[Event], start: Segment) -> Vec<Result<Segment, bool>> {
    let mut out = Vec::new();
    let (mut seg, mut up) = (start, true);
    loop {
        out.push(Ok(seg));
        let Segment { height: k, pos: p } = seg;
        if up {
            let e = events[k];
            let i = e.pos();
            seg = match e {
                Event::Cup { .. } => Segment { height: k + 1, pos: if p < i { p } else { p + 2 } },
                Event::Cap { .. } if p == i || p == i + 1 => {
                    up = false;
                    Segment { height: k, pos: if p == i { i + 1 } else { i } }
                }
                Event::Cap { .. } => Segment { height: k + 1, pos: if p < i { p } else { p - 2 } },
                Event::Cross { sign, .. } if p == i || p == i + 1 => {
                    // The strand entering at the left position is over for `Pos`.
                    out.push(Err((p == i) != (sign == CrossSign::Pos)));
                    Segment { height: k + 1, pos: if p == i { i + 1 } else { i } }
                }
                _ => Segment { height: k + 1, pos: p },
            };
        } else {
            let e = events[k - 1];
            let i = e.pos();
            seg = match e {
                Event::Cup { .. } if p == i || p == i + 1 => {
                    up = true;
                    Segment { height: k, pos: if p == i { i + 1 } else { i } }
                }
                Event::Cup { .. } => Segment { height: k - 1, pos: if p < i { p } else { p - 2 } },
                Event::Cap { .. } => Segment { height: k - 1, pos: if p < i { p } else { p + 2 } },
                Event::Cross { sign, .. } if p == i || p == i + 1 => {
                    let entered_left = p == i + 1;
                    out.push(Err(entered_left != (sign == CrossSign::Pos)));
                    Segment { height: k - 1, pos: if p == i { i + 1 } else { i } }
                }
                _ => Segment { height: k - 1, pos: p },
            };
        }
        if seg == start && up {
            return out;
        }
    }
}

/// Events of the moving part alone, with positions among its strands.
fn moving_events(events: &[Event], labels: &[Vec<usize>], fixed: usize, range: std::ops::Range<usize>) -> Vec<Event> {
    let mut out = Vec::new();
    for k in range {
        let e = events[k];
        let below = &labels[k];
        let i = e.pos();
        let touches_fixed = match e {
            Event::Cup { .. } => labels[k + 1][i - 1] == fixed,
            Event::Cap { .. } | Event::Cross { .. } => below[i - 1] == fixed || below[i] == fixed,
            Event::Arrow { .. } => below[i - 1] == fixed,
        };
        if !touches_fixed {
            let left = below[..i - 1].iter().filter(|&&c| c != fixed).count();
            out.push(e.with_pos(left + 1));
        }
    }
    out
}

/// Classical diagram of the moving part in the complement of the fixed
/// component.
pub fn mixed_to_classical(m: &MixedDiagram) -> Result<ClassicalDiagram, ConvertError> {
    let events = m.word().events();
    let fixed = m.fixed();
    let labels = labels(events);
    for (k, e) in events.iter().enumerate() {
        if let Event::Cross { pos, .. } = *e {
            if labels[k][pos - 1] == fixed && labels[k][pos] == fixed {
                return Err(ConvertError::FixedSelfCrossing { fixed });
            }
        }
    }
    let first_cup = (0..events.len()).find(|&k| labels[k + 1].len() > labels[k].len() && labels[k + 1][events[k].pos() - 1] == fixed);
    let first_cup = first_cup.expect("fixed component exists");
    let start = Segment { height: first_cup + 1, pos: events[first_cup].pos() };
    let path = walk(events, start);

    // Arcs between consecutive crossings, each with the crossing types at its ends.
    let overs: Vec<bool> = path.iter().filter_map(|x| x.err()).collect();
    let mut arcs: Vec<(Vec<Segment>, Option<(bool, bool)>)> = Vec::new();
    if overs.is_empty() {
        arcs.push((path.iter().filter_map(|x| x.ok()).collect(), None));
    } else {
        let first = path.iter().position(|x| x.is_err()).expect("a crossing");
        let n = path.len();
        let mut current = Vec::new();
        let mut before = path[first].err().expect("crossing");
        for step in 1..=n {
            match path[(first + step) % n] {
                Ok(s) => current.push(s),
                Err(after) => {
                    arcs.push((std::mem::take(&mut current), Some((before, after))));
                    before = after;
                }
            }
        }
    }
    let switches = arcs.iter().filter(|(_, ends)| matches!(ends, Some((a, b)) if a != b)).count();
    if switches > 2 {
        return Err(ConvertError::FixedNotStandard);
    }
    // The two punctures lie on the switching arcs; with one run only, both
    // lie on any one arc.
    let candidates: Vec<&Vec<Segment>> = arcs
        .iter()
        .filter(|(_, ends)| switches == 0 || matches!(ends, Some((a, b)) if a != b))
        .map(|(segs, _)| segs)
        .collect();
    let moving_left = |s: &Segment| labels[s.height][..s.pos - 1].iter().filter(|&&c| c != fixed).count();
    let moving_total = |h: usize| labels[h].iter().filter(|&&c| c != fixed).count();
    let exposed = |segs: &Vec<Segment>| {
        segs.iter().any(|s| {
            let g = moving_left(s);
            g == 0 || g == moving_total(s.height)
        })
    };
    let outer = candidates.iter().position(|segs| exposed(segs)).ok_or(ConvertError::FixedNotExposed)?;
    let inner = if switches == 0 { candidates[outer] } else { candidates[1 - outer] };
    let h = *inner.first().expect("arcs between crossings have segments");

    let g = moving_left(&h);
    let total = moving_total(h.height);
    let lower = moving_events(events, &labels, fixed, 0..h.height);
    let upper = moving_events(events, &labels, fixed, h.height..events.len());
    let mut tangle: Vec<Event> = (1..=g).map(|c| Event::Cup { pos: c, sense: None }).collect();
    tangle.extend(upper.iter().map(|e| e.with_pos(e.pos() + g)));
    tangle.extend(lower.iter().map(|e| e.with_pos(e.pos() + g)));
    tangle.extend((1..=g).rev().map(|c| Event::Cap { pos: c }));
    ClassicalDiagram::new(total - g, tangle)
}

/// Mixed diagram of a classical diagram: the closure drawn around a hole,
/// with the fixed component through the hole, over the strands on its left
/// and under those on its right.
pub fn classical_to_mixed(c: &ClassicalDiagram, surgery: Option<(i64, i64)>) -> MixedDiagram {
    let n = c.n();
    let mut events = vec![Event::Cup { pos: 1, sense: None }];
    events.extend((1..=n).map(|k| Event::Cup { pos: k + 1, sense: None }));
    events.extend((1..=n).map(|q| Event::Cross { pos: q, sign: CrossSign::Pos }));
    events.extend((n + 2..=2 * n + 1).rev().map(|q| Event::Cross { pos: q, sign: CrossSign::Pos }));
    events.push(Event::Cap { pos: n + 1 });
    events.extend(c.tangle().iter().copied());
    events.extend((1..=n).rev().map(|k| Event::Cap { pos: k }));
    let word = MorseWord::new(events).expect("closure of a valid tangle is a closed word");
    MixedDiagram::new(word, 1, surgery).expect("fixed component is the first")
}
