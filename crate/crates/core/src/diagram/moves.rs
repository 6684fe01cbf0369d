use super::{CrossSign, DiagramError, Dir, Event, MorseWord};

/// Which side of a strand a local picture is drawn on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Isotopies of the plane that only reorder or reshape Morse events.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlanarMove {
    /// Swap events `slice` and `slice + 1`, which act on disjoint strands.
    Commute { slice: usize },
    /// Insert a cup/cap zigzag on strand `pos` before event `slice`.
    ZigzagInsert { slice: usize, pos: usize, side: Side },
    /// Remove the zigzag formed by events `slice` and `slice + 1`.
    ZigzagRemove { slice: usize },
    /// Slide an arrow around the adjacent cup or cap (events `slice`, `slice + 1`).
    ArrowOverExtremum { slice: usize },
    /// Slide a crossing strand across the adjacent cup or cap (events `slice`, `slice + 1`).
    CrossOverExtremum { slice: usize },
}

/// A diagram move. `slice` indexes events: insertions go before event
/// `slice` (so `slice == len` appends), pattern moves start at event `slice`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// Ω1: a kink on strand `pos`. Changes the framing.
    KinkInsert { slice: usize, pos: usize, sign: CrossSign, side: Side },
    /// Ω1: remove the kink spelled by events `slice..slice + 3`.
    KinkRemove { slice: usize },
    /// Ω2: a cancelling crossing pair on strands `pos`, `pos + 1`.
    Omega2Insert { slice: usize, pos: usize, first: CrossSign },
    Omega2Remove { slice: usize },
    /// Ω3 on the three crossings at `slice..slice + 3`.
    Omega3 { slice: usize },
    /// Ω4: a cancelling arrow pair on strand `pos`.
    Omega4Insert { slice: usize, pos: usize, first: Dir },
    Omega4Remove { slice: usize },
    /// Ω5: move the arrow of the adjacent (arrow, crossing) pair at `slice`
    /// to the other side of the crossing, switching the crossing. An up arrow
    /// passes from below on the over-strand or from above on the
    /// under-strand; a down arrow the other way round.
    Omega5 { slice: usize },
    /// Slide move of `L(p,1)`: the outermost strand on `side` at slice
    /// `slice` is rerouted around the whole diagram, gaining `p` arrows
    /// pointing along its direction of travel when `dir` is `Up`.
    Slide { p: u32, dir: Dir, slice: usize, side: Side },
    Planar(PlanarMove),
}

impl MoveSpec {
    pub fn name(&self) -> &'static str {
        match self {
            MoveSpec::KinkInsert { .. } | MoveSpec::KinkRemove { .. } => "omega1",
            MoveSpec::Omega2Insert { .. } | MoveSpec::Omega2Remove { .. } => "omega2",
            MoveSpec::Omega3 { .. } => "omega3",
            MoveSpec::Omega4Insert { .. } | MoveSpec::Omega4Remove { .. } => "omega4",
            MoveSpec::Omega5 { .. } => "omega5",
            MoveSpec::Slide { .. } => "slide",
            MoveSpec::Planar(_) => "planar",
        }
    }
}

fn mismatch(slice: usize, expected: &str) -> DiagramError {
    DiagramError::PatternMismatch { slice, expected: expected.to_string() }
}

fn cup(pos: usize) -> Event {
    Event::Cup { pos, sense: None }
}

fn splice(w: &MorseWord, at: usize, remove: usize, insert: Vec<Event>) -> Result<MorseWord, DiagramError> {
    let mut events = w.events().to_vec();
    events.splice(at..at + remove, insert);
    MorseWord::new(events)
}

fn window(w: &MorseWord, slice: usize, n: usize, expected: &str) -> Result<Vec<Event>, DiagramError> {
    w.events().get(slice..slice + n).map(<[Event]>::to_vec).ok_or_else(|| mismatch(slice, expected))
}

fn require_strand(w: &MorseWord, slice: usize, pos: usize, width: usize) -> Result<(), DiagramError> {
    let counts = w.strand_counts();
    match counts.get(slice) {
        Some(&n) if pos >= 1 && pos + width <= n + 1 => Ok(()),
        _ => Err(mismatch(slice, &format!("strands {pos}..{} present", pos + width - 1))),
    }
}

/// Oriented cups would need their senses recomputed; moves work on unoriented words.
fn require_unoriented(w: &MorseWord) -> Result<(), DiagramError> {
    if w.is_oriented() {
        Err(mismatch(0, "an unoriented word"))
    } else {
        Ok(())
    }
}

/// Applies a move, returning the new (validated) word.
pub fn apply_move(w: &MorseWord, m: &MoveSpec) -> Result<MorseWord, DiagramError> {
    require_unoriented(w)?;
    match *m {
        MoveSpec::KinkInsert { slice, pos, sign, side } => {
            require_strand(w, slice, pos, 1)?;
            let ev = match side {
                Side::Right => vec![cup(pos + 1), Event::Cross { pos, sign }, Event::Cap { pos: pos + 1 }],
                Side::Left => vec![cup(pos), Event::Cross { pos: pos + 1, sign }, Event::Cap { pos }],
            };
            splice(w, slice, 0, ev)
        }
        MoveSpec::KinkRemove { slice } => {
            const EXP: &str = "`cup i+1 / x i / cap i+1` or `cup i / x i+1 / cap i`";
            match window(w, slice, 3, EXP)?.as_slice() {
                [Event::Cup { pos: a, .. }, Event::Cross { pos: b, .. }, Event::Cap { pos: c }]
                    if (*a == b + 1 && c == a) || (*b == a + 1 && c == a) =>
                {
                    splice(w, slice, 3, vec![])
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        MoveSpec::Omega2Insert { slice, pos, first } => {
            require_strand(w, slice, pos, 2)?;
            splice(w, slice, 0, vec![Event::Cross { pos, sign: first }, Event::Cross { pos, sign: first.flip() }])
        }
        MoveSpec::Omega2Remove { slice } => {
            const EXP: &str = "`x+ i / x- i` or `x- i / x+ i`";
            match window(w, slice, 2, EXP)?.as_slice() {
                [Event::Cross { pos: a, sign: s }, Event::Cross { pos: b, sign: t }] if a == b && s != t => {
                    splice(w, slice, 2, vec![])
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        MoveSpec::Omega3 { slice } => {
            const EXP: &str = "three crossings on `i, i+1, i` or `i+1, i, i+1` with one strand on top";
            match window(w, slice, 3, EXP)?.as_slice() {
                [Event::Cross { pos: i, sign: a }, Event::Cross { pos: j, sign: b }, Event::Cross { pos: k, sign: c }]
                    if i == k && (*j == i + 1 || j + 1 == *i) && !(a == c && a != b) =>
                {
                    let (i, j) = (*i, *j);
                    splice(
                        w,
                        slice,
                        3,
                        vec![
                            Event::Cross { pos: j, sign: *c },
                            Event::Cross { pos: i, sign: *b },
                            Event::Cross { pos: j, sign: *a },
                        ],
                    )
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        MoveSpec::Omega4Insert { slice, pos, first } => {
            require_strand(w, slice, pos, 1)?;
            splice(w, slice, 0, vec![Event::Arrow { pos, dir: first }, Event::Arrow { pos, dir: first.flip() }])
        }
        MoveSpec::Omega4Remove { slice } => {
            const EXP: &str = "`ar+ i / ar- i` or `ar- i / ar+ i`";
            match window(w, slice, 2, EXP)?.as_slice() {
                [Event::Arrow { pos: a, dir: d }, Event::Arrow { pos: b, dir: e }] if a == b && d != e => {
                    splice(w, slice, 2, vec![])
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        MoveSpec::Omega5 { slice } => {
            const EXP: &str = "an arrow beside a crossing it may pass";
            let other = |i: usize, j: usize| if i == j { j + 1 } else { j };
            match window(w, slice, 2, EXP)?.as_slice() {
                [Event::Arrow { pos: i, dir }, Event::Cross { pos: j, sign }]
                    if (*i == *j || *i == j + 1) && omega5_allowed(true, (*i == *j) == (*sign == CrossSign::Pos), *dir) =>
                {
                    splice(
                        w,
                        slice,
                        2,
                        vec![Event::Cross { pos: *j, sign: sign.flip() }, Event::Arrow { pos: other(*i, *j), dir: *dir }],
                    )
                }
                [Event::Cross { pos: j, sign }, Event::Arrow { pos: i, dir }]
                    if (*i == *j || *i == j + 1)
                        && omega5_allowed(false, (*i == j + 1) == (*sign == CrossSign::Pos), *dir) =>
                {
                    splice(
                        w,
                        slice,
                        2,
                        vec![Event::Arrow { pos: other(*i, *j), dir: *dir }, Event::Cross { pos: *j, sign: sign.flip() }],
                    )
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        MoveSpec::Slide { p, dir, slice, side } => slide(w, p, dir, slice, side),
        MoveSpec::Planar(pm) => planar(w, pm),
    }
}

/// Whether an arrow may pass the crossing it sits beside. An up arrow
/// passes from below on the over-strand or from above on the under-strand;
/// a down arrow the other way round. Elsewhere the strand would have to
/// move through the other one.
pub(crate) fn omega5_allowed(below: bool, over: bool, dir: Dir) -> bool {
    below == (over != (dir == Dir::Down))
}

fn slide(w: &MorseWord, p: u32, dir: Dir, slice: usize, side: Side) -> Result<MorseWord, DiagramError> {
    let counts = w.strand_counts();
    let n = match counts.get(slice) {
        Some(&n) if n >= 1 => n,
        _ => return Err(mismatch(slice, "at least one strand at the slice")),
    };
    let shifted = |e: &Event| e.with_pos(e.pos() + 1);
    // A new oval encloses everything; the chosen strand is banded to its near side.
    let (arrow_pos, band_pos) = match side {
        Side::Left => (2, 1),
        Side::Right => (1, n + 1),
    };
    let mut events = vec![cup(1)];
    events.extend((0..p).map(|_| Event::Arrow { pos: arrow_pos, dir }));
    events.extend(w.events()[..slice].iter().map(shifted));
    events.push(Event::Cap { pos: band_pos });
    events.push(cup(band_pos));
    events.extend(w.events()[slice..].iter().map(shifted));
    events.push(Event::Cap { pos: 1 });
    MorseWord::new(events)
}

fn planar(w: &MorseWord, m: PlanarMove) -> Result<MorseWord, DiagramError> {
    match m {
        PlanarMove::Commute { slice } => {
            const EXP: &str = "two events on disjoint strands";
            let pair = window(w, slice, 2, EXP)?;
            match commute(pair[0], pair[1]) {
                Some((a, b)) => splice(w, slice, 2, vec![a, b]),
                None => Err(mismatch(slice, EXP)),
            }
        }
        PlanarMove::ZigzagInsert { slice, pos, side } => {
            require_strand(w, slice, pos, 1)?;
            let ev = match side {
                Side::Right => vec![cup(pos + 1), Event::Cap { pos }],
                Side::Left => vec![cup(pos), Event::Cap { pos: pos + 1 }],
            };
            splice(w, slice, 0, ev)
        }
        PlanarMove::ZigzagRemove { slice } => {
            const EXP: &str = "`cup i+1 / cap i` or `cup i / cap i+1`";
            match window(w, slice, 2, EXP)?.as_slice() {
                [Event::Cup { pos: a, .. }, Event::Cap { pos: b }] if *a == b + 1 || *b == a + 1 => {
                    splice(w, slice, 2, vec![])
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        PlanarMove::ArrowOverExtremum { slice } => {
            const EXP: &str = "an arrow next to the cup or cap on its strand";
            let across = |i: usize, j: usize| if i == j { j + 1 } else { j };
            match window(w, slice, 2, EXP)?.as_slice() {
                [Event::Arrow { pos: i, dir }, cap @ Event::Cap { pos: j }] if *i == *j || *i == j + 1 => {
                    splice(w, slice, 2, vec![Event::Arrow { pos: across(*i, *j), dir: dir.flip() }, *cap])
                }
                [c @ Event::Cup { pos: j, .. }, Event::Arrow { pos: i, dir }] if *i == *j || *i == j + 1 => {
                    splice(w, slice, 2, vec![*c, Event::Arrow { pos: across(*i, *j), dir: dir.flip() }])
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
        PlanarMove::CrossOverExtremum { slice } => {
            const EXP: &str = "`cup i / x i±1` or `x i / cap i±1`";
            match window(w, slice, 2, EXP)?.as_slice() {
                [Event::Cup { pos: i, .. }, Event::Cross { pos: j, sign }] if *j == i + 1 || j + 1 == *i => {
                    splice(w, slice, 2, vec![cup(*j), Event::Cross { pos: *i, sign: sign.flip() }])
                }
                [Event::Cross { pos: j, sign }, Event::Cap { pos: i }] if *i == j + 1 || i + 1 == *j => {
                    splice(w, slice, 2, vec![Event::Cross { pos: *i, sign: sign.flip() }, Event::Cap { pos: *j }])
                }
                _ => Err(mismatch(slice, EXP)),
            }
        }
    }
}

/// Reorders `e1; e2` into `e2'; e1'` when they touch disjoint strands.
pub(crate) fn commute(e1: Event, e2: Event) -> Option<(Event, Event)> {
    let (i, out1, in1) = (e1.pos(), e1.arity_out(), e1.arity_in());
    let (j, in2, out2) = (e2.pos(), e2.arity_in(), e2.arity_out());
    // Two empty blocks at the same gap form a saddle, not a commuting pair.
    if in2 == 0 && out1 == 0 && i == j {
        return None;
    }
    if j + in2 <= i {
        let shifted = (i + out2).checked_sub(in2)?;
        Some((e2, e1.with_pos(shifted)))
    } else if j >= i + out1 {
        Some((e2.with_pos(j + in1 - out1), e1))
    } else {
        None
    }
}
