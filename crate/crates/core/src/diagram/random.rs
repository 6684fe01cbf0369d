//! Random diagrams and random applicable moves, for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::moves::{commute, omega5_allowed};
use super::{apply_move, CrossSign, Dir, Event, MorseWord, MoveSpec, PlanarMove, Side};

/// Size limits for [`random_word`].
#[derive(Clone, Copy, Debug)]
pub struct WordShape {
    pub max_crossings: usize,
    pub max_arrows: usize,
    pub max_strands: usize,
    /// Number of events drawn before the word is closed off with caps.
    pub body_len: usize,
}

impl Default for WordShape {
    fn default() -> Self {
        WordShape { max_crossings: 5, max_arrows: 4, max_strands: 6, body_len: 14 }
    }
}

/// Families of moves sampled by [`random_move`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Omega1,
    Omega2,
    Omega3,
    Omega4,
    Omega5,
    Planar,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] =
        [MoveKind::Omega1, MoveKind::Omega2, MoveKind::Omega3, MoveKind::Omega4, MoveKind::Omega5, MoveKind::Planar];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Omega1 => "omega1",
            MoveKind::Omega2 => "omega2",
            MoveKind::Omega3 => "omega3",
            MoveKind::Omega4 => "omega4",
            MoveKind::Omega5 => "omega5",
            MoveKind::Planar => "planar",
        }
    }
}

fn sign<R: Rng>(rng: &mut R) -> CrossSign {
    if rng.gen() {
        CrossSign::Pos
    } else {
        CrossSign::Neg
    }
}

fn dir<R: Rng>(rng: &mut R) -> Dir {
    if rng.gen() {
        Dir::Up
    } else {
        Dir::Down
    }
}

/// A random closed unoriented word within `shape`.
pub fn random_word<R: Rng>(rng: &mut R, shape: WordShape) -> MorseWord {
    let mut events = Vec::new();
    let (mut n, mut crossings, mut arrows) = (0usize, 0usize, 0usize);
    for _ in 0..shape.body_len {
        let mut options: Vec<u8> = Vec::new();
        if n + 2 <= shape.max_strands {
            options.push(0);
        }
        if n >= 2 {
            options.push(1);
            if crossings < shape.max_crossings {
                options.extend([2, 2]);
            }
        }
        if n >= 1 && arrows < shape.max_arrows {
            options.push(3);
        }
        let e = match options.choose(rng) {
            Some(0) => {
                let pos = rng.gen_range(1..=n + 1);
                n += 2;
                Event::Cup { pos, sense: None }
            }
            Some(1) => {
                let pos = rng.gen_range(1..n);
                n -= 2;
                Event::Cap { pos }
            }
            Some(2) => {
                crossings += 1;
                Event::Cross { pos: rng.gen_range(1..n), sign: sign(rng) }
            }
            Some(_) => {
                arrows += 1;
                Event::Arrow { pos: rng.gen_range(1..=n), dir: dir(rng) }
            }
            None => break,
        };
        events.push(e);
    }
    while n > 0 {
        events.push(Event::Cap { pos: rng.gen_range(1..n) });
        n -= 2;
    }
    MorseWord::new(events).expect("generator keeps arity")
}

/// Plants a configuration on which `kind` has a pattern-matching site.
/// Returns `None` if the word has no room for one.
pub fn plant_site<R: Rng>(rng: &mut R, w: &MorseWord, kind: MoveKind) -> Option<MorseWord> {
    let counts = w.strand_counts();
    let mut events = w.events().to_vec();
    match kind {
        MoveKind::Omega3 => {
            let slices: Vec<usize> = (0..counts.len()).filter(|k| counts[*k] >= 3).collect();
            let &k = slices.choose(rng)?;
            let i = rng.gen_range(1..=counts[k] - 2);
            let (a, b) = (sign(rng), sign(rng));
            // Any sign triple except the cyclic ones `(s, -s, s)`.
            let c = if a != b { b } else { sign(rng) };
            let (lo, hi) = if rng.gen() { (i, i + 1) } else { (i + 1, i) };
            events.splice(
                k..k,
                [Event::Cross { pos: lo, sign: a }, Event::Cross { pos: hi, sign: b }, Event::Cross { pos: lo, sign: c }],
            );
        }
        MoveKind::Omega5 => {
            let sites: Vec<usize> =
                events.iter().enumerate().filter(|(_, e)| matches!(e, Event::Cross { .. })).map(|(k, _)| k).collect();
            let &k = sites.choose(rng)?;
            let Event::Cross { pos: j, sign } = events[k] else { unreachable!() };
            let pos = j + rng.gen_range(0..2);
            let below = rng.gen();
            // The strand entering at `j` is over at a positive crossing.
            let entered_at_j = if below { pos == j } else { pos == j + 1 };
            let over = entered_at_j == (sign == CrossSign::Pos);
            let dir = if omega5_allowed(below, over, Dir::Up) { Dir::Up } else { Dir::Down };
            events.insert(if below { k } else { k + 1 }, Event::Arrow { pos, dir });
        }
        _ => return Some(w.clone()),
    }
    MorseWord::new(events).ok()
}

fn pair_sites(w: &MorseWord, f: impl Fn(&Event, &Event) -> bool) -> Vec<usize> {
    w.events().windows(2).enumerate().filter(|(_, p)| f(&p[0], &p[1])).map(|(k, _)| k).collect()
}

/// Draws a move of the given family that applies to `w`, mixing insertions
/// and removals when both exist.
pub fn random_move<R: Rng>(rng: &mut R, w: &MorseWord, kind: MoveKind) -> Option<MoveSpec> {
    let counts = w.strand_counts();
    let strand_slices = |width: usize| -> Vec<usize> { (0..counts.len()).filter(|k| counts[*k] >= width).collect() };
    let pick_slot = |rng: &mut R, width: usize| -> Option<(usize, usize)> {
        let &k = strand_slices(width).choose(rng)?;
        Some((k, rng.gen_range(1..=counts[k] + 1 - width)))
    };
    let side = |rng: &mut R| if rng.gen() { Side::Left } else { Side::Right };
    let candidates: Vec<MoveSpec> = match kind {
        MoveKind::Omega1 => {
            let removals: Vec<MoveSpec> = (0..w.len())
                .map(|slice| MoveSpec::KinkRemove { slice })
                .filter(|m| apply_move(w, m).is_ok())
                .collect();
            if !removals.is_empty() && rng.gen_bool(0.3) {
                removals
            } else {
                let (slice, pos) = pick_slot(rng, 1)?;
                vec![MoveSpec::KinkInsert { slice, pos, sign: sign(rng), side: side(rng) }]
            }
        }
        MoveKind::Omega2 => {
            let removals: Vec<MoveSpec> = pair_sites(w, |a, b| {
                matches!((a, b), (Event::Cross { pos: i, sign: s }, Event::Cross { pos: j, sign: t }) if i == j && s != t)
            })
            .into_iter()
            .map(|slice| MoveSpec::Omega2Remove { slice })
            .collect();
            if !removals.is_empty() && rng.gen_bool(0.3) {
                removals
            } else {
                let (slice, pos) = pick_slot(rng, 2)?;
                vec![MoveSpec::Omega2Insert { slice, pos, first: sign(rng) }]
            }
        }
        MoveKind::Omega3 => {
            (0..w.len()).map(|slice| MoveSpec::Omega3 { slice }).filter(|m| apply_move(w, m).is_ok()).collect()
        }
        MoveKind::Omega4 => {
            let removals: Vec<MoveSpec> = pair_sites(w, |a, b| {
                matches!((a, b), (Event::Arrow { pos: i, dir: s }, Event::Arrow { pos: j, dir: t }) if i == j && s != t)
            })
            .into_iter()
            .map(|slice| MoveSpec::Omega4Remove { slice })
            .collect();
            if !removals.is_empty() && rng.gen_bool(0.3) {
                removals
            } else {
                let (slice, pos) = pick_slot(rng, 1)?;
                vec![MoveSpec::Omega4Insert { slice, pos, first: dir(rng) }]
            }
        }
        MoveKind::Omega5 => {
            (0..w.len()).map(|slice| MoveSpec::Omega5 { slice }).filter(|m| apply_move(w, m).is_ok()).collect()
        }
        MoveKind::Planar => {
            let mut all: Vec<MoveSpec> = Vec::new();
            for slice in 0..w.len() {
                for pm in [
                    PlanarMove::ZigzagRemove { slice },
                    PlanarMove::ArrowOverExtremum { slice },
                    PlanarMove::CrossOverExtremum { slice },
                ] {
                    if apply_move(w, &MoveSpec::Planar(pm)).is_ok() {
                        all.push(MoveSpec::Planar(pm));
                    }
                }
            }
            for slice in pair_sites(w, |a, b| commute(*a, *b).is_some()) {
                all.push(MoveSpec::Planar(PlanarMove::Commute { slice }));
            }
            if all.is_empty() || rng.gen_bool(0.2) {
                if let Some((slice, pos)) = pick_slot(rng, 1) {
                    all = vec![MoveSpec::Planar(PlanarMove::ZigzagInsert { slice, pos, side: side(rng) })];
                }
            }
            all
        }
    };
    candidates.choose(rng).copied()
}
