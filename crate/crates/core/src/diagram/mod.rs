//! Arrow diagrams in the disk as Morse words.
//!
//! A word is read bottom to top. Strand positions are 1-based and count from
//! the left; every event acts on the strands present just before it.

mod forest;
mod moves;
mod parse;
pub mod random;
mod states;

use std::fmt;

use thiserror::Error;

pub use forest::{to_forest, to_oriented_forest, ArrowForest, Forest, OrientedForest, OrientedLabel, Orientation, Tree};
pub use moves::{apply_move, MoveSpec, PlanarMove, Side};
pub(crate) use parse::parse_events;
pub use parse::{parse_morse, Violation};
pub use states::{crossing_cap_from_env, for_each_state, kauffman_states, kauffman_states_with_cap, State, DEFAULT_CROSSING_CAP};

/// Page-relative arrow direction on a strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }

    /// `+1` for up, `-1` for down.
    pub fn sign(self) -> i64 {
        match self {
            Dir::Up => 1,
            Dir::Down => -1,
        }
    }
}

/// Crossing type: `Pos` means the strand entering at the left position passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossSign {
    Pos,
    Neg,
}

impl CrossSign {
    pub fn flip(self) -> CrossSign {
        match self {
            CrossSign::Pos => CrossSign::Neg,
            CrossSign::Neg => CrossSign::Pos,
        }
    }
}

/// Orientation of the arc of an oriented cup.
///
/// `Right` (`cup>`) runs left to right along the bottom, so the left strand
/// points down and the right strand up; `Left` (`cup<`) is the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sense {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    Cup { pos: usize, sense: Option<Sense> },
    Cap { pos: usize },
    Cross { pos: usize, sign: CrossSign },
    Arrow { pos: usize, dir: Dir },
}

impl Event {
    pub fn pos(&self) -> usize {
        match *self {
            Event::Cup { pos, .. } | Event::Cap { pos } | Event::Cross { pos, .. } | Event::Arrow { pos, .. } => pos,
        }
    }

    pub(crate) fn with_pos(self, pos: usize) -> Event {
        match self {
            Event::Cup { sense, .. } => Event::Cup { pos, sense },
            Event::Cap { .. } => Event::Cap { pos },
            Event::Cross { sign, .. } => Event::Cross { pos, sign },
            Event::Arrow { dir, .. } => Event::Arrow { pos, dir },
        }
    }

    pub(crate) fn without_sense(self) -> Event {
        match self {
            Event::Cup { pos, .. } => Event::Cup { pos, sense: None },
            other => other,
        }
    }

    /// Number of strands consumed from below.
    pub(crate) fn arity_in(&self) -> usize {
        match self {
            Event::Cup { .. } => 0,
            Event::Cap { .. } | Event::Cross { .. } => 2,
            Event::Arrow { .. } => 1,
        }
    }

    /// Number of strands produced above.
    pub(crate) fn arity_out(&self) -> usize {
        match self {
            Event::Cap { .. } => 0,
            Event::Cup { .. } | Event::Cross { .. } => 2,
            Event::Arrow { .. } => 1,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Event::Cup { pos, sense: None } => write!(f, "cup {pos}"),
            Event::Cup { pos, sense: Some(Sense::Left) } => write!(f, "cup< {pos}"),
            Event::Cup { pos, sense: Some(Sense::Right) } => write!(f, "cup> {pos}"),
            Event::Cap { pos } => write!(f, "cap {pos}"),
            Event::Cross { pos, sign: CrossSign::Pos } => write!(f, "x+ {pos}"),
            Event::Cross { pos, sign: CrossSign::Neg } => write!(f, "x- {pos}"),
            Event::Arrow { pos, dir: Dir::Up } => write!(f, "ar+ {pos}"),
            Event::Arrow { pos, dir: Dir::Down } => write!(f, "ar- {pos}"),
        }
    }
}

/// A validated closed Morse word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MorseWord {
    events: Vec<Event>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{0}")]
    Invalid(Violation),
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CrossingCap { crossings: usize, cap: usize },
    #[error("move does not apply at slice {slice}: expected {expected}")]
    PatternMismatch { slice: usize, expected: String },
    #[error("operation needs a crossing-free word")]
    HasCrossings,
    #[error("operation needs an oriented word")]
    Unoriented,
}

impl MorseWord {
    /// Builds a word, rejecting it with the first violation found.
    pub fn new(events: Vec<Event>) -> Result<Self, DiagramError> {
        let w = MorseWord { events };
        match w.validate().into_iter().next() {
            Some(v) => Err(DiagramError::Invalid(v)),
            None => Ok(w),
        }
    }

    pub(crate) fn from_events_unchecked(events: Vec<Event>) -> Self {
        MorseWord { events }
    }

    pub fn empty() -> Self {
        MorseWord::default()
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cross { .. })).count()
    }

    pub fn arrow_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Arrow { .. })).count()
    }

    pub fn is_oriented(&self) -> bool {
        self.events.iter().any(|e| matches!(e, Event::Cup { sense: Some(_), .. }))
    }

    /// Strand count after each prefix; entry `k` is the count below event `k`.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut counts = Vec::with_capacity(self.events.len() + 1);
        let mut n = 0usize;
        counts.push(n);
        for e in &self.events {
            n = n + e.arity_out() - e.arity_in().min(n);
            counts.push(n);
        }
        counts
    }

    /// Side-by-side union: `other` is placed to the right of `self`.
    pub fn disjoint_union(&self, other: &MorseWord) -> MorseWord {
        let mut events = self.events.clone();
        events.extend(other.events.iter().copied());
        MorseWord { events }
    }

    /// Drops orientation data from cups.
    pub fn unoriented(&self) -> MorseWord {
        MorseWord {
            events: self
                .events
                .iter()
                .map(|e| match *e {
                    Event::Cup { pos, .. } => Event::Cup { pos, sense: None },
                    other => other,
                })
                .collect(),
        }
    }

    /// Canonical text: one event per line.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for e in &self.events {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
