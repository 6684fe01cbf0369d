use super::forest::forest_of_events;
use super::{ArrowForest, CrossSign, DiagramError, Event, MorseWord};

pub const DEFAULT_CROSSING_CAP: usize = 24;

/// Crossing cap from `SKEIN_CROSSING_CAP`, falling back to [`DEFAULT_CROSSING_CAP`].
pub fn crossing_cap_from_env() -> usize {
    std::env::var("SKEIN_CROSSING_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CROSSING_CAP)
}

/// One Kauffman state: `A^a_exponent` times a crossing-free configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    pub a_exponent: i64,
    pub forest: ArrowForest,
}

/// Smoothed event list for the state whose bit `k` chooses the B-smoothing
/// at the `k`-th crossing. Returns the events and `#A - #B`.
///
/// At a positive crossing the A-smoothing keeps both strands vertical; at a
/// negative crossing it is the turnback (cap then cup).
pub(crate) fn smooth(events: &[Event], bits: u64) -> (Vec<Event>, i64) {
    let mut out = Vec::with_capacity(events.len() + 8);
    let mut k = 0;
    let mut exp = 0i64;
    for e in events {
        match *e {
            Event::Cross { pos, sign } => {
                let b = bits >> k & 1 == 1;
                k += 1;
                exp += if b { -1 } else { 1 };
                let turnback = b == (sign == CrossSign::Pos);
                if turnback {
                    out.push(Event::Cap { pos });
                    out.push(Event::Cup { pos, sense: None });
                }
            }
            Event::Cup { pos, .. } => out.push(Event::Cup { pos, sense: None }),
            other => out.push(other),
        }
    }
    (out, exp)
}

pub(crate) fn check_cap(w: &MorseWord, cap: usize) -> Result<usize, DiagramError> {
    let c = w.crossing_count();
    if c > cap || c >= 64 {
        return Err(DiagramError::CrossingCap { crossings: c, cap: cap.min(63) });
    }
    Ok(c)
}

/// All `2^c` Kauffman states, using the cap from the environment.
pub fn kauffman_states(w: &MorseWord) -> Result<Vec<State>, DiagramError> {
    kauffman_states_with_cap(w, crossing_cap_from_env())
}

pub fn kauffman_states_with_cap(w: &MorseWord, cap: usize) -> Result<Vec<State>, DiagramError> {
    let mut out = Vec::new();
    for_each_state(w, cap, |s| out.push(s))?;
    Ok(out)
}

/// Visits the states one at a time without collecting them.
pub fn for_each_state(w: &MorseWord, cap: usize, mut visit: impl FnMut(State)) -> Result<(), DiagramError> {
    let c = check_cap(w, cap)?;
    for bits in 0..1u64 << c {
        let (events, a_exponent) = smooth(w.events(), bits);
        visit(State { a_exponent, forest: forest_of_events(&events) });
    }
    Ok(())
}
