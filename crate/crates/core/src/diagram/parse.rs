use thiserror::Error;

use super::{CrossSign, DiagramError, Dir, Event, MorseWord, Sense};

/// A structural defect of a word. `at` is the 1-based event number, or the
/// source line when the violation comes from [`parse_morse`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("event {at} (`{event}`): strand index out of range for {count} strands")]
    Arity { at: usize, event: String, count: usize },
    #[error("word ends with {count} open strands")]
    NonzeroFinal { count: usize },
    #[error("event {at}: oriented and unoriented cups are mixed")]
    MixedOrientation { at: usize },
    #[error("event {at}: cap joins two strands with the same direction")]
    Orientation { at: usize },
}

impl Violation {
    fn relocate(self, lines: &[usize]) -> Violation {
        let map = |at: usize| lines.get(at.wrapping_sub(1)).copied().unwrap_or(at);
        match self {
            Violation::Arity { at, event, count } => Violation::Arity { at: map(at), event, count },
            Violation::MixedOrientation { at } => Violation::MixedOrientation { at: map(at) },
            Violation::Orientation { at } => Violation::Orientation { at: map(at) },
            v @ Violation::NonzeroFinal { .. } => v,
        }
    }
}

impl MorseWord {
    /// Lists every violation; an empty list means the word is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let oriented = self.is_oriented();
        // Direction of each strand in oriented words: `true` for up.
        let mut dirs: Vec<bool> = Vec::new();
        let mut orientation_ok = oriented;
        let mut count = 0usize;
        for (k, e) in self.events.iter().enumerate() {
            let at = k + 1;
            let i = e.pos();
            let needed = e.arity_in();
            let in_range = i >= 1 && i + needed <= count + 1;
            if !in_range {
                out.push(Violation::Arity { at, event: e.to_string(), count });
                orientation_ok = false;
                // Keep counting so later events are checked against a plausible count.
                count = (count + e.arity_out()).saturating_sub(needed);
                continue;
            }
            if oriented {
                if let Event::Cup { sense: None, .. } = e {
                    out.push(Violation::MixedOrientation { at });
                    orientation_ok = false;
                }
            }
            if orientation_ok {
                let p = i - 1;
                match *e {
                    Event::Cup { sense, .. } => {
                        let right = sense == Some(Sense::Right);
                        dirs.splice(p..p, [!right, right]);
                    }
                    Event::Cap { .. } => {
                        if dirs[p] == dirs[p + 1] {
                            out.push(Violation::Orientation { at });
                        }
                        dirs.drain(p..p + 2);
                    }
                    Event::Cross { .. } => dirs.swap(p, p + 1),
                    Event::Arrow { .. } => {}
                }
            }
            count = count + e.arity_out() - needed;
        }
        if count != 0 {
            out.push(Violation::NonzeroFinal { count });
        }
        out
    }
}

fn parse_event(tok: &str, arg: &str) -> Result<Event, String> {
    let pos: usize = arg.parse().map_err(|_| format!("expected a positive strand index, found `{arg}`"))?;
    if pos == 0 {
        return Err("strand indices are 1-based".into());
    }
    Ok(match tok {
        "cup" => Event::Cup { pos, sense: None },
        "cup<" => Event::Cup { pos, sense: Some(Sense::Left) },
        "cup>" => Event::Cup { pos, sense: Some(Sense::Right) },
        "cap" => Event::Cap { pos },
        "x+" => Event::Cross { pos, sign: CrossSign::Pos },
        "x-" => Event::Cross { pos, sign: CrossSign::Neg },
        "ar+" => Event::Arrow { pos, dir: Dir::Up },
        "ar-" => Event::Arrow { pos, dir: Dir::Down },
        other => return Err(format!("unknown event `{other}`")),
    })
}

/// Parses events written one per line (or separated by `/`), with `#` comments.
pub(crate) fn parse_events(text: &str) -> Result<(Vec<Event>, Vec<usize>), DiagramError> {
    let mut events = Vec::new();
    let mut lines = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut offset = 0usize;
        for chunk in body.split('/') {
            let column = offset + chunk.len() - chunk.trim_start().len() + 1;
            offset += chunk.len() + 1;
            let words: Vec<&str> = chunk.split_whitespace().collect();
            match words.as_slice() {
                [] => continue,
                [tok, arg] => {
                    let e = parse_event(tok, arg).map_err(|message| DiagramError::Syntax { line, column, message })?;
                    events.push(e);
                    lines.push(line);
                }
                _ => {
                    return Err(DiagramError::Syntax {
                        line,
                        column,
                        message: format!("expected `<event> <index>`, found `{}`", chunk.trim()),
                    })
                }
            }
        }
    }
    Ok((events, lines))
}

/// Parses and validates diagram text.
pub fn parse_morse(text: &str) -> Result<MorseWord, DiagramError> {
    let (events, lines) = parse_events(text)?;
    let w = MorseWord::from_events_unchecked(events);
    match w.validate().into_iter().next() {
        Some(v) => Err(DiagramError::Invalid(v.relocate(&lines))),
        None => Ok(w),
    }
}
