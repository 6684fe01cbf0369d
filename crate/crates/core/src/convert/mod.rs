//! Conversions between the three pictures of a link in the solid torus:
//! classical diagrams in the annulus (closures of tangles), arrow diagrams in
//! the disk, and mixed diagrams in the plane with a fixed unknotted component.

mod arrow;
mod mixed;

use std::fmt;

use thiserror::Error;

use crate::diagram::{DiagramError, Event, MorseWord};

pub use arrow::{arrow_to_classical, classical_to_arrow, full_twist};
pub use mixed::{classical_to_mixed, components, mixed_to_classical};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvertError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("tangle event {at} (`{event}`): strand index out of range for {count} strands")]
    Arity { at: usize, event: String, count: usize },
    #[error("tangle event {at}: arrows are not allowed in a classical diagram")]
    ArrowInTangle { at: usize },
    #[error("tangle starts with {n} strands but ends with {top}")]
    Boundary { n: usize, top: usize },
    #[error("arrows are not allowed in a mixed diagram")]
    ArrowInMixed,
    #[error("fixed component {fixed} does not exist; the diagram has {count} components")]
    NoFixed { fixed: usize, count: usize },
    #[error("fixed component {fixed} crosses itself; draw it as a simple closed curve")]
    FixedSelfCrossing { fixed: usize },
    #[error("crossings along the fixed component do not split into one over-run and one under-run")]
    FixedNotStandard,
    #[error("fixed component has no gap between its crossing runs on the outer face")]
    FixedNotExposed,
}

/// A link in the annulus: the closure of a tangle with `n` strands at the
/// bottom and `n` at the top, bottom endpoint `i` joined to top endpoint `i`
/// around the core.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalDiagram {
    n: usize,
    tangle: Vec<Event>,
}

impl ClassicalDiagram {
    pub fn new(n: usize, tangle: Vec<Event>) -> Result<Self, ConvertError> {
        let mut count = n;
        for (k, e) in tangle.iter().enumerate() {
            let at = k + 1;
            if matches!(e, Event::Arrow { .. }) {
                return Err(ConvertError::ArrowInTangle { at });
            }
            let i = e.pos();
            if i == 0 || i + e.arity_in() > count + 1 {
                return Err(ConvertError::Arity { at, event: e.to_string(), count });
            }
            count = count + e.arity_out() - e.arity_in();
        }
        if count != n {
            return Err(ConvertError::Boundary { n, top: count });
        }
        Ok(ClassicalDiagram { n, tangle: tangle.iter().map(|e| e.without_sense()).collect() })
    }

    /// Closure of the identity tangle on `n` strands.
    pub fn identity(n: usize) -> Self {
        ClassicalDiagram { n, tangle: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tangle(&self) -> &[Event] {
        &self.tangle
    }

    pub fn crossing_count(&self) -> usize {
        self.tangle.iter().filter(|e| matches!(e, Event::Cross { .. })).count()
    }

    /// Parses `tangle n`, the tangle's events, then `close annulus`.
    pub fn parse(text: &str) -> Result<Self, ConvertError> {
        let mut body: Vec<String> = text.lines().map(str::to_owned).collect();
        let content: Vec<usize> = (0..body.len()).filter(|&i| !strip(&body[i]).is_empty()).collect();
        let (Some(&first), Some(&last)) = (content.first(), content.last()) else {
            return Err(ConvertError::Format { line: 1, message: "expected `tangle <n>`".into() });
        };
        let header: Vec<&str> = strip(&body[first]).split_whitespace().collect();
        let n = match header.as_slice() {
            ["tangle", n] => n.parse::<usize>().map_err(|_| ConvertError::Format {
                line: first + 1,
                message: format!("expected a strand count, found `{n}`"),
            })?,
            _ => return Err(ConvertError::Format { line: first + 1, message: "expected `tangle <n>`".into() }),
        };
        if first == last || strip(&body[last]).split_whitespace().collect::<Vec<_>>() != ["close", "annulus"] {
            return Err(ConvertError::Format { line: last + 1, message: "expected `close annulus`".into() });
        }
        body[first].clear();
        body[last].clear();
        let (events, lines) = crate::diagram::parse_events(&body.join("\n"))?;
        ClassicalDiagram::new(n, events).map_err(|e| match e {
            ConvertError::Arity { at, event, count } => ConvertError::Arity { at: lines[at - 1], event, count },
            ConvertError::ArrowInTangle { at } => ConvertError::ArrowInTangle { at: lines[at - 1] },
            other => other,
        })
    }

    pub fn render(&self) -> String {
        let mut s = format!("tangle {}\n", self.n);
        for e in &self.tangle {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s.push_str("close annulus\n");
        s
    }
}

impl fmt::Display for ClassicalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A planar link diagram in which one unknotted component is fixed; the
/// moving part lives in the complement of the fixed component, a solid
/// torus. `surgery = Some((q, p))` records the lens space `L(p,q)` obtained
/// by surgery on the fixed component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedDiagram {
    word: MorseWord,
    fixed: usize,
    surgery: Option<(i64, i64)>,
}

impl MixedDiagram {
    /// `fixed` is 1-based, counting components in the order their first
    /// cup appears.
    pub fn new(word: MorseWord, fixed: usize, surgery: Option<(i64, i64)>) -> Result<Self, ConvertError> {
        if word.arrow_count() > 0 {
            return Err(ConvertError::ArrowInMixed);
        }
        let count = mixed::component_count(word.events());
        if fixed == 0 || fixed > count {
            return Err(ConvertError::NoFixed { fixed, count });
        }
        Ok(MixedDiagram { word: word.unoriented(), fixed, surgery })
    }

    pub fn word(&self) -> &MorseWord {
        &self.word
    }

    pub fn fixed(&self) -> usize {
        self.fixed
    }

    pub fn surgery(&self) -> Option<(i64, i64)> {
        self.surgery
    }

    /// Parses Morse text with a `fixed k` line and an optional `surgery q p` line.
    pub fn parse(text: &str) -> Result<Self, ConvertError> {
        let mut body: Vec<String> = text.lines().map(str::to_owned).collect();
        let mut fixed = None;
        let mut surgery = None;
        for (i, raw) in text.lines().enumerate() {
            let words: Vec<&str> = strip(raw).split_whitespace().collect();
            let bad = |what: &str| ConvertError::Format { line: i + 1, message: format!("bad `{what}` line") };
            match words.as_slice() {
                ["fixed", k] => {
                    if fixed.is_some() {
                        return Err(ConvertError::Format { line: i + 1, message: "more than one `fixed` line".into() });
                    }
                    fixed = Some(k.parse::<usize>().map_err(|_| bad("fixed"))?);
                }
                ["fixed", ..] => return Err(bad("fixed")),
                ["surgery", q, p] => {
                    let q = q.parse::<i64>().map_err(|_| bad("surgery"))?;
                    let p = p.parse::<i64>().map_err(|_| bad("surgery"))?;
                    surgery = Some((q, p));
                }
                ["surgery", ..] => return Err(bad("surgery")),
                _ => continue,
            }
            body[i].clear();
        }
        let fixed = fixed.ok_or(ConvertError::Format { line: 1, message: "missing `fixed <k>` line".into() })?;
        let word = crate::diagram::parse_morse(&body.join("\n"))?;
        MixedDiagram::new(word, fixed, surgery)
    }

    pub fn render(&self) -> String {
        let mut s = format!("fixed {}\n", self.fixed);
        if let Some((q, p)) = self.surgery {
            s.push_str(&format!("surgery {q} {p}\n"));
        }
        s.push_str(&self.word.render());
        s
    }
}

impl fmt::Display for MixedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn strip(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}
