//! Classical diagrams to arrow diagrams and back.

use super::ClassicalDiagram;
use crate::diagram::{CrossSign, Dir, Event, MorseWord};

/// The full twist on strands `offset + 1 ..= offset + n`: `n` rounds of
/// `x± offset+1, …, x± offset+n-1`, with `n(n-1)` crossings of one sign.
pub fn full_twist(n: usize, offset: usize, sign: CrossSign) -> Vec<Event> {
    (0..n).flat_map(|_| (1..n).map(move |j| Event::Cross { pos: offset + j, sign })).collect()
}

/// Arrow diagram of the closure of a tangle: `n` nested cups on the left
/// feed the tangle, each strand gets an arrow at the top, a full negative
/// twist follows, and the strands close on the left. The arrows point down,
/// so that each closing loop alone is `x`.
pub fn classical_to_arrow(c: &ClassicalDiagram) -> MorseWord {
    let n = c.n();
    let mut events: Vec<Event> = (1..=n).map(|k| Event::Cup { pos: k, sense: None }).collect();
    events.extend(c.tangle().iter().map(|e| e.with_pos(e.pos() + n)));
    events.extend((1..=n).map(|i| Event::Arrow { pos: n + i, dir: Dir::Down }));
    events.extend(full_twist(n, n, CrossSign::Neg));
    events.extend((1..=n).rev().map(|k| Event::Cap { pos: k }));
    MorseWord::new(events).expect("closure of a valid tangle is a closed word")
}

/// Crossing sign of a curl worth `-A^-3`.
const CURL: CrossSign = CrossSign::Neg;

/// Strand roles while an arrow word is redrawn as a tangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Diagram,
    /// From the bottom of the tangle up to arrow `j`; under everything.
    Enter(usize),
    /// From arrow `j` to the top of the tangle; over everything.
    Leave(usize),
}

struct Lanes {
    arrows: i64,
    slots: Vec<Slot>,
    out: Vec<Event>,
}

impl Lanes {
    /// Lanes of earlier arrows lie further from the diagram.
    fn depth(&self, s: Slot) -> i64 {
        match s {
            Slot::Diagram => 0,
            Slot::Enter(j) => j as i64 - self.arrows - 2,
            Slot::Leave(j) => self.arrows + 2 - j as i64,
        }
    }

    fn position(&self, s: Slot) -> usize {
        self.slots.iter().position(|&x| x == s).expect("lane present") + 1
    }

    fn diagram_count(&self) -> usize {
        self.slots.iter().filter(|&&s| s == Slot::Diagram).count()
    }

    /// Crossing of the strands at `pos` and `pos + 1`.
    fn swap(&mut self, pos: usize) {
        let (a, b) = (self.slots[pos - 1], self.slots[pos]);
        let sign = if self.depth(a) > self.depth(b) { CrossSign::Pos } else { CrossSign::Neg };
        self.out.push(Event::Cross { pos, sign });
        self.slots.swap(pos - 1, pos);
    }

    fn cup(&mut self, pos: usize, pair: [Slot; 2]) {
        self.out.push(Event::Cup { pos, sense: None });
        self.slots.splice(pos - 1..pos - 1, pair);
    }

    fn cap(&mut self, pos: usize) {
        self.out.push(Event::Cap { pos });
        self.slots.drain(pos - 1..pos + 1);
    }

    /// An up arrow, number `j`, on the strand at `pos`: the strand below it
    /// joins lane `j` coming up from the bottom, the strand above it leaves
    /// for the top in lane `j`.
    fn up_arrow(&mut self, pos: usize, j: usize) {
        let mut p = self.position(Slot::Enter(j));
        while p > pos + 1 {
            self.swap(p - 1);
            p -= 1;
        }
        self.cap(pos);
        self.cup(pos, [Slot::Diagram, Slot::Leave(j)]);
        let target = self.diagram_count() + j;
        let mut p = pos + 1;
        while p < target {
            self.swap(p);
            p += 1;
        }
    }
}

/// Classical diagram of an arrow diagram. Each arrow becomes a strand that
/// runs once around the annulus in its own lane at the right. The full twist
/// added by [`classical_to_arrow`] costs a factor `A^6` per strand, which two
/// curls per arrow on the first strand pay back.
pub fn arrow_to_classical(w: &MorseWord) -> ClassicalDiagram {
    let m = w.arrow_count();
    let mut lanes = Lanes { arrows: m as i64, slots: (1..=m).map(Slot::Enter).collect(), out: Vec::new() };
    let mut next = 0;
    for e in w.events() {
        match *e {
            Event::Cup { pos, .. } => lanes.cup(pos, [Slot::Diagram; 2]),
            Event::Cap { pos } => lanes.cap(pos),
            Event::Cross { .. } => lanes.out.push(*e),
            Event::Arrow { pos, dir } => {
                next += 1;
                match dir {
                    Dir::Up => lanes.up_arrow(pos, next),
                    // A zigzag turns a down arrow into an up arrow on its middle strand.
                    Dir::Down => {
                        lanes.cup(pos + 1, [Slot::Diagram; 2]);
                        lanes.up_arrow(pos + 1, next);
                        lanes.cap(pos);
                    }
                }
            }
        }
    }
    let mut tangle = lanes.out;
    for _ in 0..2 * m {
        tangle.extend([Event::Cup { pos: 2, sense: None }, Event::Cross { pos: 1, sign: CURL }, Event::Cap { pos: 2 }]);
    }
    ClassicalDiagram::new(m, tangle).expect("lane construction keeps the boundary")
}
