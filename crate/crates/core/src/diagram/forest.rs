use std::collections::HashMap;
use std::fmt;

use super::{DiagramError, Dir, Event, MorseWord, Sense};

/// A node of a nesting forest; children lie inside the node's oval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree<L> {
    pub label: L,
    pub children: Vec<Tree<L>>,
}

/// Crossing-free closed curves in the disk, up to planar isotopy.
///
/// Children are kept sorted, so two forests describing isotopic
/// configurations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest<L> {
    pub roots: Vec<Tree<L>>,
}

impl<L> Default for Forest<L> {
    fn default() -> Self {
        Forest { roots: Vec::new() }
    }
}

/// Ovals labelled by net counterclockwise arrow count.
///
/// An up arrow on a strand whose oval lies to its right counts `+1`, so
/// `cup 1 / ar+ 1 / cap 1` is the oval with one counterclockwise arrow.
pub type ArrowForest = Forest<i64>;

/// Traversal direction of an oriented oval, in the same sense as arrow
/// counts: an arrow pointing along a `Ccw` oval counts `+1`. A `cup<` oval
/// is `Ccw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedLabel {
    /// Net counterclockwise arrows.
    pub arrows: i64,
    pub orientation: Orientation,
}

pub type OrientedForest = Forest<OrientedLabel>;

impl<L: Ord> Tree<L> {
    pub fn leaf(label: L) -> Self {
        Tree { label, children: Vec::new() }
    }

    pub fn with_children(label: L, mut children: Vec<Tree<L>>) -> Self {
        children.sort();
        Tree { label, children }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(Tree::size).sum::<usize>()
    }

    fn canonicalize(&mut self) {
        for c in &mut self.children {
            c.canonicalize();
        }
        self.children.sort();
    }
}

impl<L: Ord + Clone> Forest<L> {
    pub fn new(mut roots: Vec<Tree<L>>) -> Self {
        for r in &mut roots {
            r.canonicalize();
        }
        roots.sort();
        Forest { roots }
    }

    /// Ovals side by side, none nested.
    pub fn flat(labels: impl IntoIterator<Item = L>) -> Self {
        Forest::new(labels.into_iter().map(Tree::leaf).collect())
    }

    /// Concentric ovals; the first label is the outermost.
    pub fn chain(labels: &[L]) -> Self {
        let mut node: Option<Tree<L>> = None;
        for l in labels.iter().rev() {
            node = Some(Tree { label: l.clone(), children: node.into_iter().collect() });
        }
        Forest::new(node.into_iter().collect())
    }

    pub fn node_count(&self) -> usize {
        self.roots.iter().map(Tree::size).sum()
    }

    pub fn is_flat(&self) -> bool {
        self.roots.iter().all(|r| r.children.is_empty())
    }

    /// Side-by-side union.
    pub fn union(&self, other: &Forest<L>) -> Forest<L> {
        let mut roots = self.roots.clone();
        roots.extend(other.roots.iter().cloned());
        Forest::new(roots)
    }
}

fn fmt_tree<L>(t: &Tree<L>, f: &mut fmt::Formatter<'_>, label: &dyn Fn(&L) -> String) -> fmt::Result {
    write!(f, "({}", label(&t.label))?;
    for c in &t.children {
        write!(f, " ")?;
        fmt_tree(c, f, label)?;
    }
    write!(f, ")")
}

fn fmt_forest<L>(forest: &Forest<L>, f: &mut fmt::Formatter<'_>, label: &dyn Fn(&L) -> String) -> fmt::Result {
    if forest.roots.is_empty() {
        return write!(f, "()");
    }
    for (i, r) in forest.roots.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        fmt_tree(r, f, label)?;
    }
    Ok(())
}

/// `(n children...)` per oval, e.g. `(1 (1))` for two nested one-arrow ovals.
impl fmt::Display for ArrowForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_forest(self, f, &|n| n.to_string())
    }
}

/// Like the unoriented form, with the orientation appended: `(2ccw (1cw))`.
impl fmt::Display for OrientedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_forest(self, f, &|l| {
            let o = match l.orientation {
                Orientation::Ccw => "ccw",
                Orientation::Cw => "cw",
            };
            format!("{}{o}", l.arrows)
        })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn add(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Per-component data collected by the sweep.
struct Curve {
    arrows: i64,
    sense: Option<Sense>,
    containers: Vec<usize>,
}

/// Sweeps a crossing-free event list and returns its curves indexed by component.
pub(crate) fn sweep(events: &[Event]) -> Vec<(i64, Option<Sense>, Option<usize>)> {
    let mut uf = UnionFind(Vec::new());
    let mut strands: Vec<usize> = Vec::new();
    let mut arcs = Vec::new();
    for e in events {
        let p = e.pos() - 1;
        match *e {
            Event::Cup { .. } => {
                let a = uf.add();
                arcs.push(a);
                strands.splice(p..p, [a, a]);
            }
            Event::Cap { .. } => {
                uf.union(strands[p], strands[p + 1]);
                strands.drain(p..p + 2);
            }
            Event::Arrow { .. } => {}
            Event::Cross { .. } => unreachable!("sweep runs on crossing-free words"),
        }
    }
    let mut comp_of_root: HashMap<usize, usize> = HashMap::new();
    let mut comp_of_arc = Vec::with_capacity(arcs.len());
    for a in arcs {
        let r = uf.find(a);
        let next = comp_of_root.len();
        comp_of_arc.push(*comp_of_root.entry(r).or_insert(next));
    }

    let mut curves: Vec<Option<Curve>> = (0..comp_of_root.len()).map(|_| None).collect();
    let mut strands: Vec<usize> = Vec::new();
    let mut next_arc = 0usize;
    let mut parity: HashMap<usize, bool> = HashMap::new();
    for e in events {
        let p = e.pos() - 1;
        match *e {
            Event::Cup { sense, .. } => {
                let c = comp_of_arc[next_arc];
                next_arc += 1;
                if curves[c].is_none() {
                    parity.clear();
                    for s in &strands[..p] {
                        *parity.entry(*s).or_insert(false) ^= true;
                    }
                    let containers = parity.iter().filter(|(_, odd)| **odd).map(|(k, _)| *k).collect();
                    curves[c] = Some(Curve { arrows: 0, sense, containers });
                }
                strands.splice(p..p, [c, c]);
            }
            Event::Cap { .. } => {
                strands.drain(p..p + 2);
            }
            Event::Arrow { dir, .. } => {
                let c = strands[p];
                let interior_left = strands[..p].iter().filter(|s| **s == c).count() % 2 == 1;
                let ccw = if interior_left { -dir.sign() } else { dir.sign() };
                curves[c].as_mut().expect("curve seen at its cup").arrows += ccw;
            }
            Event::Cross { .. } => unreachable!(),
        }
    }
    let curves: Vec<Curve> = curves.into_iter().map(|c| c.expect("every component has a cup")).collect();
    curves
        .iter()
        .map(|c| {
            let depth = c.containers.len();
            let parent = c.containers.iter().copied().find(|d| curves[*d].containers.len() + 1 == depth);
            (c.arrows, c.sense, parent)
        })
        .collect()
}

fn build<L: Ord + Clone>(labels: Vec<L>, parents: Vec<Option<usize>>) -> Forest<L> {
    let n = labels.len();
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut roots = Vec::new();
    for (i, p) in parents.iter().enumerate() {
        match p {
            Some(p) => kids[*p].push(i),
            None => roots.push(i),
        }
    }
    fn make<L: Ord + Clone>(i: usize, labels: &[L], kids: &[Vec<usize>]) -> Tree<L> {
        Tree::with_children(labels[i].clone(), kids[i].iter().map(|k| make(*k, labels, kids)).collect())
    }
    Forest::new(roots.into_iter().map(|r| make(r, &labels, &kids)).collect())
}

pub(crate) fn forest_of_events(events: &[Event]) -> ArrowForest {
    let curves = sweep(events);
    let (labels, parents) = curves.into_iter().map(|(a, _, p)| (a, p)).unzip();
    build(labels, parents)
}

/// Nesting forest of a crossing-free word.
pub fn to_forest(w: &MorseWord) -> Result<ArrowForest, DiagramError> {
    if w.crossing_count() > 0 {
        return Err(DiagramError::HasCrossings);
    }
    Ok(forest_of_events(w.events()))
}

/// Nesting forest of a crossing-free oriented word, with each oval's orientation.
pub fn to_oriented_forest(w: &MorseWord) -> Result<OrientedForest, DiagramError> {
    if w.crossing_count() > 0 {
        return Err(DiagramError::HasCrossings);
    }
    if !w.is_oriented() {
        return Err(DiagramError::Unoriented);
    }
    let curves = sweep(w.events());
    let (labels, parents) = curves
        .into_iter()
        .map(|(arrows, sense, p)| {
            let orientation = match sense {
                Some(Sense::Left) => Orientation::Ccw,
                _ => Orientation::Cw,
            };
            (OrientedLabel { arrows, orientation }, p)
        })
        .unzip();
    Ok(build(labels, parents))
}

fn emit_tree<L>(t: &Tree<L>, pos: usize, label: &dyn Fn(&L) -> (i64, Option<Sense>), out: &mut Vec<Event>) {
    let (arrows, sense) = label(&t.label);
    out.push(Event::Cup { pos, sense });
    // An up arrow on the left strand of an oval counts +1.
    let dir = if arrows > 0 { Dir::Up } else { Dir::Down };
    out.extend((0..arrows.unsigned_abs()).map(|_| Event::Arrow { pos, dir }));
    for c in &t.children {
        emit_tree(c, pos + 1, label, out);
    }
    out.push(Event::Cap { pos });
}

fn word_of<L>(forest: &Forest<L>, label: &dyn Fn(&L) -> (i64, Option<Sense>)) -> MorseWord {
    let mut events = Vec::new();
    for r in &forest.roots {
        emit_tree(r, 1, label, &mut events);
    }
    MorseWord::from_events_unchecked(events)
}

impl ArrowForest {
    /// A crossing-free word whose forest is `self`, arrows on each oval's left strand.
    pub fn to_word(&self) -> MorseWord {
        word_of(self, &|n| (*n, None))
    }
}

impl OrientedForest {
    /// A crossing-free oriented word whose oriented forest is `self`.
    pub fn to_word(&self) -> MorseWord {
        word_of(self, &|l| {
            let sense = match l.orientation {
                Orientation::Ccw => Sense::Left,
                Orientation::Cw => Sense::Right,
            };
            (l.arrows, Some(sense))
        })
    }
}
