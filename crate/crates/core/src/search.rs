//! Bounded search for AC-trivializations.
//!
//! States are deduplicated by [`Presentation::canonical_key`], so one state
//! stands for a whole class of presentations related by relator inversion,
//! conjugation and reordering. Because a product `r_i · r_j` depends on
//! which conjugates sit in the slots, the search expands a class through
//! [`class_neighbors`]: products of every rotation of `r_i` with every
//! rotation of `r_j^{±1}`. Representatives keep cyclically reduced
//! relators, and the stored representative of each class is the one first
//! reached, so replaying the recorded steps from the start reproduces every
//! representative on the path exactly.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};
use std::fmt;

use crate::certificate::{replay, Certificate};
use crate::macros::{self, Builder, Product};
use crate::presentation::{Move, Presentation};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Bfs,
    Beam,
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_relator_length: usize,
    pub max_total_length: usize,
    pub strategy: Strategy,
    /// Only read by [`Strategy::Beam`].
    pub beam_width: usize,
    pub max_states: usize,
    pub allow_stabilize: bool,
    pub max_gens: usize,
    /// Report progress every this many expansions.
    pub progress_interval: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            max_relator_length: 32,
            max_total_length: 64,
            strategy: Strategy::Greedy,
            beam_width: 10_000,
            max_states: 10_000_000,
            allow_stabilize: false,
            max_gens: 3,
            progress_interval: None,
        }
    }
}

impl SearchConfig {
    fn within(&self, p: &Presentation) -> bool {
        p.max_relator_length() <= self.max_relator_length
            && p.total_length() <= self.max_total_length
    }
}

/// One search edge. Each expands to a short list of primitive moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Invert(usize),
    Product { target: usize, other: usize, kind: Product },
    Conjugate(usize, Letter),
    Stabilize,
    Destabilize,
}

impl Step {
    pub fn moves(self) -> Vec<Move> {
        match self {
            Step::Invert(i) => vec![Move::Invert(i)],
            Step::Product {
                target,
                other,
                kind,
            } => kind.moves(target, other),
            Step::Conjugate(i, l) => vec![Move::Conjugate(i, l)],
            Step::Stabilize => vec![Move::Stabilize],
            Step::Destabilize => vec![Move::Destabilize],
        }
    }

    fn apply(self, p: &Presentation) -> Option<Presentation> {
        match self {
            Step::Product {
                target,
                other,
                kind,
            } => {
                let w = kind.word(p.relator(target), p.relator(other));
                let mut rels = p.relators().to_vec();
                rels[target - 1] = w;
                Some(Presentation::new(p.names().to_vec(), rels).expect("same generators"))
            }
            _ => p.apply_all(&self.moves()).ok(),
        }
    }
}

/// Every one-step successor of `p` within the configured length bounds.
pub fn neighbors(p: &Presentation, cfg: &SearchConfig) -> Vec<(Step, Presentation)> {
    let n = p.relators().len();
    let mut steps = Vec::new();
    for i in 1..=n {
        steps.push(Step::Invert(i));
    }
    for target in 1..=n {
        for other in (1..=n).filter(|&j| j != target) {
            for kind in Product::ALL {
                steps.push(Step::Product {
                    target,
                    other,
                    kind,
                });
            }
        }
    }
    for i in 1..=n {
        for g in 1..=p.num_gens() {
            steps.push(Step::Conjugate(i, Letter::pos(g)));
            steps.push(Step::Conjugate(i, Letter::neg(g)));
        }
    }
    if cfg.allow_stabilize && p.num_gens() < cfg.max_gens {
        steps.push(Step::Stabilize);
    }
    steps.push(Step::Destabilize);

    steps
        .into_iter()
        .filter_map(|s| s.apply(p).map(|q| (s, q)))
        .filter(|(_, q)| cfg.within(q))
        .collect()
}

/// One edge between classes, applied to a representative whose relators
/// are cyclically reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassStep {
    /// `r_i ← cyclic core of rot(r_i, a) · rot(r_j^{±1}, b)`.
    Product {
        target: usize,
        other: usize,
        inverse: bool,
        target_shift: usize,
        other_shift: usize,
    },
    Stabilize,
    /// Drop the last generator once relator `slot` is that generator alone
    /// (up to sign) and no other relator uses it.
    Destabilize { slot: usize },
}

impl ClassStep {
    /// Primitive moves realizing the step on `rep`.
    pub fn expand(self, rep: &Presentation) -> Vec<Move> {
        let mut b = Builder::new(rep.clone());
        match self {
            ClassStep::Product {
                target,
                other,
                inverse,
                target_shift,
                other_shift,
            } => {
                let step = macros::cyclic_permute(b.current(), target, target_shift);
                b.extend(step.expect("shift within relator"));
                if inverse {
                    b.push(Move::Invert(other)).expect("index in range");
                }
                let step = macros::cyclic_permute(b.current(), other, other_shift);
                b.extend(step.expect("shift within relator"));
                b.push(Move::Multiply(target, other)).expect("distinct indices");

                // Put r_j back the cheaper way round.
                let rotated = b.current().relator(other).clone();
                let back = rotated.len() - other_shift;
                if other_shift <= back {
                    let undo = rotated.suffix_from(back);
                    b.conjugate(other, &undo).expect("index in range");
                } else {
                    let step = macros::cyclic_permute(b.current(), other, back);
                    b.extend(step.expect("shift within relator"));
                }
                if inverse {
                    b.push(Move::Invert(other)).expect("index in range");
                }
                let (_, conj) = b.current().relator(target).cyclic_reduce();
                b.conjugate(target, &conj.inverse()).expect("index in range");
            }
            ClassStep::Stabilize => b.push(Move::Stabilize).expect("fresh name available"),
            ClassStep::Destabilize { slot } => {
                let last = rep.relators().len();
                if rep.relator(slot).first().is_some_and(|l| l.is_inverse()) {
                    b.push(Move::Invert(slot)).expect("index in range");
                }
                if slot != last {
                    // (g, w) -> (gw, W) -> (gw, Wgw) -> (gw, g) -> (gwG, G) -> (w, g)
                    let w = rep.relator(last).clone();
                    let g = b.current().relator(slot).letters()[0];
                    for m in [Move::Multiply(slot, last), Move::Invert(last), Move::Multiply(last, slot)] {
                        b.push(m).expect("index in range");
                    }
                    b.conjugate(last, &w).expect("index in range");
                    for m in [
                        Move::Invert(last),
                        Move::Multiply(slot, last),
                        Move::Conjugate(slot, g.inverse()),
                        Move::Invert(last),
                    ] {
                        b.push(m).expect("index in range");
                    }
                }
                b.push(Move::Destabilize).expect("legal destabilize");
            }
        }
        debug_assert_eq!(Some(b.current().clone()), self.apply(rep));
        b.finish().1
    }

    fn apply(self, rep: &Presentation) -> Option<Presentation> {
        match self {
            ClassStep::Product {
                target,
                other,
                inverse,
                target_shift,
                other_shift,
            } => {
                let ri = rep.relator(target).rotate(target_shift);
                let rj = if inverse {
                    rep.relator(other).inverse()
                } else {
                    rep.relator(other).clone()
                };
                let (core, _) = ri.concat(&rj.rotate(other_shift)).cyclic_reduce();
                let mut rels = rep.relators().to_vec();
                rels[target - 1] = core;
                Some(Presentation::new(rep.names().to_vec(), rels).expect("same generators"))
            }
            ClassStep::Stabilize => rep.apply(&Move::Stabilize).ok(),
            ClassStep::Destabilize { slot } => {
                let g = rep.num_gens();
                let last = rep.relators().len();
                let rel = rep.relator(slot);
                if rel.len() != 1 || rel.letters()[0].gen() != g {
                    return None;
                }
                let mut rels = rep.relators().to_vec();
                rels.swap(slot - 1, last - 1);
                rels[last - 1] = Word::letter(Letter::pos(g));
                let q = Presentation::new(rep.names().to_vec(), rels).ok()?;
                q.apply(&Move::Destabilize).ok()
            }
        }
    }
}

/// Successor classes of a representative with cyclically reduced
/// relators, within the configured length bounds.
pub fn class_neighbors(rep: &Presentation, cfg: &SearchConfig) -> Vec<(ClassStep, Presentation)> {
    let n = rep.relators().len();
    let mut steps = Vec::new();
    for target in 1..=n {
        for other in (1..=n).filter(|&j| j != target) {
            for inverse in [false, true] {
                for target_shift in 0..rep.relator(target).len().max(1) {
                    for other_shift in 0..rep.relator(other).len().max(1) {
                        steps.push(ClassStep::Product {
                            target,
                            other,
                            inverse,
                            target_shift,
                            other_shift,
                        });
                    }
                }
            }
        }
    }
    if cfg.allow_stabilize && rep.num_gens() < cfg.max_gens {
        steps.push(ClassStep::Stabilize);
    }
    if let Some(slot) = (1..=n).find(|&i| {
        let r = rep.relator(i);
        r.len() == 1 && r.letters()[0].gen() == rep.num_gens()
    }) {
        steps.push(ClassStep::Destabilize { slot });
    }

    steps
        .into_iter()
        .filter_map(|s| s.apply(rep).map(|q| (s, q)))
        .filter(|(_, q)| cfg.within(q))
        .collect()
}

/// Every relator is a single letter, up to conjugation, and each
/// generator is hit once.
pub fn is_trivial_class(p: &Presentation) -> bool {
    let mut seen = vec![false; p.num_gens()];
    for r in p.relators() {
        let (core, _) = r.cyclic_reduce();
        if core.len() != 1 {
            return false;
        }
        let g = core.letters()[0].gen();
        if std::mem::replace(&mut seen[g - 1], true) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Found,
    Exhausted,
    Budget,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub expanded: u64,
    pub deduplicated: u64,
    pub visited: u64,
    pub frontier_peak: usize,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: Status,
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub expanded: u64,
    pub visited: u64,
    pub frontier: usize,
    pub best_score: Option<usize>,
}

impl fmt::Display for Progress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "progress expanded={} visited={} frontier={} best=",
            self.expanded, self.visited, self.frontier
        )?;
        match self.best_score {
            Some(s) => write!(f, "{s}"),
            None => write!(f, "-"),
        }
    }
}

type Score = (usize, usize, Vec<u8>);

fn score(p: &Presentation, key: &[u8]) -> Score {
    (p.total_length(), p.max_relator_length(), key.to_vec())
}

struct Node {
    parent: Option<(u32, ClassStep)>,
}

struct Table {
    index: HashMap<Vec<u8>, u32>,
    nodes: Vec<Node>,
}

impl Table {
    fn insert(&mut self, key: Vec<u8>, parent: Option<(u32, ClassStep)>) -> Option<u32> {
        if self.index.contains_key(&key) {
            return None;
        }
        let id = u32::try_from(self.nodes.len()).expect("state count fits u32");
        self.index.insert(key, id);
        self.nodes.push(Node { parent });
        Some(id)
    }

    fn path(&self, mut id: u32) -> Vec<ClassStep> {
        let mut steps = Vec::new();
        while let Some((prev, step)) = self.nodes[id as usize].parent {
            steps.push(step);
            id = prev;
        }
        steps.reverse();
        steps
    }
}

/// Cyclic reduction of the start, then each recorded step re-expanded on
/// the representative it was taken from, then normalization. Only
/// certificates that pass replay are returned.
fn certificate_for(start: &Presentation, steps: &[ClassStep]) -> Option<Certificate> {
    let (mut rep, mut moves) = macros::cyclically_reduce_all(start);
    for step in steps {
        let expanded = step.expand(&rep);
        rep = rep.apply_all(&expanded).ok()?;
        moves.extend(expanded);
    }
    moves.extend(macros::normalize(&rep).1);
    let cert = Certificate::from_moves(start.clone(), moves, Vec::new()).ok()?;
    replay(&cert).ok()?.passed().then_some(cert)
}

enum Frontier {
    Fifo(VecDeque<(u32, Presentation)>),
    Heap(BinaryHeap<Reverse<(Score, u32)>>, HashMap<u32, Presentation>),
    Layer(Vec<(u32, Presentation)>, Vec<(Score, u32, Presentation)>),
}

impl Frontier {
    fn len(&self) -> usize {
        match self {
            Frontier::Fifo(q) => q.len(),
            Frontier::Heap(h, _) => h.len(),
            Frontier::Layer(cur, next) => cur.len() + next.len(),
        }
    }

    fn push(&mut self, id: u32, p: Presentation, key: &[u8]) {
        match self {
            Frontier::Fifo(q) => q.push_back((id, p)),
            Frontier::Heap(h, store) => {
                h.push(Reverse((score(&p, key), id)));
                store.insert(id, p);
            }
            Frontier::Layer(_, next) => next.push((score(&p, key), id, p)),
        }
    }

    fn pop(&mut self, beam_width: usize) -> Option<(u32, Presentation)> {
        match self {
            Frontier::Fifo(q) => q.pop_front(),
            Frontier::Heap(h, store) => {
                let Reverse((_, id)) = h.pop()?;
                store.remove(&id).map(|p| (id, p))
            }
            Frontier::Layer(cur, next) => {
                if cur.is_empty() {
                    next.sort_by(|a, b| a.0.cmp(&b.0));
                    next.truncate(beam_width);
                    // Reverse so pop() yields the best first.
                    cur.extend(next.drain(..).rev().map(|(_, id, p)| (id, p)));
                }
                cur.pop()
            }
        }
    }
}

pub fn search(start: &Presentation, cfg: &SearchConfig) -> SearchOutcome {
    search_with_progress(start, cfg, |_| {})
}

/// Like [`search`], calling `report` every `cfg.progress_interval`
/// expansions.
pub fn search_with_progress<F>(start: &Presentation, cfg: &SearchConfig, mut report: F) -> SearchOutcome
where
    F: FnMut(&Progress),
{
    let mut stats = SearchStats::default();
    let mut table = Table {
        index: HashMap::new(),
        nodes: Vec::new(),
    };
    let key = start.canonical_key();
    let root = table.insert(key.clone(), None).expect("empty table");
    stats.visited = 1;
    if is_trivial_class(start) {
        if let Some(cert) = certificate_for(start, &[]) {
            return SearchOutcome {
                status: Status::Found,
                certificate: Some(cert),
                stats,
            };
        }
    }

    let mut frontier = match cfg.strategy {
        Strategy::Bfs => Frontier::Fifo(VecDeque::new()),
        Strategy::Greedy => Frontier::Heap(BinaryHeap::new(), HashMap::new()),
        Strategy::Beam => Frontier::Layer(Vec::new(), Vec::new()),
    };
    let (rep, _) = macros::cyclically_reduce_all(start);
    frontier.push(root, rep, &key);
    let mut best: Option<usize> = None;

    while let Some((id, p)) = frontier.pop(cfg.beam_width.max(1)) {
        stats.expanded += 1;
        if let Some(every) = cfg.progress_interval {
            if every > 0 && stats.expanded % every == 0 {
                report(&Progress {
                    expanded: stats.expanded,
                    visited: stats.visited,
                    frontier: frontier.len(),
                    best_score: best,
                });
            }
        }
        for (step, q) in class_neighbors(&p, cfg) {
            let key = q.canonical_key();
            let Some(child) = table.insert(key.clone(), Some((id, step))) else {
                stats.deduplicated += 1;
                continue;
            };
            stats.visited += 1;
            let s = q.total_length();
            best = Some(best.map_or(s, |b| b.min(s)));
            if is_trivial_class(&q) {
                if let Some(cert) = certificate_for(start, &table.path(child)) {
                    return SearchOutcome {
                        status: Status::Found,
                        certificate: Some(cert),
                        stats,
                    };
                }
            }
            if table.nodes.len() >= cfg.max_states {
                return SearchOutcome {
                    status: Status::Budget,
                    certificate: None,
                    stats,
                };
            }
            frontier.push(child, q, &key);
            stats.frontier_peak = stats.frontier_peak.max(frontier.len());
        }
    }
    SearchOutcome {
        status: Status::Exhausted,
        certificate: None,
        stats,
    }
}

/// Canonical keys of every class reachable from `start` in at most `depth`
/// class steps, exploring breadth-first with deduplication.
pub fn classes_within(
    start: &Presentation,
    cfg: &SearchConfig,
    depth: usize,
) -> std::collections::HashSet<Vec<u8>> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.canonical_key());
    let mut layer = vec![macros::cyclically_reduce_all(start).0];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in &layer {
            for (_, q) in class_neighbors(p, cfg) {
                if seen.insert(q.canonical_key()) {
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    seen
}
