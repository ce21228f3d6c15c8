//! Edge-state propagation shared by the exhaustive search and the standalone
//! forced-edge closure.
//!
//! Every edge is undecided, in or out. Vertices track how many incident edges
//! are in and how many are still available (not out); chains of in-edges are
//! tracked by their end points so that a short cycle is seen the moment it
//! closes. All changes go on a trail and are undone in reverse.

use std::collections::{HashMap, VecDeque};

use crate::board::{BoardGraph, Cell};

pub(crate) const UNDECIDED: u8 = 0;
pub(crate) const IN: u8 = 1;
pub(crate) const OUT: u8 = 2;

/// The graph searched: board cells, plus one hub vertex for path targets.
pub(crate) struct Problem {
    pub nv: usize,
    pub ends: Vec<(usize, usize)>,
    /// Incident edge ids, ordered by the other end point.
    pub inc: Vec<Vec<usize>>,
    pub mirror: Option<Vec<usize>>,
    pub hub: Option<usize>,
    pub board: crate::board::Board,
    pub spec: crate::board::LeaperSpec,
}

impl Problem {
    /// `hub`: `None` for circuits, `Some(None)` for a free path,
    /// `Some(Some((a, b)))` for a path between two fixed cells.
    pub fn new(graph: &BoardGraph, hub: Option<Option<(usize, usize)>>, rot180: bool) -> Self {
        let cells = graph.vertex_count();
        let nv = cells + usize::from(hub.is_some());
        let mut ends: Vec<(usize, usize)> = graph.edges().collect();
        let hub_id = hub.map(|_| cells);
        match hub {
            Some(None) => ends.extend((0..cells).map(|v| (v, cells))),
            Some(Some((a, b))) => {
                let (a, b) = (a.min(b), a.max(b));
                ends.push((a, cells));
                if b != a {
                    ends.push((b, cells));
                }
            }
            None => {}
        }
        let mut inc = vec![Vec::new(); nv];
        for (e, &(u, v)) in ends.iter().enumerate() {
            inc[u].push(e);
            inc[v].push(e);
        }
        let mirror = rot180.then(|| {
            let board = graph.board();
            let rot = |v: usize| {
                if v == cells {
                    v
                } else {
                    board.index(board.rotate180(board.cell(v)))
                }
            };
            let ids: HashMap<(usize, usize), usize> = ends.iter().enumerate().map(|(e, &p)| (p, e)).collect();
            ends.iter()
                .map(|&(u, v)| {
                    let (a, b) = (rot(u), rot(v));
                    // fixed path end points need not be symmetric; an edge
                    // without an image can only be excluded
                    ids.get(&(a.min(b), a.max(b))).copied().unwrap_or(usize::MAX)
                })
                .collect()
        });
        Problem {
            nv,
            ends,
            inc,
            mirror,
            hub: hub_id,
            board: graph.board(),
            spec: graph.spec(),
        }
    }

    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn cell(&self, v: usize) -> Cell {
        self.board.cell(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Conflict {
    ThreeForced(usize),
    PrematureCycle(usize),
    Stranded(usize),
    /// An edge and its half-turn image were given different states.
    Asymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StepRule {
    DegreeTwo,
    Saturated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Step {
    pub rule: StepRule,
    pub vertex: usize,
    pub edge: usize,
    pub value: u8,
}

enum Undo {
    Edge(usize),
    Ends {
        a: usize,
        end_a: usize,
        len_a: usize,
        b: usize,
        end_b: usize,
        len_b: usize,
    },
}

pub(crate) struct State<'p> {
    pub p: &'p Problem,
    pub edge: Vec<u8>,
    pub deg_in: Vec<u32>,
    pub deg_avail: Vec<u32>,
    end: Vec<usize>,
    len: Vec<usize>,
    pub in_count: usize,
    trail: Vec<Undo>,
    queue: VecDeque<usize>,
    queued: Vec<bool>,
    /// Forbid an undecided edge joining the two ends of one chain.
    anti_cycle: bool,
    pub log: Option<Vec<Step>>,
    pub conflict: Option<Conflict>,
    seen: Vec<u32>,
    stamp: u32,
    stack: Vec<usize>,
}

impl<'p> State<'p> {
    pub fn new(p: &'p Problem, anti_cycle: bool, log: bool) -> Self {
        let deg_avail = p.inc.iter().map(|l| l.len() as u32).collect();
        let mut s = State {
            p,
            edge: vec![UNDECIDED; p.ends.len()],
            deg_in: vec![0; p.nv],
            deg_avail,
            end: (0..p.nv).collect(),
            len: vec![1; p.nv],
            in_count: 0,
            trail: Vec::new(),
            queue: (0..p.nv).collect(),
            queued: vec![true; p.nv],
            anti_cycle,
            log: log.then(Vec::new),
            conflict: None,
            seen: vec![0; p.nv],
            stamp: 0,
            stack: Vec::new(),
        };
        if let Some(mirror) = &p.mirror {
            for (e, &img) in mirror.iter().enumerate() {
                if img == usize::MAX {
                    s.set(e, OUT);
                }
            }
        }
        s
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn complete(&self) -> bool {
        self.conflict.is_none() && self.in_count == self.p.nv
    }

    fn enqueue(&mut self, v: usize) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push_back(v);
        }
    }

    /// Decide an undecided edge (and its image under the symmetry). Returns
    /// false once a conflict is recorded.
    pub fn set(&mut self, e: usize, value: u8) -> bool {
        if self.conflict.is_some() {
            return false;
        }
        match self.edge[e] {
            UNDECIDED => {}
            v if v == value => return true,
            _ => {
                self.conflict = Some(Conflict::Asymmetric);
                return false;
            }
        }
        self.edge[e] = value;
        self.trail.push(Undo::Edge(e));
        let (u, v) = self.p.ends[e];
        if value == OUT {
            self.deg_avail[u] -= 1;
            self.deg_avail[v] -= 1;
        } else {
            self.in_count += 1;
            let saturated = [u, v].into_iter().find(|&w| self.deg_in[w] == 2);
            self.deg_in[u] += 1;
            self.deg_in[v] += 1;
            if let Some(w) = saturated {
                self.conflict = Some(Conflict::ThreeForced(w));
                return false;
            }
            if self.end[u] == v {
                if self.in_count < self.p.nv || self.len[u] < self.p.nv {
                    self.conflict = Some(Conflict::PrematureCycle(self.len[u]));
                    return false;
                }
            } else {
                let (a, b) = (self.end[u], self.end[v]);
                self.trail.push(Undo::Ends {
                    a,
                    end_a: self.end[a],
                    len_a: self.len[a],
                    b,
                    end_b: self.end[b],
                    len_b: self.len[b],
                });
                let total = self.len[u] + self.len[v];
                self.end[a] = b;
                self.end[b] = a;
                self.len[a] = total;
                self.len[b] = total;
                if self.anti_cycle && total < self.p.nv {
                    if let Some(c) = self.edge_between(a, b) {
                        if self.edge[c] == UNDECIDED && !self.set(c, OUT) {
                            return false;
                        }
                    }
                }
            }
        }
        self.enqueue(u);
        self.enqueue(v);
        if let Some(mirror) = &self.p.mirror {
            let img = mirror[e];
            if img != e {
                return self.set(img, value);
            }
        }
        true
    }

    fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        let (x, y) = if self.p.inc[a].len() <= self.p.inc[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.p.inc[x].iter().copied().find(|&e| self.p.other(e, x) == y)
    }

    fn derive(&mut self, rule: StepRule, vertex: usize, e: usize, value: u8) -> bool {
        if let Some(log) = &mut self.log {
            log.push(Step {
                rule,
                vertex,
                edge: e,
                value,
            });
        }
        self.set(e, value)
    }

    /// Run the degree rules to a fixpoint.
    pub fn propagate(&mut self) -> bool {
        let p = self.p;
        while let Some(v) = self.queue.pop_front() {
            self.queued[v] = false;
            if self.conflict.is_some() {
                break;
            }
            if self.deg_avail[v] < 2 {
                self.conflict = Some(Conflict::Stranded(v));
                break;
            }
            if self.deg_in[v] == 2 && self.deg_avail[v] > 2 {
                for &e in &p.inc[v] {
                    if self.edge[e] == UNDECIDED && !self.derive(StepRule::Saturated, v, e, OUT) {
                        break;
                    }
                }
            } else if self.deg_avail[v] == 2 && self.deg_in[v] < 2 {
                for &e in &p.inc[v] {
                    if self.edge[e] == UNDECIDED && !self.derive(StepRule::DegreeTwo, v, e, IN) {
                        break;
                    }
                }
            }
        }
        if self.conflict.is_some() {
            self.clear_queue();
            return false;
        }
        true
    }

    fn clear_queue(&mut self) {
        while let Some(v) = self.queue.pop_front() {
            self.queued[v] = false;
        }
    }

    pub fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail entry") {
                Undo::Edge(e) => {
                    let (u, v) = self.p.ends[e];
                    if self.edge[e] == OUT {
                        self.deg_avail[u] += 1;
                        self.deg_avail[v] += 1;
                    } else {
                        self.deg_in[u] -= 1;
                        self.deg_in[v] -= 1;
                        self.in_count -= 1;
                    }
                    self.edge[e] = UNDECIDED;
                }
                Undo::Ends {
                    a,
                    end_a,
                    len_a,
                    b,
                    end_b,
                    len_b,
                } => {
                    self.end[a] = end_a;
                    self.len[a] = len_a;
                    self.end[b] = end_b;
                    self.len[b] = len_b;
                }
            }
        }
        self.conflict = None;
        self.clear_queue();
    }

    /// Whether the edges not yet excluded still connect every vertex.
    pub fn available_connected(&mut self) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        let p = self.p;
        self.stack.clear();
        self.stack.push(0);
        self.seen[0] = self.stamp;
        let mut reached = 1;
        while let Some(v) = self.stack.pop() {
            for &e in &p.inc[v] {
                if self.edge[e] != OUT {
                    let w = p.other(e, v);
                    if self.seen[w] != self.stamp {
                        self.seen[w] = self.stamp;
                        reached += 1;
                        self.stack.push(w);
                    }
                }
            }
        }
        reached == p.nv
    }

    /// A vertex still short of two in-edges with the fewest undecided edges;
    /// ties go to the lowest index. Returns its first undecided edge.
    pub fn branch_edge(&self) -> Option<usize> {
        let mut best: Option<(u32, usize)> = None;
        for v in 0..self.p.nv {
            if self.deg_in[v] < 2 {
                let free = self.deg_avail[v] - self.deg_in[v];
                if best.map_or(true, |(f, _)| free < f) {
                    best = Some((free, v));
                    if free <= 1 {
                        break;
                    }
                }
            }
        }
        let (_, v) = best?;
        self.p.inc[v].iter().copied().find(|&e| self.edge[e] == UNDECIDED)
    }

    /// The in-edges as a visit order of board cells.
    pub fn extract(&self) -> Vec<Cell> {
        let p = self.p;
        let mut adj = vec![[usize::MAX; 2]; p.nv];
        for (e, &st) in self.edge.iter().enumerate() {
            if st == IN {
                let (u, v) = p.ends[e];
                let slot = |a: &mut [usize; 2], w| {
                    if a[0] == usize::MAX {
                        a[0] = w
                    } else {
                        a[1] = w
                    }
                };
                slot(&mut adj[u], v);
                slot(&mut adj[v], u);
            }
        }
        let start = p.hub.unwrap_or(0);
        let mut order = Vec::with_capacity(p.nv);
        let (mut prev, mut cur) = (usize::MAX, start);
        for _ in 0..p.nv {
            order.push(cur);
            let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
        }
        order
            .into_iter()
            .filter(|&v| Some(v) != p.hub)
            .map(|v| p.cell(v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{build_graph, Board, LeaperSpec};

    #[test]
    fn undo_restores_everything() {
        let g = build_graph(LeaperSpec::knight(), Board::new(5, 6).unwrap());
        let p = Problem::new(&g, None, false);
        let mut s = State::new(&p, true, false);
        assert!(s.propagate());
        let snapshot = (
            s.edge.clone(),
            s.deg_in.clone(),
            s.deg_avail.clone(),
            s.end.clone(),
            s.in_count,
        );
        let mark = s.mark();
        let e = s.branch_edge().unwrap();
        s.set(e, IN);
        s.propagate();
        s.undo(mark);
        assert_eq!(
            snapshot,
            (
                s.edge.clone(),
                s.deg_in.clone(),
                s.deg_avail.clone(),
                s.end.clone(),
                s.in_count
            )
        );
        assert!(s.conflict.is_none());
    }

    #[test]
    fn hub_edges_come_last() {
        let g = build_graph(LeaperSpec::knight(), Board::new(3, 4).unwrap());
        let p = Problem::new(&g, Some(None), false);
        assert_eq!(p.nv, 13);
        assert_eq!(p.inc[12].len(), 12);
        for v in 0..12 {
            let last = *p.inc[v].last().unwrap();
            assert_eq!(p.other(last, v), 12);
        }
    }

    #[test]
    fn mirror_is_an_involution() {
        let g = build_graph(LeaperSpec::knight(), Board::new(6, 6).unwrap());
        let p = Problem::new(&g, None, true);
        let m = p.mirror.as_ref().unwrap();
        for e in 0..m.len() {
            assert_eq!(m[m[e]], e);
        }
    }
}
