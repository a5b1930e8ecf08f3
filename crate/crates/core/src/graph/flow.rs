//! A small augmenting-path max-flow kernel sized for desk-scale graphs.

use std::collections::VecDeque;

use super::{Graph, Vertex};

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    /// Index of the reverse arc in `arcs`.
    rev: usize,
    original: u32,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn with_nodes(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    pub fn add_node(&mut self) -> usize {
        self.out.push(Vec::new());
        self.out.len() - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let a = self.arcs.len();
        self.arcs.push(Arc { to, cap, rev: a + 1, original: cap });
        self.arcs.push(Arc { to: from, cap: 0, rev: a, original: 0 });
        self.out[from].push(a);
        self.out[to].push(a + 1);
    }

    /// Augments along shortest paths until `limit` units flow or none remain.
    pub fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut total = 0;
        let mut pred = vec![usize::MAX; self.out.len()];
        while total < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.out[x] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && arc.to != source && pred[arc.to] == usize::MAX {
                        pred[arc.to] = a;
                        if arc.to == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(arc.to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut push = limit - total;
            let mut x = sink;
            while x != source {
                let a = pred[x];
                push = push.min(self.arcs[a].cap);
                x = self.arcs[self.arcs[a].rev].to;
            }
            let mut x = sink;
            while x != source {
                let a = pred[x];
                let r = self.arcs[a].rev;
                self.arcs[a].cap -= push;
                self.arcs[r].cap += push;
                x = self.arcs[r].to;
            }
            total += push;
        }
        total
    }

    /// Net flow on each forward arc leaving `x`, as `(target, units)`.
    fn flow_out(&self, x: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out[x].iter().filter_map(move |&a| {
            let arc = &self.arcs[a];
            (arc.original > arc.cap).then_some((a, arc.to))
        })
    }
}

/// Vertex-split network for internally disjoint paths between two vertices.
///
/// Vertex `x` becomes `in(x) = 2x` and `out(x) = 2x + 1` joined by a unit arc;
/// each usable edge becomes unit arcs `out(a) -> in(b)` and `out(b) -> in(a)`.
pub(crate) struct DisjointPaths {
    net: FlowNetwork,
    s: Vertex,
    t: Vertex,
}

impl DisjointPaths {
    /// `usable` selects edge ids; the edge `st` itself is skipped when `skip_direct`.
    pub fn new(g: &Graph, s: Vertex, t: Vertex, usable: impl Fn(usize) -> bool, skip_direct: bool) -> Self {
        let n = g.n();
        let mut net = FlowNetwork::with_nodes(2 * n);
        for x in 0..n {
            if x != s && x != t {
                net.add_arc(2 * x, 2 * x + 1, 1);
            }
        }
        for (id, e) in g.edges().iter().enumerate() {
            if !usable(id) {
                continue;
            }
            let direct = (e.u == s && e.v == t) || (e.u == t && e.v == s);
            if direct && skip_direct {
                continue;
            }
            // arcs into s or out of t never carry useful flow
            if e.v != s && e.u != t {
                net.add_arc(2 * e.u + 1, 2 * e.v, 1);
            }
            if e.u != s && e.v != t {
                net.add_arc(2 * e.v + 1, 2 * e.u, 1);
            }
        }
        DisjointPaths { net, s, t }
    }

    pub fn run(&mut self, limit: u32) -> u32 {
        self.net.max_flow(2 * self.s + 1, 2 * self.t, limit)
    }

    /// Decomposes the current flow into vertex sequences from `s` to `t`,
    /// ordered by their first hop.
    pub fn paths(&self) -> Vec<Vec<Vertex>> {
        let mut used = vec![false; self.net.arcs.len()];
        let mut paths = Vec::new();
        loop {
            let mut path = vec![self.s];
            let mut node = 2 * self.s + 1;
            let mut advanced = true;
            while node != 2 * self.t && advanced {
                advanced = false;
                let next = self.net.flow_out(node).find(|&(a, _)| !used[a]);
                if let Some((a, to)) = next {
                    used[a] = true;
                    advanced = true;
                    if to % 2 == 0 {
                        // entered in(x): record x and move through its split arc
                        path.push(to / 2);
                        node = if to == 2 * self.t { to } else { to + 1 };
                        if node != 2 * self.t {
                            if let Some((split, _)) = self.net.flow_out(to).find(|&(a, _)| !used[a]) {
                                used[split] = true;
                            }
                        }
                    } else {
                        node = to;
                    }
                }
            }
            if path.len() == 1 {
                break;
            }
            debug_assert_eq!(*path.last().unwrap(), self.t);
            paths.push(path);
        }
        paths.sort();
        paths
    }
}

/// Maximum number of internally disjoint `s`-`t` paths, capped at `limit`.
pub(crate) fn disjoint_path_count(g: &Graph, s: Vertex, t: Vertex, limit: u32) -> u32 {
    DisjointPaths::new(g, s, t, |_| true, false).run(limit)
}
