//! Branch-and-bound over partitions of `E(G)` into connected colour classes.
//!
//! Only colourings in which every colour class is connected need to be
//! searched: splitting a disconnected class never destroys a monochromatic
//! path. Validity is monotone under merging classes, which gives two cheap
//! tests at every node. If the coarsest completion (all uncovered edges in
//! one extra colour) fails, every completion fails. If the finest completion
//! (all uncovered edges in their own colours) passes, nothing below the node
//! can use more colours.

use std::time::Instant;

use crate::colouring::{Colour, EdgeColouring};
use crate::graph::Graph;
use crate::verify::{verifies, VerifyError};

pub(crate) struct SearchLimits {
    pub max_nodes: u64,
    pub deadline: Option<Instant>,
    pub path_limit: usize,
}

pub(crate) enum Outcome {
    Complete,
    OutOfBudget,
}

pub(crate) struct PartitionSearch<'g> {
    g: &'g Graph,
    k: usize,
    limits: SearchLimits,
    /// Edges sharing an endpoint with edge `i`.
    line_adj: Vec<u64>,
    /// Classes fixed so far, as edge masks.
    classes: Vec<u64>,
    /// Stop early once this many colours are reached.
    ceiling: Option<usize>,
    pub nodes: u64,
    pub best_value: usize,
    /// Canonical labels of the lexicographically smallest best colouring.
    pub best_labels: Option<Vec<Colour>>,
}

impl<'g> PartitionSearch<'g> {
    pub fn new(g: &'g Graph, k: usize, limits: SearchLimits) -> Self {
        assert!(g.edge_count() <= 64, "partition search supports at most 64 edges");
        let line_adj = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|&(j, f)| j != i && (f.touches(e.u) || f.touches(e.v)))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        PartitionSearch {
            g,
            k,
            limits,
            line_adj,
            classes: Vec::new(),
            ceiling: None,
            nodes: 0,
            best_value: 0,
            best_labels: None,
        }
    }

    /// Seeds the incumbent with a known valid colouring.
    pub fn seed(&mut self, phi: &EdgeColouring) {
        self.offer(phi.canonical().labels().to_vec());
    }

    /// Colour count at which the search may stop (a proven upper bound).
    pub fn set_ceiling(&mut self, ceiling: usize) {
        self.ceiling = Some(ceiling);
    }

    pub fn run(&mut self) -> Result<Outcome, VerifyError> {
        let all = if self.g.edge_count() == 64 { u64::MAX } else { (1u64 << self.g.edge_count()) - 1 };
        match self.node(all) {
            Ok(()) => Ok(Outcome::Complete),
            Err(Stop::Budget) => Ok(Outcome::OutOfBudget),
            Err(Stop::Ceiling) => Ok(Outcome::Complete),
            Err(Stop::Verify(e)) => Err(e),
        }
    }

    fn at_ceiling(&self) -> bool {
        self.ceiling.is_some_and(|c| self.best_value >= c)
    }

    fn offer(&mut self, labels: Vec<Colour>) {
        let value = labels.iter().copied().max().unwrap_or(0) as usize;
        let better = value > self.best_value
            || (value == self.best_value && self.best_labels.as_ref().is_none_or(|b| labels < *b));
        if better {
            self.best_value = value;
            self.best_labels = Some(labels);
        }
    }

    /// Canonical labels for the fixed classes plus `rest` completed either
    /// as one colour or as singletons.
    fn completion(&self, rest: u64, singletons: bool) -> Vec<Colour> {
        let mut class_of = vec![usize::MAX; self.g.edge_count()];
        for (i, &m) in self.classes.iter().enumerate() {
            for e in bits(m) {
                class_of[e] = i;
            }
        }
        let base = self.classes.len();
        for (j, e) in bits(rest).enumerate() {
            class_of[e] = if singletons { base + j } else { base };
        }
        let mut map = vec![0 as Colour; base + rest.count_ones() as usize + 1];
        let mut next = 0;
        class_of
            .iter()
            .map(|&c| {
                if map[c] == 0 {
                    next += 1;
                    map[c] = next;
                }
                map[c]
            })
            .collect()
    }

    fn valid(&self, labels: Vec<Colour>) -> Result<bool, Stop> {
        let phi = EdgeColouring::new(self.g, labels).expect("completion labels are gapless");
        verifies(self.g, &phi, self.k, self.limits.path_limit).map_err(Stop::Verify)
    }

    fn node(&mut self, rest: u64) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes
            || (self.nodes.is_multiple_of(64) && self.limits.deadline.is_some_and(|d| Instant::now() >= d))
        {
            return Err(Stop::Budget);
        }
        let fixed = self.classes.len();
        let remaining = rest.count_ones() as usize;
        if fixed + remaining < self.best_value {
            return Ok(());
        }
        if remaining > 0 && !self.valid(self.completion(rest, false))? {
            return Ok(());
        }
        let finest = self.completion(rest, true);
        if self.valid(finest.clone())? {
            self.offer(finest);
            return if self.at_ceiling() { Err(Stop::Ceiling) } else { Ok(()) };
        }
        if remaining == 0 {
            return Ok(());
        }

        let seed = rest.trailing_zeros() as usize;
        let mut options = Vec::new();
        connected_sets(&self.line_adj, rest, 1 << seed, line_neighbours(&self.line_adj, seed, rest), 0, &mut options);
        for class in options {
            let left = rest & !class;
            if fixed + 1 + left.count_ones() as usize >= self.best_value {
                self.classes.push(class);
                let res = self.node(left);
                self.classes.pop();
                res?;
            }
        }
        Ok(())
    }
}

enum Stop {
    Budget,
    Ceiling,
    Verify(VerifyError),
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

fn line_neighbours(line_adj: &[u64], e: usize, allowed: u64) -> u64 {
    line_adj[e] & allowed & !(1 << e)
}

/// Every connected edge set inside `allowed` that contains `set` and grows
/// through `frontier`, each produced once; smaller sets tend to come first.
fn connected_sets(line_adj: &[u64], allowed: u64, set: u64, frontier: u64, excluded: u64, out: &mut Vec<u64>) {
    if frontier == 0 {
        out.push(set);
        return;
    }
    let x = frontier.trailing_zeros() as usize;
    let bit = 1u64 << x;
    connected_sets(line_adj, allowed, set, frontier & !bit, excluded | bit, out);
    let grown = set | bit;
    let next = (frontier | line_adj[x]) & allowed & !grown & !excluded;
    connected_sets(line_adj, allowed, grown, next, excluded, out);
}
