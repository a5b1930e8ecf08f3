use super::{ColourView, CountOptions, PathCount, PathSystem, VerifyError};
use crate::colouring::Colour;
use crate::graph::Vertex;

struct Candidate {
    colour: Colour,
    path: Vec<Vertex>,
    /// Internal vertices.
    mask: u64,
}

impl Candidate {
    fn first(&self) -> Vertex {
        self.path[1]
    }

    fn last(&self) -> Vertex {
        self.path[self.path.len() - 2]
    }
}

/// Enumerates every monochromatic path of length at least two, then packs a
/// largest internally disjoint subset. The edge `uv`, when allowed, is
/// disjoint from everything and is added on top.
pub(super) fn exact_count(
    view: &ColourView<'_>,
    u: Vertex,
    v: Vertex,
    colours: &[Colour],
    opts: &CountOptions,
) -> Result<PathCount, VerifyError> {
    let g = view.g;
    let direct = match g.edge_id(u, v) {
        Some(id) if !opts.super_only => Some(view.phi.colour_of(id)),
        _ => None,
    };
    let target = opts.cap - usize::from(direct.is_some());

    let mut all = Vec::new();
    for &c in colours {
        let mut paths = enumerate(view, c, u, v, opts.path_limit)?;
        paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.extend(paths.into_iter().map(|path| {
            let mask = path[1..path.len() - 1].iter().fold(0u64, |m, &x| m | 1 << x);
            Candidate { colour: c, path, mask }
        }));
    }
    let candidates = minimal_candidates(all);

    let mut packer = Packer { cands: &candidates, target, best: Vec::new(), chosen: Vec::new() };
    if target > 0 {
        packer.search(0, 0);
    }

    let mut chosen: Vec<(Colour, Vec<Vertex>)> =
        packer.best.iter().map(|&i| (candidates[i].colour, candidates[i].path.clone())).collect();
    if let Some(c) = direct {
        chosen.push((c, vec![u, v]));
    }
    chosen.sort_by(|a, b| (a.0, a.1.len()).cmp(&(b.0, b.1.len())).then_with(|| a.1.cmp(&b.1)));
    let witness = PathSystem {
        endpoints: (u, v),
        colours: chosen.iter().map(|(c, _)| *c).collect(),
        paths: chosen.into_iter().map(|(_, p)| p).collect(),
    };
    Ok(PathCount { count: witness.len(), witness })
}

/// All simple `u`-`v` paths with at least one internal vertex inside colour
/// class `c`, in depth-first order over ascending neighbours.
fn enumerate(view: &ColourView<'_>, c: Colour, u: Vertex, v: Vertex, limit: usize) -> Result<Vec<Vec<Vertex>>, VerifyError> {
    struct Walk<'v, 'g> {
        view: &'v ColourView<'g>,
        c: Colour,
        v: Vertex,
        limit: usize,
        path: Vec<Vertex>,
        seen: u64,
        out: Vec<Vec<Vertex>>,
    }

    impl Walk<'_, '_> {
        fn go(&mut self, x: Vertex) -> Result<(), ()> {
            for &y in self.view.neighbours(self.c, x) {
                if y == self.v {
                    if self.path.len() >= 2 {
                        let mut p = self.path.clone();
                        p.push(y);
                        self.out.push(p);
                        if self.out.len() > self.limit {
                            return Err(());
                        }
                    }
                } else if self.seen >> y & 1 == 0 {
                    self.seen |= 1 << y;
                    self.path.push(y);
                    let res = self.go(y);
                    self.path.pop();
                    self.seen &= !(1 << y);
                    res?;
                }
            }
            Ok(())
        }
    }

    let mut walk = Walk { view, c, v, limit, path: vec![u], seen: 1 << u, out: Vec::new() };
    match walk.go(u) {
        Ok(()) => Ok(walk.out),
        Err(()) => Err(VerifyError::PathLimit { colour: c, u, v, limit }),
    }
}

/// Keeps the first path for each internal vertex set and drops any path
/// whose internal set strictly contains another's: a packing can always swap
/// such a path for the smaller one.
fn minimal_candidates(all: Vec<Candidate>) -> Vec<Candidate> {
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by_key(|&i| (all[i].mask.count_ones(), i));
    let mut kept_masks: Vec<u64> = Vec::new();
    let mut keep = vec![false; all.len()];
    for i in order {
        let m = all[i].mask;
        if kept_masks.iter().all(|&k| k & m != k) {
            kept_masks.push(m);
            keep[i] = true;
        }
    }
    all.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect()
}

struct Packer<'c> {
    cands: &'c [Candidate],
    target: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Packer<'_> {
    /// Subsets are visited in lexicographic index order, so the first
    /// largest packing found is the lexicographically first one.
    fn search(&mut self, from: usize, used: u64) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.target {
            return;
        }
        // disjoint paths leave u through distinct vertices and enter v
        // through distinct vertices
        let (mut firsts, mut lasts) = (0u64, 0u64);
        for c in &self.cands[from..] {
            if c.mask & used == 0 {
                firsts |= 1 << c.first();
                lasts |= 1 << c.last();
            }
        }
        let room = firsts.count_ones().min(lasts.count_ones()) as usize;
        if self.chosen.len() + room <= self.best.len() {
            return;
        }
        for i in from..self.cands.len() {
            let m = self.cands[i].mask;
            if m & used != 0 {
                continue;
            }
            self.chosen.push(i);
            self.search(i + 1, used | m);
            self.chosen.pop();
            if self.best.len() >= self.target {
                return;
            }
        }
    }
}
