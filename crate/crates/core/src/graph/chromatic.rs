use super::{Graph, GraphError};

pub const DEFAULT_CHROMATIC_MAX_VERTICES: usize = 16;

/// Exact chromatic number by backtracking, refused above the default size.
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    chromatic_number_with_limit(g, DEFAULT_CHROMATIC_MAX_VERTICES)
}

pub fn chromatic_number_with_limit(g: &Graph, max_vertices: usize) -> Result<usize, GraphError> {
    if g.n() > max_vertices {
        return Err(GraphError::TooManyVertices { limit: max_vertices, n: g.n() });
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    // high degree first keeps the backtracking shallow
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(g.degree(x)), x));
    let mut colour = vec![usize::MAX; g.n()];
    (2..=g.n())
        .find(|&c| try_colour(g, &order, 0, c, &mut colour, 0))
        .ok_or(GraphError::Empty)
}

fn try_colour(g: &Graph, order: &[usize], at: usize, colours: usize, colour: &mut [usize], used: usize) -> bool {
    let Some(&x) = order.get(at) else {
        return true;
    };
    // symmetry: a vertex may open at most one new colour
    for c in 0..colours.min(used + 1) {
        if g.neighbours(x).iter().all(|&y| colour[y] != c) {
            colour[x] = c;
            if try_colour(g, order, at + 1, colours, colour, used.max(c + 1)) {
                return true;
            }
        }
    }
    colour[x] = usize::MAX;
    false
}
