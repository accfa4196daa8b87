//! Maximum bipartite matching by augmenting paths.
//!
//! Left vertices are processed in increasing index order and each search
//! tries neighbours in increasing index order, so the resulting matching is
//! deterministic for a given adjacency list.

/// Result of a maximum matching: `left_to_right[u]` is the partner of left
/// vertex `u`, `right_to_left[v]` the partner of right vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().filter(|m| m.is_some()).count()
    }
}

/// Computes a maximum matching of the bipartite graph whose left vertex `u`
/// is adjacent to the right vertices `adj[u]`.
pub fn maximum_matching(adj: &[Vec<usize>], right_count: usize) -> Matching {
    let left_count = adj.len();
    let mut left_to_right = vec![None; left_count];
    let mut right_to_left = vec![None; right_count];
    let mut visited = vec![false; right_count];

    for u in 0..left_count {
        visited.iter_mut().for_each(|v| *v = false);
        augment(u, adj, &mut visited, &mut left_to_right, &mut right_to_left);
    }

    Matching {
        left_to_right,
        right_to_left,
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    left_to_right: &mut [Option<usize>],
    right_to_left: &mut [Option<usize>],
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        let free = match right_to_left[v] {
            None => true,
            Some(w) => augment(w, adj, visited, left_to_right, right_to_left),
        };
        if free {
            left_to_right[u] = Some(v);
            right_to_left[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_on_square() {
        let adj = vec![vec![0, 1], vec![0]];
        let m = maximum_matching(&adj, 2);
        assert_eq!(m.size(), 2);
        assert_eq!(m.left_to_right, vec![Some(1), Some(0)]);
    }

    #[test]
    fn star_matches_once() {
        let adj = vec![vec![0], vec![0], vec![0]];
        assert_eq!(maximum_matching(&adj, 1).size(), 1);
    }

    #[test]
    fn empty_graph() {
        let m = maximum_matching(&[], 0);
        assert_eq!(m.size(), 0);
    }
}
