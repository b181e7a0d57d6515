//! Randomized rotation–extension search for Hamilton cycles in digraphs.
//!
//! The engine keeps a simple directed path and loops three moves:
//!
//! * extend — append an unused out-neighbour of the tail, or prepend an
//!   unused in-neighbour of the head;
//! * close — when stuck, turn the path into a cycle: directly via the
//!   tail→head edge, or via a crossing pair `(tail, p_i)`, `(p_{i-1}, head)`
//!   which yields two disjoint cycles covering the path, re-joined through
//!   any edge between them;
//! * absorb — open a non-spanning cycle through an edge to or from an
//!   unused vertex, producing a strictly larger path.
//!
//! Under the degree-sum condition `δ⁺+δ⁻ ≥ n` a stuck path always admits a
//! closure and strong connectivity always supplies an absorption edge, so
//! on the dense inputs this crate targets the loop converges quickly; a
//! step budget plus seeded restarts guard the rare adversarial layouts,
//! and callers that must not fail add an exact fallback for tiny graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::Bitset;
use crate::digraph::Digraph;

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchBudget {
    pub attempts: usize,
    pub steps_per_attempt: usize,
}

impl SearchBudget {
    /// Restart budget proportional to the graph order.
    pub fn for_order(n: usize) -> Self {
        SearchBudget {
            attempts: 24 + n / 2,
            steps_per_attempt: 16 * n + 64,
        }
    }
}

/// Repeatedly runs randomized attempts until one finds a Hamilton cycle.
pub(crate) fn hamilton_cycle_search(
    g: &Digraph,
    rng: &mut ChaCha8Rng,
    budget: SearchBudget,
) -> Option<Vec<usize>> {
    if g.vertex_count() < 2 || g.edge_count() == 0 {
        return None;
    }
    for _ in 0..budget.attempts {
        if let Some(cycle) = attempt(g, rng, budget.steps_per_attempt) {
            debug_assert!(crate::verify::is_ham_cycle_general(g, &cycle).pass());
            return Some(cycle);
        }
    }
    None
}

fn random_member(set: &Bitset, rng: &mut ChaCha8Rng) -> Option<usize> {
    let count = set.count();
    if count == 0 {
        None
    } else {
        set.nth(rng.gen_range(0..count))
    }
}

struct PathState {
    path: VecDeque<usize>,
    on_path: Bitset,
}

impl PathState {
    fn new(n: usize, start: usize) -> Self {
        let mut on_path = Bitset::new(n);
        on_path.insert(start);
        let mut path = VecDeque::with_capacity(n);
        path.push_back(start);
        PathState { path, on_path }
    }

    fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let path: VecDeque<usize> = vertices.into_iter().collect();
        let mut on_path = Bitset::new(n);
        for &v in &path {
            on_path.insert(v);
        }
        PathState { path, on_path }
    }

    fn head(&self) -> usize {
        *self.path.front().unwrap()
    }

    fn tail(&self) -> usize {
        *self.path.back().unwrap()
    }

    /// One greedy extension at either end; true if the path grew.
    fn extend_once(&mut self, g: &Digraph, rng: &mut ChaCha8Rng) -> bool {
        let mut forward = g.out_row(self.tail()).clone();
        forward.difference_with(&self.on_path);
        if let Some(v) = random_member(&forward, rng) {
            self.path.push_back(v);
            self.on_path.insert(v);
            return true;
        }
        let mut backward = g.in_row(self.head()).clone();
        backward.difference_with(&self.on_path);
        if let Some(v) = random_member(&backward, rng) {
            self.path.push_front(v);
            self.on_path.insert(v);
            return true;
        }
        false
    }
}

fn attempt(g: &Digraph, rng: &mut ChaCha8Rng, max_steps: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut state = PathState::new(n, rng.gen_range(0..n));
    let mut steps = 0usize;

    loop {
        steps += 1;
        if steps > max_steps {
            return None;
        }

        while state.extend_once(g, rng) {}

        // Close the stuck path into a cycle covering all its vertices.
        let cycle: Vec<usize> = if g.has_edge(state.tail(), state.head()) {
            state.path.iter().copied().collect()
        } else {
            let path: Vec<usize> = state.path.iter().copied().collect();
            let splits = crossing_splits(g, &path);
            if splits.is_empty() {
                return None;
            }
            let i = splits[rng.gen_range(0..splits.len())];
            let first = &path[..i];
            let second = &path[i..];
            match merge_cycles(g, first, second, rng) {
                Some(merged_path) => {
                    state = PathState::from_vertices(n, merged_path);
                    continue;
                }
                // No edge between the two cycles: keep the larger one and
                // grow it through an outside vertex.
                None => if first.len() >= second.len() { first } else { second }.to_vec(),
            }
        };

        if cycle.len() == n {
            return Some(cycle);
        }
        match absorb(g, &cycle, rng) {
            Some(path) => state = PathState::from_vertices(n, path),
            None => return None,
        }
    }
}

/// Positions `i` such that breaking the path before `i` yields two cycles:
/// requires edges `(tail, path[i])` and `(path[i-1], head)`.
fn crossing_splits(g: &Digraph, path: &[usize]) -> Vec<usize> {
    let head = path[0];
    let tail = path[path.len() - 1];
    (1..path.len())
        .filter(|&i| g.has_edge(tail, path[i]) && g.has_edge(path[i - 1], head))
        .collect()
}

/// Joins two vertex-disjoint cycles (given as vertex lists with implicit
/// wrap-around) into one path through a single connecting edge, if any
/// exists in either direction.
fn merge_cycles(
    g: &Digraph,
    first: &[usize],
    second: &[usize],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<usize>> {
    let mut second_set = Bitset::new(g.vertex_count());
    for &v in second {
        second_set.insert(v);
    }
    let offset = rng.gen_range(0..first.len());
    for k in 0..first.len() {
        let pos = (offset + k) % first.len();
        let u = first[pos];
        let mut into_second = g.out_row(u).clone();
        into_second.intersect_with(&second_set);
        if let Some(v) = random_member(&into_second, rng) {
            // succ(u) .. u (around first), then v .. pred(v) (around second)
            let v_pos = second.iter().position(|&x| x == v).unwrap();
            let mut path = rotate_open(first, (pos + 1) % first.len());
            path.extend(rotate_open(second, v_pos));
            return Some(path);
        }
        let mut from_second = g.in_row(u).clone();
        from_second.intersect_with(&second_set);
        if let Some(v) = random_member(&from_second, rng) {
            let v_pos = second.iter().position(|&x| x == v).unwrap();
            let mut path = rotate_open(second, (v_pos + 1) % second.len());
            path.extend(rotate_open(first, pos));
            return Some(path);
        }
    }
    None
}

/// The cycle opened as a path starting at index `start`.
fn rotate_open(cycle: &[usize], start: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(cycle.len());
    out.extend_from_slice(&cycle[start..]);
    out.extend_from_slice(&cycle[..start]);
    out
}

/// Opens a non-spanning cycle through some edge to or from an unused
/// vertex, yielding a path one vertex longer than the cycle.
fn absorb(g: &Digraph, cycle: &[usize], rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    let mut outside = Bitset::full(g.vertex_count());
    for &v in cycle {
        outside.remove(v);
    }
    let offset = rng.gen_range(0..cycle.len());
    for k in 0..cycle.len() {
        let pos = (offset + k) % cycle.len();
        let u = cycle[pos];
        let mut leaving = g.out_row(u).clone();
        leaving.intersect_with(&outside);
        if let Some(x) = random_member(&leaving, rng) {
            // succ(u) .. u, then x
            let mut path = rotate_open(cycle, (pos + 1) % cycle.len());
            path.push(x);
            return Some(path);
        }
        let mut entering = g.in_row(u).clone();
        entering.intersect_with(&outside);
        if let Some(x) = random_member(&entering, rng) {
            // x, then u .. pred(u)
            let mut path = vec![x];
            path.extend(rotate_open(cycle, pos));
            return Some(path);
        }
    }
    None
}

/// First Hamilton cycle found by exhaustive backtracking; exact but
/// exponential, for use as a last-resort fallback on tiny graphs.
pub(crate) fn exact_hamilton_cycle(g: &Digraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut path = vec![0usize];
    let mut seen = Bitset::new(n);
    seen.insert(0);
    exact_backtrack(g, &mut path, &mut seen).then_some(path)
}

fn exact_backtrack(g: &Digraph, path: &mut Vec<usize>, seen: &mut Bitset) -> bool {
    let last = *path.last().unwrap();
    if path.len() == g.vertex_count() {
        return g.has_edge(last, path[0]);
    }
    for v in g.out_row(last).iter() {
        if seen.contains(v) {
            continue;
        }
        seen.insert(v);
        path.push(v);
        if exact_backtrack(g, path, seen) {
            return true;
        }
        path.pop();
        seen.remove(v);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeded_rng;
    use crate::verify::is_ham_cycle_general;

    fn complete_digraph(n: usize) -> Digraph {
        let mut d = Digraph::new(n);
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    d.insert_edge(u, v);
                }
            }
        }
        d
    }

    #[test]
    fn finds_cycle_in_complete_digraphs() {
        let mut rng = seeded_rng(1);
        for n in 2..8 {
            let g = complete_digraph(n);
            let cycle = hamilton_cycle_search(&g, &mut rng, SearchBudget::for_order(n)).unwrap();
            assert!(is_ham_cycle_general(&g, &cycle).pass());
        }
    }

    #[test]
    fn finds_the_unique_cycle_in_a_directed_cycle() {
        let mut g = Digraph::new(6);
        for i in 0..6 {
            g.insert_edge(i, (i + 1) % 6);
        }
        let mut rng = seeded_rng(7);
        let cycle = hamilton_cycle_search(&g, &mut rng, SearchBudget::for_order(6)).unwrap();
        assert!(is_ham_cycle_general(&g, &cycle).pass());
    }

    #[test]
    fn gives_up_on_two_disjoint_cycles() {
        let mut g = Digraph::new(6);
        for i in 0..3 {
            g.insert_edge(i, (i + 1) % 3);
            g.insert_edge(3 + i, 3 + (i + 1) % 3);
        }
        let mut rng = seeded_rng(3);
        assert!(hamilton_cycle_search(&g, &mut rng, SearchBudget::for_order(6)).is_none());
    }

    #[test]
    fn exact_fallback_agrees() {
        let g = complete_digraph(5);
        let cycle = exact_hamilton_cycle(&g).unwrap();
        assert!(is_ham_cycle_general(&g, &cycle).pass());

        let mut two = Digraph::new(4);
        two.insert_edge(0, 1);
        two.insert_edge(1, 0);
        two.insert_edge(2, 3);
        two.insert_edge(3, 2);
        assert!(exact_hamilton_cycle(&two).is_none());
    }
}
