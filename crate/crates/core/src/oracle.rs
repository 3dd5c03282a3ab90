//! Reference implementations for cross-checking.
//!
//! Nothing here touches the packed-row operators of [`Relation`] beyond
//! reading pairs in and building the result: closures use plain boolean
//! matrices, and the SCC oracles walk adjacency lists.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::partition::Partition;
use crate::relation::Relation;

/// Result of Kleene iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersClosure {
    pub closure: Relation,
    /// Number of steps `T ↦ I ∪ R;T` applied until the first repeat.
    pub iterations: usize,
}

/// Reflexive-transitive closure by Kleene iteration from `T₀ = I` with
/// `T_{k+1} = I ∪ R;T_k`, stopping at the first fixpoint.
pub fn star_by_powers(r: &Relation) -> PowersClosure {
    let n = r.size();
    let edges: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| r.contains(i, j)).collect())
        .collect();
    let mut current: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            next[i][i] = true;
            for j in 0..n {
                if !edges[i][j] {
                    continue;
                }
                for k in 0..n {
                    if current[j][k] {
                        next[i][k] = true;
                    }
                }
            }
        }
        if next == current {
            break;
        }
        current = next;
    }
    let closure = Relation::from_fn(n, |i, j| current[i][j])
        .expect("carrier size taken from an existing relation");
    PowersClosure {
        closure,
        iterations,
    }
}

/// Strongly connected components by Tarjan's one-pass DFS, run without
/// recursion so deep graphs cannot overflow the stack.
pub fn tarjan_scc(g: &Graph) -> Partition {
    const UNVISITED: usize = usize::MAX;
    let n = g.node_count();
    let adj = g.adjacency();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut component = vec![UNVISITED; n];
    let mut next_index = 0;
    let mut next_component = 0;
    // (node, position of the next neighbour to visit)
    let mut call_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call_stack.push((root, 0));
        while let Some(&(v, pos)) = call_stack.last() {
            if pos == 0 && index[v] == UNVISITED {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(pos) {
                if let Some(top) = call_stack.last_mut() {
                    top.1 += 1;
                }
                if index[w] == UNVISITED {
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call_stack.pop();
            if let Some(&(parent, _)) = call_stack.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("v is on the stack");
                    on_stack[w] = false;
                    component[w] = next_component;
                    if w == v {
                        break;
                    }
                }
                next_component += 1;
            }
        }
    }
    Partition::from_labels(&component)
}

/// Strongly connected components by mutual reachability: one breadth-first
/// search per node, then `u ~ v` iff each reaches the other.
pub fn reachability_scc(g: &Graph) -> Partition {
    let n = g.node_count();
    let adj = g.adjacency();
    let reach: Vec<Vec<bool>> = (0..n).map(|s| bfs(&adj, s)).collect();
    // Label each node by the smallest node it is mutually reachable with.
    let labels: Vec<usize> = (0..n)
        .map(|u| {
            (0..n)
                .find(|&v| reach[u][v] && reach[v][u])
                .expect("every node reaches itself")
        })
        .collect();
    Partition::from_labels(&labels)
}

fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([source]);
    seen[source] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}
