//! Undirected multigraphs and their Dynkin/Euclidean shape recognition.

use std::collections::HashMap;

/// Finite undirected multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone)]
pub struct UndirectedGraph {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

/// Shape verdict for one connected component.
///
/// `Euclidean` uses the conventions A~0 = one node with one loop and
/// A~1 = two nodes joined by a double edge; A~k for k >= 2 is the plain
/// (k+1)-cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    Dynkin(String),
    Euclidean(String),
    Neither,
}

impl GraphClass {
    pub fn label(&self) -> &str {
        match self {
            GraphClass::Dynkin(name) | GraphClass::Euclidean(name) => name,
            GraphClass::Neither => "neither",
        }
    }
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One connected component together with its classification.
#[derive(Debug, Clone)]
pub struct ComponentClass {
    pub nodes: Vec<usize>,
    pub class: GraphClass,
}

/// Splits the graph into connected components and matches each against the
/// A, D, E shapes and their Euclidean extensions.
pub fn classify_graph(graph: &UndirectedGraph) -> Vec<ComponentClass> {
    components(graph)
        .into_iter()
        .map(|nodes| {
            let edges: Vec<(usize, usize)> = graph
                .edges
                .iter()
                .copied()
                .filter(|&(a, _)| nodes.binary_search(&a).is_ok())
                .collect();
            let class = classify_component(&nodes, &edges);
            ComponentClass { nodes, class }
        })
        .collect()
}

/// Connected components as sorted node lists, ordered by smallest node.
fn components(graph: &UndirectedGraph) -> Vec<Vec<usize>> {
    let n = graph.labels.len();
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in &graph.edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut nodes = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        nodes.sort_unstable();
        out.push(nodes);
    }
    out
}

fn classify_component(nodes: &[usize], edges: &[(usize, usize)]) -> GraphClass {
    let n = nodes.len();
    let m = edges.len();
    let index: HashMap<usize, usize> =
        nodes.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut loops = 0usize;
    let mut pairs = Vec::new();
    for &(a, b) in edges {
        let (a, b) = (index[&a], index[&b]);
        if a == b {
            loops += 1;
        } else {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    if loops > 0 {
        return if n == 1 && m == 1 {
            GraphClass::Euclidean("A~0".into())
        } else {
            GraphClass::Neither
        };
    }
    pairs.sort_unstable();
    if pairs.windows(2).any(|w| w[0] == w[1]) {
        return if n == 2 && m == 2 {
            GraphClass::Euclidean("A~1".into())
        } else {
            GraphClass::Neither
        };
    }
    let mut degree = vec![0usize; n];
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in &pairs {
        degree[a] += 1;
        degree[b] += 1;
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    if m == n {
        return if degree.iter().all(|&d| d == 2) {
            GraphClass::Euclidean(format!("A~{}", n - 1))
        } else {
            GraphClass::Neither
        };
    }
    if m + 1 != n {
        return GraphClass::Neither;
    }
    // Tree. Walk each direction away from a branch point to measure arms.
    let arm = |from: usize, start: usize| -> usize {
        let (mut prev, mut cur, mut len) = (from, start, 1usize);
        while degree[cur] == 2 {
            let next = *adjacency[cur].iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            len += 1;
        }
        len
    };
    let branch: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    match branch[..] {
        [] => GraphClass::Dynkin(format!("A{n}")),
        [v] if degree[v] == 3 => {
            let mut arms: Vec<usize> = adjacency[v].iter().map(|&s| arm(v, s)).collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, k) => GraphClass::Dynkin(format!("D{}", k + 3)),
                (1, 2, 2) => GraphClass::Dynkin("E6".into()),
                (1, 2, 3) => GraphClass::Dynkin("E7".into()),
                (1, 2, 4) => GraphClass::Dynkin("E8".into()),
                (2, 2, 2) => GraphClass::Euclidean("E~6".into()),
                (1, 3, 3) => GraphClass::Euclidean("E~7".into()),
                (1, 2, 5) => GraphClass::Euclidean("E~8".into()),
                _ => GraphClass::Neither,
            }
        }
        [v] if degree[v] == 4 && n == 5 => GraphClass::Euclidean("D~4".into()),
        [u, v] if degree[u] == 3 && degree[v] == 3 => {
            let two_leaves = |w: usize| {
                adjacency[w].iter().filter(|&&x| degree[x] == 1).count() == 2
            };
            if two_leaves(u) && two_leaves(v) {
                GraphClass::Euclidean(format!("D~{}", n - 1))
            } else {
                GraphClass::Neither
            }
        }
        _ => GraphClass::Neither,
    }
}
