use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weighted undirected graph without self-loops. Edges are stored as `(u, v)` with
/// `u < v`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeMap<(usize, usize), f64>,
}

impl Graph {
    pub fn new(n_vertices: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::Graph("graph has no vertices".into()));
        }
        let mut map = BTreeMap::new();
        for &(u, v, w) in edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::Graph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n_vertices}"
                )));
            }
            if u == v {
                return Err(Error::Graph(format!("self-loop on vertex {u}")));
            }
            if !w.is_finite() || w < 0.0 {
                return Err(Error::Graph(format!("edge ({u}, {v}) has weight {w}")));
            }
            let key = (u.min(v), u.max(v));
            if map.insert(key, w).is_some() {
                return Err(Error::Graph(format!("duplicate edge {key:?}")));
            }
        }
        Ok(Self {
            n_vertices,
            edges: map,
        })
    }

    /// The 6-vertex instance used by the vertex cover experiments: a 4-cycle
    /// 1-2-3-4 with a tail 4-5-6 (1-indexed), unit weights. Its minimum cover has
    /// size 3.
    pub fn builtin_cycle6() -> Self {
        Self::new(
            6,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 3, 1.0),
                (0, 3, 1.0),
                (3, 4, 1.0),
                (4, 5, 1.0),
            ],
        )
        .expect("static graph")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v, weight)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.values().sum()
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| match (a == u, b == u) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        bfs_edges(self, 0).len() + 1 == self.n_vertices
    }

    /// Reads the text format: a `vertices N` header, then `u v [weight]` lines with
    /// 1-indexed vertices. `#` starts a comment. A missing weight reads as 1.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n_vertices = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |what: &str| Error::Graph(format!("line {}: {what}: {raw:?}", lineno + 1));
            if fields[0] == "vertices" {
                if n_vertices.is_some() || fields.len() != 2 {
                    return Err(bad("malformed or repeated header"));
                }
                n_vertices = Some(
                    fields[1]
                        .parse::<usize>()
                        .map_err(|_| bad("bad vertex count"))?,
                );
                continue;
            }
            if n_vertices.is_none() {
                return Err(bad("edge before `vertices N` header"));
            }
            if !(2..=3).contains(&fields.len()) {
                return Err(bad("expected `u v [weight]`"));
            }
            let vertex = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(bad("vertices are 1-indexed integers")),
                }
            };
            let weight = match fields.get(2) {
                Some(w) => w.parse::<f64>().map_err(|_| bad("bad weight"))?,
                None => 1.0,
            };
            edges.push((vertex(fields[0])?, vertex(fields[1])?, weight));
        }
        let n = n_vertices.ok_or_else(|| Error::Graph("missing `vertices N` header".into()))?;
        Self::new(n, &edges)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Graph(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.n_vertices);
        for (u, v, w) in self.edges() {
            writeln!(out, "{} {} {}", u + 1, v + 1, w).expect("string write");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightSource {
    /// One weight per vertex pair `(u, v)`, `u < v`, in lexicographic order.
    Explicit(Vec<f64>),
    /// Uniform draws in `[1, 10]`.
    Seeded(u64),
}

pub fn complete_graph(n_vertices: usize, weights: WeightSource) -> Result<Graph> {
    if n_vertices < 2 {
        return Err(Error::Graph(format!(
            "complete graph needs at least 2 vertices, got {n_vertices}"
        )));
    }
    let n_pairs = n_vertices * (n_vertices - 1) / 2;
    let weights = match weights {
        WeightSource::Explicit(w) if w.len() == n_pairs => w,
        WeightSource::Explicit(w) => {
            return Err(Error::Graph(format!(
                "K{n_vertices} needs {n_pairs} weights, got {}",
                w.len()
            )))
        }
        WeightSource::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..n_pairs).map(|_| rng.gen_range(1.0..=10.0)).collect()
        }
    };
    let pairs = (0..n_vertices).flat_map(|u| (u + 1..n_vertices).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.zip(weights).map(|((u, v), w)| (u, v, w)).collect();
    Graph::new(n_vertices, &edges)
}

/// Rooted spanning tree, stored as `(parent, child)` edges in which every parent
/// appears as a child (or is the root) before it appears as a parent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    root: usize,
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn new(root: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { root, edges }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Verifies that this is a spanning tree of `graph`.
    pub fn check_against(&self, graph: &Graph) -> Result<()> {
        let n = graph.n_vertices();
        if self.root >= n {
            return Err(Error::TreeMismatch(format!(
                "root {} out of range",
                self.root
            )));
        }
        if self.edges.len() + 1 != n {
            return Err(Error::TreeMismatch(format!(
                "{} edges for {n} vertices",
                self.edges.len()
            )));
        }
        let mut reached = vec![false; n];
        reached[self.root] = true;
        for &(parent, child) in &self.edges {
            if parent >= n || child >= n || !graph.has_edge(parent, child) {
                return Err(Error::TreeMismatch(format!(
                    "({parent}, {child}) is not a graph edge"
                )));
            }
            if !reached[parent] || reached[child] {
                return Err(Error::TreeMismatch(format!(
                    "({parent}, {child}) does not extend the tree"
                )));
            }
            reached[child] = true;
        }
        Ok(())
    }

    /// The tree as an unweighted graph on the same vertex set.
    pub fn to_graph(&self, n_vertices: usize) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u, v, 1.0)).collect();
        Graph::new(n_vertices, &edges)
    }
}

fn bfs_edges(graph: &Graph, root: usize) -> Vec<(usize, usize)> {
    let mut visited = vec![false; graph.n_vertices()];
    let mut queue = VecDeque::from([root]);
    let mut edges = Vec::new();
    visited[root] = true;
    while let Some(u) = queue.pop_front() {
        for v in graph.neighbors(u) {
            if !visited[v] {
                visited[v] = true;
                edges.push((u, v));
                queue.push_back(v);
            }
        }
    }
    edges
}

/// Breadth-first spanning tree rooted at vertex 0, visiting neighbors in ascending
/// order.
pub fn spanning_tree(graph: &Graph) -> Result<SpanningTree> {
    let edges = bfs_edges(graph, 0);
    if edges.len() + 1 != graph.n_vertices() {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTree::new(0, edges))
}
