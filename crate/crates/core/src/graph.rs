//! Simple undirected graphs on dense vertex labels `0..n`, the edge-list text
//! format, and the structural predicates used throughout the crate.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph. Edges are stored as `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: set, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Range(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(min, max)` order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of vertices of degree one.
    pub fn pendant_count(&self) -> usize {
        self.adj.iter().filter(|a| a.len() == 1).count()
    }

    /// Connected-component labels, numbered in order of their smallest vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&c| c == 0)
    }

    /// Connected with exactly `n` edges, i.e. exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n && self.is_connected()
    }

    /// Degrees sorted non-increasing. Fails on isolated vertices.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        if let Some(v) = self.adj.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v));
        }
        DegreeSequence::from_unsorted(self.adj.iter().map(|a| a.len() as u32).collect())
    }

    /// Splits the graph into its connected components, each relabelled densely
    /// in increasing order of the original labels.
    pub fn components(&self) -> Vec<Graph> {
        let labels = self.component_labels();
        let count = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut local = vec![0; self.n];
        let mut sizes = vec![0; count];
        for v in 0..self.n {
            local[v] = sizes[labels[v]];
            sizes[labels[v]] += 1;
        }
        let mut edge_lists = vec![Vec::new(); count];
        for &(u, v) in &self.edges {
            edge_lists[labels[u]].push((local[u], local[v]));
        }
        sizes
            .into_iter()
            .zip(edge_lists)
            .map(|(n, e)| Graph::new(n, e).expect("component edges are valid"))
            .collect()
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union edges are valid")
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                left: perm.len(),
                right: self.n,
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Precondition(
                    "relabelling is not a permutation".into(),
                ));
            }
        }
        Graph::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// All-pairs BFS distances; `None` for unreachable pairs.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Serializes in the edge-list format with sorted edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list format: `#` comment lines, then the vertex count, then
/// one `u v` pair per line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            if fields.len() != 1 {
                return Err(parse_err(format!("expected vertex count, got '{line}'")));
            }
            let value = fields[0]
                .parse::<usize>()
                .map_err(|_| parse_err(format!("invalid vertex count '{}'", fields[0])))?;
            n = Some(value);
            continue;
        };
        if fields.len() != 2 {
            return Err(parse_err(format!("expected 'u v', got '{line}'")));
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field
                .parse::<usize>()
                .map_err(|_| parse_err(format!("invalid vertex index '{field}'")))?;
            if *slot >= count {
                return Err(parse_err(format!(
                    "vertex index out of range: {} >= {count}",
                    *slot
                )));
            }
        }
        if ends[0] == ends[1] {
            return Err(parse_err(format!("self-loop at vertex {}", ends[0])));
        }
        edges.push((ends[0], ends[1]));
    }
    let n = n.ok_or_else(|| Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::new(n, edges)
}

/// Positive integers sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Accepts only non-increasing sequences of positive entries.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::Domain("degree sequence entries must be >= 1".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(
                "degree sequence must be non-increasing".into(),
            ));
        }
        Ok(DegreeSequence(values))
    }

    pub fn from_unsorted(mut values: Vec<u32>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }

    pub fn max(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&v| v == 1).count()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
