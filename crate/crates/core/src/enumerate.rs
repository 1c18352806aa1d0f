//! Exhaustive generation of unicyclic graphs up to isomorphism, and
//! brute-force extremal search over the generated classes.
//!
//! The primary generator hangs a rooted tree off every vertex of a cycle
//! `C_k` (the cycle vertex is the root) for every `k` and every distribution
//! of the remaining vertices, then deduplicates by canonical code. An
//! independent generator filters all `n`-edge subsets of `K_n`; it is only
//! practical for small `n` and exists to cross-check the first one.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::index::{self, IndexSpec};
use crate::majorization::{schur_value, FunctionSpec, Mode};
use crate::value::IndexValue;

pub const MIN_ENUMERATION_N: usize = 3;
pub const MAX_ENUMERATION_N: usize = 9;
/// Largest `n` accepted by the edge-subset generator.
pub const MAX_EDGE_SUBSET_N: usize = 7;

/// Conjunctive filter on maximum degree and pendant count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct EnumerationFilter {
    pub max_degree: Option<usize>,
    pub pendant_count: Option<usize>,
}

impl EnumerationFilter {
    pub fn max_degree(delta: usize) -> Self {
        EnumerationFilter {
            max_degree: Some(delta),
            pendant_count: None,
        }
    }

    pub fn pendants(p: usize) -> Self {
        EnumerationFilter {
            max_degree: None,
            pendant_count: Some(p),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if matches!(self.max_degree, Some(d) if d < 2) {
            return Err(Error::Range("maximum degree filter must be >= 2".into()));
        }
        Ok(())
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.max_degree.is_none_or(|d| g.max_degree() == d)
            && self.pendant_count.is_none_or(|p| g.pendant_count() == p)
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(MIN_ENUMERATION_N..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::Range(format!(
            "enumeration needs {MIN_ENUMERATION_N} <= n <= {MAX_ENUMERATION_N}, got {n}"
        )));
    }
    Ok(())
}

/// Rooted trees up to isomorphism, as preorder parent arrays (`parent[0]` is
/// unused). `trees[s]` lists every rooted tree with `s` vertices.
pub fn rooted_trees(max_size: usize) -> Vec<Vec<Vec<usize>>> {
    let mut trees: Vec<Vec<Vec<usize>>> = vec![Vec::new(), vec![vec![0]]];
    for size in 2..=max_size {
        let mut out = Vec::new();
        let mut current = Vec::new();
        let top = (size - 1, trees[size - 1].len() - 1);
        child_multisets(&trees, size - 1, top, &mut current, &mut out);
        let built = out
            .into_iter()
            .map(|children| {
                let mut parent = vec![0];
                for (s, i) in children {
                    let offset = parent.len();
                    for (j, &p) in trees[s][i].iter().enumerate() {
                        parent.push(if j == 0 { 0 } else { p + offset });
                    }
                }
                parent
            })
            .collect();
        trees.push(built);
    }
    trees.truncate(max_size + 1);
    trees
}

/// Multisets of subtrees `(size, index)` with total size `remaining`, listed
/// in non-increasing key order so each multiset appears once.
fn child_multisets(
    trees: &[Vec<Vec<usize>>],
    remaining: usize,
    max_key: (usize, usize),
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for size in (1..=remaining.min(max_key.0)).rev() {
        let top = if size == max_key.0 {
            max_key.1
        } else {
            trees[size].len() - 1
        };
        for idx in (0..=top).rev() {
            current.push((size, idx));
            child_multisets(trees, remaining - size, (size, idx), current, out);
            current.pop();
        }
    }
}

/// Compositions of `total` into `parts` positive parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (1..=total - (parts - 1))
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn cycle_with_trees(trees: &[&Vec<usize>]) -> Graph {
    let k = trees.len();
    let n: usize = trees.iter().map(|t| t.len()).sum();
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (root, tree) in trees.iter().enumerate() {
        // tree vertex j > 0 becomes next + j - 1; its parent maps likewise
        let map = |j: usize| if j == 0 { root } else { next + j - 1 };
        for (j, &p) in tree.iter().enumerate().skip(1) {
            edges.push((map(p), map(j)));
        }
        next += tree.len() - 1;
    }
    Graph::new(n, edges).expect("generated edges are valid")
}

fn dedup_sorted<I: IntoIterator<Item = Graph>>(
    graphs: I,
) -> Result<BTreeMap<CanonicalCode, Graph>> {
    let mut classes = BTreeMap::new();
    for g in graphs {
        let code = canonical_code(&g)?;
        classes.entry(code).or_insert(g);
    }
    Ok(classes)
}

/// One representative per isomorphism class of unicyclic graphs on `n`
/// vertices passing `filter`, ordered by canonical code.
pub fn enumerate_unicyclic_with_codes(
    n: usize,
    filter: &EnumerationFilter,
) -> Result<Vec<(CanonicalCode, Graph)>> {
    check_n(n)?;
    filter.validate()?;
    let trees = rooted_trees(n - 2);
    let candidates = (3..=n).flat_map(|k| {
        let trees = &trees;
        compositions(n, k).into_iter().flat_map(move |sizes| {
            sizes
                .iter()
                .map(|&s| trees[s].iter())
                .multi_cartesian_product()
                .map(|choice| cycle_with_trees(&choice))
                .collect::<Vec<_>>()
        })
    });
    Ok(dedup_sorted(candidates)?
        .into_iter()
        .filter(|(_, g)| filter.accepts(g))
        .collect())
}

pub fn enumerate_unicyclic(n: usize, filter: &EnumerationFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_unicyclic_with_codes(n, filter)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

/// Brute force over every `n`-edge subset of the complete graph.
pub fn enumerate_by_edge_subsets(n: usize) -> Result<Vec<(CanonicalCode, Graph)>> {
    if !(MIN_ENUMERATION_N..=MAX_EDGE_SUBSET_N).contains(&n) {
        return Err(Error::Range(format!(
            "edge-subset generation needs {MIN_ENUMERATION_N} <= n <= {MAX_EDGE_SUBSET_N}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let graphs = pairs
        .into_iter()
        .combinations(n)
        .map(|edges| Graph::new(n, edges).expect("pairs are valid"))
        .filter(Graph::is_unicyclic);
    Ok(dedup_sorted(graphs)?.into_iter().collect())
}

/// Number of isomorphism classes of unicyclic graphs on `n` vertices.
pub fn count_classes(n: usize) -> Result<usize> {
    Ok(enumerate_unicyclic_with_codes(n, &EnumerationFilter::default())?.len())
}

/// What to optimise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SearchTarget {
    Index(IndexSpec),
    Function(FunctionSpec, Mode),
}

impl SearchTarget {
    pub fn eval(&self, g: &Graph) -> Result<IndexValue> {
        match self {
            SearchTarget::Index(spec) => index::eval(spec, g),
            SearchTarget::Function(f, mode) => schur_value(f, &g.degree_sequence()?, *mode),
        }
    }
}

impl std::fmt::Display for SearchTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchTarget::Index(spec) => write!(f, "{spec}"),
            SearchTarget::Function(func, mode) => write!(f, "{mode}[{func}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalSearchResult {
    pub target: SearchTarget,
    pub n: usize,
    pub filter: EnumerationFilter,
    pub class_size: usize,
    pub min: Option<IndexValue>,
    pub max: Option<IndexValue>,
    /// every class attaining the minimum, with its value
    pub minimizers: Vec<(CanonicalCode, IndexValue)>,
    pub maximizers: Vec<(CanonicalCode, IndexValue)>,
}

impl ExtremalSearchResult {
    pub fn is_empty(&self) -> bool {
        self.class_size == 0
    }
}

/// Exact optima over the enumerated class; an empty class yields an empty
/// result rather than an error.
pub fn extremal_search(
    target: &SearchTarget,
    n: usize,
    filter: &EnumerationFilter,
    tol: f64,
) -> Result<ExtremalSearchResult> {
    let classes = enumerate_unicyclic_with_codes(n, filter)?;
    let values = classes
        .iter()
        .map(|(code, g)| Ok((code.clone(), target.eval(g)?)))
        .collect::<Result<Vec<_>>>()?;
    extremal_from_values(*target, n, *filter, values, tol)
}

/// Optima of pre-evaluated `(code, value)` pairs.
pub fn extremal_from_values(
    target: SearchTarget,
    n: usize,
    filter: EnumerationFilter,
    values: Vec<(CanonicalCode, IndexValue)>,
    tol: f64,
) -> Result<ExtremalSearchResult> {
    use std::cmp::Ordering;
    let pick = |want: Ordering| {
        let best = values
            .iter()
            .map(|(_, v)| v)
            .reduce(|a, b| if b.compare(a, 0.0) == want { b } else { a })
            .cloned();
        let attaining = best
            .as_ref()
            .map(|b| {
                values
                    .iter()
                    .filter(|(_, v)| v.approx_eq(b, tol))
                    .cloned()
                    .collect()
            })
            .unwrap_or_default();
        (best, attaining)
    };
    let (min, minimizers) = pick(Ordering::Less);
    let (max, maximizers) = pick(Ordering::Greater);
    Ok(ExtremalSearchResult {
        target,
        n,
        filter,
        class_size: values.len(),
        min,
        max,
        minimizers,
        maximizers,
    })
}
