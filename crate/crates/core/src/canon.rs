//! Canonical forms for small graphs.
//!
//! The code is the lexicographically largest lower-triangular adjacency
//! encoding over all vertex orderings compatible with an
//! isomorphism-invariant colour refinement seeded by vertex degree. The
//! search proceeds level by level and keeps only the partial orderings whose
//! encoding prefix is maximal; false twins (vertices with identical open
//! neighbourhoods) are placed in index order, which removes the factorial
//! blow-up caused by pendant vertices sharing a neighbour.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by [`canonical_code`].
pub const MAX_CANONICAL_VERTICES: usize = 12;

/// Identifies a graph up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Stable colour refinement starting from vertex degrees. Colours are ranks
/// of sorted signatures, so they are invariant under relabelling.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = g.degrees();
    let mut class_count = {
        let mut c = colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        colors = next;
        if distinct.len() == class_count {
            return colors;
        }
        class_count = distinct.len();
    }
}

/// Lowest-index vertex with the same open neighbourhood, if any.
fn twin_predecessors(g: &Graph) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| (0..v).rev().find(|&u| g.neighbors(u) == g.neighbors(v)))
        .collect()
}

/// Canonical code of `g`; `g` must have at most [`MAX_CANONICAL_VERTICES`] vertices.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge {
            n,
            limit: MAX_CANONICAL_VERTICES,
        });
    }
    let colors = refine_colors(g);
    // Positions are filled colour class by colour class, highest colour first.
    let mut cell_of_position: Vec<usize> = colors.clone();
    cell_of_position.sort_unstable_by(|a, b| b.cmp(a));
    let twin_prev = twin_predecessors(g);

    let mut states: Vec<(Vec<usize>, u16)> = vec![(Vec::with_capacity(n), 0)];
    let mut rows: Vec<u16> = Vec::with_capacity(n);
    for &cell in &cell_of_position {
        let mut best: Option<u16> = None;
        let mut next_states = Vec::new();
        for (order, used) in &states {
            for v in 0..n {
                if colors[v] != cell || used & (1 << v) != 0 {
                    continue;
                }
                if let Some(u) = twin_prev[v] {
                    if used & (1 << u) == 0 {
                        continue;
                    }
                }
                let row = order.iter().enumerate().fold(0u16, |acc, (j, &w)| {
                    if g.has_edge(v, w) {
                        acc | (1 << (15 - j))
                    } else {
                        acc
                    }
                });
                match best {
                    Some(b) if row < b => continue,
                    Some(b) if row > b => next_states.clear(),
                    _ => {}
                }
                best = Some(row);
                let mut extended = order.clone();
                extended.push(v);
                next_states.push((extended, used | (1 << v)));
            }
        }
        rows.push(best.expect("every position has a candidate"));
        states = next_states;
    }

    let mut bytes = Vec::with_capacity(1 + 2 * n);
    bytes.push(n as u8);
    for row in rows {
        bytes.extend_from_slice(&row.to_be_bytes());
    }
    Ok(CanonicalCode(bytes))
}

/// Isomorphism test through canonical codes.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn relabelled_cycles_agree() {
        let c4 = Graph::cycle(4).unwrap();
        let other = Graph::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            canonical_code(&c4).unwrap(),
            canonical_code(&other).unwrap()
        );
    }

    #[test]
    fn cycle_and_path_differ() {
        let c4 = Graph::cycle(4).unwrap();
        let p4 = Graph::path(4);
        assert_ne!(canonical_code(&c4).unwrap(), canonical_code(&p4).unwrap());
    }

    #[test]
    fn four_vertex_unicyclic_classes() {
        let c4 = Graph::cycle(4).unwrap();
        let paw = Graph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&c4).unwrap(), canonical_code(&paw).unwrap());
    }

    #[test]
    fn size_guard() {
        assert!(canonical_code(&Graph::cycle(12).unwrap()).is_ok());
        assert_eq!(
            canonical_code(&Graph::cycle(13).unwrap()),
            Err(Error::TooLarge { n: 13, limit: 12 })
        );
    }

    #[test]
    fn regular_graphs_with_equal_degrees_are_separated() {
        // C6 versus two disjoint triangles: colour refinement cannot split them.
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::cycle(3)
            .unwrap()
            .disjoint_union(&Graph::cycle(3).unwrap());
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }

    #[test]
    fn star_with_many_leaves_is_fast() {
        let star = Graph::new(12, (1..12).map(|v| (0, v))).unwrap();
        let shuffled = star
            .relabel(&[5, 0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11])
            .unwrap();
        assert!(are_isomorphic(&star, &shuffled).unwrap());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
        arb_graph(max_n).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    }

    proptest! {
        #[test]
        fn code_is_permutation_invariant((g, perm) in arb_graph_and_perm(8)) {
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        }

        #[test]
        fn equal_codes_imply_equal_edge_counts(a in arb_graph(6), b in arb_graph(6)) {
            if canonical_code(&a).unwrap() == canonical_code(&b).unwrap() {
                prop_assert_eq!(a.vertex_count(), b.vertex_count());
                prop_assert_eq!(a.edge_count(), b.edge_count());
                prop_assert_eq!(a.degree_sequence().ok(), b.degree_sequence().ok());
            }
        }
    }
}
