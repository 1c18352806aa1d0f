//! Extremal unicyclic graphs and extremal degree sequences.
//!
//! With maximum degree `Δ` the derived quantities are
//! `q = ⌊n/(Δ-1)⌋`, `r = n - q(Δ-1) + 1` and `s = n - Δ + 1`; with `p`
//! pendant vertices they are `m = ⌊(2n-p)/(n-p)⌋` and `t = 2n - p - m(n-p)`.
//! None of these are stored: every caller recomputes them from `(n, Δ)` or
//! `(n, p)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtremalFamily {
    Cycle {
        n: usize,
    },
    /// `C3` with `n-3` pendant edges on one vertex
    UnThree {
        n: usize,
    },
    /// unicyclic graphs with degree sequence `y(n, Δ)`
    H {
        n: usize,
        delta: usize,
    },
    /// unicyclic graphs with degree sequence `z(n, Δ)`
    K {
        n: usize,
        delta: usize,
    },
    /// unicyclic graphs with degree sequence `a(n, p)`
    SeqA {
        n: usize,
        p: usize,
    },
    /// unicyclic graphs with degree sequence `b(n, p)`
    SeqB {
        n: usize,
        p: usize,
    },
}

/// Quantities derived from `(n, Δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaParams {
    pub q: usize,
    pub r: usize,
    pub s: usize,
    /// `q = 1` or `n = 2Δ - 2`: the extremal sequence is `(Δ, s, 2, 1, …)`.
    pub short_branch: bool,
}

impl DeltaParams {
    pub fn new(n: usize, delta: usize) -> Result<Self> {
        check_delta(n, delta)?;
        let q = n / (delta - 1);
        Ok(DeltaParams {
            q,
            r: n + 1 - q * (delta - 1),
            s: n + 1 - delta,
            short_branch: q == 1 || n == 2 * delta - 2,
        })
    }
}

/// Quantities derived from `(n, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PendantParams {
    pub m: usize,
    pub t: usize,
}

impl PendantParams {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        check_pendants(n, p)?;
        let m = (2 * n - p) / (n - p);
        let t = 2 * n - p - m * (n - p);
        debug_assert!(m >= 2 && t <= n - p);
        Ok(PendantParams { m, t })
    }
}

pub fn check_delta(n: usize, delta: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::Range(format!("need n >= 4, got n = {n}")));
    }
    if delta < 3 || delta > n - 1 {
        return Err(Error::Range(format!(
            "need 3 <= Δ <= n-1 = {}, got Δ = {delta}",
            n - 1
        )));
    }
    Ok(())
}

pub fn check_pendants(n: usize, p: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::Range(format!("need n >= 4, got n = {n}")));
    }
    if p < 1 || p > n - 3 {
        return Err(Error::Range(format!(
            "need 1 <= p <= n-3 = {}, got p = {p}",
            n - 3
        )));
    }
    Ok(())
}

fn repeated(parts: &[(u32, usize)]) -> DegreeSequence {
    let values = parts
        .iter()
        .flat_map(|&(v, k)| std::iter::repeat_n(v, k))
        .collect();
    DegreeSequence::from_unsorted(values).expect("extremal sequences are positive")
}

/// `(Δ, 2 × (n-Δ+1), 1 × (Δ-2))`
pub fn y_sequence(n: usize, delta: usize) -> Result<DegreeSequence> {
    check_delta(n, delta)?;
    Ok(repeated(&[
        (delta as u32, 1),
        (2, n - delta + 1),
        (1, delta - 2),
    ]))
}

/// `(Δ, s, 2, 1 × (n-3))` on the short branch, else `(Δ × q, r, 1 × (n-q-1))`.
pub fn z_sequence(n: usize, delta: usize) -> Result<DegreeSequence> {
    let DeltaParams {
        q,
        r,
        s,
        short_branch,
    } = DeltaParams::new(n, delta)?;
    Ok(if short_branch {
        repeated(&[(delta as u32, 1), (s as u32, 1), (2, 1), (1, n - 3)])
    } else {
        repeated(&[(delta as u32, q), (r as u32, 1), (1, n - q - 1)])
    })
}

/// `((m+1) × t, m × (n-p-t), 1 × p)`
pub fn a_sequence(n: usize, p: usize) -> Result<DegreeSequence> {
    let PendantParams { m, t } = PendantParams::new(n, p)?;
    Ok(repeated(&[
        (m as u32 + 1, t),
        (m as u32, n - p - t),
        (1, p),
    ]))
}

/// `(p+2, 2 × (n-p-1), 1 × p)`
pub fn b_sequence(n: usize, p: usize) -> Result<DegreeSequence> {
    check_pendants(n, p)?;
    Ok(repeated(&[(p as u32 + 2, 1), (2, n - p - 1), (1, p)]))
}

/// Incremental construction: a cycle, then paths and pendants hung off it.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn with_cycle(k: usize) -> Self {
        Builder {
            n: k,
            edges: (0..k).map(|i| (i, (i + 1) % k)).collect(),
        }
    }

    fn attach_path(&mut self, root: usize, len: usize) {
        let mut prev = root;
        for _ in 0..len {
            self.edges.push((prev, self.n));
            prev = self.n;
            self.n += 1;
        }
    }

    fn attach_pendants(&mut self, root: usize, count: usize) {
        for _ in 0..count {
            self.attach_path(root, 1);
        }
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, self.edges).expect("constructed edges are valid")
    }
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    Graph::cycle(n)
}

/// `C3` with `n - 3` pendant edges on vertex 0.
pub fn build_un3(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Range(format!("U_n^3 needs n >= 4, got {n}")));
    }
    let mut b = Builder::with_cycle(3);
    b.attach_pendants(0, n - 3);
    Ok(b.finish())
}

/// Cycle `C_k` with `Δ-2` paths of the given lengths hung from vertex 0.
///
/// Every length must be at least 1: a zero-length path would leave the hub
/// with degree below `Δ`.
pub fn build_h_member(n: usize, delta: usize, k: usize, lengths: &[usize]) -> Result<Graph> {
    check_delta(n, delta)?;
    if lengths.len() != delta - 2 {
        return Err(Error::Range(format!(
            "need Δ-2 = {} path lengths, got {}",
            delta - 2,
            lengths.len()
        )));
    }
    if lengths.contains(&0) {
        return Err(Error::Range("path lengths must be >= 1".into()));
    }
    if k < 3 || k > n - delta + 2 {
        return Err(Error::Range(format!(
            "need 3 <= k <= n-Δ+2 = {}, got k = {k}",
            n - delta + 2
        )));
    }
    if k + lengths.iter().sum::<usize>() != n {
        return Err(Error::Range(format!(
            "cycle length plus path lengths must equal n = {n}"
        )));
    }
    let mut b = Builder::with_cycle(k);
    for &len in lengths {
        b.attach_path(0, len);
    }
    Ok(b.finish())
}

/// A member of `H(n, Δ)`: triangle, one long path and `Δ-3` pendants.
pub fn h_representative(n: usize, delta: usize) -> Result<Graph> {
    check_delta(n, delta)?;
    let mut lengths = vec![1; delta - 2];
    lengths[0] = n - delta;
    build_h_member(n, delta, 3, &lengths)
}

/// The representative `K_n^Δ` of `K(n, Δ)`.
pub fn build_k_member(n: usize, delta: usize) -> Result<Graph> {
    let DeltaParams {
        q, r, short_branch, ..
    } = DeltaParams::new(n, delta)?;
    let b = if short_branch {
        let mut b = Builder::with_cycle(3);
        b.attach_pendants(0, delta - 2);
        b.attach_pendants(1, n - 1 - delta);
        b
    } else if r == 1 {
        let mut b = Builder::with_cycle(q);
        for v in 0..q {
            b.attach_pendants(v, delta - 2);
        }
        b
    } else {
        let mut b = Builder::with_cycle(q + 1);
        for v in 0..q {
            b.attach_pendants(v, delta - 2);
        }
        b.attach_pendants(q, r - 2);
        b
    };
    Ok(b.finish())
}

/// `C_{n-p}` with the `p` pendants spread so that every cycle vertex has
/// degree `m` or `m+1`.
pub fn build_a_member(n: usize, p: usize) -> Result<Graph> {
    let PendantParams { m, t } = PendantParams::new(n, p)?;
    let k = n - p;
    let mut b = Builder::with_cycle(k);
    for v in 0..k {
        let target = if v < t { m + 1 } else { m };
        b.attach_pendants(v, target - 2);
    }
    Ok(b.finish())
}

/// Triangle whose vertex 0 carries `p` paths of total length `n - 3`.
pub fn build_b_member(n: usize, p: usize) -> Result<Graph> {
    check_pendants(n, p)?;
    let mut b = Builder::with_cycle(3);
    b.attach_path(0, n - 3 - (p - 1));
    for _ in 1..p {
        b.attach_path(0, 1);
    }
    Ok(b.finish())
}

impl ExtremalFamily {
    pub fn vertex_count(&self) -> usize {
        match *self {
            ExtremalFamily::Cycle { n }
            | ExtremalFamily::UnThree { n }
            | ExtremalFamily::H { n, .. }
            | ExtremalFamily::K { n, .. }
            | ExtremalFamily::SeqA { n, .. }
            | ExtremalFamily::SeqB { n, .. } => n,
        }
    }

    /// The degree sequence defining the family.
    pub fn sequence(&self) -> Result<DegreeSequence> {
        match *self {
            ExtremalFamily::Cycle { n } => {
                if n < 3 {
                    return Err(Error::Range(format!("cycle needs n >= 3, got {n}")));
                }
                Ok(repeated(&[(2, n)]))
            }
            ExtremalFamily::UnThree { n } => {
                if n < 4 {
                    return Err(Error::Range(format!("U_n^3 needs n >= 4, got {n}")));
                }
                Ok(repeated(&[(n as u32 - 1, 1), (2, 2), (1, n - 3)]))
            }
            ExtremalFamily::H { n, delta } => y_sequence(n, delta),
            ExtremalFamily::K { n, delta } => z_sequence(n, delta),
            ExtremalFamily::SeqA { n, p } => a_sequence(n, p),
            ExtremalFamily::SeqB { n, p } => b_sequence(n, p),
        }
    }

    /// One graph of the family.
    pub fn representative(&self) -> Result<Graph> {
        match *self {
            ExtremalFamily::Cycle { n } => build_cycle(n),
            ExtremalFamily::UnThree { n } => build_un3(n),
            ExtremalFamily::H { n, delta } => h_representative(n, delta),
            ExtremalFamily::K { n, delta } => build_k_member(n, delta),
            ExtremalFamily::SeqA { n, p } => build_a_member(n, p),
            ExtremalFamily::SeqB { n, p } => build_b_member(n, p),
        }
    }
}

impl fmt::Display for ExtremalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ExtremalFamily::Cycle { n } => write!(f, "C_{n}"),
            ExtremalFamily::UnThree { n } => write!(f, "U_{n}^3"),
            ExtremalFamily::H { n, delta } => write!(f, "H_{n}^{delta}"),
            ExtremalFamily::K { n, delta } => write!(f, "K_{n}^{delta}"),
            ExtremalFamily::SeqA { n, p } => write!(f, "A({n},{p})"),
            ExtremalFamily::SeqB { n, p } => write!(f, "B({n},{p})"),
        }
    }
}

/// Unicyclic with exactly the family's degree sequence.
pub fn is_member(g: &Graph, family: &ExtremalFamily) -> bool {
    if g.vertex_count() != family.vertex_count() || !g.is_unicyclic() {
        return false;
    }
    match (g.degree_sequence(), family.sequence()) {
        (Ok(actual), Ok(expected)) => actual == expected,
        _ => false,
    }
}
