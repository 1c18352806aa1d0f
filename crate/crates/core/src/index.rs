//! Degree-based topological indices and the generic indices `I_f`, `II_f`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::majorization::{
    format_param, is_small_integer, parse_real, schur_value, FunctionSpec, Mode,
};
use crate::value::IndexValue;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexSpec {
    /// variable first Zagreb `Σ_v d_v^α`
    M1Alpha(f64),
    /// variable second Zagreb `Σ_uv (d_u d_v)^α`
    M2Alpha(f64),
    /// variable sum exdeg `Σ_v d_v a^{d_v}`
    Sei(f64),
    /// Narumi-Katayama `Π_v d_v`
    Nk,
    /// modified Narumi-Katayama `Π_v d_v^{d_v}`
    NkStar,
    /// first Zagreb, `M1^2`
    M1,
    /// forgotten index, `M1^3`
    F,
    /// inverse degree, `M1^-1`
    Id,
    Wiener,
}

impl IndexSpec {
    pub fn sei(a: f64) -> Result<Self> {
        FunctionSpec::exdeg(a)?;
        Ok(IndexSpec::Sei(a))
    }

    /// Randić index.
    pub fn randic() -> Self {
        IndexSpec::M2Alpha(-0.5)
    }

    /// The `(f, mode)` pair for vertex-based indices.
    pub fn function(&self) -> Option<(FunctionSpec, Mode)> {
        let power = |a: f64| FunctionSpec::power(a).ok().map(|f| (f, Mode::Additive));
        match *self {
            IndexSpec::M1Alpha(a) => power(a),
            IndexSpec::M1 => power(2.0),
            IndexSpec::F => power(3.0),
            IndexSpec::Id => power(-1.0),
            IndexSpec::Sei(a) => FunctionSpec::exdeg(a).ok().map(|f| (f, Mode::Additive)),
            IndexSpec::Nk => Some((FunctionSpec::identity(), Mode::Multiplicative)),
            IndexSpec::NkStar => Some((FunctionSpec::self_power(), Mode::Multiplicative)),
            IndexSpec::M2Alpha(_) | IndexSpec::Wiener => None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let s = text.trim();
        let upper = s.to_ascii_uppercase();
        let bad = || Error::InvalidSpec(format!("unknown index '{text}'"));
        let param = |prefixes: &[&str]| -> Option<Result<f64>> {
            prefixes.iter().find_map(|p| {
                upper.starts_with(p).then(|| {
                    let rest = &s[p.len()..];
                    let rest = rest
                        .strip_prefix('(')
                        .and_then(|r| r.strip_suffix(')'))
                        .unwrap_or(rest);
                    parse_real(rest)
                })
            })
        };
        match upper.as_str() {
            "M1" => return Ok(IndexSpec::M1),
            "F" => return Ok(IndexSpec::F),
            "ID" => return Ok(IndexSpec::Id),
            "NK" => return Ok(IndexSpec::Nk),
            "NK*" | "NKSTAR" | "NK_STAR" => return Ok(IndexSpec::NkStar),
            "W" | "WIENER" => return Ok(IndexSpec::Wiener),
            "M2" => return Ok(IndexSpec::M2Alpha(1.0)),
            "R" | "RANDIC" => return Ok(IndexSpec::randic()),
            _ => {}
        }
        if let Some(a) = param(&["M1^", "M1_ALPHA"]) {
            return Ok(IndexSpec::M1Alpha(a?));
        }
        if let Some(a) = param(&["M2^", "M2_ALPHA"]) {
            return Ok(IndexSpec::M2Alpha(a?));
        }
        if let Some(a) = param(&["SEI_", "SEI"]) {
            return IndexSpec::sei(a?);
        }
        Err(bad())
    }
}

impl fmt::Display for IndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IndexSpec::M1Alpha(a) => write!(f, "M1^{}", format_param(a)),
            IndexSpec::M2Alpha(a) => write!(f, "M2^{}", format_param(a)),
            IndexSpec::Sei(a) => write!(f, "SEI_{}", format_param(a)),
            IndexSpec::Nk => f.write_str("NK"),
            IndexSpec::NkStar => f.write_str("NK*"),
            IndexSpec::M1 => f.write_str("M1"),
            IndexSpec::F => f.write_str("F"),
            IndexSpec::Id => f.write_str("ID"),
            IndexSpec::Wiener => f.write_str("W"),
        }
    }
}

/// Evaluates an index, using the vertex form for every vertex-based kind.
pub fn eval(spec: &IndexSpec, g: &Graph) -> Result<IndexValue> {
    if let Some((f, mode)) = spec.function() {
        let mut degrees = g.degrees();
        let isolated = degrees.iter().position(|&d| d == 0);
        // fold in sorted order so the float result depends on the degree
        // multiset alone
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let values = degrees.into_iter().map(|d| {
            f.eval(d as u32, mode).map_err(|_| {
                Error::Domain(format!(
                    "{spec} undefined: vertex {} has degree 0",
                    isolated.unwrap_or(0)
                ))
            })
        });
        return match mode {
            Mode::Additive => values.sum(),
            Mode::Multiplicative => values.product(),
        };
    }
    match *spec {
        IndexSpec::M2Alpha(alpha) => m2_alpha(alpha, g),
        IndexSpec::Wiener => wiener(g),
        _ => Err(Error::InvalidSpec(format!("{spec} is not supported"))),
    }
}

fn m2_alpha(alpha: f64, g: &Graph) -> Result<IndexValue> {
    let f = FunctionSpec::power(alpha)?;
    g.edges()
        .map(|(u, v)| f.eval((g.degree(u) * g.degree(v)) as u32, Mode::Additive))
        .sum()
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<IndexValue> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let total: u64 = (0..g.vertex_count())
        .map(|s| {
            g.distances_from(s)
                .iter()
                .skip(s + 1)
                .map(|d| d.expect("connected") as u64)
                .sum::<u64>()
        })
        .sum();
    Ok(IndexValue::int(total as i64))
}

fn exp_base(a: f64, d: usize) -> IndexValue {
    if is_small_integer(a) {
        IndexValue::int(a as i64).pow(d as u32)
    } else {
        IndexValue::Float(a.powi(d as i32))
    }
}

/// The edge-sum / edge-product form of SEI, NK* and M2^α.
pub fn eval_edge_form(spec: &IndexSpec, g: &Graph) -> Result<IndexValue> {
    match *spec {
        IndexSpec::Sei(a) => {
            IndexSpec::sei(a)?;
            Ok(g.edges()
                .map(|(u, v)| exp_base(a, g.degree(u)) + exp_base(a, g.degree(v)))
                .sum())
        }
        IndexSpec::NkStar => Ok(g
            .edges()
            .map(|(u, v)| IndexValue::int((g.degree(u) * g.degree(v)) as i64))
            .product()),
        IndexSpec::M2Alpha(alpha) => m2_alpha(alpha, g),
        _ => Err(Error::InvalidSpec(format!("{spec} has no edge form"))),
    }
}

/// `I_f(G) = Σ_u f(d_u)`.
pub fn generic_i(f: &FunctionSpec, g: &Graph) -> Result<IndexValue> {
    schur_value(f, &g.degree_sequence()?, Mode::Additive)
}

/// `II_f(G) = Π_u f(d_u)`.
pub fn generic_ii(f: &FunctionSpec, g: &Graph) -> Result<IndexValue> {
    schur_value(f, &g.degree_sequence()?, Mode::Multiplicative)
}
