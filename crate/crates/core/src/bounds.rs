//! Catalog of sharp bounds on unicyclic graphs and the per-graph audit.
//!
//! Every bound compares an index with its value on an extremal degree
//! sequence. Convex `f` (or log-convex `f` for products) is minimised at the
//! least majorized sequence and maximised at the most majorized one;
//! concave `f` swaps the two ends. The least and most majorized sequences
//! are `(2,…,2)` / `(n-1,2,2,1,…)` without restriction, `y` / `z` with fixed
//! maximum degree, and `a` / `b` with a fixed number of pendant vertices.

use std::fmt;
use std::sync::OnceLock;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::extremal::{is_member, DeltaParams, ExtremalFamily, PendantParams};
use crate::graph::Graph;
use crate::index::{self, IndexSpec};
use crate::majorization::{format_param, is_exp_neg, schur_value, Convexity, FunctionSpec, Mode};
use crate::value::{IndexValue, DEFAULT_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Restriction {
    Unrestricted,
    /// fixed maximum degree `Δ >= 3`
    MaxDegree,
    /// fixed number of pendant vertices `1 <= p <= n-3`
    Pendants,
}

/// What the underlying function must satisfy: convexity of `f` for sums,
/// of `log f` for products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Requirement {
    Convex,
    Concave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sharpness {
    /// equality holds exactly on the extremal set
    Iff,
    /// equality holds somewhere on the extremal set
    Attained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremalSet {
    Cycle,
    UnThree,
    H,
    K,
    SeqA,
    SeqB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundTarget {
    GenericI,
    GenericII,
    VariableZagreb,
    Zagreb1,
    Forgotten,
    InverseDegree,
    SumExdeg,
    NarumiKatayama,
    ModifiedNarumiKatayama,
}

impl BoundTarget {
    pub fn mode(&self) -> Mode {
        match self {
            BoundTarget::GenericII
            | BoundTarget::NarumiKatayama
            | BoundTarget::ModifiedNarumiKatayama => Mode::Multiplicative,
            _ => Mode::Additive,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            BoundTarget::GenericI => "If",
            BoundTarget::GenericII => "IIf",
            BoundTarget::VariableZagreb => "M1a",
            BoundTarget::Zagreb1 => "M1",
            BoundTarget::Forgotten => "F",
            BoundTarget::InverseDegree => "ID",
            BoundTarget::SumExdeg => "SEI",
            BoundTarget::NarumiKatayama => "NK",
            BoundTarget::ModifiedNarumiKatayama => "NKstar",
        }
    }
}

/// A concrete parameter for a bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundParam {
    None,
    Alpha(f64),
    Base(f64),
    Function(FunctionSpec),
}

impl fmt::Display for BoundParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundParam::None => f.write_str("-"),
            BoundParam::Alpha(a) => write!(f, "alpha={}", format_param(*a)),
            BoundParam::Base(a) => write!(f, "a={}", format_param(*a)),
            BoundParam::Function(func) => write!(f, "{func}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundSpec {
    /// stable identifier
    pub id: String,
    pub target: BoundTarget,
    pub side: Side,
    pub restriction: Restriction,
    pub requirement: Requirement,
    /// left end of the interval on which the requirement is checked
    pub domain_floor: u32,
    pub sharp_at: ExtremalSet,
    pub sharpness: Sharpness,
    /// the inequality in words
    pub statement: String,
}

fn extremal_set(requirement: Requirement, side: Side, restriction: Restriction) -> ExtremalSet {
    let least_majorized = matches!(
        (requirement, side),
        (Requirement::Convex, Side::Lower) | (Requirement::Concave, Side::Upper)
    );
    match (restriction, least_majorized) {
        (Restriction::Unrestricted, true) => ExtremalSet::Cycle,
        (Restriction::Unrestricted, false) => ExtremalSet::UnThree,
        (Restriction::MaxDegree, true) => ExtremalSet::H,
        (Restriction::MaxDegree, false) => ExtremalSet::K,
        (Restriction::Pendants, true) => ExtremalSet::SeqA,
        (Restriction::Pendants, false) => ExtremalSet::SeqB,
    }
}

fn formula_text(target: BoundTarget, set: ExtremalSet) -> &'static str {
    use BoundTarget::*;
    use ExtremalSet::*;
    match (target, set) {
        (GenericI, Cycle) => "n f(2)",
        (GenericI, UnThree) => "f(n-1) + 2f(2) + (n-3)f(1)",
        (GenericI, H) => "f(D) + (n-D+1)f(2) + (D-2)f(1)",
        (GenericI, K) => "f(D) + f(n-D+1) + f(2) + (n-3)f(1) | q f(D) + f(r) + (n-q-1)f(1)",
        (GenericI, SeqA) => "t f(m+1) + (n-p-t)f(m) + p f(1)",
        (GenericI, SeqB) => "f(p+2) + (n-p-1)f(2) + p f(1)",
        (GenericII, Cycle) => "f(2)^n",
        (GenericII, UnThree) => "f(n-1) f(2)^2 f(1)^(n-3)",
        (GenericII, H) => "f(D) f(2)^(n-D+1) f(1)^(D-2)",
        (GenericII, K) => "f(D) f(n-D+1) f(2) f(1)^(n-3) | f(D)^q f(r) f(1)^(n-q-1)",
        (GenericII, SeqA) => "f(m+1)^t f(m)^(n-p-t) f(1)^p",
        (GenericII, SeqB) => "f(p+2) f(2)^(n-p-1) f(1)^p",
        (VariableZagreb, Cycle) => "n 2^a",
        (VariableZagreb, UnThree) => "(n-1)^a + 2^(a+1) + n - 3",
        (VariableZagreb, H) => "D^a + (n-D+1)2^a + D - 2",
        (VariableZagreb, K) => "D^a + (n-D+1)^a + 2^a + n - 3 | q D^a + r^a + n - q - 1",
        (VariableZagreb, SeqA) => "t(m+1)^a + (n-p-t)m^a + p",
        (VariableZagreb, SeqB) => "(p+2)^a + (n-p-1)2^a + p",
        (Zagreb1, Cycle) => "4n",
        (Zagreb1, UnThree) => "n^2 - n + 6",
        (Zagreb1, H) => "D^2 + 4n - 3D + 2",
        (Zagreb1, K) => "D^2 + (n-D+1)^2 + n + 1 | q D^2 + r^2 + n - q - 1",
        (Zagreb1, SeqA) => "t(m+1)^2 + (n-p-t)m^2 + p",
        (Zagreb1, SeqB) => "(p+2)^2 + 4(n-p-1) + p",
        (Forgotten, Cycle) => "8n",
        (Forgotten, UnThree) => "(n-1)^3 + n + 13",
        (Forgotten, H) => "D^3 + 8n - 7D + 6",
        (Forgotten, K) => "D^3 + (n-D+1)^3 + n + 5 | q D^3 + r^3 + n - q - 1",
        (Forgotten, SeqA) => "t(m+1)^3 + (n-p-t)m^3 + p",
        (Forgotten, SeqB) => "(p+2)^3 + 8(n-p-1) + p",
        (InverseDegree, Cycle) => "n/2",
        (InverseDegree, UnThree) => "1/(n-1) + n - 2",
        (InverseDegree, H) => "1/D + (n+D-3)/2",
        (InverseDegree, K) => "1/D + 1/(n-D+1) + n - 5/2 | q/D + 1/r + n - q - 1",
        (InverseDegree, SeqA) => "t/(m+1) + (n-p-t)/m + p",
        (InverseDegree, SeqB) => "1/(p+2) + (n-p-1)/2 + p",
        (SumExdeg, Cycle) => "2n a^2",
        (SumExdeg, UnThree) => "(n-1)a^(n-1) + 4a^2 + (n-3)a",
        (SumExdeg, H) => "D a^D + 2(n-D+1)a^2 + (D-2)a",
        (SumExdeg, K) => "D a^D + (n-D+1)a^(n-D+1) + 2a^2 + (n-3)a | q D a^D + r a^r + (n-q-1)a",
        (SumExdeg, SeqA) => "t(m+1)a^(m+1) + (n-p-t)m a^m + p a",
        (SumExdeg, SeqB) => "(p+2)a^(p+2) + 2(n-p-1)a^2 + p a",
        (NarumiKatayama, Cycle) => "2^n",
        (NarumiKatayama, UnThree) => "4(n-1)",
        (NarumiKatayama, H) => "D 2^(n-D+1)",
        (NarumiKatayama, K) => "2D(n-D+1) | D^q r",
        (NarumiKatayama, SeqA) => "(m+1)^t m^(n-p-t)",
        (NarumiKatayama, SeqB) => "(p+2) 2^(n-p-1)",
        (ModifiedNarumiKatayama, Cycle) => "4^n",
        (ModifiedNarumiKatayama, UnThree) => "16(n-1)^(n-1)",
        (ModifiedNarumiKatayama, H) => "D^D 4^(n-D+1)",
        (ModifiedNarumiKatayama, K) => "4 D^D (n-D+1)^(n-D+1) | D^(qD) r^r",
        (ModifiedNarumiKatayama, SeqA) => "(m+1)^((m+1)t) m^(m(n-p-t))",
        (ModifiedNarumiKatayama, SeqB) => "(p+2)^(p+2) 4^(n-p-1)",
    }
}

fn lhs_text(target: BoundTarget) -> &'static str {
    match target {
        BoundTarget::GenericI => "I_f",
        BoundTarget::GenericII => "II_f",
        BoundTarget::VariableZagreb => "M1^a",
        BoundTarget::Zagreb1 => "M1",
        BoundTarget::Forgotten => "F",
        BoundTarget::InverseDegree => "ID",
        BoundTarget::SumExdeg => "SEI_a",
        BoundTarget::NarumiKatayama => "NK",
        BoundTarget::ModifiedNarumiKatayama => "NK*",
    }
}

fn make_bound(
    target: BoundTarget,
    requirement: Requirement,
    restriction: Restriction,
    side: Side,
) -> BoundSpec {
    let sharp_at = extremal_set(requirement, side, restriction);
    let generic = matches!(target, BoundTarget::GenericI | BoundTarget::GenericII);
    let sharpness = if generic || restriction == Restriction::Pendants {
        Sharpness::Attained
    } else {
        Sharpness::Iff
    };
    let regime = match (target, requirement) {
        (BoundTarget::GenericI | BoundTarget::VariableZagreb, Requirement::Convex) => "-convex",
        (BoundTarget::GenericI | BoundTarget::VariableZagreb, Requirement::Concave) => "-concave",
        (BoundTarget::GenericII, Requirement::Convex) => "-logconvex",
        (BoundTarget::GenericII, Requirement::Concave) => "-logconcave",
        _ => "",
    };
    let restriction_tag = match restriction {
        Restriction::Unrestricted => "uni",
        Restriction::MaxDegree => "delta",
        Restriction::Pendants => "pend",
    };
    let side_tag = match side {
        Side::Lower => "lower",
        Side::Upper => "upper",
    };
    let id = format!("thm-{}{regime}-{restriction_tag}-{side_tag}", target.tag());
    let op = if side == Side::Lower { ">=" } else { "<=" };
    let mut statement = format!(
        "{} {op} {}",
        lhs_text(target),
        formula_text(target, sharp_at)
    );
    let domain_floor = if restriction == Restriction::Pendants {
        2
    } else {
        1
    };
    match (target, requirement) {
        (BoundTarget::GenericI, Requirement::Convex) => {
            statement.push_str(&format!("  [f convex on [{domain_floor},inf)]"))
        }
        (BoundTarget::GenericI, Requirement::Concave) => {
            statement.push_str(&format!("  [f concave on [{domain_floor},inf)]"))
        }
        (BoundTarget::GenericII, Requirement::Convex) => {
            statement.push_str(&format!("  [log f convex on [{domain_floor},inf)]"))
        }
        (BoundTarget::GenericII, Requirement::Concave) => {
            statement.push_str(&format!("  [log f concave on [{domain_floor},inf)]"))
        }
        (BoundTarget::VariableZagreb, Requirement::Convex) => {
            statement.push_str("  [a < 0 or a > 1]")
        }
        (BoundTarget::VariableZagreb, Requirement::Concave) => statement.push_str("  [0 < a < 1]"),
        (BoundTarget::SumExdeg, _) if domain_floor == 2 => {
            statement.push_str("  [a > 1 or 0 < a <= e^-1]")
        }
        (BoundTarget::SumExdeg, _) => statement.push_str("  [a > 1 or 0 < a <= e^-2]"),
        _ => {}
    }
    BoundSpec {
        id,
        target,
        side,
        restriction,
        requirement,
        domain_floor,
        sharp_at,
        sharpness,
        statement,
    }
}

/// Every bound, in a fixed order.
pub fn catalog() -> &'static [BoundSpec] {
    static CATALOG: OnceLock<Vec<BoundSpec>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        use BoundTarget::*;
        use Requirement::*;
        let families = [
            (GenericI, Convex),
            (GenericI, Concave),
            (GenericII, Convex),
            (GenericII, Concave),
            (VariableZagreb, Convex),
            (VariableZagreb, Concave),
            (Zagreb1, Convex),
            (Forgotten, Convex),
            (InverseDegree, Convex),
            (SumExdeg, Convex),
            (ModifiedNarumiKatayama, Convex),
            (NarumiKatayama, Concave),
        ];
        let mut out = Vec::new();
        for restriction in [
            Restriction::Unrestricted,
            Restriction::MaxDegree,
            Restriction::Pendants,
        ] {
            for &(target, requirement) in &families {
                for side in [Side::Lower, Side::Upper] {
                    out.push(make_bound(target, requirement, restriction, side));
                }
            }
        }
        out
    })
}

pub fn bound_by_id(id: &str) -> Option<&'static BoundSpec> {
    catalog().iter().find(|b| b.id == id)
}

/// Structural parameters of the graph (or hypothetical graph) a bound is
/// evaluated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundContext {
    pub n: usize,
    pub max_degree: Option<usize>,
    pub pendants: Option<usize>,
}

impl BoundContext {
    pub fn of_graph(g: &Graph) -> Self {
        BoundContext {
            n: g.vertex_count(),
            max_degree: Some(g.max_degree()),
            pendants: Some(g.pendant_count()),
        }
    }
}

impl BoundSpec {
    /// The function `f` behind the bound, evaluated on `[1, ∞)`.
    pub fn function(&self, param: &BoundParam) -> Result<FunctionSpec> {
        let mismatch =
            || Error::InvalidSpec(format!("parameter {param} does not fit bound {}", self.id));
        match (self.target, param) {
            (BoundTarget::GenericI | BoundTarget::GenericII, BoundParam::Function(f)) => {
                f.with_floor(1)
            }
            (BoundTarget::VariableZagreb, BoundParam::Alpha(a)) => FunctionSpec::power(*a),
            (BoundTarget::SumExdeg, BoundParam::Base(a)) => FunctionSpec::exdeg(*a),
            (BoundTarget::Zagreb1, BoundParam::None) => FunctionSpec::power(2.0),
            (BoundTarget::Forgotten, BoundParam::None) => FunctionSpec::power(3.0),
            (BoundTarget::InverseDegree, BoundParam::None) => FunctionSpec::power(-1.0),
            (BoundTarget::NarumiKatayama, BoundParam::None) => Ok(FunctionSpec::identity()),
            (BoundTarget::ModifiedNarumiKatayama, BoundParam::None) => {
                Ok(FunctionSpec::self_power())
            }
            _ => Err(mismatch()),
        }
    }

    /// The named index whose value the bound constrains, if any.
    pub fn index_spec(&self, param: &BoundParam) -> Option<IndexSpec> {
        match (self.target, param) {
            (BoundTarget::VariableZagreb, BoundParam::Alpha(a)) => Some(IndexSpec::M1Alpha(*a)),
            (BoundTarget::SumExdeg, BoundParam::Base(a)) => Some(IndexSpec::Sei(*a)),
            (BoundTarget::Zagreb1, _) => Some(IndexSpec::M1),
            (BoundTarget::Forgotten, _) => Some(IndexSpec::F),
            (BoundTarget::InverseDegree, _) => Some(IndexSpec::Id),
            (BoundTarget::NarumiKatayama, _) => Some(IndexSpec::Nk),
            (BoundTarget::ModifiedNarumiKatayama, _) => Some(IndexSpec::NkStar),
            _ => None,
        }
    }

    /// Whether the parameter lies in the range where the bound is proven.
    pub fn accepts_param(&self, param: &BoundParam) -> bool {
        let Ok(f) = self
            .function(param)
            .and_then(|f| f.with_floor(self.domain_floor))
        else {
            return false;
        };
        let wanted = match self.requirement {
            Requirement::Convex => Convexity::StrictlyConvex,
            Requirement::Concave => Convexity::StrictlyConcave,
        };
        f.convexity(self.target.mode()) == wanted
    }

    /// Parameter sits on the closed end of the proven exdeg range.
    pub fn is_boundary_param(&self, param: &BoundParam) -> bool {
        let k = if self.domain_floor >= 2 { 1.0 } else { 2.0 };
        match param {
            BoundParam::Base(a) => is_exp_neg(*a, k),
            BoundParam::Function(f) => match f.family {
                crate::majorization::FunctionFamily::Exdeg(a) => {
                    self.target.mode() == Mode::Additive && is_exp_neg(a, k)
                }
                _ => false,
            },
            _ => false,
        }
    }

    /// Checks every applicability clause, naming the first violated one.
    pub fn check_applicable(&self, ctx: &BoundContext, param: &BoundParam) -> Result<()> {
        if ctx.n < 4 {
            return Err(Error::Precondition(format!(
                "{}: needs n >= 4, got {}",
                self.id, ctx.n
            )));
        }
        match self.restriction {
            Restriction::Unrestricted => {}
            Restriction::MaxDegree => match ctx.max_degree {
                Some(d) if (3..ctx.n).contains(&d) => {}
                other => {
                    return Err(Error::Precondition(format!(
                        "{}: needs 3 <= Δ <= n-1, got {other:?}",
                        self.id
                    )))
                }
            },
            Restriction::Pendants => match ctx.pendants {
                Some(p) if p >= 1 && p + 3 <= ctx.n => {}
                other => {
                    return Err(Error::Precondition(format!(
                        "{}: needs 1 <= p <= n-3, got {other:?}",
                        self.id
                    )))
                }
            },
        }
        self.function(param)?;
        if !self.accepts_param(param) {
            return Err(Error::Precondition(format!(
                "{}: parameter {param} outside the proven range",
                self.id
            )));
        }
        Ok(())
    }

    /// The extremal family for the given parameters.
    pub fn family(&self, ctx: &BoundContext) -> Result<ExtremalFamily> {
        let n = ctx.n;
        let need_delta = || {
            ctx.max_degree
                .ok_or_else(|| Error::Precondition("Δ required".into()))
        };
        let need_p = || {
            ctx.pendants
                .ok_or_else(|| Error::Precondition("p required".into()))
        };
        Ok(match self.sharp_at {
            ExtremalSet::Cycle => ExtremalFamily::Cycle { n },
            ExtremalSet::UnThree => ExtremalFamily::UnThree { n },
            ExtremalSet::H => ExtremalFamily::H {
                n,
                delta: need_delta()?,
            },
            ExtremalSet::K => ExtremalFamily::K {
                n,
                delta: need_delta()?,
            },
            ExtremalSet::SeqA => ExtremalFamily::SeqA { n, p: need_p()? },
            ExtremalSet::SeqB => ExtremalFamily::SeqB { n, p: need_p()? },
        })
    }
}

/// `(point, multiplicity)` pairs of the extremal degree sequence.
fn extremal_terms(set: ExtremalSet, ctx: &BoundContext) -> Result<Vec<(u32, usize)>> {
    let n = ctx.n;
    let delta = ctx.max_degree.unwrap_or(0);
    let p = ctx.pendants.unwrap_or(0);
    let u = |x: usize| x as u32;
    Ok(match set {
        ExtremalSet::Cycle => vec![(2, n)],
        ExtremalSet::UnThree => vec![(u(n - 1), 1), (2, 2), (1, n - 3)],
        ExtremalSet::H => vec![(u(delta), 1), (2, n - delta + 1), (1, delta - 2)],
        ExtremalSet::K => {
            let DeltaParams {
                q,
                r,
                s,
                short_branch,
            } = DeltaParams::new(n, delta)?;
            if short_branch {
                vec![(u(delta), 1), (u(s), 1), (2, 1), (1, n - 3)]
            } else {
                vec![(u(delta), q), (u(r), 1), (1, n - q - 1)]
            }
        }
        ExtremalSet::SeqA => {
            let PendantParams { m, t } = PendantParams::new(n, p)?;
            vec![(u(m + 1), t), (u(m), n - p - t), (1, p)]
        }
        ExtremalSet::SeqB => vec![(u(p + 2), 1), (2, n - p - 1), (1, p)],
    })
}

/// The generic bound `Σ k·f(x)` or `Π f(x)^k` over the extremal terms.
fn generic_value(f: &FunctionSpec, mode: Mode, terms: &[(u32, usize)]) -> Result<IndexValue> {
    let mut acc = match mode {
        Mode::Additive => IndexValue::zero(),
        Mode::Multiplicative => IndexValue::one(),
    };
    for &(point, count) in terms {
        let fx = f.eval(point, mode)?;
        acc = match mode {
            Mode::Additive => acc + IndexValue::int(count as i64) * fx,
            Mode::Multiplicative => acc * fx.pow(count as u32),
        };
    }
    Ok(acc)
}

fn int(x: usize) -> IndexValue {
    IndexValue::int(x as i64)
}

fn ipow(base: usize, exp: usize) -> IndexValue {
    int(base).pow(exp as u32)
}

fn inv(x: usize) -> IndexValue {
    IndexValue::ratio(1, x as i64)
}

/// Closed forms of the named-index bounds.
fn named_value(b: &BoundSpec, ctx: &BoundContext, param: &BoundParam) -> Result<IndexValue> {
    use BoundTarget::*;
    use ExtremalSet::*;
    let n = ctx.n;
    let d = ctx.max_degree.unwrap_or(0);
    let p = ctx.pendants.unwrap_or(0);
    let delta = if matches!(b.sharp_at, H | K) {
        Some(DeltaParams::new(n, d)?)
    } else {
        None
    };
    let pend = if b.sharp_at == SeqA {
        Some(PendantParams::new(n, p)?)
    } else {
        None
    };
    let dp = delta.unwrap_or(DeltaParams {
        q: 0,
        r: 0,
        s: 0,
        short_branch: false,
    });
    let (q, r, s, short) = (dp.q, dp.r, dp.s, dp.short_branch);
    let PendantParams { m, t } = pend.unwrap_or(PendantParams { m: 0, t: 0 });

    Ok(match b.target {
        VariableZagreb => {
            let BoundParam::Alpha(alpha) = *param else {
                unreachable!("checked by function()")
            };
            let f = FunctionSpec::power(alpha)?;
            let pw = |x: usize| f.eval(x as u32, Mode::Additive);
            match b.sharp_at {
                Cycle => int(n) * pw(2)?,
                UnThree => pw(n - 1)? + int(2) * pw(2)? + int(n - 3),
                H => pw(d)? + int(n - d + 1) * pw(2)? + int(d - 2),
                K if short => pw(d)? + pw(s)? + pw(2)? + int(n - 3),
                K => int(q) * pw(d)? + pw(r)? + int(n - q - 1),
                SeqA => int(t) * pw(m + 1)? + int(n - p - t) * pw(m)? + int(p),
                SeqB => pw(p + 2)? + int(n - p - 1) * pw(2)? + int(p),
            }
        }
        Zagreb1 => match b.sharp_at {
            Cycle => int(4 * n),
            UnThree => int(n * n - n + 6),
            H => int(d * d + 4 * n + 2 - 3 * d),
            K if short => int(d * d + s * s + n + 1),
            K => int(q * d * d + r * r + n - q - 1),
            SeqA => int(t * (m + 1) * (m + 1) + (n - p - t) * m * m + p),
            SeqB => int((p + 2) * (p + 2) + 4 * (n - p - 1) + p),
        },
        Forgotten => match b.sharp_at {
            Cycle => int(8 * n),
            UnThree => ipow(n - 1, 3) + int(n + 13),
            H => ipow(d, 3) + int(8 * n + 6 - 7 * d),
            K if short => ipow(d, 3) + ipow(s, 3) + int(n + 5),
            K => int(q) * ipow(d, 3) + ipow(r, 3) + int(n - q - 1),
            SeqA => int(t) * ipow(m + 1, 3) + int(n - p - t) * ipow(m, 3) + int(p),
            SeqB => ipow(p + 2, 3) + int(8 * (n - p - 1) + p),
        },
        InverseDegree => match b.sharp_at {
            Cycle => IndexValue::ratio(n as i64, 2),
            UnThree => inv(n - 1) + int(n - 2),
            H => inv(d) + IndexValue::ratio((n + d - 3) as i64, 2),
            K if short => inv(d) + inv(s) + IndexValue::ratio(2 * n as i64 - 5, 2),
            K => IndexValue::ratio(q as i64, d as i64) + inv(r) + int(n - q - 1),
            SeqA => {
                IndexValue::ratio(t as i64, (m + 1) as i64)
                    + IndexValue::ratio((n - p - t) as i64, m as i64)
                    + int(p)
            }
            SeqB => inv(p + 2) + IndexValue::ratio((n - p - 1) as i64, 2) + int(p),
        },
        SumExdeg => {
            let BoundParam::Base(a) = *param else {
                unreachable!("checked by function()")
            };
            let ap = |k: usize| -> IndexValue {
                if crate::majorization::is_small_integer(a) {
                    IndexValue::int(a as i64).pow(k as u32)
                } else {
                    IndexValue::Float(a.powi(k as i32))
                }
            };
            match b.sharp_at {
                Cycle => int(2 * n) * ap(2),
                UnThree => int(n - 1) * ap(n - 1) + int(4) * ap(2) + int(n - 3) * ap(1),
                H => int(d) * ap(d) + int(2 * (n - d + 1)) * ap(2) + int(d - 2) * ap(1),
                K if short => int(d) * ap(d) + int(s) * ap(s) + int(2) * ap(2) + int(n - 3) * ap(1),
                K => int(q * d) * ap(d) + int(r) * ap(r) + int(n - q - 1) * ap(1),
                SeqA => {
                    int(t * (m + 1)) * ap(m + 1) + int((n - p - t) * m) * ap(m) + int(p) * ap(1)
                }
                SeqB => int(p + 2) * ap(p + 2) + int(2 * (n - p - 1)) * ap(2) + int(p) * ap(1),
            }
        }
        NarumiKatayama => match b.sharp_at {
            Cycle => ipow(2, n),
            UnThree => int(4 * (n - 1)),
            H => int(d) * ipow(2, n - d + 1),
            K if short => int(2 * d * s),
            K => ipow(d, q) * int(r),
            SeqA => ipow(m + 1, t) * ipow(m, n - p - t),
            SeqB => int(p + 2) * ipow(2, n - p - 1),
        },
        ModifiedNarumiKatayama => match b.sharp_at {
            Cycle => ipow(4, n),
            UnThree => int(16) * ipow(n - 1, n - 1),
            H => ipow(d, d) * ipow(4, n - d + 1),
            K if short => int(4) * ipow(d, d) * ipow(s, s),
            K => ipow(d, q * d) * ipow(r, r),
            SeqA => ipow(m + 1, (m + 1) * t) * ipow(m, m * (n - p - t)),
            SeqB => ipow(p + 2, p + 2) * ipow(4, n - p - 1),
        },
        GenericI | GenericII => unreachable!("generic bounds use generic_value"),
    })
}

/// Closed-form value of bound `b`; errors name the violated clause.
pub fn eval_bound(b: &BoundSpec, ctx: &BoundContext, param: &BoundParam) -> Result<IndexValue> {
    b.check_applicable(ctx, param)?;
    match b.target {
        BoundTarget::GenericI | BoundTarget::GenericII => {
            let f = b.function(param)?;
            generic_value(&f, b.target.mode(), &extremal_terms(b.sharp_at, ctx)?)
        }
        _ => named_value(b, ctx, param),
    }
}

/// The bound expressed through the generic `I_f` / `II_f` bound with the
/// matching function; used to cross-check the named closed forms.
pub fn eval_as_generic(
    b: &BoundSpec,
    ctx: &BoundContext,
    param: &BoundParam,
) -> Result<IndexValue> {
    b.check_applicable(ctx, param)?;
    let f = b.function(param)?;
    generic_value(&f, b.target.mode(), &extremal_terms(b.sharp_at, ctx)?)
}

/// Value of the bounded quantity on `g`.
pub fn eval_target(b: &BoundSpec, g: &Graph, param: &BoundParam) -> Result<IndexValue> {
    match b.index_spec(param) {
        Some(spec) => index::eval(&spec, g),
        None => schur_value(&b.function(param)?, &g.degree_sequence()?, b.target.mode()),
    }
}

/// Parameter grids used by the audit.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub alpha_grid: Vec<f64>,
    pub a_grid: Vec<f64>,
    pub tolerance: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            alpha_grid: vec![-2.0, -1.0, -0.5, 0.5, 2.0, 3.0],
            a_grid: vec![0.1, (-2.0f64).exp(), (-1.0f64).exp(), 2.0],
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl AuditConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Range("tolerance must be positive".into()));
        }
        if self.alpha_grid.is_empty() || self.a_grid.is_empty() {
            return Err(Error::Range("parameter grids must be non-empty".into()));
        }
        for &a in &self.a_grid {
            FunctionSpec::exdeg(a)?;
        }
        for &alpha in &self.alpha_grid {
            FunctionSpec::power(alpha)?;
        }
        Ok(())
    }

    fn function_grid(&self) -> Vec<FunctionSpec> {
        let mut out: Vec<FunctionSpec> = self
            .alpha_grid
            .iter()
            .filter_map(|&a| FunctionSpec::power(a).ok())
            .collect();
        out.extend(
            self.a_grid
                .iter()
                .filter_map(|&a| FunctionSpec::exdeg(a).ok()),
        );
        out.push(FunctionSpec::identity());
        out.push(FunctionSpec::self_power());
        out
    }

    /// Grid parameters inside the proven range of `b`.
    pub fn params_for(&self, b: &BoundSpec) -> Vec<BoundParam> {
        let candidates: Vec<BoundParam> = match b.target {
            BoundTarget::GenericI | BoundTarget::GenericII => self
                .function_grid()
                .into_iter()
                .map(BoundParam::Function)
                .collect(),
            BoundTarget::VariableZagreb => self
                .alpha_grid
                .iter()
                .map(|&a| BoundParam::Alpha(a))
                .collect(),
            BoundTarget::SumExdeg => self.a_grid.iter().map(|&a| BoundParam::Base(a)).collect(),
            _ => vec![BoundParam::None],
        };
        candidates
            .into_iter()
            .filter(|p| b.accepts_param(p))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditEntry {
    pub bound_id: String,
    pub param: BoundParam,
    pub applicable: bool,
    pub value: Option<IndexValue>,
    pub bound_value: Option<IndexValue>,
    pub satisfied: bool,
    pub tight: bool,
    pub member: bool,
    /// tightness is claimed to coincide with membership
    pub iff: bool,
    /// parameter on the closed end of a proven range
    pub boundary: bool,
}

impl AuditEntry {
    /// Satisfied, and for characterised bounds tight exactly on members.
    pub fn is_clean(&self) -> bool {
        !self.applicable || (self.satisfied && (!self.iff || self.tight == self.member))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub graph_id: String,
    pub n: usize,
    pub max_degree: usize,
    pub pendants: usize,
    pub degrees: String,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn violations(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| e.applicable && !e.satisfied)
    }

    pub fn sharpness_mismatches(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries
            .iter()
            .filter(|e| e.applicable && e.iff && e.tight != e.member)
    }

    pub fn is_clean(&self) -> bool {
        self.entries.iter().all(AuditEntry::is_clean)
    }

    /// Line-oriented human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "graph {} n={} max_degree={} pendants={} degrees={}\n",
            self.graph_id, self.n, self.max_degree, self.pendants, self.degrees
        );
        if self.entries.is_empty() {
            out.push_str("no applicable bounds (n < 4)\n");
        }
        for e in &self.entries {
            let param = e.param.to_string();
            if !e.applicable {
                out.push_str(&format!(
                    "{:<34} {:<20} not applicable\n",
                    e.bound_id, param
                ));
                continue;
            }
            let show =
                |v: &Option<IndexValue>| v.as_ref().map(IndexValue::to_string).unwrap_or_default();
            out.push_str(&format!(
                "{:<34} {:<20} value={} bound={} {}{}{}{}{}\n",
                e.bound_id,
                param,
                show(&e.value),
                show(&e.bound_value),
                if e.satisfied { "ok" } else { "VIOLATED" },
                if e.tight { " tight" } else { "" },
                if e.member { " member" } else { "" },
                if e.iff && e.tight != e.member {
                    " SHARPNESS-MISMATCH"
                } else {
                    ""
                },
                if e.boundary { " [boundary]" } else { "" },
            ));
        }
        let violations = self.violations().count();
        let mismatches = self.sharpness_mismatches().count();
        out.push_str(&format!(
            "summary: {} checks, {violations} violations, {mismatches} sharpness mismatches\n",
            self.entries.iter().filter(|e| e.applicable).count()
        ));
        out
    }

    pub const TABULAR_HEADER: &'static str =
        "graph_id,bound_id,param,value,bound_value,satisfied,tight,member";

    /// One CSV row per `(bound, parameter)`, without header.
    pub fn to_tabular_rows(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let show =
                |v: &Option<IndexValue>| v.as_ref().map(IndexValue::exact_repr).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                self.graph_id,
                e.bound_id,
                e.param,
                show(&e.value),
                show(&e.bound_value),
                e.satisfied,
                e.tight,
                e.member
            ));
        }
        out
    }
}

/// Checks `g` against every catalog bound over the configured grids.
///
/// Graphs on three vertices have no applicable bounds (the only one is `C3`).
pub fn audit(g: &Graph, config: &AuditConfig) -> Result<AuditReport> {
    if !g.is_unicyclic() {
        return Err(Error::NotUnicyclic);
    }
    config.validate()?;
    let ctx = BoundContext::of_graph(g);
    let graph_id = canonical_code(g)
        .map(|c| c.to_hex())
        .unwrap_or_else(|_| "input".into());
    let mut report = AuditReport {
        graph_id,
        n: ctx.n,
        max_degree: g.max_degree(),
        pendants: g.pendant_count(),
        degrees: g.degree_sequence()?.to_string(),
        entries: Vec::new(),
    };
    if ctx.n < 4 {
        return Ok(report);
    }
    let tol = config.tolerance;
    for b in catalog() {
        for param in config.params_for(b) {
            let boundary = b.is_boundary_param(&param);
            let iff = b.sharpness == Sharpness::Iff;
            if b.check_applicable(&ctx, &param).is_err() {
                report.entries.push(AuditEntry {
                    bound_id: b.id.clone(),
                    param,
                    applicable: false,
                    value: None,
                    bound_value: None,
                    satisfied: true,
                    tight: false,
                    member: false,
                    iff,
                    boundary,
                });
                continue;
            }
            let value = eval_target(b, g, &param)?;
            let bound_value = eval_bound(b, &ctx, &param)?;
            let ord = value.compare(&bound_value, tol);
            let satisfied = match b.side {
                Side::Lower => ord != std::cmp::Ordering::Less,
                Side::Upper => ord != std::cmp::Ordering::Greater,
            };
            let member = is_member(g, &b.family(&ctx)?);
            report.entries.push(AuditEntry {
                bound_id: b.id.clone(),
                param,
                applicable: true,
                tight: ord == std::cmp::Ordering::Equal,
                value: Some(value),
                bound_value: Some(bound_value),
                satisfied,
                member,
                iff,
                boundary,
            });
        }
    }
    Ok(report)
}
