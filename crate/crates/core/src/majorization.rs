//! Majorization of degree sequences and separable Schur functions
//! `Φ(x) = Σ f(x_i)` (additive) or `Π f(x_i)` (multiplicative).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::value::{format_float, IndexValue};

/// How the per-vertex values are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Additive,
    Multiplicative,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Additive => "I",
            Mode::Multiplicative => "II",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convexity {
    StrictlyConvex,
    StrictlyConcave,
    Neither,
}

/// The function families `f` for which convexity is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionFamily {
    /// `t^α`
    Power(f64),
    /// `t·a^t`, `a > 0`, `a ≠ 1`
    Exdeg(f64),
    /// `t`
    Identity,
    /// `t·ln t` when summed, `t^t` when multiplied
    SelfPower,
}

/// A function together with the left end of the interval `[floor, ∞)` on
/// which its convexity is judged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionSpec {
    pub family: FunctionFamily,
    pub domain_floor: u32,
}

pub(crate) fn is_small_integer(x: f64) -> bool {
    x.fract() == 0.0 && x.abs() <= 4096.0
}

fn exp_neg(k: f64) -> f64 {
    (-k).exp()
}

/// `a <= e^{-k}` with slack for the rounded constant.
fn at_most_exp_neg(a: f64, k: f64) -> bool {
    a <= exp_neg(k) * (1.0 + 1e-12)
}

/// True when `a` is (numerically) exactly `e^{-k}`.
pub(crate) fn is_exp_neg(a: f64, k: f64) -> bool {
    (a - exp_neg(k)).abs() <= 1e-12 * exp_neg(k)
}

impl FunctionSpec {
    pub fn power(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::Domain(format!(
                "exponent must be finite, got {alpha}"
            )));
        }
        Ok(FunctionSpec {
            family: FunctionFamily::Power(alpha),
            domain_floor: 1,
        })
    }

    pub fn exdeg(a: f64) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) || a == 1.0 {
            return Err(Error::Domain(format!(
                "exdeg base must be positive and != 1, got {a}"
            )));
        }
        Ok(FunctionSpec {
            family: FunctionFamily::Exdeg(a),
            domain_floor: 1,
        })
    }

    pub fn identity() -> Self {
        FunctionSpec {
            family: FunctionFamily::Identity,
            domain_floor: 1,
        }
    }

    pub fn self_power() -> Self {
        FunctionSpec {
            family: FunctionFamily::SelfPower,
            domain_floor: 1,
        }
    }

    pub fn with_floor(self, floor: u32) -> Result<Self> {
        if !(1..=2).contains(&floor) {
            return Err(Error::Domain(format!(
                "domain floor must be 1 or 2, got {floor}"
            )));
        }
        Ok(FunctionSpec {
            domain_floor: floor,
            ..self
        })
    }

    /// Convexity of `f` (additive) or of `log f` (multiplicative) on
    /// `[domain_floor, ∞)`.
    pub fn convexity(&self, mode: Mode) -> Convexity {
        use Convexity::*;
        match (mode, self.family) {
            (Mode::Additive, FunctionFamily::Power(alpha)) => {
                if !(0.0..=1.0).contains(&alpha) {
                    StrictlyConvex
                } else if alpha > 0.0 && alpha < 1.0 {
                    StrictlyConcave
                } else {
                    Neither
                }
            }
            (Mode::Additive, FunctionFamily::Exdeg(a)) => {
                // f'' = a^t ln a (2 + t ln a)
                let k = if self.domain_floor >= 2 { 1.0 } else { 2.0 };
                if a > 1.0 || at_most_exp_neg(a, k) {
                    StrictlyConvex
                } else {
                    Neither
                }
            }
            (Mode::Additive, FunctionFamily::Identity) => Neither,
            (Mode::Additive, FunctionFamily::SelfPower) => StrictlyConvex,
            // log t^α = α ln t
            (Mode::Multiplicative, FunctionFamily::Power(alpha)) => match alpha.partial_cmp(&0.0) {
                Some(Ordering::Less) => StrictlyConvex,
                Some(Ordering::Greater) => StrictlyConcave,
                _ => Neither,
            },
            // ln t + t ln a
            (Mode::Multiplicative, FunctionFamily::Exdeg(_)) => StrictlyConcave,
            (Mode::Multiplicative, FunctionFamily::Identity) => StrictlyConcave,
            // t ln t
            (Mode::Multiplicative, FunctionFamily::SelfPower) => StrictlyConvex,
        }
    }

    /// `f(t)`, exact whenever the arithmetic allows it.
    pub fn eval(&self, t: u32, mode: Mode) -> Result<IndexValue> {
        let tb = i64::from(t);
        Ok(match self.family {
            FunctionFamily::Power(alpha) if is_small_integer(alpha) => {
                let e = alpha.abs() as u32;
                if alpha >= 0.0 {
                    IndexValue::int(tb).pow(e)
                } else if t == 0 {
                    return Err(Error::Domain("negative power of zero degree".into()));
                } else {
                    IndexValue::ratio(1, tb).pow(e)
                }
            }
            FunctionFamily::Power(alpha) => {
                if t == 0 && alpha < 0.0 {
                    return Err(Error::Domain("negative power of zero degree".into()));
                }
                IndexValue::Float(f64::from(t).powf(alpha))
            }
            FunctionFamily::Exdeg(a) if is_small_integer(a) => {
                IndexValue::int(tb) * IndexValue::int(a as i64).pow(t)
            }
            FunctionFamily::Exdeg(a) => IndexValue::Float(f64::from(t) * a.powi(t as i32)),
            FunctionFamily::Identity => IndexValue::int(tb),
            FunctionFamily::SelfPower => match mode {
                Mode::Additive if t == 0 => IndexValue::Float(0.0),
                Mode::Additive => IndexValue::Float(f64::from(t) * f64::from(t).ln()),
                Mode::Multiplicative => IndexValue::int(tb).pow(t),
            },
        })
    }

    /// `ln f(t)` for the multiplicative interpretation of `f`.
    pub fn log_value(&self, t: u32) -> f64 {
        let tf = f64::from(t);
        match self.family {
            FunctionFamily::Power(alpha) => alpha * tf.ln(),
            FunctionFamily::Exdeg(a) => tf.ln() + tf * a.ln(),
            FunctionFamily::Identity => tf.ln(),
            FunctionFamily::SelfPower => tf * tf.ln(),
        }
    }

    /// Parses `power(α)`, `exdeg(a)`, `identity` or `self_power`.
    pub fn parse(text: &str) -> Result<Self> {
        let s = text.trim().to_ascii_lowercase();
        let arg = |name: &str| -> Option<String> {
            s.strip_prefix(name)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .map(str::to_string)
        };
        if let Some(a) = arg("power") {
            return FunctionSpec::power(parse_real(&a)?);
        }
        if let Some(a) = arg("exdeg") {
            return FunctionSpec::exdeg(parse_real(&a)?);
        }
        match s.as_str() {
            "identity" | "id" => Ok(FunctionSpec::identity()),
            "self_power" | "selfpower" | "t^t" => Ok(FunctionSpec::self_power()),
            _ => Err(Error::InvalidSpec(format!("unknown function '{text}'"))),
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            FunctionFamily::Power(alpha) => write!(f, "power({})", format_param(alpha)),
            FunctionFamily::Exdeg(a) => write!(f, "exdeg({})", format_param(a)),
            FunctionFamily::Identity => f.write_str("identity"),
            FunctionFamily::SelfPower => f.write_str("self_power"),
        }
    }
}

/// Parses a real parameter: a decimal literal, `p/q`, `e^x` or `exp(x)`.
pub fn parse_real(text: &str) -> Result<f64> {
    let s = text.trim();
    let bad = || Error::InvalidSpec(format!("invalid real number '{text}'"));
    if let Some(rest) = s.strip_prefix("e^") {
        return Ok(rest.trim().parse::<f64>().map_err(|_| bad())?.exp());
    }
    if let Some(inner) = s.strip_prefix("exp(").and_then(|r| r.strip_suffix(')')) {
        return Ok(inner.trim().parse::<f64>().map_err(|_| bad())?.exp());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: f64 = p.trim().parse().map_err(|_| bad())?;
        let q: f64 = q.trim().parse().map_err(|_| bad())?;
        return Ok(p / q);
    }
    let v: f64 = s.parse().map_err(|_| bad())?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

/// Renders a parameter, recognising `e^-1` and `e^-2`.
pub fn format_param(x: f64) -> String {
    if is_exp_neg(x, 1.0) {
        "e^-1".into()
    } else if is_exp_neg(x, 2.0) {
        "e^-2".into()
    } else {
        format_float(x)
    }
}

/// The sequence classes of non-increasing positive `n`-tuples summing to `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceClass {
    S2n {
        n: usize,
    },
    /// additionally `x_1 = Δ`
    S2nDelta {
        n: usize,
        delta: u32,
    },
    /// additionally `x_j = 1` exactly for `j > n - p`
    S2nP {
        n: usize,
        p: usize,
    },
}

/// True iff every prefix sum of `x` dominates that of `y` and the totals agree.
pub fn majorizes(x: &DegreeSequence, y: &DegreeSequence) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let (mut sx, mut sy) = (0u64, 0u64);
    for (&a, &b) in x.as_slice().iter().zip(y.as_slice()) {
        sx += u64::from(a);
        sy += u64::from(b);
        if sx < sy {
            return Ok(false);
        }
    }
    Ok(sx == sy)
}

/// `Σ f(x_i)` or `Π f(x_i)`; every entry must be at least `f.domain_floor`.
pub fn schur_value(f: &FunctionSpec, x: &DegreeSequence, mode: Mode) -> Result<IndexValue> {
    if let Some(&bad) = x.as_slice().iter().find(|&&v| v < f.domain_floor) {
        return Err(Error::Domain(format!(
            "entry {bad} below domain floor {} of {f}",
            f.domain_floor
        )));
    }
    let values = x.as_slice().iter().map(|&t| f.eval(t, mode));
    match mode {
        Mode::Additive => values.sum::<Result<IndexValue>>(),
        Mode::Multiplicative => values.product::<Result<IndexValue>>(),
    }
}

pub fn in_class(x: &DegreeSequence, class: SequenceClass) -> bool {
    let n = match class {
        SequenceClass::S2n { n }
        | SequenceClass::S2nDelta { n, .. }
        | SequenceClass::S2nP { n, .. } => n,
    };
    if x.len() != n || x.sum() != 2 * n as u64 {
        return false;
    }
    match class {
        SequenceClass::S2n { .. } => true,
        SequenceClass::S2nDelta { delta, .. } => x.max() == delta,
        SequenceClass::S2nP { p, .. } => {
            p <= n
                && x.as_slice()
                    .iter()
                    .enumerate()
                    .all(|(j, &v)| (v == 1) == (j + 1 > n - p))
        }
    }
}

/// Outcome of checking `Φ(x)` against `Φ(y)` for `x ≻ y`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderingReport {
    pub phi_x: IndexValue,
    pub phi_y: IndexValue,
    pub convexity: Convexity,
    /// `Φ(x) ≥ Φ(y)` for convex, `≤` for concave; vacuous otherwise.
    pub respected: bool,
    /// The predicted inequality holds strictly.
    pub strict: bool,
    pub identical_inputs: bool,
}

impl OrderingReport {
    /// Strict monotonicity is expected for distinct inputs under strict convexity.
    pub fn strictness_expected(&self) -> bool {
        !self.identical_inputs && self.convexity != Convexity::Neither
    }

    pub fn holds(&self) -> bool {
        self.respected && (!self.strictness_expected() || self.strict)
    }
}

pub fn verify_schur_monotonicity(
    f: &FunctionSpec,
    x: &DegreeSequence,
    y: &DegreeSequence,
    mode: Mode,
    tol: f64,
) -> Result<OrderingReport> {
    if !majorizes(x, y)? {
        return Err(Error::Precondition(format!("{x} does not majorize {y}")));
    }
    let phi_x = schur_value(f, x, mode)?;
    let phi_y = schur_value(f, y, mode)?;
    let convexity = f.convexity(mode);
    let loose = phi_x.compare(&phi_y, tol);
    // strictness uses the untoleranced comparison
    let tight = phi_x.compare(&phi_y, 0.0);
    let (respected, strict) = match convexity {
        Convexity::StrictlyConvex => (loose != Ordering::Less, tight == Ordering::Greater),
        Convexity::StrictlyConcave => (loose != Ordering::Greater, tight == Ordering::Less),
        Convexity::Neither => (true, false),
    };
    Ok(OrderingReport {
        phi_x,
        phi_y,
        convexity,
        respected,
        strict,
        identical_inputs: x == y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn majorization_examples() {
        assert!(majorizes(&ds(&[3, 2, 2, 2, 1]), &ds(&[2, 2, 2, 2, 2])).unwrap());
        assert!(majorizes(&ds(&[4, 2, 2, 1, 1]), &ds(&[3, 2, 2, 2, 1])).unwrap());
        assert!(majorizes(&ds(&[3, 3, 1, 1]), &ds(&[3, 2, 2, 1])).unwrap());
        assert!(!majorizes(&ds(&[3, 2, 2, 1]), &ds(&[3, 3, 1, 1])).unwrap());
        assert!(!majorizes(&ds(&[3, 2]), &ds(&[2, 2])).unwrap());
        assert_eq!(
            majorizes(&ds(&[2, 2]), &ds(&[2, 1, 1])),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn schur_value_examples() {
        let p2 = FunctionSpec::power(2.0).unwrap();
        assert_eq!(
            schur_value(&p2, &ds(&[4, 2, 2, 1, 1]), Mode::Additive).unwrap(),
            IndexValue::int(26)
        );
        let id = FunctionSpec::identity();
        assert_eq!(
            schur_value(&id, &ds(&[2, 2, 2, 2]), Mode::Multiplicative).unwrap(),
            IndexValue::int(16)
        );
        let p1 = FunctionSpec::power(1.0).unwrap();
        assert_eq!(
            schur_value(&p1, &ds(&[3, 3, 2, 2, 1, 1]), Mode::Additive).unwrap(),
            IndexValue::int(12)
        );
        let inv = FunctionSpec::power(-1.0).unwrap();
        assert_eq!(
            schur_value(&inv, &ds(&[2, 2, 2]), Mode::Additive).unwrap(),
            IndexValue::ratio(3, 2)
        );
    }

    #[test]
    fn domain_floor_is_enforced() {
        let f = FunctionSpec::power(2.0).unwrap().with_floor(2).unwrap();
        assert!(matches!(
            schur_value(&f, &ds(&[3, 2, 1]), Mode::Additive),
            Err(Error::Domain(_))
        ));
        assert!(FunctionSpec::power(2.0).unwrap().with_floor(3).is_err());
    }

    #[test]
    fn exdeg_parameter_validation() {
        assert!(FunctionSpec::exdeg(1.0).is_err());
        assert!(FunctionSpec::exdeg(0.0).is_err());
        assert!(FunctionSpec::exdeg(-2.0).is_err());
        assert!(FunctionSpec::exdeg(0.5).is_ok());
    }

    #[test]
    fn convexity_classes() {
        use Convexity::*;
        let add = |f: FunctionSpec| f.convexity(Mode::Additive);
        assert_eq!(add(FunctionSpec::power(-0.5).unwrap()), StrictlyConvex);
        assert_eq!(add(FunctionSpec::power(2.0).unwrap()), StrictlyConvex);
        assert_eq!(add(FunctionSpec::power(0.5).unwrap()), StrictlyConcave);
        assert_eq!(add(FunctionSpec::power(1.0).unwrap()), Neither);
        assert_eq!(add(FunctionSpec::power(0.0).unwrap()), Neither);
        let e1 = (-1.0f64).exp();
        let e2 = (-2.0f64).exp();
        for (a, floor1, floor2) in [
            (2.0, StrictlyConvex, StrictlyConvex),
            (0.1, StrictlyConvex, StrictlyConvex),
            (e2, StrictlyConvex, StrictlyConvex),
            (e1, Neither, StrictlyConvex),
            (0.3, Neither, StrictlyConvex),
            (0.5, Neither, Neither),
        ] {
            let f = FunctionSpec::exdeg(a).unwrap();
            assert_eq!(add(f), floor1, "a = {a}");
            assert_eq!(add(f.with_floor(2).unwrap()), floor2, "a = {a}");
        }
        assert_eq!(
            FunctionSpec::self_power().convexity(Mode::Multiplicative),
            StrictlyConvex
        );
        assert_eq!(
            FunctionSpec::identity().convexity(Mode::Multiplicative),
            StrictlyConcave
        );
    }

    #[test]
    fn in_class_examples() {
        assert!(in_class(&ds(&[4, 2, 2, 1, 1]), SequenceClass::S2n { n: 5 }));
        assert!(in_class(
            &ds(&[3, 3, 3, 2, 1, 1, 1]),
            SequenceClass::S2nDelta { n: 7, delta: 3 }
        ));
        assert!(!in_class(
            &ds(&[3, 3, 3, 2, 1, 1, 1]),
            SequenceClass::S2nDelta { n: 7, delta: 4 }
        ));
        assert!(in_class(
            &ds(&[3, 2, 2, 2, 1]),
            SequenceClass::S2nP { n: 5, p: 1 }
        ));
        assert!(!in_class(
            &ds(&[3, 2, 2, 2, 1]),
            SequenceClass::S2nP { n: 5, p: 2 }
        ));
        assert!(!in_class(&ds(&[3, 2, 2, 2]), SequenceClass::S2n { n: 4 }));
    }

    #[test]
    fn monotonicity_examples() {
        let x = ds(&[4, 2, 2, 1, 1]);
        let y = ds(&[2, 2, 2, 2, 2]);
        let r = verify_schur_monotonicity(
            &FunctionSpec::power(2.0).unwrap(),
            &x,
            &y,
            Mode::Additive,
            1e-9,
        )
        .unwrap();
        assert_eq!(
            (r.phi_x.clone(), r.phi_y.clone()),
            (IndexValue::int(26), IndexValue::int(20))
        );
        assert!(r.holds() && r.strict);

        let r = verify_schur_monotonicity(
            &FunctionSpec::power(0.5).unwrap(),
            &x,
            &y,
            Mode::Additive,
            1e-9,
        )
        .unwrap();
        let sqrt2 = 2f64.sqrt();
        assert!((r.phi_x.to_f64() - (4.0 + 2.0 * sqrt2)).abs() < 1e-12);
        assert!((r.phi_y.to_f64() - 5.0 * sqrt2).abs() < 1e-12);
        assert!((r.phi_x.to_f64() - 6.828427124746).abs() < 1e-9);
        assert!(r.holds() && r.strict);

        let r = verify_schur_monotonicity(
            &FunctionSpec::power(2.0).unwrap(),
            &x,
            &x,
            Mode::Additive,
            1e-9,
        )
        .unwrap();
        assert!(r.identical_inputs && r.holds() && r.phi_x == r.phi_y);

        assert!(matches!(
            verify_schur_monotonicity(
                &FunctionSpec::power(2.0).unwrap(),
                &y,
                &x,
                Mode::Additive,
                1e-9
            ),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn parses_function_specs() {
        assert_eq!(
            FunctionSpec::parse("power(-0.5)").unwrap(),
            FunctionSpec::power(-0.5).unwrap()
        );
        assert_eq!(
            FunctionSpec::parse("exdeg(e^-2)").unwrap().to_string(),
            "exdeg(e^-2)"
        );
        assert_eq!(
            FunctionSpec::parse("identity").unwrap(),
            FunctionSpec::identity()
        );
        assert_eq!(
            FunctionSpec::parse("self_power").unwrap(),
            FunctionSpec::self_power()
        );
        assert!(FunctionSpec::parse("sqrt").is_err());
        assert_eq!(parse_real("1/2").unwrap(), 0.5);
    }

    fn arb_seq() -> impl Strategy<Value = DegreeSequence> {
        proptest::collection::vec(1u32..8, 1..7)
            .prop_map(|v| DegreeSequence::from_unsorted(v).unwrap())
    }

    /// Equal-sum triples of the same length, built by random transfers.
    fn arb_family() -> impl Strategy<Value = Vec<DegreeSequence>> {
        (
            arb_seq(),
            proptest::collection::vec((0usize..8, 0usize..8), 0..12),
            proptest::collection::vec((0usize..8, 0usize..8), 0..12),
        )
            .prop_map(|(base, moves_a, moves_b)| {
                let apply = |moves: &[(usize, usize)]| {
                    let mut v = base.as_slice().to_vec();
                    let len = v.len();
                    for &(i, j) in moves {
                        let (i, j) = (i % len, j % len);
                        if i != j && v[i] > 1 {
                            v[i] -= 1;
                            v[j] += 1;
                        }
                    }
                    DegreeSequence::from_unsorted(v).unwrap()
                };
                vec![base.clone(), apply(&moves_a), apply(&moves_b)]
            })
    }

    proptest! {
        #[test]
        fn majorization_is_reflexive(x in arb_seq()) {
            prop_assert!(majorizes(&x, &x).unwrap());
        }

        #[test]
        fn majorization_is_antisymmetric_and_transitive(fam in arb_family()) {
            let (x, y, z) = (&fam[0], &fam[1], &fam[2]);
            if majorizes(x, y).unwrap() && majorizes(y, x).unwrap() {
                prop_assert_eq!(x, y);
            }
            if majorizes(x, y).unwrap() && majorizes(y, z).unwrap() {
                prop_assert!(majorizes(x, z).unwrap());
            }
            if majorizes(y, z).unwrap() && majorizes(z, x).unwrap() {
                prop_assert!(majorizes(y, x).unwrap());
            }
        }

        #[test]
        fn multiplicative_matches_exp_of_log_sum(x in arb_seq(), which in 0usize..4) {
            let f = [
                FunctionSpec::identity(),
                FunctionSpec::self_power(),
                FunctionSpec::power(0.5).unwrap(),
                FunctionSpec::exdeg(0.3).unwrap(),
            ][which];
            let prod = schur_value(&f, &x, Mode::Multiplicative).unwrap().to_f64();
            let log_sum: f64 = x.as_slice().iter().map(|&t| f.log_value(t)).sum();
            prop_assert!((prod - log_sum.exp()).abs() <= 1e-9 * prod.abs());
        }
    }
}
