//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use unicyclic::bounds::{
    catalog, eval_bound, AuditConfig, BoundContext, BoundParam, Restriction, Sharpness, Side,
};
use unicyclic::canon::canonical_code;
use unicyclic::enumerate::{
    enumerate_by_edge_subsets, enumerate_unicyclic_with_codes, extremal_search, EnumerationFilter,
    SearchTarget,
};
use unicyclic::extremal::{
    a_sequence, b_sequence, build_cycle, build_un3, y_sequence, z_sequence, ExtremalFamily,
};
use unicyclic::index::{eval, eval_edge_form};
use unicyclic::majorization::{majorizes, verify_schur_monotonicity, Convexity};
use unicyclic::verify::{verify, VerifyOptions, VerifySummary};
use unicyclic::{CanonicalCode, DegreeSequence, FunctionSpec, Graph, IndexSpec, IndexValue, Mode};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_graphs(n: usize) -> Vec<(CanonicalCode, Graph)> {
    enumerate_unicyclic_with_codes(n, &EnumerationFilter::default()).expect("n in range")
}

fn ac1_soundness(summary: &VerifySummary, secs: f64) -> Outcome {
    ensure(summary.violations() == 0, || {
        format!("{} violations\n{summary}", summary.violations())
    })?;
    ensure(summary.graphs_checked == 2 + 5 + 13 + 33 + 89, || {
        format!("checked {} graphs", summary.graphs_checked)
    })?;
    ensure(secs < 120.0, || format!("took {secs:.1}s single-threaded"))?;
    let checks: usize = summary.cells.iter().map(|c| c.graphs).sum();
    Ok(format!(
        "{} graphs, {checks} bound checks, 0 violations, {secs:.2}s single-threaded",
        summary.graphs_checked
    ))
}

fn expected_members(n: usize, family: &ExtremalFamily) -> BTreeSet<CanonicalCode> {
    let seq = family.sequence().expect("valid family");
    all_graphs(n)
        .into_iter()
        .filter(|(_, g)| g.degree_sequence().unwrap() == seq)
        .map(|(c, _)| c)
        .collect()
}

fn ac2_sharpness(summary: &VerifySummary) -> Outcome {
    let mut checked = 0;
    for cell in summary.cells.iter().filter(|c| c.iff) {
        let b = catalog()
            .iter()
            .find(|b| b.id == cell.key.bound_id)
            .unwrap();
        let n = cell.key.n;
        let ctx = BoundContext {
            n,
            max_degree: cell.key.restricted_value,
            pendants: None,
        };
        let family = b.family(&ctx).map_err(|e| e.to_string())?;
        let expected = match family {
            ExtremalFamily::Cycle { n } => {
                BTreeSet::from([canonical_code(&build_cycle(n).unwrap()).unwrap()])
            }
            ExtremalFamily::UnThree { n } => {
                BTreeSet::from([canonical_code(&build_un3(n).unwrap()).unwrap()])
            }
            other => expected_members(n, &other),
        };
        ensure(!expected.is_empty(), || {
            format!("{family} has no member at n={n}")
        })?;
        ensure(cell.tight == expected, || {
            format!(
                "{} {} n={} restricted={:?}: {} tight vs {} expected",
                cell.key.bound_id,
                cell.key.param,
                n,
                cell.key.restricted_value,
                cell.tight.len(),
                expected.len()
            )
        })?;
        checked += 1;
    }
    ensure(checked > 0, || "no characterised cells".into())?;
    Ok(format!(
        "{checked} characterised cells, tight set = extremal set in all"
    ))
}

fn ac3_golden() -> Outcome {
    let c = |n| build_cycle(n).unwrap();
    let u = |n| build_un3(n).unwrap();
    let ev = |spec: IndexSpec, g: &Graph| eval(&spec, g).unwrap();
    let bound = |id: &str, n, d, p| {
        let b = catalog().iter().find(|b| b.id == id).unwrap();
        eval_bound(
            b,
            &BoundContext {
                n,
                max_degree: d,
                pendants: p,
            },
            &BoundParam::None,
        )
        .unwrap()
    };
    let cases: Vec<(&str, IndexValue, IndexValue)> = vec![
        ("M1(C5)", ev(IndexSpec::M1, &c(5)), IndexValue::int(20)),
        ("M1(U5)", ev(IndexSpec::M1, &u(5)), IndexValue::int(26)),
        ("F(C5)", ev(IndexSpec::F, &c(5)), IndexValue::int(40)),
        ("ID(C6)", ev(IndexSpec::Id, &c(6)), IndexValue::int(3)),
        (
            "NK*(C4)",
            ev(IndexSpec::NkStar, &c(4)),
            IndexValue::int(256),
        ),
        (
            "NK*(U4)",
            ev(IndexSpec::NkStar, &u(4)),
            IndexValue::int(432),
        ),
        ("NK(U6)", ev(IndexSpec::Nk, &u(6)), IndexValue::int(20)),
        ("NK(C6)", ev(IndexSpec::Nk, &c(6)), IndexValue::int(64)),
        (
            "SEI2(C4)",
            ev(IndexSpec::Sei(2.0), &c(4)),
            IndexValue::int(32),
        ),
        (
            "M1 lower n=7 D=4",
            bound("thm-M1-delta-lower", 7, Some(4), None),
            IndexValue::int(34),
        ),
        (
            "M1 upper n=7 D=3",
            bound("thm-M1-delta-upper", 7, Some(3), None),
            IndexValue::int(34),
        ),
        (
            "M1 lower n=6 p=2",
            bound("thm-M1-pend-lower", 6, None, Some(2)),
            IndexValue::int(28),
        ),
        (
            "M1 upper n=6 p=2",
            bound("thm-M1-pend-upper", 6, None, Some(2)),
            IndexValue::int(30),
        ),
        (
            "M1 upper n=5",
            bound("thm-M1-uni-upper", 5, None, None),
            IndexValue::int(26),
        ),
        (
            "NK* upper n=4",
            bound("thm-NKstar-uni-upper", 4, None, None),
            IndexValue::int(432),
        ),
        (
            "NK lower n=6",
            bound("thm-NK-uni-lower", 6, None, None),
            IndexValue::int(20),
        ),
        (
            "ID lower n=6",
            bound("thm-ID-uni-lower", 6, None, None),
            IndexValue::int(3),
        ),
    ];
    for (name, got, want) in &cases {
        // exact equality, including the representation
        ensure(got == want, || format!("{name}: got {got}, want {want}"))?;
    }
    Ok(format!("{} exact values", cases.len()))
}

fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    for _ in 0..rng.random_range(0..=n) {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

fn ac4_identities() -> Outcome {
    let mut graphs: Vec<Graph> = (3..=8)
        .flat_map(|n| all_graphs(n).into_iter().map(|(_, g)| g))
        .collect();
    let enumerated = graphs.len();
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    graphs.extend((0..1000).map(|_| {
        let n = rng.random_range(2..=20);
        random_connected(&mut rng, n)
    }));
    let bases = AuditConfig::default().a_grid;
    for g in &graphs {
        for &a in &bases {
            let spec = IndexSpec::Sei(a);
            let (v, e) = (eval(&spec, g).unwrap(), eval_edge_form(&spec, g).unwrap());
            ensure(v.approx_eq(&e, 1e-12), || {
                format!("SEI_{a}: vertex {v} vs edge {e} on {g:?}")
            })?;
        }
        let (v, e) = (
            eval(&IndexSpec::NkStar, g).unwrap(),
            eval_edge_form(&IndexSpec::NkStar, g).unwrap(),
        );
        ensure(v.is_exact() && v == e, || {
            format!("NK*: vertex {v} vs edge {e}")
        })?;
        for (alias, alpha) in [
            (IndexSpec::M1, 2.0),
            (IndexSpec::F, 3.0),
            (IndexSpec::Id, -1.0),
        ] {
            let (x, y) = (
                eval(&alias, g).unwrap(),
                eval(&IndexSpec::M1Alpha(alpha), g).unwrap(),
            );
            ensure(x.is_exact() && x == y, || {
                format!("{alias} vs M1^{alpha}: {x} vs {y}")
            })?;
        }
    }
    Ok(format!("{enumerated} enumerated + 1000 random graphs"))
}

fn ds(v: Vec<u32>) -> DegreeSequence {
    DegreeSequence::from_unsorted(v).unwrap()
}

fn ac5_majorization() -> Outcome {
    let mut sandwich_checks = 0;
    for n in 4..=8 {
        let cycle = ds(vec![2; n]);
        let un3 = ExtremalFamily::UnThree { n }.sequence().unwrap();
        for (_, g) in all_graphs(n) {
            let d = g.degree_sequence().unwrap();
            ensure(
                majorizes(&d, &cycle).unwrap() && majorizes(&un3, &d).unwrap(),
                || format!("unrestricted sandwich fails on {d}"),
            )?;
            let delta = g.max_degree();
            if delta >= 3 {
                let (y, z) = (y_sequence(n, delta).unwrap(), z_sequence(n, delta).unwrap());
                ensure(
                    majorizes(&d, &y).unwrap() && majorizes(&z, &d).unwrap(),
                    || format!("Δ sandwich fails on {d}"),
                )?;
            }
            let p = g.pendant_count();
            if p >= 1 && p + 3 <= n {
                let (a, b) = (a_sequence(n, p).unwrap(), b_sequence(n, p).unwrap());
                ensure(
                    majorizes(&d, &a).unwrap() && majorizes(&b, &d).unwrap(),
                    || format!("p sandwich fails on {d}"),
                )?;
            }
            sandwich_checks += 1;
        }
    }

    let classes: [(&str, Mode, Convexity); 4] = [
        ("I convex", Mode::Additive, Convexity::StrictlyConvex),
        ("I concave", Mode::Additive, Convexity::StrictlyConcave),
        (
            "II log-convex",
            Mode::Multiplicative,
            Convexity::StrictlyConvex,
        ),
        (
            "II log-concave",
            Mode::Multiplicative,
            Convexity::StrictlyConcave,
        ),
    ];
    let cfg = AuditConfig::default();
    let mut functions: Vec<FunctionSpec> = cfg
        .alpha_grid
        .iter()
        .map(|&a| FunctionSpec::power(a).unwrap())
        .collect();
    functions.extend(cfg.a_grid.iter().map(|&a| FunctionSpec::exdeg(a).unwrap()));
    functions.push(FunctionSpec::identity());
    functions.push(FunctionSpec::self_power());
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for (name, mode, class) in classes {
        let pool: Vec<&FunctionSpec> = functions
            .iter()
            .filter(|f| f.convexity(mode) == class)
            .collect();
        ensure(!pool.is_empty(), || format!("no function in class {name}"))?;
        for i in 0..10_000 {
            let len = rng.random_range(2..=12);
            let mut y: Vec<u32> = (0..len).map(|_| rng.random_range(1..=10)).collect();
            y.sort_unstable_by(|a, b| b.cmp(a));
            // transfers from a poorer to a richer entry spread the sequence
            let mut x = y.clone();
            for _ in 0..rng.random_range(0..=4) {
                let (i, j) = (rng.random_range(0..len), rng.random_range(0..len));
                let (rich, poor) = if x[i] >= x[j] { (i, j) } else { (j, i) };
                if rich != poor && x[poor] > 1 && x[rich] < 10 {
                    x[rich] += 1;
                    x[poor] -= 1;
                }
            }
            let (x, y) = (ds(x), ds(y));
            let f = pool[i % pool.len()];
            let report =
                verify_schur_monotonicity(f, &x, &y, mode, 1e-9).map_err(|e| e.to_string())?;
            ensure(report.holds(), || {
                format!("{name}: {f} on {x} vs {y}: {report:?}")
            })?;
        }
    }
    Ok(format!(
        "{sandwich_checks} graphs inside all three majorization sandwiches, 4 x 10000 random pairs"
    ))
}

fn ac6_oracle() -> Outcome {
    let cfg = AuditConfig::default();
    let mut cells = 0;
    for b in catalog().iter().filter(|b| b.sharpness == Sharpness::Iff) {
        for param in cfg.params_for(b) {
            let spec = b
                .index_spec(&param)
                .expect("characterised bounds are named");
            for n in 4..=8 {
                let deltas: Vec<Option<usize>> = match b.restriction {
                    Restriction::Unrestricted => vec![None],
                    Restriction::MaxDegree => (3..n).map(Some).collect(),
                    Restriction::Pendants => {
                        unreachable!("pendant bounds are attained, not characterised")
                    }
                };
                for d in deltas {
                    let filter = EnumerationFilter {
                        max_degree: d,
                        pendant_count: None,
                    };
                    let r = extremal_search(&SearchTarget::Index(spec), n, &filter, cfg.tolerance)
                        .map_err(|e| e.to_string())?;
                    let ctx = BoundContext {
                        n,
                        max_degree: d,
                        pendants: None,
                    };
                    let want = eval_bound(b, &ctx, &param).map_err(|e| e.to_string())?;
                    let (opt, attaining) = match b.side {
                        Side::Lower => (r.min.clone().unwrap(), &r.minimizers),
                        Side::Upper => (r.max.clone().unwrap(), &r.maximizers),
                    };
                    let matches = if opt.is_exact() && want.is_exact() {
                        opt == want
                    } else {
                        opt.approx_eq(&want, cfg.tolerance)
                    };
                    ensure(matches, || {
                        format!(
                            "{} {param} n={n} Δ={d:?}: optimum {opt} vs bound {want}",
                            b.id
                        )
                    })?;
                    let got: BTreeSet<CanonicalCode> =
                        attaining.iter().map(|(c, _)| c.clone()).collect();
                    let expected = expected_members(n, &b.family(&ctx).unwrap());
                    ensure(got == expected, || {
                        format!(
                            "{} {param} n={n} Δ={d:?}: {} attaining vs {} members",
                            b.id,
                            got.len(),
                            expected.len()
                        )
                    })?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} cells, optimum and attaining set match"))
}

fn ac7_enumeration() -> Outcome {
    for n in 3..=6 {
        let a: Vec<CanonicalCode> = all_graphs(n).into_iter().map(|(c, _)| c).collect();
        let b: Vec<CanonicalCode> = enumerate_by_edge_subsets(n)
            .unwrap()
            .into_iter()
            .map(|(c, _)| c)
            .collect();
        ensure(a == b, || {
            format!("generators disagree at n={n}: {} vs {}", a.len(), b.len())
        })?;
    }
    for (n, want) in [(3, 1), (4, 2)] {
        let a = all_graphs(n).len();
        let b = enumerate_by_edge_subsets(n).unwrap().len();
        ensure(a == want && b == want, || {
            format!("count({n}) = {a} / {b}, want {want}")
        })?;
    }
    Ok("identical class sets for n=3..6; count(3)=1, count(4)=2".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut opts = VerifyOptions::new(4, 8);
    opts.jobs = 1;
    let summary = verify(&opts);
    let secs = start.elapsed().as_secs_f64();

    let results: Vec<(&str, Outcome)> = match &summary {
        Ok(s) => vec![
            ("AC1 exhaustive soundness n=4..8", ac1_soundness(s, secs)),
            ("AC2 sharpness equivalence n=4..8", ac2_sharpness(s)),
            ("AC3 golden closed-form values", ac3_golden()),
            ("AC4 edge/vertex and alias identities", ac4_identities()),
            (
                "AC5 majorization sandwiches and Schur monotonicity",
                ac5_majorization(),
            ),
            ("AC6 oracle agreement n=4..8", ac6_oracle()),
            ("AC7 enumeration self-consistency", ac7_enumeration()),
        ],
        Err(e) => vec![("AC1/AC2 verification run", Err(e.to_string()))],
    };
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
