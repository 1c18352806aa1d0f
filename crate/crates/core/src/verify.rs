//! Exhaustive verification of the bound catalog over enumerated graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::bounds::{audit, bound_by_id, AuditConfig, AuditReport, Restriction, Sharpness};
use crate::canon::CanonicalCode;
use crate::enumerate::{
    enumerate_unicyclic_with_codes, EnumerationFilter, MAX_ENUMERATION_N, MIN_ENUMERATION_N,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub filter: EnumerationFilter,
    pub config: AuditConfig,
    /// worker threads, 0 = rayon default
    pub jobs: usize,
}

impl VerifyOptions {
    pub fn new(n_min: usize, n_max: usize) -> Self {
        VerifyOptions {
            n_min,
            n_max,
            filter: EnumerationFilter::default(),
            config: AuditConfig::default(),
            jobs: 0,
        }
    }
}

/// Cell key: bound, parameter, `n`, and the fixed `Δ` or `p` if restricted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellKey {
    pub bound_id: String,
    pub param: String,
    pub n: usize,
    pub restricted_value: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSummary {
    pub key: CellKey,
    pub iff: bool,
    pub graphs: usize,
    pub violations: usize,
    pub tight: BTreeSet<CanonicalCode>,
    pub members: BTreeSet<CanonicalCode>,
}

impl CellSummary {
    pub fn sharpness_ok(&self) -> bool {
        !self.iff || self.tight == self.members
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub n_min: usize,
    pub n_max: usize,
    pub filtered: bool,
    pub graphs_checked: usize,
    pub cells: Vec<CellSummary>,
}

impl VerifySummary {
    pub fn violations(&self) -> usize {
        self.cells.iter().map(|c| c.violations).sum()
    }

    pub fn sharpness_failures(&self) -> impl Iterator<Item = &CellSummary> {
        self.cells.iter().filter(|c| !c.sharpness_ok())
    }

    /// Cells in which no graph attains the bound. Only meaningful without an
    /// enumeration filter, since a filter may exclude every extremal graph.
    pub fn unattained(&self) -> impl Iterator<Item = &CellSummary> {
        let filtered = self.filtered;
        self.cells
            .iter()
            .filter(move |c| !filtered && c.tight.is_empty())
    }

    pub fn is_clean(&self) -> bool {
        self.violations() == 0
            && self.sharpness_failures().next().is_none()
            && self.unattained().next().is_none()
    }

    pub const TABULAR_HEADER: &'static str =
        "bound_id,param,n,restricted_value,graphs,violations,tight,members,sharpness_ok";

    pub fn to_tabular(&self) -> String {
        let mut out = format!("{}\n", Self::TABULAR_HEADER);
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                c.key.bound_id,
                c.key.param,
                c.key.n,
                c.key
                    .restricted_value
                    .map(|v| v.to_string())
                    .unwrap_or_default(),
                c.graphs,
                c.violations,
                c.tight.len(),
                c.members.len(),
                c.sharpness_ok()
            ));
        }
        out
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verified n={}..{}: {} graphs, {} cells",
            self.n_min,
            self.n_max,
            self.graphs_checked,
            self.cells.len()
        )?;
        for c in self.cells.iter().filter(|c| c.violations > 0) {
            writeln!(
                f,
                "VIOLATION {} {} n={} restricted={:?}: {} of {} graphs",
                c.key.bound_id,
                c.key.param,
                c.key.n,
                c.key.restricted_value,
                c.violations,
                c.graphs
            )?;
        }
        for c in self.sharpness_failures() {
            writeln!(
                f,
                "SHARPNESS {} {} n={} restricted={:?}: {} tight, {} members",
                c.key.bound_id,
                c.key.param,
                c.key.n,
                c.key.restricted_value,
                c.tight.len(),
                c.members.len()
            )?;
        }
        for c in self.unattained() {
            writeln!(
                f,
                "UNATTAINED {} {} n={} restricted={:?}",
                c.key.bound_id, c.key.param, c.key.n, c.key.restricted_value
            )?;
        }
        let sharp = self.cells.iter().filter(|c| c.iff).count();
        write!(
            f,
            "violations: {}; characterised cells: {sharp}, mismatched: {}; unattained cells: {}; {}",
            self.violations(),
            self.sharpness_failures().count(),
            self.unattained().count(),
            if self.is_clean() { "CLEAN" } else { "FAILED" }
        )
    }
}

fn fold_report(
    cells: &mut BTreeMap<CellKey, CellSummary>,
    code: &CanonicalCode,
    report: &AuditReport,
) {
    for e in report.entries.iter().filter(|e| e.applicable) {
        let b = bound_by_id(&e.bound_id).expect("audit ids come from the catalog");
        let restricted_value = match b.restriction {
            Restriction::Unrestricted => None,
            Restriction::MaxDegree => Some(report.max_degree),
            Restriction::Pendants => Some(report.pendants),
        };
        let key = CellKey {
            bound_id: e.bound_id.clone(),
            param: e.param.to_string(),
            n: report.n,
            restricted_value,
        };
        let cell = cells.entry(key.clone()).or_insert_with(|| CellSummary {
            key,
            iff: b.sharpness == Sharpness::Iff,
            graphs: 0,
            violations: 0,
            tight: BTreeSet::new(),
            members: BTreeSet::new(),
        });
        cell.graphs += 1;
        if !e.satisfied {
            cell.violations += 1;
        }
        if e.tight {
            cell.tight.insert(code.clone());
        }
        if e.member {
            cell.members.insert(code.clone());
        }
    }
}

/// Audits every unicyclic graph with `n_min <= n <= n_max` passing the filter.
pub fn verify(opts: &VerifyOptions) -> Result<VerifySummary> {
    opts.config.validate()?;
    opts.filter.validate()?;
    if opts.n_min > opts.n_max {
        return Err(Error::Range(format!(
            "empty range {}..{}",
            opts.n_min, opts.n_max
        )));
    }
    if opts.n_min < MIN_ENUMERATION_N || opts.n_max > MAX_ENUMERATION_N {
        return Err(Error::Range(format!(
            "verification supports {MIN_ENUMERATION_N} <= n <= {MAX_ENUMERATION_N}"
        )));
    }
    let run = || -> Result<VerifySummary> {
        let mut cells = BTreeMap::new();
        let mut graphs_checked = 0;
        for n in opts.n_min..=opts.n_max {
            let graphs = enumerate_unicyclic_with_codes(n, &opts.filter)?;
            let reports: Vec<AuditReport> = graphs
                .par_iter()
                .map(|(_, g)| audit(g, &opts.config))
                .collect::<Result<_>>()?;
            for ((code, _), report) in graphs.iter().zip(&reports) {
                fold_report(&mut cells, code, report);
            }
            graphs_checked += graphs.len();
        }
        Ok(VerifySummary {
            n_min: opts.n_min,
            n_max: opts.n_max,
            filtered: opts.filter != EnumerationFilter::default(),
            graphs_checked,
            cells: cells.into_values().collect(),
        })
    };
    if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Range(format!("thread pool: {e}")))?
            .install(run)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_is_clean() {
        let s = verify(&VerifyOptions::new(4, 6)).unwrap();
        assert_eq!(s.graphs_checked, 2 + 5 + 13);
        assert!(s.is_clean(), "{s}");
    }

    #[test]
    fn parallel_and_serial_agree() {
        let mut a = VerifyOptions::new(5, 6);
        a.jobs = 1;
        let mut b = a.clone();
        b.jobs = 4;
        assert_eq!(verify(&a).unwrap(), verify(&b).unwrap());
    }

    #[test]
    fn max_degree_filter_tight_set() {
        let mut opts = VerifyOptions::new(6, 6);
        opts.filter = EnumerationFilter::max_degree(3);
        let s = verify(&opts).unwrap();
        assert!(s.filtered && s.is_clean());
        let cell = s
            .cells
            .iter()
            .find(|c| c.key.bound_id == "thm-M1-delta-upper" && c.key.restricted_value == Some(3))
            .unwrap();
        assert!(!cell.tight.is_empty());
        assert_eq!(cell.tight, cell.members);
    }

    #[test]
    fn bad_ranges() {
        assert!(verify(&VerifyOptions::new(6, 5)).is_err());
        assert!(verify(&VerifyOptions::new(4, 10)).is_err());
    }
}
