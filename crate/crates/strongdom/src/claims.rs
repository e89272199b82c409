//! The theorem registry: every closed-form value and bound this crate knows
//! about, evaluated mechanically over parameter ranges and a seeded corpus,
//! with machine-readable reports.
//!
//! Two entries are *informational*: `thm3.2-cubic8-multiset` and
//! `prop2.6.iv-friendship-f1`. For those the registry reports agreement or
//! disagreement with the published value but a mismatch is not treated as a
//! computation failure — the solver-plus-oracle pair is the ground truth
//! there, and [`hard_failure_count`] skips them.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::corpus;
use crate::domatic::{self, SolveError, SolverConfig};
use crate::domination;
use crate::enumerate::enumerate_regular;
use crate::families;
use crate::graph::Graph;
use crate::oracle;

/// Seed used when the caller does not pass one.
pub const DEFAULT_SEED: u64 = 1;

/// The multiset of strong domatic numbers that the published table assigns
/// to the six cubic graphs of order 8, sorted ascending.
pub const PUBLISHED_CUBIC8_MULTISET: [usize; 6] = [2, 2, 3, 4, 4, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped-budget")]
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        })
    }
}

/// Outcome of one claim instance. `ms` is wall-clock and therefore varies
/// between runs; report writers zero it so that reports stay byte-identical
/// for fixed arguments and seed.
#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub id: String,
    pub params: Vec<i64>,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct ClaimsConfig {
    /// Largest graph order the registry builds (at least 6).
    pub max_n: usize,
    pub seed: u64,
    pub node_budget: u64,
}

impl Default for ClaimsConfig {
    fn default() -> Self {
        ClaimsConfig {
            max_n: 12,
            seed: DEFAULT_SEED,
            node_budget: SolverConfig::default().node_budget,
        }
    }
}

/// Claims whose failure is a finding about the source table rather than
/// about this crate.
pub fn is_informational(id: &str) -> bool {
    matches!(id, "thm3.2-cubic8-multiset" | "prop2.6.iv-friendship-f1")
}

/// Failed claims that count as computation failures.
pub fn hard_failure_count(results: &[ClaimResult]) -> usize {
    results
        .iter()
        .filter(|r| r.status == Status::Fail && !is_informational(&r.id))
        .count()
}

/// Evaluates the whole registry. Deterministic for fixed `config`; budget
/// overruns surface as `skipped-budget` entries, never as wrong values.
pub fn run_claims(config: &ClaimsConfig) -> Vec<ClaimResult> {
    assert!(config.max_n >= 6, "the registry needs max_n >= 6");
    let mut session = Session { config: *config, results: Vec::new() };
    session.family_formulas();
    session.corona_results();
    session.cubic_catalogs();
    session.corpus_bounds();
    session.results
}

struct Session {
    config: ClaimsConfig,
    results: Vec<ClaimResult>,
}

impl Session {
    fn solver_config(&self) -> SolverConfig {
        SolverConfig { node_budget: self.config.node_budget }
    }

    fn dst(&self, g: &Graph) -> Result<usize, SolveError> {
        domatic::strong_domatic_number_with(g, &self.solver_config()).map(|r| r.value)
    }

    fn push(&mut self, id: &str, params: Vec<i64>, expected: String, computed: Result<String, SolveError>, started: Instant) {
        let ms = started.elapsed().as_millis() as u64;
        let (computed, status) = match computed {
            Ok(c) => {
                let status = if c == expected { Status::Pass } else { Status::Fail };
                (c, status)
            }
            Err(SolveError::BudgetExceeded { .. }) => ("budget exceeded".to_string(), Status::SkippedBudget),
            Err(e) => (format!("error: {e}"), Status::Fail),
        };
        self.results.push(ClaimResult { id: id.to_string(), params, expected, computed, status, ms });
    }

    fn check_dst(&mut self, id: &str, params: Vec<i64>, expected: usize, g: &Graph) {
        let started = Instant::now();
        let computed = self.dst(g).map(|v| v.to_string());
        self.push(id, params, expected.to_string(), computed, started);
    }

    fn family_formulas(&mut self) {
        let max_n = self.config.max_n;
        for n in 4..=max_n {
            self.check_dst("prop2.6.i-path", vec![n as i64], 2, &families::path(n).unwrap());
        }
        for n in 3..=max_n {
            let expected = if n % 3 == 0 { 3 } else { 2 };
            self.check_dst("prop2.6.ii-cycle", vec![n as i64], expected, &families::cycle(n).unwrap());
        }
        for n in 3..=max_n {
            let started = Instant::now();
            let g = families::cycle(n).unwrap();
            let computed = domination::strong_domination_number(&g)
                .map(|(v, _)| v.to_string())
                .map_err(SolveError::from);
            self.push("prop2.6.ii-gamma-cycle", vec![n as i64], ((n + 2) / 3).to_string(), computed, started);
        }
        for a in 1..max_n {
            for b in a + 1..=max_n.saturating_sub(a) {
                self.check_dst(
                    "prop2.6.iii-kmn",
                    vec![a as i64, b as i64],
                    1,
                    &families::complete_bipartite(a, b).unwrap(),
                );
            }
        }
        // K_{1,1} = K_2 has two maximum-degree vertices and d_st = 2; the
        // closed form presumes a strict side, so n starts at 2.
        for n in 2..=max_n / 2 {
            self.check_dst("prop2.6.iii-knn", vec![n as i64], n, &families::complete_bipartite(n, n).unwrap());
        }
        for n in 2..=(max_n.saturating_sub(1)) / 2 {
            self.check_dst("prop2.6.iv-friendship", vec![n as i64], 1, &families::friendship(n).unwrap());
        }
        // F_1 = K_3 has three maximum-degree vertices, so the m = 1 argument
        // behind the published value does not apply; recorded, not asserted.
        self.check_dst("prop2.6.iv-friendship-f1", vec![1], 1, &families::friendship(1).unwrap());
        for n in 1..=(max_n.saturating_sub(2)) / 2 {
            self.check_dst("prop2.6.v-book", vec![n as i64], 2, &families::book(n).unwrap());
        }
        // Stars with a unique hub; K_{1,1} = K_2 again falls outside.
        for n in 2..max_n {
            self.check_dst("rem2.3-star", vec![n as i64], 1, &families::star(n).unwrap());
        }
        for n in 1..=max_n {
            self.check_dst("rem2.3-complete", vec![n as i64], n, &families::complete(n).unwrap());
        }
    }

    fn corona_results(&mut self) {
        let max_n = self.config.max_n;
        let k1 = families::complete(1).unwrap();
        for n in 2..=max_n / 2 {
            let g = families::corona(&families::path(n).unwrap(), &k1).unwrap();
            self.check_dst("thm2.7-path-corona", vec![n as i64], 2, &g);
        }
        for n in 3..=max_n / 2 {
            let g = families::corona(&families::cycle(n).unwrap(), &k1).unwrap();
            self.check_dst("thm2.7-cycle-corona", vec![n as i64], 2, &g);
        }

        for (i, (g, h)) in corpus::random_corona_pairs(self.config.seed, 100).iter().enumerate() {
            let started = Instant::now();
            let outcome = self.dst(&families::corona(g, h).unwrap()).and_then(|product| {
                let host = self.dst(g)?;
                Ok(if product >= 1 && product <= host {
                    "within bounds".to_string()
                } else {
                    format!("d_st(GoH)={product} outside [1, d_st(G)={host}]")
                })
            });
            self.push("thm2.8-corona-bound", vec![i as i64], "within bounds".to_string(), outcome, started);
        }

        for n in 2..=3 {
            for m in 2..=3 {
                if n * (1 + m) > max_n {
                    continue;
                }
                let g = families::corona(&families::empty(n), &families::empty(m)).unwrap();
                self.check_dst("rem2.9-union-stars", vec![n as i64, m as i64], 1, &g);
            }
        }
        for n in 2..=3 {
            if n * (1 + n) > max_n {
                continue;
            }
            let kn = families::complete(n).unwrap();
            let g = families::corona(&kn, &kn).unwrap();
            self.check_dst("rem2.9-knkn", vec![n as i64], n, &g);
        }
    }

    fn cubic_catalogs(&mut self) {
        let max_n = self.config.max_n;
        self.check_dst("thm3.3-petersen", vec![], 2, &families::petersen());

        if max_n >= 6 {
            let classes = enumerate_regular(6, 3, false).unwrap();
            let started = Instant::now();
            self.push("thm3.1-cubic6-count", vec![], "2".to_string(), Ok(classes.len().to_string()), started);
            for (i, g) in classes.iter().enumerate() {
                self.check_dst("thm3.1-cubic6", vec![i as i64], 3, g);
            }
        }

        if max_n >= 8 {
            let classes = enumerate_regular(8, 3, false).unwrap();
            let started = Instant::now();
            self.push("thm3.2-cubic8-count", vec![], "6".to_string(), Ok(classes.len().to_string()), started);

            let started = Instant::now();
            let computed: Result<String, SolveError> = classes
                .iter()
                .map(|g| self.dst(g))
                .collect::<Result<Vec<_>, _>>()
                .map(|mut values| {
                    values.sort_unstable();
                    format_multiset(&values)
                });
            self.push(
                "thm3.2-cubic8-multiset",
                vec![],
                format_multiset(&PUBLISHED_CUBIC8_MULTISET),
                computed,
                started,
            );
        }

        if max_n >= 10 {
            let classes = enumerate_regular(10, 3, false).unwrap();
            let started = Instant::now();
            self.push("thm3.4-cubic10-count", vec![], "21".to_string(), Ok(classes.len().to_string()), started);

            let petersen = families::petersen();
            let petersen_hits: Vec<usize> = classes
                .iter()
                .enumerate()
                .filter(|(_, g)| are_isomorphic(g, &petersen).unwrap())
                .map(|(i, _)| i)
                .collect();
            let started = Instant::now();
            self.push(
                "thm3.3-petersen-class",
                petersen_hits.iter().map(|&i| i as i64).collect(),
                "exactly one class".to_string(),
                Ok(if petersen_hits.len() == 1 {
                    "exactly one class".to_string()
                } else {
                    format!("{} classes", petersen_hits.len())
                }),
                started,
            );
            for (i, g) in classes.iter().enumerate() {
                let expected = if petersen_hits.contains(&i) { 2 } else { 3 };
                self.check_dst("thm3.4-cubic10", vec![i as i64], expected, g);
            }
        }
    }

    fn corpus_bounds(&mut self) {
        let entries = build_corpus(&self.config);
        let started = Instant::now();
        let mut stats = Vec::with_capacity(entries.len());
        let mut skipped = 0usize;
        for (label, g) in &entries {
            match GraphStats::compute(g, &self.solver_config()) {
                Ok(s) => stats.push((label.clone(), s)),
                Err(SolveError::BudgetExceeded { .. }) => skipped += 1,
                Err(e) => panic!("corpus graph {label} failed: {e}"),
            }
        }
        let elapsed = started;

        let mut sweep = |session: &mut Session, id: &str, violation: &dyn Fn(&GraphStats) -> bool, applies: &dyn Fn(&GraphStats) -> bool| {
            let started = Instant::now();
            let mut checked = 0usize;
            let mut bad: Vec<&str> = Vec::new();
            for (label, s) in &stats {
                if !applies(s) {
                    continue;
                }
                checked += 1;
                if violation(s) {
                    bad.push(label);
                }
            }
            let computed = if bad.is_empty() {
                format!("0 violations in {checked} graphs")
            } else {
                format!("{} violations in {checked} graphs, first at {}", bad.len(), bad[0])
            };
            let status = if !bad.is_empty() {
                Status::Fail
            } else if skipped > 0 {
                Status::SkippedBudget
            } else {
                Status::Pass
            };
            let ms = started.elapsed().as_millis() as u64 + elapsed.elapsed().as_millis() as u64 * 0;
            session.results.push(ClaimResult {
                id: id.to_string(),
                params: vec![checked as i64],
                expected: format!("0 violations in {checked} graphs"),
                computed,
                status,
                ms,
            });
        };

        let everything = |_: &GraphStats| true;
        sweep(self, "thm2.2-dst-le-m", &|s| s.dst > s.max_degree_count, &everything);
        sweep(self, "thm2.4-d-le-delta-plus-1", &|s| s.domatic > s.min_degree + 1, &everything);
        sweep(self, "dst-le-d", &|s| s.dst > s.domatic, &everything);
        sweep(
            self,
            "cor2.5-regular-d-eq-dst",
            &|s| s.domatic != s.dst || s.dst > s.regular.unwrap() + 1,
            &|s| s.regular.is_some(),
        );
        sweep(self, "thm2.1-pendant-dst", &|s| !matches!(s.dst, 1 | 2), &|s| s.min_degree == 1);
        sweep(self, "dst-gamma-product", &|s| s.dst * s.gamma_st > s.order, &everything);
        sweep(self, "gamma-le-gamma-st", &|s| s.gamma > s.gamma_st, &everything);
        // Weak + scaled strong domination: (Δ+1)·γ_w + 3·γ_st ≤ n·(Δ+1),
        // checked in integers. Connected graphs of order >= 3 only;
        // disconnected corpus members are logged via the `applies` count.
        sweep(
            self,
            "boutrig-chellali",
            &|s| (s.max_degree + 1) * s.gamma_w + 3 * s.gamma_st > s.order * (s.max_degree + 1),
            &|s| s.connected && s.order >= 3,
        );
    }
}

fn format_multiset(values: &[usize]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

struct GraphStats {
    order: usize,
    min_degree: usize,
    max_degree: usize,
    max_degree_count: usize,
    regular: Option<usize>,
    connected: bool,
    dst: usize,
    domatic: usize,
    gamma: usize,
    gamma_st: usize,
    gamma_w: usize,
}

impl GraphStats {
    fn compute(g: &Graph, config: &SolverConfig) -> Result<GraphStats, SolveError> {
        Ok(GraphStats {
            order: g.order(),
            min_degree: g.min_degree()?,
            max_degree: g.max_degree()?,
            max_degree_count: g.max_degree_count()?,
            regular: g.regular_degree(),
            connected: g.is_connected(),
            dst: domatic::strong_domatic_number_with(g, config)?.value,
            domatic: domatic::domatic_number_with(g, config)?,
            gamma: domination::domination_number(g)?,
            gamma_st: domination::strong_domination_number(g)?.0,
            gamma_w: domination::weak_domination_number(g)?,
        })
    }
}

/// Every graph the registry touches, labeled, in a fixed order.
fn build_corpus(config: &ClaimsConfig) -> Vec<(String, Graph)> {
    let max_n = config.max_n;
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut add = |label: String, g: Graph| out.push((label, g));

    for n in 1..=max_n {
        add(format!("path({n})"), families::path(n).unwrap());
    }
    for n in 3..=max_n {
        add(format!("cycle({n})"), families::cycle(n).unwrap());
    }
    for n in 1..=max_n {
        add(format!("complete({n})"), families::complete(n).unwrap());
    }
    for a in 1..=max_n {
        for b in a..=max_n.saturating_sub(a) {
            add(format!("complete_bipartite({a},{b})"), families::complete_bipartite(a, b).unwrap());
        }
    }
    for n in 1..max_n {
        add(format!("star({n})"), families::star(n).unwrap());
    }
    for n in 1..=(max_n.saturating_sub(1)) / 2 {
        add(format!("friendship({n})"), families::friendship(n).unwrap());
    }
    for n in 1..=(max_n.saturating_sub(2)) / 2 {
        add(format!("book({n})"), families::book(n).unwrap());
    }
    for n in 1..=4.min(max_n) {
        add(format!("empty({n})"), families::empty(n));
    }
    add("petersen".to_string(), families::petersen());

    let k1 = families::complete(1).unwrap();
    for n in 2..=max_n / 2 {
        add(format!("path({n})oK1"), families::corona(&families::path(n).unwrap(), &k1).unwrap());
    }
    for n in 3..=max_n / 2 {
        add(format!("cycle({n})oK1"), families::corona(&families::cycle(n).unwrap(), &k1).unwrap());
    }
    for n in 2..=3 {
        if n * (1 + n) <= max_n {
            let kn = families::complete(n).unwrap();
            add(format!("K{n}oK{n}"), families::corona(&kn, &kn).unwrap());
        }
        if n * (1 + n) <= max_n {
            add(format!("empty({n})oempty({n})"), families::corona(&families::empty(n), &families::empty(n)).unwrap());
        }
    }

    for order in [4usize, 6, 8, 10] {
        if order > max_n {
            break;
        }
        for (i, g) in enumerate_regular(order, 3, false).unwrap().into_iter().enumerate() {
            add(format!("cubic{order}[{i}]"), g);
        }
    }

    for (i, g) in corpus::random_corpus(config.seed, 200, 8).into_iter().enumerate() {
        add(format!("random[{i}]"), g);
    }
    for (i, (g, h)) in corpus::random_corona_pairs(config.seed, 100).into_iter().enumerate() {
        let product = families::corona(&g, &h).unwrap();
        add(format!("corona-pair[{i}]"), product);
        add(format!("corona-host[{i}]"), g);
    }

    out
}

/// Solver-versus-oracle sweep used by the `oracle-check` subcommand.
pub struct OracleCheck {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

pub fn oracle_check(seed: u64, count: usize, max_order: usize, node_budget: u64) -> OracleCheck {
    let max_order = max_order.min(oracle::ORACLE_MAX_ORDER);
    let config = SolverConfig { node_budget };
    let mut mismatches = Vec::new();
    let graphs = corpus::random_corpus(seed, count, max_order);
    for (i, g) in graphs.iter().enumerate() {
        let solver_dst = domatic::strong_domatic_number_with(g, &config).map(|r| r.value);
        let oracle_dst = oracle::oracle_strong_domatic(g);
        match (solver_dst, oracle_dst) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => mismatches.push(format!("graph[{i}] d_st solver={a:?} oracle={b:?}")),
        }
        let solver_gamma = domination::strong_domination_number(g).map(|(v, _)| v);
        let oracle_gamma = oracle::oracle_gamma_st(g);
        match (solver_gamma, oracle_gamma) {
            (Ok(a), Ok(b)) if a == b => {}
            (a, b) => mismatches.push(format!("graph[{i}] gamma_st solver={a:?} oracle={b:?}")),
        }
    }
    OracleCheck { checked: graphs.len(), mismatches }
}

#[derive(Serialize)]
struct ReportRow<'a> {
    id: &'a str,
    params: &'a [i64],
    expected: &'a str,
    computed: &'a str,
    status: Status,
    ms: u64,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    params: String,
    expected: &'a str,
    computed: &'a str,
    status: Status,
    ms: u64,
}

fn report_rows(results: &[ClaimResult]) -> Vec<ReportRow<'_>> {
    results
        .iter()
        .map(|r| ReportRow {
            id: &r.id,
            params: &r.params,
            expected: &r.expected,
            computed: &r.computed,
            status: r.status,
            // Wall-clock time is the one nondeterministic field; reports
            // must be byte-identical across runs, so it is zeroed here.
            ms: 0,
        })
        .collect()
}

/// JSON report: an array of {id, params, expected, computed, status, ms}.
pub fn report_json(results: &[ClaimResult]) -> String {
    let mut text = serde_json::to_string_pretty(&report_rows(results)).expect("report serializes");
    text.push('\n');
    text
}

/// CSV report with the same columns; params are space-separated.
pub fn report_csv(results: &[ClaimResult]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in report_rows(results) {
        let params = row
            .params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        writer
            .serialize(CsvRow {
                id: row.id,
                params,
                expected: row.expected,
                computed: row.computed,
                status: row.status,
                ms: row.ms,
            })
            .expect("csv row serializes");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config() -> ClaimsConfig {
        ClaimsConfig { max_n: 6, ..ClaimsConfig::default() }
    }

    #[test]
    fn registry_passes_at_small_scale() {
        let results = run_claims(&quick_config());
        assert!(!results.is_empty());
        assert_eq!(hard_failure_count(&results), 0, "failures: {:?}",
            results.iter().filter(|r| r.status == Status::Fail).collect::<Vec<_>>());
        // Petersen is present regardless of max_n.
        let petersen = results.iter().find(|r| r.id == "thm3.3-petersen").unwrap();
        assert_eq!(petersen.status, Status::Pass);
        assert_eq!(petersen.computed, "2");
    }

    #[test]
    fn friendship_f1_is_informational() {
        let results = run_claims(&quick_config());
        let f1 = results.iter().find(|r| r.id == "prop2.6.iv-friendship-f1").unwrap();
        assert_eq!(f1.computed, "3"); // K_3 splits into three singletons
        assert_eq!(f1.status, Status::Fail);
        assert!(is_informational(&f1.id));
    }

    #[test]
    fn reports_are_deterministic_and_schema_shaped() {
        let results = run_claims(&quick_config());
        let a = report_json(&results);
        let b = report_json(&run_claims(&quick_config()));
        assert_eq!(a, b);

        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        let rows = parsed.as_array().unwrap();
        assert_eq!(rows.len(), results.len());
        for row in rows {
            for key in ["id", "params", "expected", "computed", "status", "ms"] {
                assert!(row.get(key).is_some(), "missing {key}");
            }
        }

        let csv_text = report_csv(&results);
        assert!(csv_text.starts_with("id,params,expected,computed,status,ms"));
        assert_eq!(csv_text.lines().count(), results.len() + 1);
    }

    #[test]
    fn budget_overruns_become_skips() {
        let config = ClaimsConfig { max_n: 6, node_budget: 1, ..ClaimsConfig::default() };
        let results = run_claims(&config);
        assert!(results.iter().any(|r| r.status == Status::SkippedBudget));
        assert_eq!(hard_failure_count(&results), 0);
    }

    #[test]
    fn oracle_check_is_clean() {
        let outcome = oracle_check(DEFAULT_SEED, 30, 7, SolverConfig::default().node_budget);
        assert_eq!(outcome.checked, 30);
        assert!(outcome.mismatches.is_empty(), "{:?}", outcome.mismatches);
    }
}
