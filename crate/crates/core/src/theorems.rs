//! Exhaustive verification suites producing structured reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::asyncdyn::{distances_from, distances_to, find_cycle, fixed_points, Distance};
use crate::config::{configurations, mask, Configuration};
use crate::constructions::{
    random_acyclic, random_monotone, random_network, random_no_negative_loop,
};
use crate::embed::{embed, find_mirror_violation, PairConfiguration};
use crate::error::{check_size, Error, Result};
use crate::igraph::interaction_graph;
use crate::network::BooleanNetwork;

pub const MAX_ROBERT_COMPONENTS: usize = 12;
pub const MAX_REACH_COMPONENTS: usize = 12;
pub const MAX_EMBEDDING_COMPONENTS: usize = 5;
pub const MAX_CYCLE_COMPONENTS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Suite {
    Robert,
    MonotoneReach,
    Embedding,
    FixedPointCounts,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Robert,
        Suite::MonotoneReach,
        Suite::Embedding,
        Suite::FixedPointCounts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Robert => "robert",
            Suite::MonotoneReach => "monotone-reach",
            Suite::Embedding => "embedding",
            Suite::FixedPointCounts => "fixed-point-counts",
        }
    }

    pub fn run(self, f: &BooleanNetwork) -> Result<VerificationReport> {
        match self {
            Suite::Robert => check_robert(f),
            Suite::MonotoneReach => check_monotone_reach(f),
            Suite::Embedding => check_embedding_suite(f),
            Suite::FixedPointCounts => check_fixed_point_counts(f),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name as accepted on the command line, `all` included.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteSelection {
    One(Suite),
    All,
}

impl SuiteSelection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteSelection::One(s) => vec![s],
            SuiteSelection::All => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for SuiteSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(SuiteSelection::All);
        }
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .map(SuiteSelection::One)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// What was checked: a construction, a file, or a seeded generator draw.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Instance {
    pub source: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Instance {
    pub fn named(source: impl Into<String>, n: usize) -> Self {
        Instance {
            source: source.into(),
            n,
            seed: None,
        }
    }

    pub fn seeded(generator: impl Into<String>, n: usize, seed: u64) -> Self {
        Instance {
            source: generator.into(),
            n,
            seed: Some(seed),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    /// Offending configurations as literals.
    pub configurations: Vec<String>,
    pub observed: String,
}

impl Counterexample {
    fn new(configurations: &[Configuration], observed: impl Into<String>) -> Self {
        Counterexample {
            configurations: configurations.iter().map(|c| c.to_literal()).collect(),
            observed: observed.into(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub pass: bool,
    /// Set when the hypothesis of the checked statement does not hold.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default)]
    pub millis: u64,
}

impl CheckRecord {
    pub fn failed(&self) -> bool {
        !self.pass && !self.skipped
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instance: Instance,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    pub checks: Vec<CheckRecord>,
    pub millis: u64,
}

impl VerificationReport {
    /// No check failed. Skipped reports pass.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(CheckRecord::failed)
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn with_instance(mut self, instance: Instance) -> Self {
        self.instance = instance;
        self
    }

    /// Zeroes every wall-time field so reports compare byte for byte.
    pub fn without_timings(mut self) -> Self {
        self.millis = 0;
        for c in &mut self.checks {
            c.millis = 0;
        }
        self
    }
}

struct ReportBuilder {
    suite: Suite,
    n: usize,
    started: Instant,
    checks: Vec<CheckRecord>,
}

impl ReportBuilder {
    fn new(suite: Suite, n: usize) -> Self {
        ReportBuilder {
            suite,
            n,
            started: Instant::now(),
            checks: Vec::new(),
        }
    }

    /// Runs one check; `Some(counterexample)` means failure.
    fn check(&mut self, id: &str, run: impl FnOnce() -> Option<Counterexample>) {
        let started = Instant::now();
        let counterexample = run();
        self.checks.push(CheckRecord {
            id: id.to_string(),
            pass: counterexample.is_none(),
            skipped: false,
            counterexample,
            millis: started.elapsed().as_millis() as u64,
        });
    }

    fn skip(mut self, reason: &str) -> VerificationReport {
        self.checks.push(CheckRecord {
            id: "precondition".to_string(),
            pass: false,
            skipped: true,
            counterexample: Some(Counterexample {
                configurations: Vec::new(),
                observed: reason.to_string(),
            }),
            millis: 0,
        });
        let mut report = self.finish();
        report.skipped = true;
        report
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite.name().to_string(),
            instance: Instance::named("network", self.n),
            skipped: false,
            checks: self.checks,
            millis: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// Acyclic interaction graph: unique fixed point, acyclic asynchronous
/// graph, and a geodesic from every configuration to the fixed point.
pub fn check_robert(f: &BooleanNetwork) -> Result<VerificationReport> {
    check_size("robert suite", f.n(), MAX_ROBERT_COMPONENTS)?;
    let mut report = ReportBuilder::new(Suite::Robert, f.n());
    if !interaction_graph(f).is_acyclic() {
        return Ok(report.skip("interaction graph has a cycle"));
    }
    let fixed = fixed_points(f);
    report.check("unique_fixed_point", || {
        (fixed.len() != 1)
            .then(|| Counterexample::new(&fixed, format!("{} fixed points", fixed.len())))
    });
    report.check("async_graph_acyclic", || {
        find_cycle(f).map(|cycle| Counterexample::new(&cycle, "directed cycle"))
    });
    report.check("geodesic_to_fixed_point", || {
        let [y] = fixed[..] else {
            return Some(Counterexample::new(&fixed, "no unique fixed point"));
        };
        let to_y = distances_to(f, &y).expect("dimensions agree");
        configurations(f.n()).find_map(|x| {
            let d = to_y.get(&x);
            (d != Distance::Finite(x.hamming(&y) as u64)).then(|| {
                Counterexample::new(&[x, y], format!("distance {d}, hamming {}", x.hamming(&y)))
            })
        })
    });
    Ok(report.finish())
}

/// Monotone network: every configuration has a geodesic to a fixed point.
pub fn check_monotone_reach(f: &BooleanNetwork) -> Result<VerificationReport> {
    check_size("monotone reach suite", f.n(), MAX_REACH_COMPONENTS)?;
    let mut report = ReportBuilder::new(Suite::MonotoneReach, f.n());
    if let Some((x, y)) = f.monotonicity_violation() {
        return Ok(report.skip(&format!("not monotone at {x} < {y}")));
    }
    report.check("geodesic_to_some_fixed_point", || {
        let fixed = fixed_points(f);
        configurations(f.n()).find_map(|x| {
            let from_x = distances_from(f, &x).expect("dimensions agree");
            let found = fixed
                .iter()
                .any(|y| from_x.get(y) == Distance::Finite(x.hamming(y) as u64));
            (!found).then(|| Counterexample::new(&[x], "no geodesic to a fixed point"))
        })
    });
    Ok(report.finish())
}

/// Fixed-point bounds from cycle signs: no positive cycle gives at most one
/// fixed point, no negative cycle gives at least one.
pub fn check_fixed_point_counts(f: &BooleanNetwork) -> Result<VerificationReport> {
    check_size("fixed point count suite", f.n(), MAX_CYCLE_COMPONENTS)?;
    let mut report = ReportBuilder::new(Suite::FixedPointCounts, f.n());
    let signs = interaction_graph(f).cycle_signs();
    if signs.positive && signs.negative {
        return Ok(report.skip("interaction graph has positive and negative cycles"));
    }
    let fixed = fixed_points(f);
    if !signs.positive {
        report.check("at_most_one_fixed_point", || {
            (fixed.len() > 1)
                .then(|| Counterexample::new(&fixed, format!("{} fixed points", fixed.len())))
        });
    }
    if !signs.negative {
        report.check("at_least_one_fixed_point", || {
            fixed
                .is_empty()
                .then(|| Counterexample::new(&[], "no fixed point"))
        });
    }
    Ok(report.finish())
}

/// Checks every property of the monotone embedding of `f`, exhaustively over
/// both state spaces.
pub fn check_embedding_suite(f: &BooleanNetwork) -> Result<VerificationReport> {
    let n = f.n();
    check_size("embedding suite", n, MAX_EMBEDDING_COMPONENTS)?;
    let mut report = ReportBuilder::new(Suite::Embedding, n);
    if let Some(i) = f.negative_loop_component() {
        return Ok(report.skip(&format!("negative loop on component {}", i + 1)));
    }
    let host = embed(f)?;
    let mirror = |x: Configuration| PairConfiguration::mirror(x).expect("n within caps").joint();

    report.check("host_monotone", || {
        host.monotonicity_violation()
            .map(|(a, b)| Counterexample::new(&[a, b], "f'(a) is not <= f'(b)"))
    });

    report.check("mirror_fixed_points", || {
        configurations(n).find_map(|x| {
            let z = mirror(x);
            let fixed = f.image(x.bits()) == x.bits();
            let host_fixed = host.image(z.bits()) == z.bits();
            (fixed != host_fixed).then(|| {
                Counterexample::new(
                    &[x, z],
                    format!("fixed in f: {fixed}, fixed in f': {host_fixed}"),
                )
            })
        })
    });

    report.check("outer_layers_collapse", || {
        configurations(2 * n).find_map(|z| {
            let w = z.weight() as usize;
            let image = host.image(z.bits());
            let expected = if w + 2 <= n {
                Some(0)
            } else if w >= n + 2 {
                Some(mask(2 * n))
            } else {
                None
            };
            match expected {
                Some(e) if e != image => Some(Counterexample::new(
                    &[z, Configuration::new(2 * n, image).expect("valid image")],
                    format!("weight {w} does not collapse"),
                )),
                _ => None,
            }
        })
    });

    report.check("two_step_paths", || two_step_path_violation(f, &host));

    report.check("distance_doubling", || {
        configurations(n).find_map(|x| {
            let in_f = distances_from(f, &x).expect("dimensions agree");
            let in_host = distances_from(&host, &mirror(x)).expect("dimensions agree");
            configurations(n).find_map(|y| {
                let d = in_f.get(&y);
                let d_host = in_host.get(&mirror(y));
                let expected = match d {
                    Distance::Finite(k) => Distance::Finite(2 * k),
                    Distance::Unreachable => Distance::Unreachable,
                };
                (d_host != expected).then(|| {
                    Counterexample::new(&[x, y], format!("distance {d} in f, {d_host} in f'"))
                })
            })
        })
    });

    report.check("mirror_identity", || {
        find_mirror_violation(&host).map(|(z, i)| {
            Counterexample::new(&[z], format!("identity fails for component {}", i + 1))
        })
    });

    Ok(report.finish())
}

fn has_move(f: &BooleanNetwork, z: u32, k: usize) -> bool {
    (f.image(z) ^ z) >> k & 1 == 1
}

/// Looks for a host path between mirror states, with no mirror state inside,
/// that is not one of the two length-2 paths induced by a transition of `f`;
/// or a transition of `f` whose induced paths are missing.
fn two_step_path_violation(f: &BooleanNetwork, host: &BooleanNetwork) -> Option<Counterexample> {
    let n = f.n();
    let low = mask(n);
    let joint = |x: u32, y: u32| x | y << n;
    let in_omega = |z: u32| (z >> n) == (!z & low);
    let host_cfg = |z: u32| Configuration::new(2 * n, z).expect("host state");
    let cfg = |x: u32| Configuration::new(n, x).expect("state");

    for x in 0..1u32 << n {
        let s = joint(x, !x & low);

        // every transition x -> y of f induces both two-step host paths,
        // and no other neighbour of x does
        for i in 0..n {
            let y = x ^ 1 << i;
            let t = joint(y, !y & low);
            let via_first = s ^ 1 << i;
            let via_second = s ^ 1 << (n + i);
            let first = has_move(host, s, i) && has_move(host, via_first, n + i);
            let second = has_move(host, s, n + i) && has_move(host, via_second, i);
            let transition = has_move(f, x, i);
            if first != transition || second != transition {
                return Some(Counterexample::new(
                    &[host_cfg(s), host_cfg(t)],
                    format!("transition in f: {transition}, paths in f': {first}/{second}"),
                ));
            }
        }

        // explore everything reachable from s through non-mirror states
        let mut seen = vec![false; 1 << (2 * n)];
        let mut indirect = vec![false; 1 << (2 * n)];
        let mut stack = Vec::new();
        for k in 0..2 * n {
            if has_move(host, s, k) {
                let a = s ^ 1 << k;
                if in_omega(a) {
                    return Some(Counterexample::new(
                        &[host_cfg(s), host_cfg(a)],
                        "single-step path between mirror states",
                    ));
                }
                seen[a as usize] = true;
                stack.push(a);
            }
        }
        let mut exits = Vec::new();
        while let Some(a) = stack.pop() {
            for k in 0..2 * n {
                if !has_move(host, a, k) {
                    continue;
                }
                let b = a ^ 1 << k;
                if in_omega(b) {
                    exits.push((a, b));
                } else {
                    indirect[b as usize] = true;
                    if !seen[b as usize] {
                        seen[b as usize] = true;
                        stack.push(b);
                    }
                }
            }
        }
        for (a, t) in exits {
            let k = (a ^ s).trailing_zeros() as usize;
            let direct = (a ^ s).count_ones() == 1;
            let i = k % n;
            let y = x ^ 1 << i;
            let allowed =
                direct && !indirect[a as usize] && t == joint(y, !y & low) && has_move(f, x, i);
            if !allowed {
                return Some(Counterexample::new(
                    &[host_cfg(s), host_cfg(a), host_cfg(t)],
                    format!("unexpected path from {} to {}", cfg(x), cfg(t & low)),
                ));
            }
        }
    }
    None
}

/// Which generator feeds a suite in corpus mode.
fn corpus_instance(suite: Suite, n: usize, seed: u64) -> Result<(BooleanNetwork, Instance)> {
    let (name, f) = match suite {
        Suite::Robert => ("random_acyclic", random_acyclic(n, seed)?),
        Suite::MonotoneReach => ("random_monotone", random_monotone(n, seed)?),
        Suite::Embedding => ("random_no_negative_loop", random_no_negative_loop(n, seed)?),
        // rotate generators so both count bounds get exercised
        Suite::FixedPointCounts => match seed % 3 {
            0 => ("random_network", random_network(n, seed)?),
            1 => ("random_monotone", random_monotone(n, seed)?),
            _ => ("random_acyclic", random_acyclic(n, seed)?),
        },
    };
    Ok((f, Instance::seeded(name, n, seed)))
}

/// Runs `suite` on `count` generated instances with seeds
/// `base_seed, base_seed + 1, ...`. With [`SuiteSelection::All`] every seed
/// yields one report per suite.
pub fn run_corpus(
    selection: SuiteSelection,
    count: usize,
    n: usize,
    base_seed: u64,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for k in 0..count as u64 {
        let seed = base_seed.wrapping_add(k);
        for suite in selection.suites() {
            let (f, instance) = corpus_instance(suite, n, seed)?;
            reports.push(suite.run(&f)?.with_instance(instance));
        }
    }
    Ok(reports)
}

/// Pretty JSON array of reports, newline-terminated.
pub fn reports_to_json(reports: &[VerificationReport]) -> Result<String> {
    let mut json = serde_json::to_string_pretty(reports)?;
    json.push('\n');
    Ok(json)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary {
        total: reports.len(),
        ..Summary::default()
    };
    for r in reports {
        if !r.passed() {
            s.failed += 1;
        } else if r.skipped {
            s.skipped += 1;
        } else {
            s.passed += 1;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{exp_diameter_monotone, gray_code_network};

    fn lit(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn robert_on_small_instances() {
        let f = BooleanNetwork::from_components(2, |i, x| i == 1 && x.get(0)).unwrap();
        let r = check_robert(&f).unwrap();
        assert!(r.passed() && !r.skipped);
        assert_eq!(fixed_points(&f), vec![lit("00")]);

        let c = BooleanNetwork::constant(lit("101"));
        assert!(check_robert(&c).unwrap().passed());
        assert_eq!(fixed_points(&c), vec![lit("101")]);

        let r = check_robert(&BooleanNetwork::identity(2).unwrap()).unwrap();
        assert!(r.skipped && r.passed());
    }

    #[test]
    fn monotone_reach_examples() {
        assert!(check_monotone_reach(&BooleanNetwork::identity(3).unwrap())
            .unwrap()
            .passed());
        let w = exp_diameter_monotone(3).unwrap();
        let r = check_monotone_reach(&w.network).unwrap();
        assert!(r.passed() && !r.skipped);
        let neg = BooleanNetwork::from_components(1, |_, x| !x.get(0)).unwrap();
        assert!(check_monotone_reach(&neg).unwrap().skipped);
    }

    #[test]
    fn fixed_point_count_examples() {
        let f =
            BooleanNetwork::from_components(2, |i, x| if i == 0 { !x.get(1) } else { x.get(0) })
                .unwrap();
        let r = check_fixed_point_counts(&f).unwrap();
        assert!(r.passed());
        assert!(r.check("at_most_one_fixed_point").is_some());
        assert!(r.check("at_least_one_fixed_point").is_none());
        assert!(fixed_points(&f).is_empty());

        let r = check_fixed_point_counts(&BooleanNetwork::identity(3).unwrap()).unwrap();
        assert!(r.passed());
        assert!(r.check("at_least_one_fixed_point").is_some());
        assert!(r.check("at_most_one_fixed_point").is_none());

        let acyclic = BooleanNetwork::from_components(2, |i, x| i == 1 && x.get(0)).unwrap();
        let r = check_fixed_point_counts(&acyclic).unwrap();
        assert_eq!(r.checks.len(), 2);
        assert!(r.passed());
    }

    #[test]
    fn embedding_suite_on_gray_and_identity() {
        let r = check_embedding_suite(&gray_code_network(3).unwrap().network).unwrap();
        assert_eq!(r.checks.len(), 6);
        assert!(r.passed(), "{r:?}");
        let r = check_embedding_suite(&BooleanNetwork::identity(2).unwrap()).unwrap();
        assert!(r.passed());
        let neg =
            BooleanNetwork::from_components(2, |i, x| if i == 0 { !x.get(0) } else { x.get(1) })
                .unwrap();
        let r = check_embedding_suite(&neg).unwrap();
        assert!(r.skipped);
        assert!(check_embedding_suite(&BooleanNetwork::identity(6).unwrap()).is_err());
    }

    #[test]
    fn embedding_suite_catches_a_broken_host() {
        // a host that ignores f entirely must violate the path correspondence
        let f = gray_code_network(2).unwrap().network;
        let host = BooleanNetwork::identity(4).unwrap();
        assert!(two_step_path_violation(&f, &host).is_some());
    }

    #[test]
    fn suite_names() {
        assert_eq!(
            "all".parse::<SuiteSelection>().unwrap(),
            SuiteSelection::All
        );
        assert_eq!(
            "monotone-reach".parse::<SuiteSelection>().unwrap(),
            SuiteSelection::One(Suite::MonotoneReach)
        );
        assert!(matches!(
            "no-such-suite".parse::<SuiteSelection>(),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn corpus_cardinality() {
        let reports = run_corpus(SuiteSelection::All, 1, 2, 7).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.instance.seed == Some(7)));
        let reports = run_corpus(SuiteSelection::One(Suite::Embedding), 10, 3, 0).unwrap();
        assert_eq!(summarize(&reports).passed, 10);
    }

    #[test]
    fn report_json_shape() {
        let r = check_robert(&BooleanNetwork::identity(1).unwrap())
            .unwrap()
            .without_timings();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["suite"], "robert");
        assert_eq!(json["skipped"], true);
        assert_eq!(json["checks"][0]["id"], "precondition");
        assert_eq!(json["millis"], 0);
        let back: VerificationReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
