//! Bulk conjecture checks over the semigroup tree or over random samples.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{fold_tree, random_node, Parallelism, TreeNode};
use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::report::ReportRow;
use crate::wilf::{extended_wilf_with, generalized_wilf_from};

/// Number of violation witnesses kept in a summary.
pub const WITNESS_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepMode {
    /// Every semigroup of genus `0..=max_genus`.
    All,
    /// `trials` random descents for each genus `1..=max_genus`.
    Random { trials: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub dim: usize,
    pub max_genus: usize,
    pub mode: SweepMode,
    /// Orders for the extended check; empty skips it.
    pub orders: Vec<MonomialOrder>,
    pub ewc_strict: bool,
    /// Worker threads: 1 is serial, 0 uses every core.
    pub jobs: usize,
    /// Also collect a full report row per semigroup.
    pub collect_rows: bool,
}

impl SweepConfig {
    pub fn new(dim: usize, max_genus: usize) -> Self {
        SweepConfig {
            dim,
            max_genus,
            mode: SweepMode::All,
            orders: Vec::new(),
            ewc_strict: false,
            jobs: 1,
            collect_rows: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub genus: usize,
    pub holes: Vec<Point>,
    /// `"gwc"` or the order of the failing extended check.
    pub check: String,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusSummary {
    pub genus: usize,
    pub count: u64,
    pub gwc_violations: u64,
    pub gwc_equalities: u64,
    pub ewc_violations: u64,
    pub min_gwc_slack: Option<i64>,
    /// Canonically smallest semigroup attaining `min_gwc_slack`.
    pub min_slack_witness: Option<Vec<Point>>,
}

impl GenusSummary {
    fn empty(genus: usize) -> Self {
        GenusSummary {
            genus,
            count: 0,
            gwc_violations: 0,
            gwc_equalities: 0,
            ewc_violations: 0,
            min_gwc_slack: None,
            min_slack_witness: None,
        }
    }

    fn merge(&mut self, other: GenusSummary) {
        self.count += other.count;
        self.gwc_violations += other.gwc_violations;
        self.gwc_equalities += other.gwc_equalities;
        self.ewc_violations += other.ewc_violations;
        if let (Some(slack), Some(witness)) = (other.min_gwc_slack, other.min_slack_witness) {
            self.offer_witness(slack, witness);
        }
    }

    fn offer_witness(&mut self, slack: i64, holes: Vec<Point>) {
        let better = match (&self.min_gwc_slack, &self.min_slack_witness) {
            (Some(s), Some(w)) => (slack, &holes) < (*s, w),
            _ => true,
        };
        if better {
            self.min_gwc_slack = Some(slack);
            self.min_slack_witness = Some(holes);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub dim: usize,
    pub max_genus: usize,
    pub mode: String,
    pub orders: Vec<String>,
    pub ewc_strict: bool,
    pub per_genus: Vec<GenusSummary>,
    pub total: u64,
    pub gwc_violations: u64,
    pub ewc_violations: u64,
    /// The first violations in (genus, holes) order.
    pub witnesses: Vec<Violation>,
    #[serde(skip)]
    pub rows: Vec<ReportRow>,
}

impl SweepSummary {
    pub fn all_hold(&self) -> bool {
        self.gwc_violations == 0 && self.ewc_violations == 0
    }

    pub fn counts(&self) -> Vec<u64> {
        self.per_genus.iter().map(|g| g.count).collect()
    }
}

/// Partial result, merged associatively.
struct Acc {
    per_genus: Vec<GenusSummary>,
    witnesses: Vec<Violation>,
    rows: Vec<ReportRow>,
}

impl Acc {
    fn new(max_genus: usize) -> Self {
        Acc {
            per_genus: (0..=max_genus).map(GenusSummary::empty).collect(),
            witnesses: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (a, b) in self.per_genus.iter_mut().zip(other.per_genus) {
            a.merge(b);
        }
        self.witnesses.extend(other.witnesses);
        trim_witnesses(&mut self.witnesses);
        self.rows.extend(other.rows);
        self
    }

    fn absorb(&mut self, config: &SweepConfig, s: &Gns, gens: &[Point]) {
        let g = s.genus();
        let e = gens.len();
        let c = s.down_closure().len();
        let gwc = generalized_wilf_from(s.dim(), e, c - g, c);
        let summary = &mut self.per_genus[g];
        summary.count += 1;
        if !gwc.holds {
            summary.gwc_violations += 1;
            self.witnesses.push(Violation {
                genus: g,
                holes: s.holes().to_vec(),
                check: "gwc".into(),
                lhs: gwc.lhs,
                rhs: gwc.rhs,
            });
        }
        if gwc.equality {
            summary.gwc_equalities += 1;
        }
        summary.offer_witness(gwc.slack, s.holes().to_vec());
        for order in &config.orders {
            let r = extended_wilf_with(s, order, config.ewc_strict, e);
            if !r.holds {
                self.per_genus[g].ewc_violations += 1;
                self.witnesses.push(Violation {
                    genus: g,
                    holes: s.holes().to_vec(),
                    check: order.to_string(),
                    lhs: r.lhs,
                    rhs: r.rhs,
                });
            }
        }
        trim_witnesses(&mut self.witnesses);
        if config.collect_rows {
            self.rows.push(ReportRow::with_generators(
                s,
                gens,
                &config.orders,
                config.ewc_strict,
            ));
        }
    }
}

fn trim_witnesses(w: &mut Vec<Violation>) {
    if w.len() > WITNESS_LIMIT {
        w.sort_by(|a, b| (a.genus, &a.holes, &a.check).cmp(&(b.genus, &b.holes, &b.check)));
        w.truncate(WITNESS_LIMIT);
    }
}

/// SplitMix64 finalizer, used to derive independent per-trial seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` at genus `genus`; independent of scheduling.
pub fn trial_seed(seed: u64, genus: usize, trial: usize) -> u64 {
    mix(mix(seed ^ mix(genus as u64)) ^ trial as u64)
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    if config.dim == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if let Some(o) = config.orders.iter().find(|o| o.dim() != config.dim) {
        return Err(GnsError::DimensionMismatch {
            expected: config.dim,
            found: o.dim(),
        });
    }
    let parallelism = Parallelism::from_jobs(config.jobs);
    let mut acc = match &config.mode {
        SweepMode::All => {
            let lex = MonomialOrder::graded_lex(config.dim);
            fold_tree(
                config.dim,
                config.max_genus,
                &lex,
                parallelism,
                || Acc::new(config.max_genus),
                |mut acc, node: &TreeNode| {
                    acc.absorb(config, &node.semigroup, &node.generators);
                    acc
                },
                Acc::merge,
            )
        }
        SweepMode::Random { trials, seed } => {
            let tasks: Vec<(usize, usize)> = (1..=config.max_genus)
                .flat_map(|g| (0..*trials).map(move |t| (g, t)))
                .collect();
            let run = |&(g, t): &(usize, usize)| -> Result<Acc> {
                let node = random_node(config.dim, g, trial_seed(*seed, g, t))?;
                let mut acc = Acc::new(config.max_genus);
                acc.absorb(config, &node.semigroup, &node.generators);
                Ok(acc)
            };
            let merge = |a: Result<Acc>, b: Result<Acc>| Ok(a?.merge(b?));
            let init = || Ok(Acc::new(config.max_genus));
            match parallelism {
                Parallelism::Serial => tasks.iter().map(run).fold(init(), merge)?,
                Parallelism::Threads(n) => {
                    let go = || tasks.par_iter().map(run).reduce(init, merge);
                    match n {
                        None => go()?,
                        Some(n) => rayon::ThreadPoolBuilder::new()
                            .num_threads(n)
                            .build()
                            .expect("thread pool")
                            .install(go)?,
                    }
                }
            }
        }
    };
    acc.witnesses
        .sort_by(|a, b| (a.genus, &a.holes, &a.check).cmp(&(b.genus, &b.holes, &b.check)));
    acc.rows
        .sort_by(|a, b| (a.genus, &a.holes).cmp(&(b.genus, &b.holes)));
    let total = acc.per_genus.iter().map(|g| g.count).sum();
    let gwc_violations = acc.per_genus.iter().map(|g| g.gwc_violations).sum();
    let ewc_violations = acc.per_genus.iter().map(|g| g.ewc_violations).sum();
    Ok(SweepSummary {
        dim: config.dim,
        max_genus: config.max_genus,
        mode: match &config.mode {
            SweepMode::All => "all".into(),
            SweepMode::Random { trials, seed } => format!("random(trials={trials},seed={seed})"),
        },
        orders: config.orders.iter().map(|o| o.to_string()).collect(),
        ewc_strict: config.ewc_strict,
        per_genus: acc.per_genus,
        total,
        gwc_violations,
        ewc_violations,
        witnesses: acc.witnesses,
        rows: acc.rows,
    })
}
