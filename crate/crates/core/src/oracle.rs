//! Bounded brute-force refutation and crosscheck harnesses.
//!
//! The oracle knows nothing about the characterizations: it enumerates
//! extensions `F` over a finite vertex pool and evaluates the property on
//! both unions. Finding no `F` is evidence, not proof, of equivalence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::deciders::{decide, PropertySelector, Verdict};
use crate::dense::{add_edge, bit, next_combination, Indexer};
use crate::error::{Error, Result};
use crate::graph::{fresh_vertices, Edge, Graph, VertexLabel};
use crate::witnesses::{property_side, witness_for, Side};

/// Candidates evaluated per parallel batch.
const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleBudget {
    /// fresh vertices added to `V(G) ∪ V(H)`
    pub fresh_count: usize,
    /// largest `|F|` tried
    pub max_edges: usize,
    /// candidates evaluated before giving up
    pub max_candidates: u64,
}

impl OracleBudget {
    pub const DEFAULT_MAX_CANDIDATES: u64 = 1 << 24;

    /// No cap on `|F|` beyond the pool itself.
    pub fn with_fresh(fresh_count: usize) -> Self {
        OracleBudget {
            fresh_count,
            max_edges: usize::MAX,
            max_candidates: Self::DEFAULT_MAX_CANDIDATES,
        }
    }

    /// Pool sized for the property's largest gadget.
    pub fn for_property(prop: &PropertySelector) -> Self {
        Self::with_fresh(prop.default_fresh())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OracleOutcome {
    /// the first separating `F` in canonical order
    Separated {
        extension: Graph,
        side: Side,
        examined: u64,
    },
    /// every candidate within the budget was tried
    Exhausted { examined: u64 },
    /// stopped at `max_candidates` before exhausting the pool
    BudgetExceeded { examined: u64 },
}

impl OracleOutcome {
    pub fn extension(&self) -> Option<&Graph> {
        match self {
            OracleOutcome::Separated { extension, .. } => Some(extension),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            OracleOutcome::Separated { .. } => "found",
            OracleOutcome::Exhausted { .. } => "exhausted",
            OracleOutcome::BudgetExceeded { .. } => "budget",
        }
    }
}

/// Searches `F` over the pool `V(G) ∪ V(H) ∪ fresh` by increasing `|F|`,
/// then lexicographically. Pairs already in both graphs are left out of the
/// candidate edges since adding them changes neither union.
pub fn refute_bounded(
    prop: &PropertySelector,
    g: &Graph,
    h: &Graph,
    budget: OracleBudget,
) -> Result<OracleOutcome> {
    let ev = prop.evaluator()?;
    let base = Indexer::for_graphs([g, h])
        .ok_or_else(|| Error::TooManyVertices(g.union(h).vertex_count()))?;
    let avoid = base.labels().iter().cloned().collect();
    let ix = base
        .extended(fresh_vertices(budget.fresh_count, &avoid))
        .ok_or(Error::TooManyVertices(base.len() + budget.fresh_count))?;
    let a = ix.adjacency(g);
    let b = ix.adjacency(h);
    let n = ix.len();
    let cands: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| a[u] & b[u] & bit(v) == 0)
        .collect();
    let m = cands.len();

    let eval = |comb: &[usize]| -> Result<Option<Side>> {
        let mut x = a.clone();
        let mut y = b.clone();
        for &i in comb {
            let (u, v) = cands[i];
            add_edge(&mut x, u, v);
            add_edge(&mut y, u, v);
        }
        Ok(match (ev.holds(&x)?, ev.holds(&y)?) {
            (true, false) => Some(Side::First),
            (false, true) => Some(Side::Second),
            _ => None,
        })
    };

    let mut examined = 0u64;
    for size in 0..=budget.max_edges.min(m) {
        let mut comb: Vec<usize> = (0..size).collect();
        let mut more = true;
        while more {
            let room = budget.max_candidates - examined;
            if room == 0 {
                return Ok(OracleOutcome::BudgetExceeded { examined });
            }
            let mut batch = Vec::with_capacity(BATCH.min(room as usize));
            while more && batch.len() < BATCH && (batch.len() as u64) < room {
                batch.push(comb.clone());
                more = size > 0 && next_combination(&mut comb, m);
            }
            let results: Vec<Result<Option<Side>>> =
                batch.par_iter().map(|c| eval(c)).collect();
            for (i, r) in results.into_iter().enumerate() {
                if let Some(side) = r? {
                    let mut f = Graph::new();
                    for &j in &batch[i] {
                        f.insert(ix.edge(cands[j].0, cands[j].1));
                    }
                    return Ok(OracleOutcome::Separated {
                        extension: f,
                        side,
                        examined: examined + i as u64 + 1,
                    });
                }
            }
            examined += batch.len() as u64;
        }
    }
    Ok(OracleOutcome::Exhausted { examined })
}

/// Pairs to crosscheck.
#[derive(Debug, Clone)]
pub enum InstanceFamily {
    /// every unordered pair (including equal pairs) of graphs whose
    /// vertices come from the first `vertices` standard labels
    AllGraphs { vertices: usize },
    /// random graphs on the standard labels, each pair drawn independently
    Sampled {
        vertices: usize,
        pairs: usize,
        seed: u64,
    },
    Pairs(Vec<(Graph, Graph)>),
}

/// Standard vertex label `i`: `a`..`z`, then `v26`, `v27`, ...
pub fn standard_label(i: usize) -> VertexLabel {
    let s = if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    };
    VertexLabel::new(s).expect("standard labels are valid")
}

fn all_pairs_on(n: usize) -> Vec<Edge> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| Edge::new(standard_label(u), standard_label(v)).expect("distinct"))
        .collect()
}

/// All `2^(n choose 2)` graphs on the first `n` standard labels.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let slots = all_pairs_on(n);
    (0u64..1 << slots.len())
        .map(|mask| {
            slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect()
        })
        .collect()
}

/// Each pair of the first `n` standard labels is an edge with probability 1/2.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    all_pairs_on(n)
        .into_iter()
        .filter(|_| rng.random_bool(0.5))
        .collect()
}

impl InstanceFamily {
    pub fn pairs(&self) -> Vec<(Graph, Graph)> {
        match self {
            InstanceFamily::AllGraphs { vertices } => {
                let gs = all_graphs(*vertices);
                let mut out = Vec::new();
                for (i, g) in gs.iter().enumerate() {
                    for h in &gs[i..] {
                        out.push((g.clone(), h.clone()));
                    }
                }
                out
            }
            InstanceFamily::Sampled {
                vertices,
                pairs,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*pairs)
                    .map(|_| (random_graph(&mut rng, *vertices), random_graph(&mut rng, *vertices)))
                    .collect()
            }
            InstanceFamily::Pairs(p) => p.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OracleSummary {
    Found,
    Exhausted,
    BudgetExceeded,
    /// not run (the decider returned `Unknown`)
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub g: Graph,
    pub h: Graph,
    pub verdict: Verdict,
    pub oracle: OracleSummary,
    /// whether the proof witness verified (`NotEquivalent` only)
    pub witness_ok: Option<bool>,
    pub agreement: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub property: String,
    pub records: Vec<PairRecord>,
}

impl CrosscheckReport {
    pub fn violations(&self) -> impl Iterator<Item = &PairRecord> {
        self.records.iter().filter(|r| !r.agreement)
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }
}

/// Checks one pair: a `NotEquivalent` verdict needs a verifying proof
/// witness and an oracle separation; `Equivalent` needs oracle exhaustion.
pub fn check_pair(
    prop: &PropertySelector,
    g: &Graph,
    h: &Graph,
    budget: OracleBudget,
) -> Result<PairRecord> {
    let verdict = decide(prop, g, h, false)?.verdict;
    let (oracle, witness_ok, agreement) = match verdict {
        Verdict::Unknown => (OracleSummary::Skipped, None, true),
        Verdict::NotEquivalent => {
            let ok = match witness_for(prop, g, h) {
                Ok(w) => w.verify(prop, g, h)?,
                Err(Error::NoWitness(_)) => false,
                Err(e) => return Err(e),
            };
            let found = match refute_bounded(prop, g, h, budget)? {
                OracleOutcome::Separated { extension, side, .. } => {
                    // re-check at label level, independent of the pool index
                    property_side(prop, g, h, &extension)? == Some(side)
                }
                _ => false,
            };
            let summary = if found {
                OracleSummary::Found
            } else {
                OracleSummary::Exhausted
            };
            (summary, Some(ok), ok && found)
        }
        Verdict::Equivalent => match refute_bounded(prop, g, h, budget)? {
            OracleOutcome::Exhausted { .. } => (OracleSummary::Exhausted, None, true),
            OracleOutcome::Separated { .. } => (OracleSummary::Found, None, false),
            OracleOutcome::BudgetExceeded { .. } => (OracleSummary::BudgetExceeded, None, false),
        },
    };
    Ok(PairRecord {
        g: g.clone(),
        h: h.clone(),
        verdict,
        oracle,
        witness_ok,
        agreement,
    })
}

/// Runs [`check_pair`] over every pair of the family.
pub fn crosscheck(
    prop: &PropertySelector,
    instances: &InstanceFamily,
    budget: OracleBudget,
) -> Result<CrosscheckReport> {
    let records = instances
        .pairs()
        .par_iter()
        .map(|(g, h)| check_pair(prop, g, h, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrosscheckReport {
        property: prop.to_string(),
        records,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompleteGraphRow {
    pub vertices: usize,
    pub edge: Edge,
    pub verdict: Verdict,
    pub oracle: OracleOutcome,
}

impl CompleteGraphRow {
    pub fn separated(&self) -> bool {
        matches!(self.oracle, OracleOutcome::Separated { .. })
    }
}

/// For each complete `K` on 2..=`max_vertices` standard labels and one edge
/// `e` (all edges of `K` are symmetric), whether the oracle separates `K`
/// from `K - e`.
pub fn complete_graph_criterion(
    prop: &PropertySelector,
    max_vertices: usize,
    budget: OracleBudget,
) -> Result<Vec<CompleteGraphRow>> {
    if max_vertices < 2 {
        return Err(Error::InvalidK {
            k: max_vertices,
            min: 2,
        });
    }
    (2..=max_vertices)
        .map(|n| {
            let k: Graph = all_pairs_on(n).into_iter().collect();
            let e = Edge::new(standard_label(0), standard_label(1))?;
            let ke = k.without_edge(&e);
            Ok(CompleteGraphRow {
                vertices: n,
                verdict: decide(prop, &k, &ke, false)?.verdict,
                oracle: refute_bounded(prop, &k, &ke, budget)?,
                edge: e,
            })
        })
        .collect()
}
