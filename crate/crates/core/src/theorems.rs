//! Computational certificates for the closed-form fault-tolerant metric
//! dimensions of butterfly, Benes and silicate networks.
//!
//! A certificate pins `β′` of one instance exactly by a sandwich: every twin
//! vertex belongs to every fault-tolerant resolving set, so the twin count is
//! a lower bound, and an explicit candidate set of that same size is verified
//! to be 2-resolving.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::distance::all_pairs_distances;
use crate::generators::{benes, butterfly, silicate, GeneratorError, LeveledNetwork};
use crate::graph::{Graph, GraphError, Vertex};
use crate::resolving::{is_k_resolving, DistinguisherTable, ResolveError};
use crate::twins::{twin_partition, TwinPartition, TwinStructureError};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum TheoremError {
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Twins(#[from] TwinStructureError),
    #[error(transparent)]
    Resolve(#[from] ResolveError),
    #[error("{family}: the closed form is stated for parameters >= {min}, got {value}")]
    BelowRange {
        family: NetworkFamily,
        value: u32,
        min: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NetworkFamily {
    #[serde(rename = "bf")]
    Butterfly,
    Benes,
    #[serde(rename = "sl")]
    Silicate,
}

impl fmt::Display for NetworkFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NetworkFamily::Butterfly => "bf",
            NetworkFamily::Benes => "benes",
            NetworkFamily::Silicate => "sl",
        })
    }
}

impl NetworkFamily {
    fn instance_name(&self, param: u32) -> String {
        match self {
            NetworkFamily::Butterfly => format!("BF({param})"),
            NetworkFamily::Benes => format!("B({param})"),
            NetworkFamily::Silicate => format!("SL({param})"),
        }
    }

    /// The earlier published bound this instance is compared against.
    fn source_bound(&self, param: u32) -> SourceBound {
        match self {
            NetworkFamily::Butterfly => SourceBound::ConjecturedExact(4 << param),
            NetworkFamily::Benes => SourceBound::ConjecturedExact(13 << (param - 1)),
            NetworkFamily::Silicate => SourceBound::Interval {
                lower: 6 * param as usize + 1,
                upper: 21 * param as usize,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolvingCheck {
    pub k: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_pair: Option<[String; 2]>,
}

impl ResolvingCheck {
    fn run(g: &Graph, table: &DistinguisherTable, set: &[Vertex], k: usize) -> Result<Self, ResolveError> {
        let violation = is_k_resolving(table, set, k)?;
        Ok(Self {
            k,
            pass: violation.is_none(),
            violating_pair: violation.map(|v| [g.label(v.x).to_string(), g.label(v.y).to_string()]),
        })
    }
}

/// One endpoint per silicate twin pair, checked as an ordinary resolving set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransversalCheck {
    pub size: usize,
    pub labels: Vec<String>,
    pub check: ResolvingCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceBound {
    ConjecturedExact(usize),
    Interval { lower: usize, upper: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComparisonOutcome {
    /// The computed value differs from the conjectured one.
    Refuted,
    Confirmed,
    WithinBounds,
    OutsideBounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConjectureComparison {
    pub source_bound: SourceBound,
    pub computed: usize,
    pub outcome: ComparisonOutcome,
}

impl ConjectureComparison {
    fn new(source_bound: SourceBound, computed: usize) -> Self {
        let outcome = match source_bound {
            SourceBound::ConjecturedExact(c) if c == computed => ComparisonOutcome::Confirmed,
            SourceBound::ConjecturedExact(_) => ComparisonOutcome::Refuted,
            SourceBound::Interval { lower, upper } if (lower..=upper).contains(&computed) => {
                ComparisonOutcome::WithinBounds
            }
            SourceBound::Interval { .. } => ComparisonOutcome::OutsideBounds,
        };
        Self {
            source_bound,
            computed,
            outcome,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ProvenAtThisParameter,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub schema: &'static str,
    pub family: NetworkFamily,
    pub param: u32,
    pub order: usize,
    pub size: usize,
    pub claimed: usize,
    pub twin_lower_bound: usize,
    /// Twin classes by label; each is a pair in all three families.
    pub twin_classes: Vec<Vec<String>>,
    pub candidate_size: usize,
    pub candidate_labels: Vec<String>,
    pub resolving_check: ResolvingCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_transversal: Option<TransversalCheck>,
    pub conjecture_comparison: ConjectureComparison,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl Certificate {
    pub fn is_proven(&self) -> bool {
        self.verdict == Verdict::ProvenAtThisParameter
    }
}

struct Analysis {
    table: DistinguisherTable,
    twins: TwinPartition,
}

fn analyze(g: &Graph) -> Result<Analysis, TheoremError> {
    let dm = all_pairs_distances(g)?;
    Ok(Analysis {
        table: DistinguisherTable::new(&dm),
        twins: twin_partition(g)?,
    })
}

fn labels_of(g: &Graph, set: &[Vertex]) -> Vec<String> {
    set.iter().map(|&v| g.label(v).to_string()).collect()
}

fn assemble(
    family: NetworkFamily,
    param: u32,
    claimed: usize,
    g: &Graph,
    analysis: &Analysis,
    candidate: &[Vertex],
    boundary_transversal: Option<TransversalCheck>,
) -> Result<Certificate, TheoremError> {
    let twin_classes: Vec<Vec<String>> = analysis
        .twins
        .non_singleton()
        .map(|c| labels_of(g, &c.members))
        .collect();
    let twin_lower_bound: usize = analysis.twins.non_singleton().map(|c| c.members.len()).sum();
    let resolving_check = ResolvingCheck::run(g, &analysis.table, candidate, 2)?;

    let mut failures = Vec::new();
    if twin_lower_bound != claimed {
        failures.push(format!("twin lower bound {twin_lower_bound} != claimed {claimed}"));
    }
    if candidate.len() != claimed {
        failures.push(format!("candidate size {} != claimed {claimed}", candidate.len()));
    }
    if let Some(pair) = &resolving_check.violating_pair {
        failures.push(format!(
            "candidate is not fault-tolerant: pair {} / {} has fewer than 2 distinguishers",
            pair[0], pair[1]
        ));
    }
    let verdict = if failures.is_empty() {
        Verdict::ProvenAtThisParameter
    } else {
        Verdict::Failed
    };
    Ok(Certificate {
        schema: SCHEMA_VERSION,
        family,
        param,
        order: g.order(),
        size: g.size(),
        claimed,
        twin_lower_bound,
        twin_classes,
        candidate_size: candidate.len(),
        candidate_labels: labels_of(g, candidate),
        resolving_check,
        boundary_transversal,
        conjecture_comparison: ConjectureComparison::new(family.source_bound(param), twin_lower_bound),
        verdict,
        failures,
    })
}

fn require_range(family: NetworkFamily, value: u32, min: u32) -> Result<(), TheoremError> {
    if value < min {
        return Err(TheoremError::BelowRange { family, value, min });
    }
    Ok(())
}

fn certify_leveled(
    family: NetworkFamily,
    net: &LeveledNetwork,
    claimed: usize,
    levels: &[u32],
) -> Result<Certificate, TheoremError> {
    let analysis = analyze(&net.graph)?;
    let candidate = net.vertices_at_levels(levels);
    assemble(family, net.dimension, claimed, &net.graph, &analysis, &candidate, None)
}

/// `β′(BF(r)) = 2^{r+1}`, with the first and last levels as candidate.
pub fn certify_butterfly(r: u32) -> Result<Certificate, TheoremError> {
    require_range(NetworkFamily::Butterfly, r, 3)?;
    let net = butterfly(r)?;
    certify_leveled(NetworkFamily::Butterfly, &net, 2 << r, &[0, r])
}

/// `β′(B(r)) = 3·2^r`, with the first, middle and last levels as candidate.
pub fn certify_benes(r: u32) -> Result<Certificate, TheoremError> {
    require_range(NetworkFamily::Benes, r, 3)?;
    let net = benes(r)?;
    certify_leveled(NetworkFamily::Benes, &net, 3 << r, &[0, r, 2 * r])
}

/// `β′(SL(n)) = 12n`, with the twin vertices as candidate. Also checks that
/// one endpoint of each twin pair (the outer one) resolves the network.
pub fn certify_silicate(n: u32) -> Result<Certificate, TheoremError> {
    require_range(NetworkFamily::Silicate, n, 2)?;
    let net = silicate(n)?;
    let g = &net.graph;
    let analysis = analyze(g)?;

    let mut candidate: Vec<Vertex> = analysis
        .twins
        .non_singleton()
        .flat_map(|c| c.members.iter().copied())
        .collect();
    candidate.sort_unstable();

    let mut transversal: Vec<Vertex> = analysis
        .twins
        .non_singleton()
        .map(|c| {
            *c.members
                .iter()
                .max_by(|&&a, &&b| {
                    net.roles[a]
                        .radius2()
                        .cmp(&net.roles[b].radius2())
                        .then_with(|| g.label(b).cmp(g.label(a)))
                })
                .unwrap()
        })
        .collect();
    transversal.sort_unstable();
    let boundary = TransversalCheck {
        size: transversal.len(),
        labels: labels_of(g, &transversal),
        check: ResolvingCheck::run(g, &analysis.table, &transversal, 1)?,
    };

    let mut cert = assemble(
        NetworkFamily::Silicate,
        n,
        12 * n as usize,
        g,
        &analysis,
        &candidate,
        Some(boundary),
    )?;
    let pairs = analysis.twins.non_singleton().count();
    if pairs != 6 * n as usize {
        cert.failures.push(format!("found {pairs} twin classes, expected {}", 6 * n));
        cert.verdict = Verdict::Failed;
    }
    Ok(cert)
}

/// One row of the comparison against earlier published bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisproofLine {
    pub family: NetworkFamily,
    pub param: u32,
    pub computed: usize,
    pub source_bound: SourceBound,
    pub outcome: ComparisonOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub max_r: u32,
    pub max_n: u32,
    pub certificates: Vec<Certificate>,
    pub comparisons: Vec<DisproofLine>,
    pub proven: usize,
    pub failed: usize,
}

/// Certifies `BF(r)` and `B(r)` for `3 <= r <= max_r` and `SL(n)` for
/// `2 <= n <= max_n`. Instances run on separate threads; the result order is
/// fixed (butterflies, then Benes, then silicates, each ascending).
pub fn certify_all(max_r: u32, max_n: u32) -> Result<Report, TheoremError> {
    type Job = (NetworkFamily, u32);
    let jobs: Vec<Job> = (3..=max_r)
        .map(|r| (NetworkFamily::Butterfly, r))
        .chain((3..=max_r).map(|r| (NetworkFamily::Benes, r)))
        .chain((2..=max_n).map(|n| (NetworkFamily::Silicate, n)))
        .collect();

    let results: Vec<Result<Certificate, TheoremError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(family, p)| {
                scope.spawn(move || match family {
                    NetworkFamily::Butterfly => certify_butterfly(p),
                    NetworkFamily::Benes => certify_benes(p),
                    NetworkFamily::Silicate => certify_silicate(p),
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("certificate thread panicked")).collect()
    });
    let certificates = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let comparisons = certificates
        .iter()
        .map(|c| DisproofLine {
            family: c.family,
            param: c.param,
            computed: c.conjecture_comparison.computed,
            source_bound: c.conjecture_comparison.source_bound,
            outcome: c.conjecture_comparison.outcome,
        })
        .collect();
    let proven = certificates.iter().filter(|c| c.is_proven()).count();
    Ok(Report {
        schema: SCHEMA_VERSION,
        max_r,
        max_n,
        failed: certificates.len() - proven,
        proven,
        certificates,
        comparisons,
    })
}

impl fmt::Display for SourceBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceBound::ConjecturedExact(v) => write!(f, "conjectured = {v}"),
            SourceBound::Interval { lower, upper } => write!(f, "bounds [{lower}, {upper}]"),
        }
    }
}

impl fmt::Display for ComparisonOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComparisonOutcome::Refuted => "refuted",
            ComparisonOutcome::Confirmed => "confirmed",
            ComparisonOutcome::WithinBounds => "within bounds",
            ComparisonOutcome::OutsideBounds => "outside bounds",
        })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family.instance_name(self.param);
        writeln!(f, "{name}: order {}, size {}", self.order, self.size)?;
        writeln!(f, "  claimed ft-metric dimension: {}", self.claimed)?;
        writeln!(
            f,
            "  twin lower bound: {} ({} twin classes)",
            self.twin_lower_bound,
            self.twin_classes.len()
        )?;
        write!(
            f,
            "  candidate set: {} vertices, 2-resolving: {}",
            self.candidate_size,
            if self.resolving_check.pass { "yes" } else { "no" }
        )?;
        if let Some([x, y]) = &self.resolving_check.violating_pair {
            write!(f, " (violated by {x} / {y})")?;
        }
        writeln!(f)?;
        if let Some(t) = &self.boundary_transversal {
            writeln!(
                f,
                "  boundary transversal: {} vertices, 1-resolving: {}",
                t.size,
                if t.check.pass { "yes" } else { "no" }
            )?;
        }
        let cmp = &self.conjecture_comparison;
        writeln!(f, "  earlier bound: {}, computed {} ({})", cmp.source_bound, cmp.computed, cmp.outcome)?;
        for failure in &self.failures {
            writeln!(f, "  failure: {failure}")?;
        }
        writeln!(
            f,
            "  verdict: {}",
            match self.verdict {
                Verdict::ProvenAtThisParameter => "proven at this parameter",
                Verdict::Failed => "FAILED",
            }
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.certificates {
            writeln!(f, "{c}")?;
        }
        writeln!(f, "comparison with earlier bounds:")?;
        for line in &self.comparisons {
            let name = line.family.instance_name(line.param);
            match line.source_bound {
                SourceBound::ConjecturedExact(v) => {
                    let rel = match line.computed.cmp(&v) {
                        std::cmp::Ordering::Less => "<",
                        std::cmp::Ordering::Equal => "=",
                        std::cmp::Ordering::Greater => ">",
                    };
                    writeln!(f, "  {name}: computed {} {rel} conjectured {v}: {}", line.computed, line.outcome)?;
                }
                SourceBound::Interval { lower, upper } => {
                    writeln!(f, "  {name}: {lower} <= computed {} <= {upper}: {}", line.computed, line.outcome)?;
                }
            }
        }
        writeln!(f, "certificates: {} proven, {} failed", self.proven, self.failed)
    }
}
