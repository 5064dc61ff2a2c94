//! Verification harness.
//!
//! Two campaigns, both emitting one JSON record per check:
//!
//! - [`verify_families`] walks a parameter grid and confirms, for every
//!   family member, that the generated graph's Sombor index equals the
//!   closed form exactly and that its degree-pair census matches the
//!   predicted counts.
//! - [`verify_bounds`] draws random polymer instances with a seeded
//!   [`SplitMix64`] stream and checks the superadditivity, edge-deletion
//!   and operator lower bounds on each, under both degree conventions.
//!
//! Records carry a [`Status`], the two sides of the inequality as floats,
//! and the float value of the exactly-computed gap. Exact arithmetic
//! decides every verdict; the floats are for human eyes only.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{
    bouquet, bouquet_lower_bound, chain, chain_lower_bound_i, chain_lower_bound_ii, circuit,
    circuit_lower_bound_2k, circuit_lower_bound_deg, link, link_lower_bound, Assembly,
    DegreeConvention, RootedUnit,
};
use crate::families::{FamilyError, FamilySpec};
use crate::graph::{Census, Graph};
use crate::index::{abs_diff_over_sqrt2, monomer_sum_bound, sombor_index, BoundCheck, Verdict};
use crate::radical::{cmp_numeric, default_margin, NumericOrdering, RadicalSum};
use crate::rng::SplitMix64;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot parse grid config: {0}")]
    Grid(String),
    #[error("unknown operator `{0}` (expected link, chain, circuit, bouquet or all)")]
    Operator(String),
}

// ---------------------------------------------------------------------------
// Records and reports

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The claim holds with margin to spare.
    Pass,
    /// Both sides agree exactly, and the claim permits equality.
    ExactPass,
    /// The claim fails.
    Fail,
    /// The numeric gap is below the separation margin.
    Inconclusive,
    /// Preconditions not met; nothing asserted.
    NotApplicable,
}

impl Status {
    fn severity(self) -> u8 {
        match self {
            Status::Pass | Status::ExactPass | Status::NotApplicable => 0,
            Status::Inconclusive => 1,
            Status::Fail => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::ExactPass => "exact-pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
            Status::NotApplicable => "not-applicable",
        }
    }
}

impl From<Verdict> for Status {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Holds => Status::Pass,
            Verdict::ExactEqual => Status::ExactPass,
            Verdict::Fails => Status::Fail,
            Verdict::Inconclusive => Status::Inconclusive,
            Verdict::NotApplicable => Status::NotApplicable,
        }
    }
}

/// One verification record; serializes to a single JSON object
/// `{case, check, status, lhs, rhs, gap, note}` where `lhs`/`rhs` are the
/// exact radical sums of the two sides (term arrays) and `gap` is the
/// float value of their exactly-computed difference, so any record can be
/// re-evaluated from its own fields.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub case: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<RadicalSum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<RadicalSum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Record {
    fn bare(check: &str, case: &str, status: Status) -> Self {
        Self {
            case: case.to_string(),
            check: check.to_string(),
            status,
            lhs: None,
            rhs: None,
            gap: None,
            note: None,
        }
    }

    fn sides(mut self, lhs: RadicalSum, rhs: RadicalSum) -> Self {
        self.gap = Some((&lhs - &rhs).eval_f64());
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    fn from_bound_check(check: &str, case: &str, bc: BoundCheck) -> Self {
        let mut record = Self::bare(check, case, bc.verdict.into());
        record.lhs = Some(bc.lhs);
        record.rhs = Some(bc.rhs);
        record.gap = Some(bc.gap);
        record
    }
}

/// An ordered collection of records.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    pub fn merge(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn inconclusive(&self) -> usize {
        self.count(Status::Inconclusive)
    }

    /// True when no record failed.
    pub fn is_clean(&self) -> bool {
        self.failures() == 0
    }

    /// One JSON object per line, in record order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push_str(&serde_json::to_string(record).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        format!(
            "{} checks: {} pass, {} exact-pass, {} fail, {} inconclusive, {} not-applicable",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::ExactPass),
            self.failures(),
            self.inconclusive(),
            self.count(Status::NotApplicable),
        )
    }
}

// ---------------------------------------------------------------------------
// Family grid

/// Inclusive `[lo, hi]` parameter span; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, Deserialize, Serialize)]
pub struct Span(pub [u32; 2]);

impl Span {
    pub fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.0[0]..=self.0[1]
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QGrid {
    pub m: Span,
    pub n: Span,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainGrid {
    pub q: Span,
    /// Optional clamp on the contact distance; by default every
    /// `1 ≤ h ≤ ⌊q/2⌋` is taken.
    #[serde(default)]
    pub h: Option<Span>,
    pub k: Span,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CactusGrid {
    pub n: Span,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulaneGrid {
    pub k: Span,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DendrimerGrid {
    pub n: Span,
}

/// Parameter ranges for the family campaign, loadable from JSON.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub q: QGrid,
    pub spiro: ChainGrid,
    pub poly: ChainGrid,
    pub cactus: CactusGrid,
    pub triangulane: TriangulaneGrid,
    pub d3: DendrimerGrid,
}

/// The grid baked into the library and used when no file is given.
pub const DEFAULT_GRID_JSON: &str = include_str!("../grids/default.json");

impl GridConfig {
    pub fn default_grid() -> Self {
        serde_json::from_str(DEFAULT_GRID_JSON).expect("bundled grid is valid")
    }

    pub fn from_json(text: &str) -> Result<Self, VerifyError> {
        serde_json::from_str(text).map_err(|e| VerifyError::Grid(e.to_string()))
    }

    /// All family members covered by the grid, in a fixed order.
    pub fn expand(&self) -> Vec<FamilySpec> {
        let mut specs = Vec::new();
        for m in self.q.m.iter() {
            for n in self.q.n.iter() {
                specs.push(FamilySpec::Q { m, n });
            }
        }
        for (grid, is_spiro) in [(&self.spiro, true), (&self.poly, false)] {
            for q in grid.q.iter() {
                let h_max = q / 2;
                let (h_lo, h_hi) = match grid.h {
                    Some(span) => (span.0[0].max(1), span.0[1].min(h_max)),
                    None => (1, h_max),
                };
                for h in h_lo..=h_hi {
                    for k in grid.k.iter() {
                        specs.push(if is_spiro {
                            FamilySpec::Spiro { q, h, k }
                        } else {
                            FamilySpec::Poly { q, h, k }
                        });
                    }
                }
            }
        }
        for name in crate::families::CactusName::ALL {
            for n in self.cactus.n.iter() {
                specs.push(FamilySpec::Cactus { name, n });
            }
        }
        for k in self.triangulane.k.iter() {
            specs.push(FamilySpec::Triangulane { k });
        }
        for n in self.d3.n.iter() {
            specs.push(FamilySpec::DendrimerD3 { n });
        }
        specs
    }
}

/// Checks generated index against closed form, and generated census
/// against the predicted counts, for every spec.
pub fn verify_families(specs: &[FamilySpec]) -> Report {
    let mut report = Report::new();
    for spec in specs {
        let case = spec.to_string();
        match family_records(spec, &case) {
            Ok(records) => {
                for r in records {
                    report.push(r);
                }
            }
            Err(e) => {
                let mut r = Record::bare("family", &case, Status::Fail);
                r.note = Some(e.to_string());
                report.push(r);
            }
        }
    }
    report
}

fn family_records(spec: &FamilySpec, case: &str) -> Result<[Record; 2], FamilyError> {
    let assembly = spec.generate()?;
    let so = sombor_index(&assembly.graph);
    let closed = spec.closed_form()?;
    let equal = so == closed;
    let status = if !equal {
        Status::Fail
    } else if spec.uses_degenerate_formula() {
        // The adjacent-contact formula needs at least two units; the
        // general branch reproduced this single cycle instead.
        Status::NotApplicable
    } else {
        Status::ExactPass
    };
    let mut closed_record = Record::bare("closed-form", case, status).sides(so, closed);
    if spec.uses_degenerate_formula() {
        closed_record.note = Some(
            "adjacent-contact form needs at least two units; general branch used".to_string(),
        );
    }

    let got = assembly.graph.edge_census();
    let predicted = spec.census_prediction()?;
    let mut census_record = Record::bare(
        "census",
        case,
        if got == predicted {
            Status::ExactPass
        } else {
            Status::Fail
        },
    );
    if got != predicted {
        census_record.note = Some(format!("predicted [{predicted}] got [{got}]"));
    }
    let census_total = |c: &Census| {
        RadicalSum::from_integer(i64::try_from(c.total()).expect("edge counts fit i64"))
    };
    census_record = census_record.sides(census_total(&got), census_total(&predicted));
    Ok([closed_record, census_record])
}

// ---------------------------------------------------------------------------
// Randomized bound campaign

/// The four point-attaching operators, as drawn by the campaign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    Link,
    Chain,
    Circuit,
    Bouquet,
}

impl Operator {
    pub const ALL: [Operator; 4] = [
        Operator::Link,
        Operator::Chain,
        Operator::Circuit,
        Operator::Bouquet,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Operator::Link => "link",
            Operator::Chain => "chain",
            Operator::Circuit => "circuit",
            Operator::Bouquet => "bouquet",
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Operator {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "link" => Ok(Operator::Link),
            "chain" => Ok(Operator::Chain),
            "circuit" => Ok(Operator::Circuit),
            "bouquet" => Ok(Operator::Bouquet),
            other => Err(VerifyError::Operator(other.to_string())),
        }
    }
}

/// Parses `all` or a comma-separated operator list.
pub fn parse_operators(s: &str) -> Result<Vec<Operator>, VerifyError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Operator::ALL.to_vec());
    }
    s.split(',').map(|part| part.parse()).collect()
}

/// The monomer pool instances are drawn from: cycles `C₃..C₈`, complete
/// graphs `K₂..K₅` and paths `P₂..P₅`, each with a short display name.
pub fn default_unit_pool() -> Vec<(String, Graph)> {
    let mut pool = Vec::new();
    for q in 3..=8 {
        pool.push((format!("C{q}"), Graph::cycle(q).expect("q >= 3")));
    }
    for n in 2..=5 {
        pool.push((format!("K{n}"), Graph::complete(n).expect("n >= 1")));
    }
    for n in 2..=5 {
        pool.push((format!("P{n}"), Graph::path(n).expect("n >= 1")));
    }
    pool
}

/// Configuration of the randomized campaign.
#[derive(Clone, Debug)]
pub struct BoundsConfig {
    pub seed: u64,
    /// Instances drawn per operator.
    pub count: usize,
    pub operators: Vec<Operator>,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            count: 1000,
            operators: Operator::ALL.to_vec(),
        }
    }
}

fn draw_instance(
    rng: &mut SplitMix64,
    pool: &[(String, Graph)],
    op: Operator,
    index: usize,
) -> (Vec<RootedUnit>, String) {
    let unit_count = match op {
        Operator::Circuit => 3 + rng.next_below(4) as usize,
        _ => 2 + rng.next_below(4) as usize,
    };
    let needs_out = matches!(op, Operator::Link | Operator::Chain);
    let mut units = Vec::with_capacity(unit_count);
    let mut case = format!("{op}#{index}");
    for j in 0..unit_count {
        let (name, graph) = &pool[rng.next_below(pool.len() as u64) as usize];
        let v = graph.vertex_count() as u64;
        let x = rng.next_below(v) as usize;
        let y = if needs_out {
            // Draw from the other v−1 vertices so y ≠ x without rejection.
            let mut y = rng.next_below(v - 1) as usize;
            if y >= x {
                y += 1;
            }
            Some(y)
        } else {
            None
        };
        case.push(if j == 0 { ' ' } else { '+' });
        match y {
            Some(y) => case.push_str(&format!("{name}({x},{y})")),
            None => case.push_str(&format!("{name}({x})")),
        }
        units.push(RootedUnit::new(graph.clone(), x, y).expect("pool draw is valid"));
    }
    (units, case)
}

fn assemble(op: Operator, units: &[RootedUnit]) -> Assembly {
    let result = match op {
        Operator::Link => link(units),
        Operator::Chain => chain(units),
        Operator::Circuit => circuit(units),
        Operator::Bouquet => bouquet(units),
    };
    result.expect("drawn instances satisfy the operator preconditions")
}

/// Builds a record for a lower-bound claim `so ≥ bound` (equality
/// permitted).
fn lower_bound_record(check: &str, case: &str, so: &RadicalSum, bound: &RadicalSum) -> Record {
    let status = match cmp_numeric(so, bound, default_margin(so, bound)) {
        NumericOrdering::Greater => Status::Pass,
        NumericOrdering::Equal => Status::ExactPass,
        NumericOrdering::Less => Status::Fail,
        NumericOrdering::Inconclusive => Status::Inconclusive,
    };
    Record::bare(check, case, status).sides(so.clone(), bound.clone())
}

/// The cycle-edge circuit bound, whose equality case is certified: exact
/// equality must coincide with every unit being a single vertex.
fn circuit_2k_record(
    case: &str,
    so: &RadicalSum,
    bound: &RadicalSum,
    all_single_vertex: bool,
) -> Record {
    let mut record = lower_bound_record("circuit-bound-2k", case, so, bound);
    match (record.status, all_single_vertex) {
        (Status::ExactPass, false) => {
            record.status = Status::Fail;
            record.note = Some("equality attained by units larger than one vertex".to_string());
        }
        (Status::Pass, true) | (Status::Fail, true) | (Status::Inconclusive, true) => {
            record.status = Status::Fail;
            record.note = Some("single-vertex units must attain exact equality".to_string());
        }
        _ => {}
    }
    record
}

/// Aggregated edge-deletion check: the strict deletion inequality is
/// evaluated on every edge, and one record reports the worst status with
/// the tightest edge's numbers.
fn deletion_record(case: &str, g: &Graph, so_full: &RadicalSum) -> Record {
    let mut worst = Status::Pass;
    let mut tightest: Option<(RadicalSum, RadicalSum, f64)> = None;
    let mut edges = 0usize;
    for (u, v) in g.edges() {
        edges += 1;
        let lhs = sombor_index(&g.delete_edge(u, v).expect("edge exists"));
        let rhs = so_full - &abs_diff_over_sqrt2(g.degree(u), g.degree(v));
        let status = match cmp_numeric(&lhs, &rhs, default_margin(&lhs, &rhs)) {
            NumericOrdering::Less => Status::Pass,
            NumericOrdering::Inconclusive => Status::Inconclusive,
            // Exact equality falsifies the strict claim.
            _ => Status::Fail,
        };
        if status.severity() > worst.severity() {
            worst = status;
        }
        let gap = (&lhs - &rhs).eval_f64();
        if tightest.as_ref().map_or(true, |(_, _, g0)| gap > *g0) {
            tightest = Some((lhs, rhs, gap));
        }
    }
    let mut record = Record::bare("edge-deletion", case, worst);
    if let Some((lhs, rhs)) = tightest.map(|(l, r, _)| (l, r)) {
        record = record.sides(lhs, rhs);
    }
    record.note = Some(format!("{edges} edges checked; tightest edge reported"));
    record
}

/// Runs the randomized bound campaign. The record stream is a pure
/// function of the configuration.
pub fn verify_bounds(config: &BoundsConfig) -> Report {
    let pool = default_unit_pool();
    let mut rng = SplitMix64::new(config.seed);
    let mut report = Report::new();
    for &op in &config.operators {
        for index in 0..config.count {
            let (units, case) = draw_instance(&mut rng, &pool, op, index);
            let assembly = assemble(op, &units);
            let so = sombor_index(&assembly.graph);

            let monomers: Vec<Graph> = units.iter().map(|u| u.graph().clone()).collect();
            report.push(Record::from_bound_check(
                "monomer-sum",
                &case,
                monomer_sum_bound(&assembly.graph, &monomers),
            ));

            report.push(deletion_record(&case, &assembly.graph, &so));

            match op {
                Operator::Link => {
                    for conv in DegreeConvention::BOTH {
                        let bound = link_lower_bound(&assembly, &units, conv)
                            .expect("assembly matches units");
                        report.push(lower_bound_record(
                            &format!("link-bound[{}]", conv.label()),
                            &case,
                            &so,
                            &bound,
                        ));
                    }
                }
                Operator::Chain => {
                    for conv in DegreeConvention::BOTH {
                        let one = chain_lower_bound_i(&assembly, &units, conv)
                            .expect("assembly matches units");
                        report.push(lower_bound_record(
                            &format!("chain-bound-i[{}]", conv.label()),
                            &case,
                            &so,
                            &one,
                        ));
                        let full = chain_lower_bound_ii(&assembly, &units, conv)
                            .expect("assembly matches units");
                        report.push(lower_bound_record(
                            &format!("chain-bound-ii[{}]", conv.label()),
                            &case,
                            &so,
                            &full,
                        ));
                    }
                }
                Operator::Circuit => {
                    for conv in DegreeConvention::BOTH {
                        let bound = circuit_lower_bound_deg(&assembly, &units, conv)
                            .expect("assembly matches units");
                        report.push(lower_bound_record(
                            &format!("circuit-bound-deg[{}]", conv.label()),
                            &case,
                            &so,
                            &bound,
                        ));
                    }
                    let bound =
                        circuit_lower_bound_2k(&units).expect("circuit has at least 3 units");
                    let all_single = units.iter().all(|u| u.graph().vertex_count() == 1);
                    report.push(circuit_2k_record(&case, &so, &bound, all_single));
                }
                Operator::Bouquet => {
                    for conv in DegreeConvention::BOTH {
                        let bound = bouquet_lower_bound(&assembly, &units, conv)
                            .expect("assembly matches units");
                        report.push(lower_bound_record(
                            &format!("bouquet-bound[{}]", conv.label()),
                            &case,
                            &so,
                            &bound,
                        ));
                    }
                }
            }
        }
    }
    report
}
