//! Per-verb report structures: each verb produces one serializable struct
//! with a matching human text form, so `--json` and plain output always
//! carry the same facts.

use num_bigint::BigInt;
use serde::Serialize;

use thrfix::geomfix::{GeomFixResult, ProductDefectReport};
use thrfix::ring_inv::{RingWithInvolution, ValidationReport};
use thrfix::witt::WittComparison;

use crate::spec_file::FlexInt;

pub fn bracket(fs: &[BigInt]) -> String {
    let inner = fs
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{}]", inner)
}

fn bracket_flex(fs: &[FlexInt]) -> String {
    let inner = fs
        .iter()
        .map(|d| d.0.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{}]", inner)
}

fn flex(fs: &[BigInt]) -> Vec<FlexInt> {
    fs.iter().map(FlexInt::from).collect()
}

#[derive(Serialize)]
pub struct MethodRecord {
    pub method: String,
    pub invariant_factors: Vec<FlexInt>,
}

#[derive(Serialize)]
pub struct ComputeReport {
    pub ring: String,
    pub method: String,
    pub q_invariant_factors: Vec<FlexInt>,
    pub invariant_factors: Vec<FlexInt>,
    pub f2_dimension: usize,
    pub agreement: Vec<MethodRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
}

impl ComputeReport {
    pub fn new(ring: &RingWithInvolution, result: &GeomFixResult, with_witnesses: bool) -> Self {
        ComputeReport {
            ring: result.ring_name.clone(),
            method: result.method.to_string(),
            q_invariant_factors: flex(&result.q_invariant_factors),
            invariant_factors: flex(&result.invariant_factors),
            f2_dimension: result.f2_dimension,
            agreement: result
                .cross_check
                .iter()
                .map(|(m, fs)| MethodRecord {
                    method: m.to_string(),
                    invariant_factors: flex(fs),
                })
                .collect(),
            witnesses: with_witnesses
                .then(|| result.witnesses.iter().map(|w| w.describe(ring)).collect()),
        }
    }

    pub fn human(&self) -> String {
        let mut out = vec![
            format!("ring: {}", self.ring),
            format!("method: {}", self.method),
            format!("Q: {}", bracket_flex(&self.q_invariant_factors)),
            format!(
                "invariant_factors: {}",
                bracket_flex(&self.invariant_factors)
            ),
            format!("f2_dimension: {}", self.f2_dimension),
            format!(
                "agreement: {}",
                self.agreement
                    .iter()
                    .map(|r| format!("{} {}", r.method, bracket_flex(&r.invariant_factors)))
                    .collect::<Vec<_>>()
                    .join("; ")
            ),
        ];
        if let Some(ws) = &self.witnesses {
            for (i, w) in ws.iter().enumerate() {
                out.push(format!("witness {}: {}", i + 1, w));
            }
        }
        out.join("\n")
    }
}

#[derive(Serialize)]
pub struct SpanRecord {
    pub linear_rank: usize,
    pub exhaustive_rank: usize,
    pub matches: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub ring: String,
    pub h1: Vec<FlexInt>,
    pub norm_quotient: Vec<FlexInt>,
    pub homology_matches: bool,
    pub linear: Vec<FlexInt>,
    pub coequalizer: Vec<FlexInt>,
    pub coequalizer_matches: bool,
    /// `None` when enumeration is unavailable (infinite ring or over cap).
    pub spans: Option<SpanRecord>,
}

impl OracleReport {
    pub fn human(&self) -> String {
        let spans = match &self.spans {
            Some(s) => format!(
                "spans: linear rank {}, exhaustive rank {}, match {}",
                s.linear_rank, s.exhaustive_rank, s.matches
            ),
            None => "spans: skipped (enumeration unavailable)".to_string(),
        };
        [
            format!("ring: {}", self.ring),
            format!("H1: {}", bracket_flex(&self.h1)),
            format!("norm_quotient: {}", bracket_flex(&self.norm_quotient)),
            format!("homology_matches: {}", self.homology_matches),
            format!("linear: {}", bracket_flex(&self.linear)),
            format!("coequalizer: {}", bracket_flex(&self.coequalizer)),
            format!("coequalizer_matches: {}", self.coequalizer_matches),
            spans,
        ]
        .join("\n")
    }
}

#[derive(Serialize)]
pub struct ComparisonRecord {
    pub component_group: Vec<FlexInt>,
    pub isomorphic_as_groups: bool,
    pub note: String,
}

#[derive(Serialize)]
pub struct WittReport {
    pub ring: String,
    pub witt_group: Vec<FlexInt>,
    /// `None` when the ring carries a nontrivial involution.
    pub comparison: Option<ComparisonRecord>,
}

impl WittReport {
    pub fn new(ring: &RingWithInvolution, witt: &[BigInt], cmp: Option<&WittComparison>) -> Self {
        WittReport {
            ring: ring.name().to_string(),
            witt_group: flex(witt),
            comparison: cmp.map(|c| ComparisonRecord {
                component_group: flex(&c.geomfix_factors),
                isomorphic_as_groups: c.isomorphic_as_groups,
                note: c.note.clone(),
            }),
        }
    }

    pub fn human(&self) -> String {
        let mut out = vec![
            format!("ring: {}", self.ring),
            format!("witt_group: {}", bracket_flex(&self.witt_group)),
        ];
        match &self.comparison {
            Some(c) => {
                out.push(format!(
                    "component_group: {}",
                    bracket_flex(&c.component_group)
                ));
                out.push(format!("isomorphic_as_groups: {}", c.isomorphic_as_groups));
                out.push(format!("note: {}", c.note));
            }
            None => out.push("comparison: skipped (needs the identity involution)".to_string()),
        }
        out.join("\n")
    }
}

#[derive(Serialize)]
pub struct DefectReport {
    pub left: String,
    pub right: String,
    pub product: String,
    pub source_invariant_factors: Vec<FlexInt>,
    pub left_invariant_factors: Vec<FlexInt>,
    pub right_invariant_factors: Vec<FlexInt>,
    pub injective: bool,
    pub surjective: bool,
    pub kernel_witnesses: Vec<String>,
}

impl DefectReport {
    pub fn new(
        left: &RingWithInvolution,
        right: &RingWithInvolution,
        r: &ProductDefectReport,
    ) -> Self {
        DefectReport {
            left: left.name().to_string(),
            right: right.name().to_string(),
            product: r.product_ring.name().to_string(),
            source_invariant_factors: flex(&r.source.invariant_factors),
            left_invariant_factors: flex(&r.targets.0.invariant_factors),
            right_invariant_factors: flex(&r.targets.1.invariant_factors),
            injective: r.injective,
            surjective: r.surjective,
            kernel_witnesses: r
                .kernel_witnesses
                .iter()
                .map(|w| w.describe(&r.product_ring))
                .collect(),
        }
    }

    pub fn human(&self) -> String {
        let mut out = vec![
            format!("left: {}", self.left),
            format!("right: {}", self.right),
            format!("product: {}", self.product),
            format!(
                "source_invariant_factors: {}",
                bracket_flex(&self.source_invariant_factors)
            ),
            format!(
                "left_invariant_factors: {}",
                bracket_flex(&self.left_invariant_factors)
            ),
            format!(
                "right_invariant_factors: {}",
                bracket_flex(&self.right_invariant_factors)
            ),
            format!("injective: {}", self.injective),
            format!("surjective: {}", self.surjective),
        ];
        if self.kernel_witnesses.is_empty() {
            out.push("kernel_witnesses: (none)".to_string());
        } else {
            for (i, w) in self.kernel_witnesses.iter().enumerate() {
                out.push(format!("kernel_witness {}: {}", i + 1, w));
            }
        }
        out.join("\n")
    }
}

#[derive(Serialize)]
pub struct FailureRecord {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub ring: String,
    pub valid: bool,
    pub failures: Vec<FailureRecord>,
}

impl ValidateReport {
    pub fn new(name: &str, report: &ValidationReport) -> Self {
        ValidateReport {
            ring: name.to_string(),
            valid: report.passed(),
            failures: report
                .failures
                .iter()
                .map(|f| FailureRecord {
                    axiom: format!("{:?}", f.axiom),
                    witness: f.witness.clone(),
                    detail: f.detail.clone(),
                })
                .collect(),
        }
    }

    pub fn human(&self) -> String {
        let mut out = vec![
            format!("ring: {}", self.ring),
            format!("valid: {}", self.valid),
        ];
        for (i, f) in self.failures.iter().enumerate() {
            out.push(format!(
                "failure {}: {} at {:?}: {}",
                i + 1,
                f.axiom,
                f.witness,
                f.detail
            ));
        }
        out.join("\n")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
