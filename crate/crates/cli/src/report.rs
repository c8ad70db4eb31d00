//! Report documents: JSON shapes that round-trip, and the text rendering.

use std::fmt::Write as _;

use nexus_core::arrangement::{ArrangementReport, ExponentCeiling, MultiplePoint};
use nexus_core::constraints::{
    Application1, Application2, ConstraintReport, SRange, TraceViolation,
};
use nexus_core::le::LeInvariants;
use nexus_core::BigRational;
use serde::{Deserialize, Serialize};

use crate::formats::Rational;

pub const UNKNOWN: &str = "UNKNOWN";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RangeDoc {
    pub min: u64,
    pub max: u64,
}

impl From<SRange> for RangeDoc {
    fn from(r: SRange) -> Self {
        Self {
            min: r.min,
            max: r.max,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct App1Doc {
    pub verdict: String,
    pub conclusions: Vec<String>,
}

impl From<&Application1> for App1Doc {
    fn from(a: &Application1) -> Self {
        Self {
            verdict: a.verdict.as_str().to_string(),
            conclusions: a.conclusions.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct App2Doc {
    pub gap: u64,
    pub s: RangeDoc,
    pub notes: Vec<String>,
}

impl From<&Application2> for App2Doc {
    fn from(a: &Application2) -> Self {
        Self {
            gap: a.gap,
            s: a.s.into(),
            notes: a.notes.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceDoc {
    pub name: String,
    pub trace: i64,
    pub expected: i64,
}

impl From<&TraceViolation> for TraceDoc {
    fn from(v: &TraceViolation) -> Self {
        Self {
            name: v.name.clone(),
            trace: v.trace,
            expected: v.expected,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstraintDoc {
    pub n: u32,
    pub mu0: u64,
    pub lambda1: u64,
    pub lambda0: Option<u64>,
    pub omega: Option<u64>,
    #[serde(rename = "charH0")]
    pub char_h0: Option<String>,
    pub divisor_bound: String,
    pub rank_bound: u64,
    pub s_bounds: RangeDoc,
    pub application1: App1Doc,
    pub application2: App2Doc,
    pub trace_violations: Vec<TraceDoc>,
    pub findings: Vec<String>,
    pub warnings: Vec<String>,
}

impl From<&ConstraintReport> for ConstraintDoc {
    fn from(r: &ConstraintReport) -> Self {
        Self {
            n: r.n,
            mu0: r.mu0,
            lambda1: r.lambda1,
            lambda0: r.lambda0,
            omega: r.omega,
            char_h0: r.char_h0.as_ref().map(ToString::to_string),
            divisor_bound: r
                .divisor_bound
                .as_ref()
                .map_or_else(|| UNKNOWN.to_string(), ToString::to_string),
            rank_bound: r.rank_bound,
            s_bounds: r.s_bounds.into(),
            application1: (&r.application1).into(),
            application2: (&r.application2).into(),
            trace_violations: r.trace_violations.iter().map(Into::into).collect(),
            findings: r.findings.clone(),
            warnings: r.warnings.clone(),
        }
    }
}

/// Lê numbers; `null` stands for an infinite length.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LeDoc {
    pub mu0: Option<u64>,
    pub lambda0: Option<u64>,
    pub lambda1: Option<u64>,
    pub omega: Option<u64>,
    pub polar_multiplicity: Option<u64>,
    pub genericity_ok: bool,
    pub balanced: bool,
    pub warnings: Vec<String>,
}

impl From<&LeInvariants> for LeDoc {
    fn from(le: &LeInvariants) -> Self {
        Self {
            mu0: le.mu0.finite(),
            lambda0: le.lambda0.finite(),
            lambda1: le.lambda1.finite(),
            omega: le.omega.finite(),
            polar_multiplicity: le.polar_multiplicity.finite(),
            genericity_ok: le.genericity_ok,
            balanced: le.balanced,
            warnings: le.warnings.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalyzeDoc {
    pub poly: String,
    pub vars: Vec<String>,
    pub z0: Vec<Rational>,
    pub d0: Option<u64>,
    pub le: LeDoc,
    pub report: Option<ConstraintDoc>,
}

impl AnalyzeDoc {
    pub fn new(
        poly: String,
        vars: Vec<String>,
        z0: &[BigRational],
        d0: Option<u64>,
        le: &LeInvariants,
        report: Option<&ConstraintReport>,
    ) -> Self {
        Self {
            poly,
            vars,
            z0: z0.iter().map(Rational::from_big).collect(),
            d0,
            le: le.into(),
            report: report.map(Into::into),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PointDoc {
    pub line: [Rational; 3],
    pub multiplicity: u64,
}

impl From<&MultiplePoint> for PointDoc {
    fn from(p: &MultiplePoint) -> Self {
        Self {
            line: [
                Rational::from_int(&p.line[0]),
                Rational::from_int(&p.line[1]),
                Rational::from_int(&p.line[2]),
            ],
            multiplicity: p.multiplicity,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CeilingDoc {
    pub k: u64,
    pub from_h0: u64,
    pub from_components: u64,
    pub ceiling: u64,
}

impl From<&ExponentCeiling> for CeilingDoc {
    fn from(c: &ExponentCeiling) -> Self {
        Self {
            k: c.k,
            from_h0: c.from_h0,
            from_components: c.from_components,
            ceiling: c.ceiling,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ArrangementDoc {
    pub degree: u64,
    pub z0: [Rational; 3],
    pub multiple_points: Vec<PointDoc>,
    pub ceilings: Vec<CeilingDoc>,
    pub report: ConstraintDoc,
}

impl From<&ArrangementReport> for ArrangementDoc {
    fn from(r: &ArrangementReport) -> Self {
        Self {
            degree: r.degree,
            z0: [
                Rational::from_big(&r.z0[0]),
                Rational::from_big(&r.z0[1]),
                Rational::from_big(&r.z0[2]),
            ],
            multiple_points: r.multiple_points.iter().map(Into::into).collect(),
            ceilings: r.ceilings.iter().map(Into::into).collect(),
            report: (&r.report).into(),
        }
    }
}

fn rational_text(r: &Rational) -> String {
    match r {
        Rational::Int(v) => v.to_string(),
        Rational::Text(s) => s.clone(),
    }
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "infinite".to_string(), |v| v.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn bullets(out: &mut String, title: &str, items: &[String]) {
    if items.is_empty() {
        return;
    }
    let _ = writeln!(out, "{}", title);
    for item in items {
        let _ = writeln!(out, "  - {}", item);
    }
}

pub fn render_le(out: &mut String, le: &LeDoc) {
    let _ = writeln!(out, "Le numbers");
    let rows = [
        ("mu0", opt(le.mu0)),
        ("lambda0", opt(le.lambda0)),
        ("lambda1", opt(le.lambda1)),
        ("omega", opt(le.omega)),
        ("(Gamma.V(z0))_0", opt(le.polar_multiplicity)),
        ("generic", yes_no(le.genericity_ok).to_string()),
        ("balanced", yes_no(le.balanced).to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "  {:<17}{}", k, v);
    }
}

pub fn render_constraints(out: &mut String, r: &ConstraintDoc) {
    let _ = writeln!(out, "Constraints (n = {})", r.n);
    let s = if r.s_bounds.min == r.s_bounds.max {
        r.s_bounds.min.to_string()
    } else {
        format!("{}..{}", r.s_bounds.min, r.s_bounds.max)
    };
    let rows = [
        ("mu0", r.mu0.to_string()),
        ("lambda1", r.lambda1.to_string()),
        (
            "lambda0",
            r.lambda0.map_or_else(|| "-".to_string(), |v| v.to_string()),
        ),
        (
            "omega",
            r.omega.map_or_else(|| "-".to_string(), |v| v.to_string()),
        ),
        (
            "charH0",
            r.char_h0.clone().unwrap_or_else(|| UNKNOWN.to_string()),
        ),
        ("divisor bound", r.divisor_bound.clone()),
        ("rank bound", r.rank_bound.to_string()),
        ("feasible s", s),
        ("application 1", r.application1.verdict.clone()),
        ("mu0 - lambda1", r.application2.gap.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "  {:<17}{}", k, v);
    }
    bullets(
        out,
        "application 1 conclusions",
        &r.application1.conclusions,
    );
    bullets(out, "application 2", &r.application2.notes);
    let traces: Vec<String> = r
        .trace_violations
        .iter()
        .map(|v| format!("{}: trace {} but expected {}", v.name, v.trace, v.expected))
        .collect();
    bullets(out, "trace violations", &traces);
    bullets(out, "findings", &r.findings);
    bullets(out, "warnings", &r.warnings);
}

pub fn render_analyze(doc: &AnalyzeDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}", doc.poly);
    let z0: Vec<String> = doc.z0.iter().map(rational_text).collect();
    let _ = writeln!(out, "vars = ({})", doc.vars.join(", "));
    let _ = writeln!(out, "z0 = ({})", z0.join(", "));
    if let Some(d0) = doc.d0 {
        let _ = writeln!(out, "d0 = {}", d0);
    }
    render_le(&mut out, &doc.le);
    match &doc.report {
        Some(r) => render_constraints(&mut out, r),
        None => bullets(&mut out, "warnings", &doc.le.warnings),
    }
    out
}

pub fn render_arrangement(doc: &ArrangementDoc) -> String {
    let mut out = String::new();
    let z0: Vec<String> = doc.z0.iter().map(rational_text).collect();
    let _ = writeln!(
        out,
        "Arrangement of {} planes, z0 = ({})",
        doc.degree,
        z0.join(", ")
    );
    let _ = writeln!(out, "multiple lines");
    for p in &doc.multiple_points {
        let l: Vec<String> = p.line.iter().map(rational_text).collect();
        let _ = writeln!(out, "  ({})  m = {}", l.join(", "), p.multiplicity);
    }
    let _ = writeln!(out, "exponent ceilings");
    for c in &doc.ceilings {
        let _ = writeln!(
            out,
            "  Phi_{}: min({}, {}) = {}",
            c.k, c.from_h0, c.from_components, c.ceiling
        );
    }
    render_constraints(&mut out, &doc.report);
    out
}

pub fn render_constraint_report(doc: &ConstraintDoc) -> String {
    let mut out = String::new();
    render_constraints(&mut out, doc);
    out
}
