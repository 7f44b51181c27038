//! The four commands. Each returns an exit code and the text for stdout.

use ppforge_core::algebras::{
    is_commutative_associative, is_homomorphism, is_lie, is_poisson, is_pre_lie, is_zinbiel,
    pre_poisson_from_rb0, sub_adjacent,
};
use ppforge_core::bialgebra::{double_of_bialgebra, double_unchecked, is_pre_poisson_bialgebra};
use ppforge_core::geometry::{
    compatible_pre_poisson, is_manin_triple, is_phase_space, is_quadratic_pre_poisson, is_symplectic_poisson,
    phase_space, standard_omega,
};
use ppforge_core::linalg::{format_scalar, int, skew_part};
use ppforge_core::report::Violation;
use ppforge_core::representations::{is_poisson_rep, is_pre_poisson_rep, semidirect_poisson, semidirect_pre_poisson};
use ppforge_core::rota_baxter::{
    descendent, factorizable_from_quadratic_rb, is_quadratic_rb, is_rb_poisson, is_rb_pre_poisson,
    is_rb_symplectic_poisson, iso_check_descendent, phase_space_from_rb_symplectic, quadratic_rb_from_factorizable,
    rb_symplectic_from_quadratic_rb,
};
use ppforge_core::yang_baxter::{
    check_coboundary_conditions, classify_r, coboundary_bialgebra, is_lr_invariant, s_equation, zinbiel_ybe,
};
use ppforge_core::{
    CheckReport, Error, Matrix, PoissonAlgebra, PoissonRep, PrePoissonAlgebra, PrePoissonBialgebra, PrePoissonRep,
    QuadraticRBPrePoisson, RBSymplecticPoisson, RMatrix, Result, Scalar, SplitDecoration, Tensor3,
};
use serde_json::{json, Value};

use crate::document::{serialize, Document, Kind};

pub struct Outcome {
    pub code: i32,
    pub out: String,
}

#[derive(Clone, Copy)]
pub struct Style {
    pub json: bool,
    pub color: bool,
}

impl Style {
    fn verdict(&self, passed: bool) -> String {
        let (word, code) = if passed { ("pass", "32") } else { ("fail", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

/// Input problems exit 1; a failed mathematical precondition exits 2.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::MalformedInput { .. }
        | Error::NonRationalScalar(_)
        | Error::DimensionMismatch(_)
        | Error::UnknownCheck(_)
        | Error::MissingField(_)
        | Error::Usage(_)
        | Error::KindMismatch(_)
        | Error::ZeroWeight => 1,
        _ => 2,
    }
}

fn missing(what: &str) -> Error {
    Error::MissingField(what.to_string())
}

fn pre_poisson(doc: &Document) -> Result<PrePoissonAlgebra> {
    doc.pre_poisson().ok_or_else(|| missing("star/circ"))
}

fn poisson(doc: &Document) -> Result<PoissonAlgebra> {
    doc.poisson().ok_or_else(|| missing("dot/bracket"))
}

fn omega(doc: &Document) -> Result<Matrix> {
    doc.omega.clone().ok_or_else(|| missing("omega"))
}

fn split(doc: &Document) -> Result<SplitDecoration> {
    doc.split.ok_or_else(|| missing("split"))
}

fn rmatrix(doc: &Document) -> Result<RMatrix> {
    RMatrix::new(pre_poisson(doc)?, doc.r.clone().ok_or_else(|| missing("r"))?)
}

fn lambda(doc: &Document) -> Result<Scalar> {
    doc.lambda.clone().ok_or_else(|| missing("lambda"))
}

fn bialgebra(doc: &Document) -> Result<PrePoissonBialgebra> {
    let ds = doc.delta_star.clone().ok_or_else(|| missing("delta_star"))?;
    let dc = doc.delta_circ.clone().ok_or_else(|| missing("delta_circ"))?;
    PrePoissonBialgebra::new(pre_poisson(doc)?, ds, dc)
}

fn quadratic_rb(doc: &Document) -> Result<QuadraticRBPrePoisson> {
    QuadraticRBPrePoisson::new(pre_poisson(doc)?, doc.b.clone().ok_or_else(|| missing("b"))?, lambda(doc)?, omega(doc)?)
}

fn rb_symplectic(doc: &Document) -> Result<RBSymplecticPoisson> {
    RBSymplecticPoisson::new(poisson(doc)?, doc.b.clone().ok_or_else(|| missing("b"))?, lambda(doc)?, omega(doc)?)
}

fn rep_pre(doc: &Document) -> Result<PrePoissonRep> {
    let get = |v: &Option<Vec<Matrix>>, k: &str| v.clone().ok_or_else(|| missing(k));
    PrePoissonRep::new(
        pre_poisson(doc)?,
        doc.dim_v.ok_or_else(|| missing("dim_v"))?,
        get(&doc.rho, "rho")?,
        get(&doc.mu, "mu")?,
        get(&doc.theta, "theta")?,
        get(&doc.gamma, "gamma")?,
    )
}

fn rep_poisson(doc: &Document) -> Result<PoissonRep> {
    let get = |v: &Option<Vec<Matrix>>, k: &str| v.clone().ok_or_else(|| missing(k));
    PoissonRep::new(
        poisson(doc)?,
        doc.dim_v.ok_or_else(|| missing("dim_v"))?,
        get(&doc.varrho, "varrho")?,
        get(&doc.varsigma, "varsigma")?,
    )
}

fn tensor_report(id: &str, t: &Tensor3) -> CheckReport {
    let mut report = CheckReport::new();
    for ((i, j, k), v) in t.nonzero() {
        report.push(Violation {
            identity: id.into(),
            indices: vec![i, j, k],
            lhs: vec![v],
            rhs: vec![Scalar::from_integer(0.into())],
        });
    }
    report
}

fn flag_report(id: &str, ok: bool) -> CheckReport {
    let mut report = CheckReport::new();
    if !ok {
        report.push(Violation {
            identity: id.into(),
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        });
    }
    report
}

/// Every check name, in the order defaults are run.
pub const CHECKS: &[&str] = &[
    "zinbiel",
    "pre-lie",
    "pre-poisson",
    "commutative-associative",
    "lie",
    "poisson",
    "rep",
    "bialgebra",
    "quadratic",
    "symplectic",
    "manin-triple",
    "phase-space",
    "rb",
    "quadratic-rb",
    "rb-symplectic",
    "zinbiel-ybe",
    "s-equation",
    "lr-invariant",
    "coboundary",
    "quasi-triangular",
    "triangular",
    "factorizable",
    "descendent-iso",
];

fn run_check(name: &str, doc: &Document) -> Result<CheckReport> {
    match name {
        "zinbiel" => Ok(is_zinbiel(doc.star.as_ref().ok_or_else(|| missing("star"))?)),
        "pre-lie" => Ok(is_pre_lie(doc.circ.as_ref().ok_or_else(|| missing("circ"))?)),
        "pre-poisson" => pre_poisson(doc).map(|p| p.check()),
        "commutative-associative" => Ok(is_commutative_associative(doc.dot.as_ref().ok_or_else(|| missing("dot"))?)),
        "lie" => Ok(is_lie(doc.bracket.as_ref().ok_or_else(|| missing("bracket"))?)),
        "poisson" => {
            let p = poisson(doc)?;
            is_poisson(p.dot(), p.bracket())
        }
        "rep" => {
            if doc.has_pre_poisson() {
                Ok(is_pre_poisson_rep(&rep_pre(doc)?))
            } else {
                Ok(is_poisson_rep(&rep_poisson(doc)?))
            }
        }
        "bialgebra" => Ok(is_pre_poisson_bialgebra(&bialgebra(doc)?)),
        "quadratic" => is_quadratic_pre_poisson(&pre_poisson(doc)?, &omega(doc)?),
        "symplectic" => is_symplectic_poisson(&poisson(doc)?, &omega(doc)?),
        "manin-triple" => {
            if doc.kind == Kind::Bialgebra {
                let b = bialgebra(doc)?;
                let n = b.dim();
                is_manin_triple(&double_unchecked(&b), &SplitDecoration::halves(n), &standard_omega(n))
            } else {
                is_manin_triple(&pre_poisson(doc)?, &split(doc)?, &omega(doc)?)
            }
        }
        "phase-space" => {
            if doc.kind == Kind::Bialgebra {
                let b = bialgebra(doc)?;
                let n = b.dim();
                let d = double_unchecked(&b);
                let big = PoissonAlgebra::new_unchecked(d.dot_table(), d.bracket_table())?;
                is_phase_space(&big, &SplitDecoration::halves(n), &standard_omega(n))
            } else {
                is_phase_space(&poisson(doc)?, &split(doc)?, &omega(doc)?)
            }
        }
        "rb" => {
            let b = doc.b.as_ref().ok_or_else(|| missing("b"))?;
            if doc.has_pre_poisson() {
                is_rb_pre_poisson(&pre_poisson(doc)?, b, &lambda(doc)?)
            } else {
                is_rb_poisson(&poisson(doc)?, b, &lambda(doc)?)
            }
        }
        "quadratic-rb" => is_quadratic_rb(&quadratic_rb(doc)?),
        "rb-symplectic" => is_rb_symplectic_poisson(&rb_symplectic(doc)?),
        "zinbiel-ybe" => Ok(tensor_report("zinbiel-ybe", &zinbiel_ybe(&rmatrix(doc)?))),
        "s-equation" => Ok(tensor_report("s-equation", &s_equation(&rmatrix(doc)?))),
        "lr-invariant" => {
            let rm = rmatrix(doc)?;
            Ok(is_lr_invariant(&rm.with_r(skew_part(rm.r()))?))
        }
        "coboundary" => Ok(check_coboundary_conditions(&rmatrix(doc)?)),
        "quasi-triangular" => Ok(flag_report("quasi-triangular", classify_r(&rmatrix(doc)?).quasi_triangular)),
        "triangular" => Ok(flag_report("triangular", classify_r(&rmatrix(doc)?).triangular)),
        "factorizable" => Ok(flag_report("factorizable", classify_r(&rmatrix(doc)?).factorizable)),
        "descendent-iso" => iso_check_descendent(&rmatrix(doc)?, &quadratic_rb(doc)?),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Checks whose inputs are all present in the document.
fn default_checks(doc: &Document) -> Vec<&'static str> {
    let pre = doc.has_pre_poisson();
    let (r, b, w, s) = (doc.r.is_some(), doc.b.is_some(), doc.omega.is_some(), doc.split.is_some());
    match doc.kind {
        Kind::Algebra => vec!["pre-poisson"],
        Kind::Poisson => vec!["poisson"],
        Kind::Rep => vec!["rep"],
        Kind::Bialgebra => vec!["bialgebra", "manin-triple", "phase-space"],
        Kind::Rmatrix => vec!["zinbiel-ybe", "s-equation", "lr-invariant", "coboundary"],
        Kind::Rb => vec!["rb"],
        Kind::Form | Kind::Bundle => {
            let mut out = vec![];
            out.push(if pre { "pre-poisson" } else { "poisson" });
            if w {
                out.push(if pre { "quadratic" } else { "symplectic" });
            }
            if w && s {
                out.push(if pre { "manin-triple" } else { "phase-space" });
            }
            if b && doc.lambda.is_some() {
                out.push("rb");
                if w {
                    out.push(if pre { "quadratic-rb" } else { "rb-symplectic" });
                }
            }
            if r && pre {
                out.extend(["zinbiel-ybe", "s-equation", "lr-invariant"]);
                if b && w && doc.lambda.is_some() {
                    out.push("descendent-iso");
                }
            }
            out
        }
    }
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(format_scalar(s))).collect())
}

fn report_json(report: &CheckReport) -> Value {
    Value::Array(
        report
            .violations()
            .iter()
            .map(|v| {
                json!({
                    "identity": v.identity,
                    "at": v.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "lhs": scalars(&v.lhs),
                    "rhs": scalars(&v.rhs),
                })
            })
            .collect(),
    )
}

fn report_text(name: &str, report: &CheckReport, style: Style) -> String {
    let mut out = format!("{name}: {}", style.verdict(report.passed()));
    if !report.passed() {
        out.push_str(&format!(" ({} violations)", report.violations().len()));
    }
    out.push('\n');
    for v in report.violations() {
        out.push_str(&format!("  {v}\n"));
    }
    out
}

pub fn cmd_check(doc: &Document, checks: &[String], style: Style) -> Result<Outcome> {
    let names: Vec<String> = if checks.is_empty() {
        default_checks(doc).into_iter().map(String::from).collect()
    } else {
        checks.to_vec()
    };
    for n in &names {
        if !CHECKS.contains(&n.as_str()) {
            return Err(Error::UnknownCheck(n.clone()));
        }
    }
    let mut results = Vec::new();
    for n in &names {
        let report = match run_check(n, doc) {
            Ok(r) => r.sorted(),
            Err(Error::MissingField(m)) => return Err(Error::MissingField(format!("{m}, needed by check {n}"))),
            Err(e) if exit_code(&e) == 2 => {
                let mut r = CheckReport::new();
                r.push(Violation {
                    identity: format!("{n}/{}", e.name()),
                    indices: vec![],
                    lhs: vec![],
                    rhs: vec![],
                });
                r
            }
            Err(e) => return Err(e),
        };
        results.push((n.clone(), report));
    }
    let passed = results.iter().all(|(_, r)| r.passed());
    let out = if style.json {
        let items: Vec<Value> = results
            .iter()
            .map(|(n, r)| json!({"check": n, "passed": r.passed(), "violations": report_json(r)}))
            .collect();
        format!("{}\n", json!({"command": "check", "passed": passed, "results": items}))
    } else {
        results.iter().map(|(n, r)| report_text(n, r, style)).collect()
    };
    Ok(Outcome {
        code: if passed { 0 } else { 2 },
        out,
    })
}

/// Construction targets, for help text.
pub const TARGETS: &[&str] = &[
    "canonical",
    "sub-adjacent",
    "phase-space",
    "double",
    "descendent",
    "coboundary",
    "semidirect",
    "compatible-pre-poisson",
    "rb0-pre-poisson",
    "quadratic-rb",
    "factorizable-r",
    "rb-symplectic",
    "rb-phase-space",
];

fn verify(doc: &Document, checks: &[&str]) -> Result<()> {
    for c in checks {
        let report = run_check(c, doc)?;
        if !report.passed() {
            return Err(Error::InvalidInput(format!("constructed document fails {c}: {report}")));
        }
    }
    Ok(())
}

pub fn construct(doc: &Document, target: &str, weight: Option<&Scalar>) -> Result<Document> {
    let out = match target {
        "canonical" => doc.clone(),
        "sub-adjacent" => {
            let p = sub_adjacent(&pre_poisson(doc)?)?;
            let out = Document::new(Kind::Poisson, p.dim()).with_poisson(&p);
            verify(&out, &["poisson"])?;
            out
        }
        "phase-space" => {
            let (big, w) = phase_space(&pre_poisson(doc)?)?;
            let mut out = Document::new(Kind::Bundle, big.dim()).with_poisson(&big);
            out.omega = Some(w);
            out.split = Some(SplitDecoration::halves(doc.dim));
            verify(&out, &["poisson", "symplectic", "phase-space"])?;
            out
        }
        "double" => {
            let (d, w, split) = double_of_bialgebra(&bialgebra(doc)?)?;
            let mut out = Document::new(Kind::Bundle, d.dim()).with_pre_poisson(&d);
            out.r = Some(ppforge_core::yang_baxter::canonical_double_r(split.dim_p));
            out.omega = Some(w);
            out.split = Some(split);
            verify(&out, &["pre-poisson", "manin-triple"])?;
            out
        }
        "descendent" => {
            let p = pre_poisson(doc)?;
            let b = doc.b.clone().ok_or_else(|| missing("b"))?;
            let d = descendent(&p, &b, &lambda(doc)?)?;
            if !is_homomorphism(&b, &d, &p)?.passed() {
                return Err(Error::InvalidInput("B is not a homomorphism from the descendent".into()));
            }
            let out = Document::new(Kind::Algebra, d.dim()).with_pre_poisson(&d);
            verify(&out, &["pre-poisson"])?;
            out
        }
        "coboundary" => {
            let b = coboundary_bialgebra(&rmatrix(doc)?)?;
            let mut out = Document::new(Kind::Bialgebra, b.dim()).with_pre_poisson(b.algebra());
            out.delta_star = Some(b.delta_star().clone());
            out.delta_circ = Some(b.delta_circ().clone());
            verify(&out, &["bialgebra"])?;
            out
        }
        "semidirect" => {
            if doc.has_pre_poisson() {
                let rep = rep_pre(doc)?;
                let s = semidirect_pre_poisson(rep.algebra(), &rep)?;
                let out = Document::new(Kind::Algebra, s.dim()).with_pre_poisson(&s);
                verify(&out, &["pre-poisson"])?;
                out
            } else {
                let rep = rep_poisson(doc)?;
                let s = semidirect_poisson(rep.algebra(), &rep)?;
                let out = Document::new(Kind::Poisson, s.dim()).with_poisson(&s);
                verify(&out, &["poisson"])?;
                out
            }
        }
        "compatible-pre-poisson" => {
            let p = compatible_pre_poisson(&poisson(doc)?, &omega(doc)?)?;
            let mut out = Document::new(Kind::Form, p.dim()).with_pre_poisson(&p);
            out.omega = doc.omega.clone();
            verify(&out, &["pre-poisson", "quadratic"])?;
            out
        }
        "rb0-pre-poisson" => {
            let p = pre_poisson_from_rb0(&poisson(doc)?, doc.b.as_ref().ok_or_else(|| missing("b"))?)?;
            let out = Document::new(Kind::Algebra, p.dim()).with_pre_poisson(&p);
            verify(&out, &["pre-poisson"])?;
            out
        }
        "quadratic-rb" => {
            let l = weight.cloned().or_else(|| doc.lambda.clone()).unwrap_or_else(|| int(1));
            let rm = rmatrix(doc)?;
            let q = quadratic_rb_from_factorizable(&rm, &l)?;
            let mut out = Document::new(Kind::Bundle, q.algebra.dim()).with_pre_poisson(&q.algebra);
            out.r = Some(rm.r().clone());
            out.b = Some(q.b);
            out.lambda = Some(q.weight);
            out.omega = Some(q.omega);
            out.split = doc.split;
            verify(&out, &["quadratic-rb"])?;
            out
        }
        "factorizable-r" => {
            let rm = factorizable_from_quadratic_rb(&quadratic_rb(doc)?)?;
            let mut out = Document::new(Kind::Rmatrix, rm.dim()).with_pre_poisson(rm.algebra());
            out.r = Some(rm.r().clone());
            verify(&out, &["factorizable"])?;
            out
        }
        "rb-symplectic" => {
            let s = rb_symplectic_from_quadratic_rb(&quadratic_rb(doc)?)?;
            let mut out = Document::new(Kind::Bundle, s.algebra.dim()).with_poisson(&s.algebra);
            out.b = Some(s.b);
            out.lambda = Some(s.weight);
            out.omega = Some(s.omega);
            verify(&out, &["rb-symplectic"])?;
            out
        }
        "rb-phase-space" => {
            let s = if doc.has_poisson() {
                rb_symplectic(doc)?
            } else {
                rb_symplectic_from_quadratic_rb(&quadratic_rb(doc)?)?
            };
            let (big, w, split) = phase_space_from_rb_symplectic(&s)?;
            let mut out = Document::new(Kind::Bundle, big.dim()).with_poisson(&big);
            out.omega = Some(w);
            out.split = Some(split);
            verify(&out, &["poisson", "phase-space"])?;
            out
        }
        other => return Err(Error::Usage(format!("unknown target {other:?}; known: {}", TARGETS.join(", ")))),
    };
    Ok(out)
}

pub fn cmd_construct(doc: &Document, target: &str, weight: Option<&Scalar>) -> Result<Outcome> {
    Ok(Outcome {
        code: 0,
        out: serialize(&construct(doc, target, weight)?),
    })
}

pub fn cmd_classify(doc: &Document, style: Style) -> Result<Outcome> {
    let c = classify_r(&rmatrix(doc)?);
    let flags = [
        ("coboundary_valid", c.coboundary_valid),
        ("lr_invariant_skew_part", c.lr_invariant_skew_part),
        ("ybe_solved", c.ybe_solved),
        ("quasi_triangular", c.quasi_triangular),
        ("triangular", c.triangular),
        ("factorizable", c.factorizable),
    ];
    let out = if style.json {
        let mut m = serde_json::Map::new();
        m.insert("command".into(), json!("classify"));
        for (k, v) in flags {
            m.insert(k.into(), json!(v));
        }
        m.insert("z_support".into(), json!(c.z_support));
        m.insert("s_support".into(), json!(c.s_support));
        format!("{}\n", Value::Object(m))
    } else {
        let mut s: String = flags.iter().map(|(k, v)| format!("{k}: {v}\n")).collect();
        s.push_str(&format!("z_support: {}\ns_support: {}\n", c.z_support, c.s_support));
        s
    };
    Ok(Outcome { code: 0, out })
}

fn rows_text(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect::<Vec<_>>().join(" "))
        .collect();
    rows.join("; ")
}

/// `r -> (B, omega) -> r` at weight `lambda`. When the document carries `b` and
/// `omega` they must match the forward construction too.
pub fn cmd_roundtrip(doc: &Document, weight: Option<&Scalar>, style: Style) -> Result<Outcome> {
    let l = weight.cloned().or_else(|| doc.lambda.clone()).unwrap_or_else(|| int(1));
    let rm = rmatrix(doc)?;
    let q = quadratic_rb_from_factorizable(&rm, &l)?;
    let back = factorizable_from_quadratic_rb(&q)?;
    let mut diffs: Vec<(&str, Matrix, Matrix)> = Vec::new();
    if back.r() != rm.r() {
        diffs.push(("r", rm.r().clone(), back.r().clone()));
    }
    if let Some(b) = &doc.b {
        if *b != q.b {
            diffs.push(("b", b.clone(), q.b.clone()));
        }
    }
    if let Some(w) = &doc.omega {
        if doc.b.is_some() && *w != q.omega {
            diffs.push(("omega", w.clone(), q.omega.clone()));
        }
    }
    let passed = diffs.is_empty();
    let out = if style.json {
        let d: Vec<Value> = diffs
            .iter()
            .map(|(k, a, b)| {
                json!({
                    "field": k,
                    "input": a.to_rows().iter().map(|r| scalars(r)).collect::<Vec<_>>(),
                    "recovered": b.to_rows().iter().map(|r| scalars(r)).collect::<Vec<_>>(),
                })
            })
            .collect();
        format!(
            "{}\n",
            json!({"command": "roundtrip", "lambda": format_scalar(&l), "passed": passed, "diffs": d})
        )
    } else {
        let mut s = format!("roundtrip at lambda = {}: {}\n", format_scalar(&l), style.verdict(passed));
        for (k, a, b) in &diffs {
            s.push_str(&format!("  {k} input:     {}\n  {k} recovered: {}\n", rows_text(a), rows_text(b)));
        }
        s
    };
    Ok(Outcome {
        code: if passed { 0 } else { 2 },
        out,
    })
}
