//! Built-in documents for `--catalog NAME`.

use ppforge_core::catalog;
use ppforge_core::geometry::{standard_omega, SplitDecoration};
use ppforge_core::linalg::int;
use ppforge_core::representations::regular_rep;
use ppforge_core::rota_baxter::quadratic_rb_from_factorizable;
use ppforge_core::{Error, Result, Scalar};

use crate::document::{Document, Kind};

/// Every catalog name, in listing order. `example-double-*` takes `--lambda`.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = catalog::algebras().into_iter().map(|(n, _)| n).collect();
    out.extend(catalog::rb0_pairs().into_iter().map(|(n, _, _)| format!("rb0-{n}")));
    out.extend(catalog::bialgebras().into_iter().map(|(n, _)| n));
    out.extend(catalog::algebras().into_iter().map(|(n, _)| format!("regular-{n}")));
    out.push("triangular-z2".into());
    for (n, _) in catalog::doubles() {
        out.push(format!("example-{n}"));
        out.push(n);
    }
    out.sort();
    out
}

fn unknown(name: &str) -> Error {
    Error::Usage(format!("unknown catalog entry {name:?}; known: {}", names().join(", ")))
}

pub fn lookup(name: &str, lambda: Option<&Scalar>) -> Result<Document> {
    if let Some((_, p)) = catalog::algebras().into_iter().find(|(n, _)| n == name) {
        return Ok(Document::new(Kind::Algebra, p.dim()).with_pre_poisson(&p));
    }
    if let Some(rest) = name.strip_prefix("regular-") {
        let (_, p) = catalog::algebras().into_iter().find(|(n, _)| n == rest).ok_or_else(|| unknown(name))?;
        let rep = regular_rep(&p)?;
        let mut doc = Document::new(Kind::Rep, p.dim()).with_pre_poisson(&p);
        doc.dim_v = Some(rep.dim_v());
        doc.rho = Some(rep.rho().to_vec());
        doc.mu = Some(rep.mu().to_vec());
        doc.theta = Some(rep.theta().to_vec());
        doc.gamma = Some(rep.gamma().to_vec());
        return Ok(doc);
    }
    if let Some(rest) = name.strip_prefix("rb0-") {
        let (_, p, b) = catalog::rb0_pairs().into_iter().find(|(n, _, _)| n == rest).ok_or_else(|| unknown(name))?;
        let mut doc = Document::new(Kind::Rb, p.dim()).with_poisson(&p);
        doc.b = Some(b);
        doc.lambda = Some(int(0));
        return Ok(doc);
    }
    if let Some((_, b)) = catalog::bialgebras().into_iter().find(|(n, _)| n == name) {
        let mut doc = Document::new(Kind::Bialgebra, b.dim()).with_pre_poisson(b.algebra());
        doc.delta_star = Some(b.delta_star().clone());
        doc.delta_circ = Some(b.delta_circ().clone());
        return Ok(doc);
    }
    if name == "triangular-z2" {
        let rm = catalog::triangular_z2();
        let mut doc = Document::new(Kind::Rmatrix, rm.dim()).with_pre_poisson(rm.algebra());
        doc.r = Some(rm.r().clone());
        return Ok(doc);
    }
    let (base, example) = match name.strip_prefix("example-") {
        Some(rest) => (rest, true),
        None => (name, false),
    };
    let (_, rm) = catalog::doubles().into_iter().find(|(n, _)| n == base).ok_or_else(|| unknown(name))?;
    let n = rm.dim();
    let mut doc = Document::new(Kind::Bundle, n).with_pre_poisson(rm.algebra());
    doc.r = Some(rm.r().clone());
    doc.split = Some(SplitDecoration::halves(n / 2));
    if example {
        let l = lambda.cloned().unwrap_or_else(|| int(1));
        let q = quadratic_rb_from_factorizable(&rm, &l)?;
        doc.b = Some(q.b);
        doc.lambda = Some(q.weight);
        doc.omega = Some(q.omega);
    } else {
        doc.omega = Some(standard_omega(n / 2));
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{parse_document, serialize};

    #[test]
    fn every_entry_roundtrips() {
        for name in names() {
            let doc = lookup(&name, None).unwrap();
            let text = serialize(&doc);
            assert_eq!(parse_document(&text).unwrap(), doc, "{name}");
        }
        assert!(lookup("nope", None).is_err());
    }
}
