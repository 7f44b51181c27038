//! Canonical JSON documents.
//!
//! Every document is an object with `kind` and `dim`; the remaining keys depend on the
//! kind. Keys are written in a fixed order, one per line, values compact. Scalars are
//! strings `"p/q"` or `"p"`. Tables are `c[i][j][k]`, the coefficient of `e_k` in
//! `e_i # e_j`. Matrices are lists of rows, so column `j` is the image of `e_j`; for
//! `r` the entry `[i][j]` is the coefficient of `e_i ⊗ e_j` and for `omega` it is
//! `omega(e_i, e_j)`. A cobracket is a list over `k` of the matrices of `Delta(e_k)`.
//! Block bases are `[e_1..e_n, f_1..f_n]` with `f_i = e_i*`.

use std::fmt;

use ppforge_core::linalg::{format_scalar, parse_scalar};
use ppforge_core::{
    Cobracket, Error, LinearMap, Matrix, MultTable, PoissonAlgebra, PrePoissonAlgebra, Result, Scalar,
    SplitDecoration,
};
use serde::Deserialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Algebra,
    Poisson,
    Bialgebra,
    Rmatrix,
    Rb,
    Form,
    Rep,
    Bundle,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Algebra => "algebra",
            Kind::Poisson => "poisson",
            Kind::Bialgebra => "bialgebra",
            Kind::Rmatrix => "rmatrix",
            Kind::Rb => "rb",
            Kind::Form => "form",
            Kind::Rep => "rep",
            Kind::Bundle => "bundle",
        };
        f.write_str(s)
    }
}

type Table = Vec<Vec<Vec<String>>>;
type Rows = Vec<Vec<String>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    kind: Kind,
    dim: usize,
    dim_v: Option<usize>,
    star: Option<Table>,
    circ: Option<Table>,
    dot: Option<Table>,
    bracket: Option<Table>,
    delta_star: Option<Table>,
    delta_circ: Option<Table>,
    r: Option<Rows>,
    b: Option<Rows>,
    lambda: Option<String>,
    omega: Option<Rows>,
    split: Option<[usize; 2]>,
    rho: Option<Table>,
    mu: Option<Table>,
    theta: Option<Table>,
    gamma: Option<Table>,
    varrho: Option<Table>,
    varsigma: Option<Table>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub kind: Kind,
    pub dim: usize,
    pub dim_v: Option<usize>,
    pub star: Option<MultTable>,
    pub circ: Option<MultTable>,
    pub dot: Option<MultTable>,
    pub bracket: Option<MultTable>,
    pub delta_star: Option<Cobracket>,
    pub delta_circ: Option<Cobracket>,
    pub r: Option<Matrix>,
    pub b: Option<LinearMap>,
    pub lambda: Option<Scalar>,
    pub omega: Option<Matrix>,
    pub split: Option<SplitDecoration>,
    pub rho: Option<Vec<Matrix>>,
    pub mu: Option<Vec<Matrix>>,
    pub theta: Option<Vec<Matrix>>,
    pub gamma: Option<Vec<Matrix>>,
    pub varrho: Option<Vec<Matrix>>,
    pub varsigma: Option<Vec<Matrix>>,
}

/// 1-based line and column of the first `"key"` in `text`, or of the start.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    let Some(pos) = text.find(&needle) else {
        return (1, 1);
    };
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn malformed(&self, key: &str, message: impl Into<String>) -> Error {
        let (line, column) = locate(self.text, key);
        Error::MalformedInput {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shape errors become `MalformedInput` at the key; scalar errors pass through.
    fn at<T>(&self, key: &str, r: Result<T>) -> Result<T> {
        r.map_err(|e| match e {
            Error::NonRationalScalar(_) => e,
            other => self.malformed(key, format!("{key}: {other}")),
        })
    }

    fn scalars(&self, v: &[String]) -> Result<Vec<Scalar>> {
        v.iter().map(|s| parse_scalar(s)).collect()
    }

    fn matrix(&self, key: &str, rows: Rows, r: usize, c: usize) -> Result<Matrix> {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|row| self.scalars(row)).collect::<Result<_>>()?;
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(self.malformed(key, format!("{key} must be {r}x{c}")));
        }
        if r == 0 {
            return Ok(Matrix::zeros(0, c));
        }
        self.at(key, Matrix::from_rows(rows))
    }

    fn table(&self, key: &str, t: Table, n: usize) -> Result<MultTable> {
        let nested: Vec<Vec<Vec<Scalar>>> = t
            .iter()
            .map(|plane| plane.iter().map(|row| self.scalars(row)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        if nested.len() != n {
            return Err(self.malformed(key, format!("{key} must have {n} slices")));
        }
        self.at(key, MultTable::from_nested(nested))
    }

    fn maps(&self, key: &str, t: Table, count: usize, r: usize, c: usize) -> Result<Vec<Matrix>> {
        if t.len() != count {
            return Err(self.malformed(key, format!("{key} must list {count} matrices")));
        }
        t.into_iter().map(|m| self.matrix(key, m, r, c)).collect()
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let raw: Raw = serde_json::from_str(text).map_err(|e| Error::MalformedInput {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let cx = Ctx { text };
    let n = raw.dim;
    let table = |key: &str, t: Option<Table>| t.map(|t| cx.table(key, t, n)).transpose();
    let square = |key: &str, m: Option<Rows>| m.map(|m| cx.matrix(key, m, n, n)).transpose();
    let cobracket = |key: &str, t: Option<Table>| -> Result<Option<Cobracket>> {
        let Some(t) = t else { return Ok(None) };
        let mats = cx.maps(key, t, n, n, n)?;
        cx.at(key, Cobracket::new(mats)).map(Some)
    };
    let dim_v = raw.dim_v;
    let ops = |key: &str, t: Option<Table>| -> Result<Option<Vec<Matrix>>> {
        let Some(t) = t else { return Ok(None) };
        let v = dim_v.ok_or_else(|| cx.malformed(key, format!("{key} needs dim_v")))?;
        cx.maps(key, t, n, v, v).map(Some)
    };
    let doc = Document {
        kind: raw.kind,
        dim: n,
        dim_v,
        star: table("star", raw.star)?,
        circ: table("circ", raw.circ)?,
        dot: table("dot", raw.dot)?,
        bracket: table("bracket", raw.bracket)?,
        delta_star: cobracket("delta_star", raw.delta_star)?,
        delta_circ: cobracket("delta_circ", raw.delta_circ)?,
        r: square("r", raw.r)?,
        b: square("b", raw.b)?,
        lambda: raw.lambda.map(|s| parse_scalar(&s)).transpose()?,
        omega: square("omega", raw.omega)?,
        split: raw.split.map(|[p, q]| SplitDecoration::new(p, q)),
        rho: ops("rho", raw.rho)?,
        mu: ops("mu", raw.mu)?,
        theta: ops("theta", raw.theta)?,
        gamma: ops("gamma", raw.gamma)?,
        varrho: ops("varrho", raw.varrho)?,
        varsigma: ops("varsigma", raw.varsigma)?,
    };
    doc.validate(&cx)?;
    Ok(doc)
}

impl Document {
    pub fn new(kind: Kind, dim: usize) -> Self {
        Document {
            kind,
            dim,
            dim_v: None,
            star: None,
            circ: None,
            dot: None,
            bracket: None,
            delta_star: None,
            delta_circ: None,
            r: None,
            b: None,
            lambda: None,
            omega: None,
            split: None,
            rho: None,
            mu: None,
            theta: None,
            gamma: None,
            varrho: None,
            varsigma: None,
        }
    }

    pub fn with_pre_poisson(mut self, p: &PrePoissonAlgebra) -> Self {
        self.star = Some(p.star().clone());
        self.circ = Some(p.circ().clone());
        self
    }

    pub fn with_poisson(mut self, p: &PoissonAlgebra) -> Self {
        self.dot = Some(p.dot().clone());
        self.bracket = Some(p.bracket().clone());
        self
    }

    pub fn has_pre_poisson(&self) -> bool {
        self.star.is_some() && self.circ.is_some()
    }

    pub fn has_poisson(&self) -> bool {
        self.dot.is_some() && self.bracket.is_some()
    }

    /// Products as given, axioms unchecked.
    pub fn pre_poisson(&self) -> Option<PrePoissonAlgebra> {
        let (s, c) = (self.star.clone()?, self.circ.clone()?);
        PrePoissonAlgebra::new_unchecked(s, c).ok()
    }

    pub fn poisson(&self) -> Option<PoissonAlgebra> {
        let (d, b) = (self.dot.clone()?, self.bracket.clone()?);
        PoissonAlgebra::new_unchecked(d, b).ok()
    }

    fn validate(&self, cx: &Ctx<'_>) -> Result<()> {
        let need = |present: bool, key: &str| -> Result<()> {
            if present {
                Ok(())
            } else {
                Err(cx.malformed("kind", format!("kind {} requires {key}", self.kind)))
            }
        };
        if self.star.is_some() != self.circ.is_some() {
            return Err(cx.malformed("kind", "star and circ come together"));
        }
        if self.dot.is_some() != self.bracket.is_some() {
            return Err(cx.malformed("kind", "dot and bracket come together"));
        }
        if self.has_pre_poisson() && self.has_poisson() {
            return Err(cx.malformed("dot", "give either star/circ or dot/bracket, not both"));
        }
        let either = self.has_pre_poisson() || self.has_poisson();
        match self.kind {
            Kind::Algebra => need(self.has_pre_poisson(), "star and circ"),
            Kind::Poisson => need(self.has_poisson(), "dot and bracket"),
            Kind::Bialgebra => {
                need(self.has_pre_poisson(), "star and circ")?;
                need(self.delta_star.is_some() && self.delta_circ.is_some(), "delta_star and delta_circ")
            }
            Kind::Rmatrix => {
                need(self.has_pre_poisson(), "star and circ")?;
                need(self.r.is_some(), "r")
            }
            Kind::Rb => {
                need(either, "star/circ or dot/bracket")?;
                need(self.b.is_some() && self.lambda.is_some(), "b and lambda")
            }
            Kind::Form => {
                need(either, "star/circ or dot/bracket")?;
                need(self.omega.is_some(), "omega")
            }
            Kind::Rep => {
                need(self.dim_v.is_some(), "dim_v")?;
                let pre = self.has_pre_poisson()
                    && self.rho.is_some()
                    && self.mu.is_some()
                    && self.theta.is_some()
                    && self.gamma.is_some();
                let poi = self.has_poisson() && self.varrho.is_some() && self.varsigma.is_some();
                need(pre || poi, "star/circ with rho, mu, theta, gamma or dot/bracket with varrho, varsigma")
            }
            Kind::Bundle => need(either, "star/circ or dot/bracket"),
        }?;
        if let Some(s) = &self.split {
            if s.total() != self.dim {
                return Err(cx.malformed("split", format!("split must add up to {}", self.dim)));
            }
        }
        Ok(())
    }
}

fn q(s: &Scalar) -> String {
    format!("\"{}\"", format_scalar(s))
}

fn list<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    let parts: Vec<String> = items.iter().map(f).collect();
    format!("[{}]", parts.join(","))
}

fn rows(m: &Matrix) -> String {
    list(&m.to_rows(), |row| list(row, q))
}

fn table(t: &MultTable) -> String {
    list(&t.to_nested(), |plane| list(plane, |row| list(row, q)))
}

fn maps(v: &[Matrix]) -> String {
    list(v, rows)
}

/// Canonical form: fixed key order, one key per line, newline-terminated.
pub fn serialize(doc: &Document) -> String {
    let mut fields: Vec<(&str, String)> = vec![("kind", format!("\"{}\"", doc.kind)), ("dim", doc.dim.to_string())];
    if let Some(v) = doc.dim_v {
        fields.push(("dim_v", v.to_string()));
    }
    let tables = [("star", &doc.star), ("circ", &doc.circ), ("dot", &doc.dot), ("bracket", &doc.bracket)];
    for (k, t) in tables {
        if let Some(t) = t {
            fields.push((k, table(t)));
        }
    }
    for (k, c) in [("delta_star", &doc.delta_star), ("delta_circ", &doc.delta_circ)] {
        if let Some(c) = c {
            fields.push((k, maps(c.values())));
        }
    }
    for (k, m) in [("r", &doc.r), ("b", &doc.b)] {
        if let Some(m) = m {
            fields.push((k, rows(m)));
        }
    }
    if let Some(l) = &doc.lambda {
        fields.push(("lambda", q(l)));
    }
    if let Some(w) = &doc.omega {
        fields.push(("omega", rows(w)));
    }
    if let Some(s) = &doc.split {
        fields.push(("split", format!("[{},{}]", s.dim_p, s.dim_q)));
    }
    let ops = [
        ("rho", &doc.rho),
        ("mu", &doc.mu),
        ("theta", &doc.theta),
        ("gamma", &doc.gamma),
        ("varrho", &doc.varrho),
        ("varsigma", &doc.varsigma),
    ];
    for (k, v) in ops {
        if let Some(v) = v {
            fields.push((k, maps(v)));
        }
    }
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{k}\": {v}")).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = "{\n  \"kind\": \"algebra\",\n  \"dim\": 2,\n  \"star\": [[[\"0\",\"1\"],[\"0\",\"0\"]],[[\"0\",\"0\"],[\"0\",\"0\"]]],\n  \"circ\": [[[\"0\",\"0\"],[\"0\",\"0\"]],[[\"0\",\"0\"],[\"0\",\"0\"]]]\n}\n";

    #[test]
    fn canonical_z2() {
        let doc = parse_document(Z2).unwrap();
        assert_eq!(doc.kind, Kind::Algebra);
        assert_eq!(doc.star.as_ref().unwrap().get(0, 0, 1), &ppforge_core::linalg::int(1));
        assert_eq!(serialize(&doc), Z2);
    }

    #[test]
    fn bad_scalar() {
        let text = Z2.replacen("\"1\"", "\"1/0\"", 1);
        assert!(matches!(parse_document(&text), Err(Error::NonRationalScalar(_))));
        let text = Z2.replacen("\"1\"", "\"x\"", 1);
        assert!(matches!(parse_document(&text), Err(Error::NonRationalScalar(_))));
    }

    #[test]
    fn missing_dim_is_located() {
        let text = Z2.replace("  \"dim\": 2,\n", "");
        match parse_document(&text) {
            Err(Error::MalformedInput { line, message, .. }) => {
                assert!(line >= 1);
                assert!(message.contains("dim"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shape_errors_point_at_the_key() {
        let text = Z2.replace("\"dim\": 2", "\"dim\": 3");
        match parse_document(&text) {
            Err(Error::MalformedInput { line, column, .. }) => assert_eq!((line, column), (4, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unreduced_fractions_are_reduced() {
        let text = Z2.replacen("\"1\"", "\"2/2\"", 1);
        assert_eq!(serialize(&parse_document(&text).unwrap()), Z2);
    }

    #[test]
    fn kind_requirements() {
        let text = Z2.replace("\"algebra\"", "\"rmatrix\"");
        assert!(matches!(parse_document(&text), Err(Error::MalformedInput { .. })));
    }
}
