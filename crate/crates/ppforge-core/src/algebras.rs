//! Structure-constant algebras and their axiom checkers.
//!
//! A [`MultTable`] stores `c[i][j][k]` with `e_i * e_j = sum_k c[i][j][k] e_k`.
//! All checks quantify over basis elements only, which is enough by
//! bilinearity.

use num::Zero;

use crate::error::{dim_err, Error, Result};
use crate::linalg::{axpy, basis_vec, int, vec_add, vec_sub, zero_vec, LinearMap, Matrix, Scalar, Vector};
use crate::report::{CheckReport, Checker};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultTable {
    dim: usize,
    c: Vec<Scalar>,
}

impl MultTable {
    pub fn zeros(dim: usize) -> Self {
        MultTable {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.c[(i * dim + j) * dim + k] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Builds from `c[i][j][k]`, rejecting anything that is not cubic.
    pub fn from_nested(c: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = c.len();
        let mut flat = Vec::with_capacity(n * n * n);
        for (i, plane) in c.into_iter().enumerate() {
            if plane.len() != n {
                return Err(dim_err(format!("table slice {} has {} rows, expected {n}", i + 1, plane.len())));
            }
            for (j, row) in plane.into_iter().enumerate() {
                if row.len() != n {
                    return Err(dim_err(format!(
                        "table entry ({},{}) has length {}, expected {n}",
                        i + 1,
                        j + 1,
                        row.len()
                    )));
                }
                flat.extend(row);
            }
        }
        Ok(MultTable { dim: n, c: flat })
    }

    /// Sparse integer literal: each `(i, j, k, v)` adds `v` to `c[i][j][k]` (0-based).
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = Self::zeros(dim);
        for &(i, j, k, v) in entries {
            let ix = t.idx(i, j, k);
            t.c[ix] += int(v);
        }
        t
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let ix = self.idx(i, j, k);
        self.c[ix] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let ix = self.idx(i, j, k);
        self.c[ix] += v;
    }

    /// Coefficients of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let s = (i * self.dim + j) * self.dim;
        &self.c[s..s + self.dim]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.c
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.basis_product(i, j));
            }
        }
        out
    }

    /// Matrix of `y -> x * y`.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        m.add_at(k, j, &(xi * c));
                    }
                }
            }
        }
        m
    }

    /// Matrix of `x -> x * y`.
    pub fn right(&self, y: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for i in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        m.add_at(k, i, &(yj * c));
                    }
                }
            }
        }
        m
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        self.left(&basis_vec(self.dim, i))
    }

    pub fn right_basis(&self, j: usize) -> Matrix {
        self.right(&basis_vec(self.dim, j))
    }

    /// Opposite product `x *' y = y * x`.
    pub fn flip(&self) -> Self {
        MultTable::from_fn(self.dim, |i, j, k| self.get(j, i, k).clone())
    }

    /// `x . y = x * y + y * x`
    pub fn symmetrize(&self) -> Self {
        MultTable::from_fn(self.dim, |i, j, k| self.get(i, j, k) + self.get(j, i, k))
    }

    /// `[x, y] = x * y - y * x`
    pub fn antisymmetrize(&self) -> Self {
        MultTable::from_fn(self.dim, |i, j, k| self.get(i, j, k) - self.get(j, i, k))
    }

    pub fn scaled(&self, a: &Scalar) -> Self {
        MultTable {
            dim: self.dim,
            c: self.c.iter().map(|x| a * x).collect(),
        }
    }

    pub fn plus(&self, other: &MultTable) -> Self {
        MultTable {
            dim: self.dim,
            c: vec_add(&self.c, &other.c),
        }
    }

    pub fn minus(&self, other: &MultTable) -> Self {
        MultTable {
            dim: self.dim,
            c: vec_sub(&self.c, &other.c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> usize {
        self.c.iter().filter(|x| !x.is_zero()).count()
    }

    /// Products of the block `start..start+len`, read inside that block.
    pub fn restrict(&self, start: usize, len: usize) -> MultTable {
        MultTable::from_fn(len, |i, j, k| self.get(start + i, start + j, start + k).clone())
    }

    /// Entries `(i, j, k)` with `i, j` in the block and `k` outside it that are nonzero.
    pub fn block_leaks(&self, start: usize, len: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in start..start + len {
            for j in start..start + len {
                for k in 0..self.dim {
                    if (k < start || k >= start + len) && !self.get(i, j, k).is_zero() {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Structure constants after the change of variables `x -> phi x`,
    /// i.e. the table of `x *' y = phi^-1 (phi x * phi y)`.
    pub fn transport(&self, phi: &Matrix, phi_inv: &Matrix) -> MultTable {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
        let mut t = MultTable::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = phi_inv.apply(&self.mul(&cols[i], &cols[j]));
                for (k, x) in v.into_iter().enumerate() {
                    t.set(i, j, k, x);
                }
            }
        }
        t
    }
}

/// Opt-in short circuit for the single-table checkers.
#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub first_failure: bool,
}

fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| basis_vec(n, i)).collect()
}

pub fn is_zinbiel(t: &MultTable) -> CheckReport {
    is_zinbiel_with(t, CheckOptions::default())
}

/// `x*(y*z) = (x*y + y*x)*z`
pub fn is_zinbiel_with(t: &MultTable, opts: CheckOptions) -> CheckReport {
    let n = t.dim();
    let e = basis(n);
    let mut ck = Checker::new(opts.first_failure);
    'outer: for i in 0..n {
        for j in 0..n {
            let sym = vec_add(t.basis_product(i, j), t.basis_product(j, i));
            for k in 0..n {
                let lhs = t.mul(&e[i], t.basis_product(j, k));
                let rhs = t.mul(&sym, &e[k]);
                ck.eq("zinbiel", &[i, j, k], lhs, rhs);
                if ck.done() {
                    break 'outer;
                }
            }
        }
    }
    ck.finish()
}

pub fn is_pre_lie(t: &MultTable) -> CheckReport {
    is_pre_lie_with(t, CheckOptions::default())
}

/// `(x o y) o z - x o (y o z) = (y o x) o z - y o (x o z)`
pub fn is_pre_lie_with(t: &MultTable, opts: CheckOptions) -> CheckReport {
    let n = t.dim();
    let e = basis(n);
    let mut ck = Checker::new(opts.first_failure);
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = vec_sub(
                    &t.mul(t.basis_product(i, j), &e[k]),
                    &t.mul(&e[i], t.basis_product(j, k)),
                );
                let rhs = vec_sub(
                    &t.mul(t.basis_product(j, i), &e[k]),
                    &t.mul(&e[j], t.basis_product(i, k)),
                );
                ck.eq("pre-lie", &[i, j, k], lhs, rhs);
                if ck.done() {
                    break 'outer;
                }
            }
        }
    }
    ck.finish()
}

pub fn is_commutative_associative(t: &MultTable) -> CheckReport {
    is_commutative_associative_with(t, CheckOptions::default())
}

pub fn is_commutative_associative_with(t: &MultTable, opts: CheckOptions) -> CheckReport {
    let n = t.dim();
    let e = basis(n);
    let mut ck = Checker::new(opts.first_failure);
    'outer: for i in 0..n {
        for j in 0..n {
            ck.eq(
                "commutative",
                &[i, j],
                t.basis_product(i, j).to_vec(),
                t.basis_product(j, i).to_vec(),
            );
            for k in 0..n {
                if ck.done() {
                    break 'outer;
                }
                let lhs = t.mul(t.basis_product(i, j), &e[k]);
                let rhs = t.mul(&e[i], t.basis_product(j, k));
                ck.eq("associative", &[i, j, k], lhs, rhs);
            }
        }
    }
    ck.finish()
}

pub fn is_lie(t: &MultTable) -> CheckReport {
    is_lie_with(t, CheckOptions::default())
}

/// Alternating, skew and Jacobi.
pub fn is_lie_with(t: &MultTable, opts: CheckOptions) -> CheckReport {
    let n = t.dim();
    let e = basis(n);
    let mut ck = Checker::new(opts.first_failure);
    for i in 0..n {
        ck.eq("alternating", &[i], t.basis_product(i, i).to_vec(), zero_vec(n));
        for j in 0..n {
            let neg: Vector = t.basis_product(j, i).iter().map(|x| -x).collect();
            ck.eq("skew", &[i, j], t.basis_product(i, j).to_vec(), neg);
        }
        if ck.done() {
            return ck.finish();
        }
    }
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = t.mul(&e[i], t.basis_product(j, k));
                let a = t.mul(&e[j], t.basis_product(k, i));
                let b = t.mul(&e[k], t.basis_product(i, j));
                lhs = vec_add(&vec_add(&lhs, &a), &b);
                ck.eq("jacobi", &[i, j, k], lhs, zero_vec(n));
                if ck.done() {
                    break 'outer;
                }
            }
        }
    }
    ck.finish()
}

fn same_dim(a: &MultTable, b: &MultTable) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(dim_err(format!("tables of dimension {} and {}", a.dim(), b.dim())));
    }
    Ok(())
}

pub fn is_pre_poisson(star: &MultTable, circ: &MultTable) -> Result<CheckReport> {
    is_pre_poisson_with(star, circ, CheckOptions::default())
}

/// Zinbiel, pre-Lie, and the two compatibility identities.
pub fn is_pre_poisson_with(star: &MultTable, circ: &MultTable, opts: CheckOptions) -> Result<CheckReport> {
    same_dim(star, circ)?;
    let n = star.dim();
    let e = basis(n);
    let mut ck = Checker::new(opts.first_failure);
    ck.merge(is_zinbiel_with(star, opts));
    if ck.done() {
        return Ok(ck.finish());
    }
    ck.merge(is_pre_lie_with(circ, opts));
    if ck.done() {
        return Ok(ck.finish());
    }
    'outer: for i in 0..n {
        for j in 0..n {
            let br = vec_sub(circ.basis_product(i, j), circ.basis_product(j, i));
            let sym = vec_add(star.basis_product(i, j), star.basis_product(j, i));
            for k in 0..n {
                // (x o y - y o x) * z = x o (y * z) - y * (x o z)
                let lhs = star.mul(&br, &e[k]);
                let rhs = vec_sub(
                    &circ.mul(&e[i], star.basis_product(j, k)),
                    &star.mul(&e[j], circ.basis_product(i, k)),
                );
                ck.eq("pre-poisson-1", &[i, j, k], lhs, rhs);
                // (x * y + y * x) o z = x * (y o z) + y * (x o z)
                let lhs = circ.mul(&sym, &e[k]);
                let rhs = vec_add(
                    &star.mul(&e[i], circ.basis_product(j, k)),
                    &star.mul(&e[j], circ.basis_product(i, k)),
                );
                ck.eq("pre-poisson-2", &[i, j, k], lhs, rhs);
                if ck.done() {
                    break 'outer;
                }
            }
        }
    }
    Ok(ck.finish())
}

pub fn is_poisson(dot: &MultTable, bracket: &MultTable) -> Result<CheckReport> {
    is_poisson_with(dot, bracket, CheckOptions::default())
}

/// Commutative associative product, Lie bracket, Leibniz rule.
pub fn is_poisson_with(dot: &MultTable, bracket: &MultTable, opts: CheckOptions) -> Result<CheckReport> {
    same_dim(dot, bracket)?;
    let n = dot.dim();
    let e = basis(n);
    let mut ck = Checker::new(opts.first_failure);
    ck.merge(is_commutative_associative_with(dot, opts));
    if ck.done() {
        return Ok(ck.finish());
    }
    ck.merge(is_lie_with(bracket, opts));
    if ck.done() {
        return Ok(ck.finish());
    }
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // {x, y.z} = {x,y}.z + y.{x,z}
                let lhs = bracket.mul(&e[i], dot.basis_product(j, k));
                let rhs = vec_add(
                    &dot.mul(bracket.basis_product(i, j), &e[k]),
                    &dot.mul(&e[j], bracket.basis_product(i, k)),
                );
                ck.eq("leibniz", &[i, j, k], lhs, rhs);
                if ck.done() {
                    break 'outer;
                }
            }
        }
    }
    Ok(ck.finish())
}

fn first_violation(r: &CheckReport) -> String {
    r.violations().first().map(|v| v.to_string()).unwrap_or_default()
}

/// Zinbiel product `*` and pre-Lie product `o` on one space.
#[derive(Clone, Debug)]
pub struct PrePoissonAlgebra {
    star: MultTable,
    circ: MultTable,
    verified: bool,
}

impl PartialEq for PrePoissonAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.star == other.star && self.circ == other.circ
    }
}

impl Eq for PrePoissonAlgebra {}

impl PrePoissonAlgebra {
    /// Validates the axioms; `InvalidInput` cites the first failure.
    pub fn new(star: MultTable, circ: MultTable) -> Result<Self> {
        let report = is_pre_poisson(&star, &circ)?;
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "not a pre-Poisson algebra: {}",
                first_violation(&report)
            )));
        }
        Ok(PrePoissonAlgebra {
            star,
            circ,
            verified: true,
        })
    }

    /// Skips the axiom check; only shapes are validated.
    pub fn new_unchecked(star: MultTable, circ: MultTable) -> Result<Self> {
        same_dim(&star, &circ)?;
        Ok(PrePoissonAlgebra {
            star,
            circ,
            verified: false,
        })
    }

    pub(crate) fn from_parts(star: MultTable, circ: MultTable) -> Self {
        debug_assert_eq!(star.dim(), circ.dim());
        PrePoissonAlgebra {
            star,
            circ,
            verified: false,
        }
    }

    pub fn zero(dim: usize) -> Self {
        PrePoissonAlgebra {
            star: MultTable::zeros(dim),
            circ: MultTable::zeros(dim),
            verified: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.star.dim()
    }

    pub fn star(&self) -> &MultTable {
        &self.star
    }

    pub fn circ(&self) -> &MultTable {
        &self.circ
    }

    pub fn check(&self) -> CheckReport {
        is_pre_poisson(&self.star, &self.circ).expect("shapes validated on construction")
    }

    /// Re-checks the axioms unless they were verified on construction.
    pub fn ensure_valid(&self) -> Result<()> {
        if self.verified {
            return Ok(());
        }
        let report = self.check();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "not a pre-Poisson algebra: {}",
                first_violation(&report)
            )))
        }
    }

    /// Returns a copy marked as verified when the axioms hold.
    pub fn validated(self) -> Result<Self> {
        self.ensure_valid()?;
        Ok(PrePoissonAlgebra {
            verified: true,
            ..self
        })
    }

    /// Block `start..start+len` with products read inside the block.
    pub fn restrict(&self, start: usize, len: usize) -> PrePoissonAlgebra {
        PrePoissonAlgebra::from_parts(self.star.restrict(start, len), self.circ.restrict(start, len))
    }

    pub fn dot_table(&self) -> MultTable {
        self.star.symmetrize()
    }

    pub fn bracket_table(&self) -> MultTable {
        self.circ.antisymmetrize()
    }
}

/// Commutative associative `.` and Lie bracket `{,}`.
#[derive(Clone, Debug)]
pub struct PoissonAlgebra {
    dot: MultTable,
    bracket: MultTable,
    verified: bool,
}

impl PartialEq for PoissonAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dot == other.dot && self.bracket == other.bracket
    }
}

impl Eq for PoissonAlgebra {}

impl PoissonAlgebra {
    pub fn new(dot: MultTable, bracket: MultTable) -> Result<Self> {
        let report = is_poisson(&dot, &bracket)?;
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "not a Poisson algebra: {}",
                first_violation(&report)
            )));
        }
        Ok(PoissonAlgebra {
            dot,
            bracket,
            verified: true,
        })
    }

    pub fn new_unchecked(dot: MultTable, bracket: MultTable) -> Result<Self> {
        same_dim(&dot, &bracket)?;
        Ok(PoissonAlgebra {
            dot,
            bracket,
            verified: false,
        })
    }

    pub(crate) fn from_parts(dot: MultTable, bracket: MultTable) -> Self {
        debug_assert_eq!(dot.dim(), bracket.dim());
        PoissonAlgebra {
            dot,
            bracket,
            verified: false,
        }
    }

    pub fn zero(dim: usize) -> Self {
        PoissonAlgebra {
            dot: MultTable::zeros(dim),
            bracket: MultTable::zeros(dim),
            verified: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.dot.dim()
    }

    pub fn dot(&self) -> &MultTable {
        &self.dot
    }

    pub fn bracket(&self) -> &MultTable {
        &self.bracket
    }

    pub fn check(&self) -> CheckReport {
        is_poisson(&self.dot, &self.bracket).expect("shapes validated on construction")
    }

    pub fn ensure_valid(&self) -> Result<()> {
        if self.verified {
            return Ok(());
        }
        let report = self.check();
        if report.passed() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "not a Poisson algebra: {}",
                first_violation(&report)
            )))
        }
    }

    pub fn restrict(&self, start: usize, len: usize) -> PoissonAlgebra {
        PoissonAlgebra::from_parts(self.dot.restrict(start, len), self.bracket.restrict(start, len))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    PrePoisson,
    Poisson,
}

/// Common view used by homomorphism checks.
pub trait Algebra {
    fn kind(&self) -> AlgebraKind;
    fn dim(&self) -> usize;
    /// Named products, in a fixed order.
    fn products(&self) -> [(&'static str, &MultTable); 2];
}

impl Algebra for PrePoissonAlgebra {
    fn kind(&self) -> AlgebraKind {
        AlgebraKind::PrePoisson
    }
    fn dim(&self) -> usize {
        PrePoissonAlgebra::dim(self)
    }
    fn products(&self) -> [(&'static str, &MultTable); 2] {
        [("star", &self.star), ("circ", &self.circ)]
    }
}

impl Algebra for PoissonAlgebra {
    fn kind(&self) -> AlgebraKind {
        AlgebraKind::Poisson
    }
    fn dim(&self) -> usize {
        PoissonAlgebra::dim(self)
    }
    fn products(&self) -> [(&'static str, &MultTable); 2] {
        [("dot", &self.dot), ("bracket", &self.bracket)]
    }
}

/// Poisson algebra with `x.y = x*y + y*x` and `{x,y} = x o y - y o x`.
pub fn sub_adjacent(p: &PrePoissonAlgebra) -> Result<PoissonAlgebra> {
    p.ensure_valid()?;
    Ok(PoissonAlgebra::from_parts(p.dot_table(), p.bracket_table()))
}

pub fn sub_adjacent_zinbiel(t: &MultTable) -> Result<MultTable> {
    let r = is_zinbiel(t);
    if !r.passed() {
        return Err(Error::InvalidInput(format!("not Zinbiel: {}", first_violation(&r))));
    }
    Ok(t.symmetrize())
}

pub fn sub_adjacent_pre_lie(t: &MultTable) -> Result<MultTable> {
    let r = is_pre_lie(t);
    if !r.passed() {
        return Err(Error::InvalidInput(format!("not pre-Lie: {}", first_violation(&r))));
    }
    Ok(t.antisymmetrize())
}

/// `x *_B y = B(x).y`, `x o_B y = {B(x), y}` for a weight-zero operator `B`.
pub fn pre_poisson_from_rb0(p: &PoissonAlgebra, b: &LinearMap) -> Result<PrePoissonAlgebra> {
    let report = crate::rota_baxter::is_rb_poisson(p, b, &Scalar::zero())?;
    if !report.passed() {
        return Err(Error::NotRotaBaxter);
    }
    let n = p.dim();
    let images: Vec<Vector> = (0..n).map(|i| b.column(i)).collect();
    let e = basis(n);
    let mut star = MultTable::zeros(n);
    let mut circ = MultTable::zeros(n);
    for i in 0..n {
        for j in 0..n {
            for (k, v) in p.dot().mul(&images[i], &e[j]).into_iter().enumerate() {
                star.set(i, j, k, v);
            }
            for (k, v) in p.bracket().mul(&images[i], &e[j]).into_iter().enumerate() {
                circ.set(i, j, k, v);
            }
        }
    }
    Ok(PrePoissonAlgebra::from_parts(star, circ))
}

/// `phi(x # y) = phi(x) # phi(y)` for each product `#` of the kind.
pub fn is_homomorphism(phi: &LinearMap, src: &dyn Algebra, dst: &dyn Algebra) -> Result<CheckReport> {
    if src.kind() != dst.kind() {
        return Err(Error::KindMismatch(format!("{:?} vs {:?}", src.kind(), dst.kind())));
    }
    if phi.cols() != src.dim() || phi.rows() != dst.dim() {
        return Err(dim_err(format!(
            "map is {}x{} but algebras have dimensions {} -> {}",
            phi.rows(),
            phi.cols(),
            src.dim(),
            dst.dim()
        )));
    }
    let n = src.dim();
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    let mut ck = Checker::full();
    for ((name, s), (_, d)) in src.products().into_iter().zip(dst.products()) {
        let id = format!("hom-{name}");
        for i in 0..n {
            for j in 0..n {
                let lhs = phi.apply(s.basis_product(i, j));
                let rhs = d.mul(&images[i], &images[j]);
                ck.eq(&id, &[i, j], lhs, rhs);
            }
        }
    }
    Ok(ck.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> MultTable {
        MultTable::from_entries(2, &[(0, 0, 1, 1)])
    }

    fn pl2() -> MultTable {
        MultTable::from_entries(2, &[(0, 1, 1, 1)])
    }

    #[test]
    fn zinbiel_examples() {
        assert!(is_zinbiel(&MultTable::zeros(2)).passed());
        assert!(is_zinbiel(&z2()).passed());
        let bad = MultTable::from_entries(1, &[(0, 0, 0, 1)]);
        let r = is_zinbiel(&bad);
        assert_eq!(r.violations().len(), 1);
        let v = &r.violations()[0];
        assert_eq!(v.indices, vec![0, 0, 0]);
        assert_eq!(v.lhs, vec![int(1)]);
        assert_eq!(v.rhs, vec![int(2)]);
    }

    #[test]
    fn pre_lie_examples() {
        assert!(is_pre_lie(&MultTable::zeros(3)).passed());
        assert!(is_pre_lie(&pl2()).passed());
        // 2x2 matrix units: associative, hence pre-Lie
        let mut m = MultTable::zeros(4);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    m.set(a * 2 + b, b * 2 + c, a * 2 + c, int(1));
                }
            }
        }
        assert!(is_pre_lie(&m).passed());
        assert!(!is_commutative_associative(&m).passed());
    }

    #[test]
    fn pre_poisson_examples() {
        assert!(is_pre_poisson(&z2(), &MultTable::zeros(2)).unwrap().passed());
        assert!(is_pre_poisson(&MultTable::zeros(2), &pl2()).unwrap().passed());
        let circ = MultTable::from_entries(2, &[(0, 0, 0, 1)]);
        let r = is_pre_poisson(&z2(), &circ).unwrap();
        let v = r
            .violations()
            .iter()
            .find(|v| v.identity == "pre-poisson-2" && v.indices == [0, 0, 0])
            .expect("localized violation");
        assert_eq!(v.lhs, vec![int(0), int(0)]);
        assert_eq!(v.rhs, vec![int(0), int(2)]);
        assert!(is_pre_poisson(&z2(), &MultTable::zeros(3)).is_err());
    }

    #[test]
    fn poisson_examples() {
        assert!(is_poisson(&MultTable::zeros(2), &MultTable::zeros(2)).unwrap().passed());
        let dot = MultTable::from_entries(2, &[(0, 0, 1, 2)]);
        assert!(is_poisson(&dot, &MultTable::zeros(2)).unwrap().passed());
        let bad = MultTable::from_entries(2, &[(0, 0, 1, 1), (1, 1, 0, 1)]);
        let r = is_poisson(&bad, &MultTable::zeros(2)).unwrap();
        assert!(r.fails("associative"));
        assert!(!r.fails("commutative"));
    }

    #[test]
    fn first_failure_mode_stops_early() {
        let bad = MultTable::from_entries(2, &[(0, 0, 0, 1), (1, 1, 1, 1), (0, 1, 0, 1)]);
        let full = is_zinbiel(&bad);
        let first = is_zinbiel_with(&bad, CheckOptions { first_failure: true });
        assert!(full.violations().len() > 1);
        assert_eq!(first.violations().len(), 1);
        assert_eq!(first.violations()[0], full.violations()[0]);
    }

    #[test]
    fn sub_adjacent_examples() {
        let p = PrePoissonAlgebra::new(z2(), MultTable::zeros(2)).unwrap();
        let q = sub_adjacent(&p).unwrap();
        assert_eq!(q.dot(), &MultTable::from_entries(2, &[(0, 0, 1, 2)]));
        assert!(q.bracket().is_zero());
        let p = PrePoissonAlgebra::new(MultTable::zeros(2), pl2()).unwrap();
        let q = sub_adjacent(&p).unwrap();
        assert!(q.dot().is_zero());
        assert_eq!(q.bracket(), &MultTable::from_entries(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]));
        assert_eq!(sub_adjacent(&PrePoissonAlgebra::zero(3)).unwrap(), PoissonAlgebra::zero(3));
        let bad = PrePoissonAlgebra::new_unchecked(MultTable::from_entries(1, &[(0, 0, 0, 1)]), MultTable::zeros(1))
            .unwrap();
        assert!(matches!(sub_adjacent(&bad), Err(Error::InvalidInput(_))));
        assert!(sub_adjacent_zinbiel(&MultTable::from_entries(1, &[(0, 0, 0, 1)])).is_err());
        assert!(is_lie(&sub_adjacent_pre_lie(&pl2()).unwrap()).passed());
    }

    #[test]
    fn left_right_operators() {
        let t = z2();
        let l = t.left_basis(0);
        assert_eq!(l, Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        let r = t.right_basis(0);
        assert_eq!(r, Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        let p = pl2();
        assert_eq!(p.left_basis(0), Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert_eq!(p.right_basis(1), Matrix::from_ints(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn homomorphism_examples() {
        let p = PrePoissonAlgebra::new(z2(), MultTable::zeros(2)).unwrap();
        assert!(is_homomorphism(&Matrix::identity(2), &p, &p).unwrap().passed());
        let z = PrePoissonAlgebra::zero(1);
        assert!(is_homomorphism(&Matrix::zeros(1, 2), &p, &z).unwrap().passed());
        let q = sub_adjacent(&p).unwrap();
        assert!(matches!(is_homomorphism(&Matrix::identity(2), &p, &q), Err(Error::KindMismatch(_))));
        assert!(matches!(
            is_homomorphism(&Matrix::identity(3), &p, &p),
            Err(Error::DimensionMismatch(_))
        ));
        // swapping basis vectors is not a homomorphism of Z2
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(!is_homomorphism(&swap, &p, &p).unwrap().passed());
    }

    #[test]
    fn rb0_example() {
        let poisson = PoissonAlgebra::new(MultTable::from_entries(2, &[(0, 0, 1, 2)]), MultTable::zeros(2)).unwrap();
        let b = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        let d = pre_poisson_from_rb0(&poisson, &b).unwrap();
        assert!(d.star().is_zero() && d.circ().is_zero());
        let z = pre_poisson_from_rb0(&poisson, &Matrix::zeros(2, 2)).unwrap();
        assert_eq!(z, PrePoissonAlgebra::zero(2));
        assert!(matches!(
            pre_poisson_from_rb0(&poisson, &Matrix::identity(2)),
            Err(Error::NotRotaBaxter)
        ));
    }
}
