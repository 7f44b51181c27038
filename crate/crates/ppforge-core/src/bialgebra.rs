//! Cobrackets, pre-Poisson bialgebras, doubles and bialgebra morphisms.
//!
//! For 2-tensors `(A ⊗ B) T = A T B^T` and the flip is the transpose.

use crate::algebras::{is_homomorphism, is_pre_poisson, MultTable, PrePoissonAlgebra};
use crate::error::{dim_err, Error, Result};
use crate::geometry::{is_manin_triple, standard_omega, BilinearForm, SplitDecoration};
use crate::linalg::{vec_add, vec_sub, zero_vec, Matrix, Scalar, Tensor2, Tensor3};
use crate::report::{CheckReport, Checker};
use crate::representations::{matched_sum, starred_left, starred_right, PrePoissonRep};

/// `values[k]` is the image of `e_k` in `P ⊗ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    values: Vec<Tensor2>,
}

impl Cobracket {
    pub fn new(values: Vec<Tensor2>) -> Result<Self> {
        let n = values.len();
        for (k, t) in values.iter().enumerate() {
            if t.rows() != n || t.cols() != n {
                return Err(dim_err(format!(
                    "cobracket value {} is {}x{}, expected {n}x{n}",
                    k + 1,
                    t.rows(),
                    t.cols()
                )));
            }
        }
        Ok(Cobracket { values })
    }

    pub fn zero(n: usize) -> Self {
        Cobracket {
            values: vec![Matrix::zeros(n, n); n],
        }
    }

    /// The cobracket on `P*` whose dual product is `t`.
    pub fn dual_of_table(t: &MultTable) -> Self {
        let n = t.dim();
        Cobracket {
            values: (0..n)
                .map(|k| Matrix::from_fn(n, n, |i, j| t.get(i, j, k).clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Tensor2] {
        &self.values
    }

    pub fn at(&self, k: usize) -> &Tensor2 {
        &self.values[k]
    }

    pub fn eval(&self, x: &[Scalar]) -> Tensor2 {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (t, xi) in self.values.iter().zip(x) {
            if !num::Zero::is_zero(xi) {
                out = &out + &t.scaled(xi);
            }
        }
        out
    }

    /// `(c ⊗ Id) T`
    fn apply_left(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let s = t.get(a, b);
                if num::Zero::is_zero(s) {
                    continue;
                }
                for ((i, j), v) in nonzero2(&self.values[a]) {
                    out.add_at(i, j, b, &(s * v));
                }
            }
        }
        out
    }

    /// `(Id ⊗ c) T`
    fn apply_right(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim();
        let mut out = Tensor3::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let s = t.get(a, b);
                if num::Zero::is_zero(s) {
                    continue;
                }
                for ((i, j), v) in nonzero2(&self.values[b]) {
                    out.add_at(a, i, j, &(s * v));
                }
            }
        }
        out
    }
}

fn nonzero2(t: &Tensor2) -> Vec<((usize, usize), &Scalar)> {
    let mut out = Vec::new();
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            let v = t.get(i, j);
            if !num::Zero::is_zero(v) {
                out.push(((i, j), v));
            }
        }
    }
    out
}

/// Product on `P*` dual to `c`: `t[i][j][k] = c(e_k)[i][j]`.
pub fn dualize_cobracket(c: &Cobracket) -> MultTable {
    let n = c.dim();
    MultTable::from_fn(n, |i, j, k| c.values[k].get(i, j).clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrePoissonBialgebra {
    algebra: PrePoissonAlgebra,
    delta_star: Cobracket,
    delta_circ: Cobracket,
}

impl PrePoissonBialgebra {
    /// Shapes are validated; the bialgebra axioms are not.
    pub fn new(algebra: PrePoissonAlgebra, delta_star: Cobracket, delta_circ: Cobracket) -> Result<Self> {
        let n = algebra.dim();
        if delta_star.dim() != n || delta_circ.dim() != n {
            return Err(dim_err(format!(
                "cobrackets of dimension {} and {} on an algebra of dimension {n}",
                delta_star.dim(),
                delta_circ.dim()
            )));
        }
        Ok(PrePoissonBialgebra {
            algebra,
            delta_star,
            delta_circ,
        })
    }

    /// `(P, 0, 0)`
    pub fn trivial(algebra: PrePoissonAlgebra) -> Self {
        let n = algebra.dim();
        PrePoissonBialgebra {
            algebra,
            delta_star: Cobracket::zero(n),
            delta_circ: Cobracket::zero(n),
        }
    }

    pub fn algebra(&self) -> &PrePoissonAlgebra {
        &self.algebra
    }
    pub fn delta_star(&self) -> &Cobracket {
        &self.delta_star
    }
    pub fn delta_circ(&self) -> &Cobracket {
        &self.delta_circ
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `(P*, Delta^*, delta^*)`, not validated.
    pub fn dual_algebra(&self) -> PrePoissonAlgebra {
        PrePoissonAlgebra::from_parts(dualize_cobracket(&self.delta_star), dualize_cobracket(&self.delta_circ))
    }
}

fn t3(t: Tensor3) -> Vec<Scalar> {
    t.entries().to_vec()
}

/// The six displayed compatibility identities, per basis element or pair.
pub fn check_bialgebra_compat(b: &PrePoissonBialgebra) -> CheckReport {
    let p = &b.algebra;
    let n = p.dim();
    let (star, circ) = (p.star(), p.circ());
    let (ds, dc) = (&b.delta_star, &b.delta_circ);
    let id = Matrix::identity(n);
    let ta = Matrix::tensor_apply;
    let ls: Vec<Matrix> = (0..n).map(|i| star.left_basis(i)).collect();
    let rs: Vec<Matrix> = (0..n).map(|i| star.right_basis(i)).collect();
    let lc: Vec<Matrix> = (0..n).map(|i| circ.left_basis(i)).collect();
    let rc: Vec<Matrix> = (0..n).map(|i| circ.right_basis(i)).collect();
    let mut ck = Checker::full();
    for i in 0..n {
        for j in 0..n {
            let idx = [i, j];
            let (dsx, dsy) = (ds.at(i), ds.at(j));
            let (dcx, dcy) = (dc.at(i), dc.at(j));
            let lsrs_x = &ls[i] + &rs[i];
            let lsrs_y = &ls[j] + &rs[j];
            let xs_y = star.basis_product(i, j);
            let xc_y = circ.basis_product(i, j);

            let lhs = dc.eval(&vec_add(xs_y, star.basis_product(j, i)));
            let rhs = &(&(&ta(&id, &lsrs_y, dcx) + &ta(&id, &lsrs_x, dcy)) - &ta(&lc[i], &id, dsy))
                - &ta(&lc[j], &id, dsx);
            ck.eq("bialg-1", &idx, lhs.entries().to_vec(), rhs.entries().to_vec());

            let lhs = ds.eval(&vec_sub(xc_y, circ.basis_product(j, i)));
            let rhs = &(&(&ta(&ls[j], &id, dcx) - &ta(&id, &lsrs_y, dcx)) + &ta(&lc[i], &id, dsy))
                + &ta(&id, &(&lc[i] - &rc[i]), dsy);
            ck.eq("bialg-2", &idx, lhs.entries().to_vec(), rhs.entries().to_vec());

            let d = ds.eval(xc_y);
            let lhs = &d + &d.transpose();
            let sy = dsy + &dsy.transpose();
            let rhs = &(&(&(-&ta(&id, &rs[j], dcx)) - &ta(&rs[j], &id, &dcx.transpose())) + &ta(&lc[i], &id, &sy))
                + &ta(&id, &lc[i], &sy);
            ck.eq("bialg-3", &idx, lhs.entries().to_vec(), rhs.entries().to_vec());

            let d = dc.eval(xs_y);
            let lhs = &d - &d.transpose();
            let ay = dcy - &dcy.transpose();
            let rhs = &(&(&ta(&id, &rs[j], dcx) + &ta(&id, &ls[i], &ay)) + &ta(&rc[j], &id, &dsx.transpose()))
                - &ta(&lc[i], &id, &sy);
            ck.eq("bialg-4", &idx, lhs.entries().to_vec(), rhs.entries().to_vec());
        }
    }
    for k in 0..n {
        let (dsk, dck) = (ds.at(k), dc.at(k));
        let a = dc.apply_left(dsk);
        let lhs = &(&(&a - &a.flip12()) - &ds.apply_right(dck)) + &dc.apply_right(dsk).flip12();
        ck.eq("bialg-5", &[k], t3(lhs), zero_vec(n * n * n));
        let a = ds.apply_left(dck);
        let c = dc.apply_right(dsk);
        let lhs = &(&(&a + &a.flip12()) - &c) - &c.flip12();
        ck.eq("bialg-6", &[k], t3(lhs), zero_vec(n * n * n));
    }
    ck.finish()
}

fn coregular_unchecked(p: &PrePoissonAlgebra) -> PrePoissonRep {
    let n = p.dim();
    let (star, circ) = (p.star(), p.circ());
    PrePoissonRep::new(
        p.clone(),
        n,
        (0..n)
            .map(|i| -&(&starred_left(star, i) + &starred_right(star, i)))
            .collect(),
        (0..n).map(|i| starred_right(star, i)).collect(),
        (0..n)
            .map(|i| &starred_left(circ, i) - &starred_right(circ, i))
            .collect(),
        (0..n).map(|i| -&starred_right(circ, i)).collect(),
    )
    .expect("coregular shapes")
}

/// Products on `P ⊕ P*` from the two coregular representations, without any check.
pub fn double_unchecked(b: &PrePoissonBialgebra) -> PrePoissonAlgebra {
    let dual = b.dual_algebra();
    matched_sum(
        &b.algebra,
        &dual,
        &coregular_unchecked(&b.algebra),
        Some(&coregular_unchecked(&dual)),
    )
}

/// Dual products form a pre-Poisson algebra, the compatibility identities
/// hold, and the double is a Manin triple for the standard form.
pub fn is_pre_poisson_bialgebra(b: &PrePoissonBialgebra) -> CheckReport {
    let n = b.dim();
    let mut report = b.algebra.check().tagged("algebra");
    let dual = b.dual_algebra();
    report.merge(
        is_pre_poisson(dual.star(), dual.circ())
            .expect("square cobrackets")
            .tagged("dual"),
    );
    report.merge(check_bialgebra_compat(b).tagged("compat"));
    let d = double_unchecked(b);
    report.merge(
        is_manin_triple(&d, &SplitDecoration::halves(n), &standard_omega(n))
            .expect("shapes of the double")
            .tagged("double"),
    );
    report
}

pub fn double_of_bialgebra(b: &PrePoissonBialgebra) -> Result<(PrePoissonAlgebra, BilinearForm, SplitDecoration)> {
    if !is_pre_poisson_bialgebra(b).passed() {
        return Err(Error::NotABialgebra);
    }
    let n = b.dim();
    let d = double_unchecked(b).validated()?;
    Ok((d, standard_omega(n), SplitDecoration::halves(n)))
}

/// `(P*, Delta^*, delta^*)` with cobrackets dual to `*_P` and `o_P`.
pub fn dual_bialgebra(b: &PrePoissonBialgebra) -> Result<PrePoissonBialgebra> {
    if !is_pre_poisson_bialgebra(b).passed() {
        return Err(Error::NotABialgebra);
    }
    Ok(dual_unchecked(b))
}

pub(crate) fn dual_unchecked(b: &PrePoissonBialgebra) -> PrePoissonBialgebra {
    PrePoissonBialgebra {
        algebra: b.dual_algebra(),
        delta_star: Cobracket::dual_of_table(b.algebra.star()),
        delta_circ: Cobracket::dual_of_table(b.algebra.circ()),
    }
}

/// Algebra homomorphism with `(phi ⊗ phi) Delta_P = Delta_Q phi` and the same for `delta`.
pub fn is_bialgebra_morphism(
    phi: &Matrix,
    src: &PrePoissonBialgebra,
    dst: &PrePoissonBialgebra,
) -> Result<CheckReport> {
    let mut report = is_homomorphism(phi, &src.algebra, &dst.algebra)?;
    let n = src.dim();
    let mut ck = Checker::full();
    for (name, cs, cd) in [
        ("co-star", &src.delta_star, &dst.delta_star),
        ("co-circ", &src.delta_circ, &dst.delta_circ),
    ] {
        for k in 0..n {
            let lhs = Matrix::tensor_apply(phi, phi, cs.at(k));
            let rhs = cd.eval(&phi.column(k));
            ck.eq(name, &[k], lhs.entries().to_vec(), rhs.entries().to_vec());
        }
    }
    report.merge(ck.finish());
    Ok(report)
}
