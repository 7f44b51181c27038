//! Skew forms, symplectic Poisson algebras, quadratic pre-Poisson algebras,
//! phase spaces and Manin triples.
//!
//! A form is a square matrix `W` with `omega(x, y) = x^T W y`. Split spaces use
//! the block basis `e_1..e_n, f_1..f_m`.

use num::Zero;

use crate::algebras::{MultTable, PoissonAlgebra, PrePoissonAlgebra};
use crate::error::{dim_err, Error, Result};
use crate::linalg::{basis_vec, dot, int, invert_matrix, vec_add, vec_sub, Matrix, Scalar, Vector};
use crate::report::{CheckReport, Checker};
use crate::representations::{semidirect_poisson, PoissonRep};

pub type BilinearForm = Matrix;

/// Two coordinate blocks of sizes `dim_p` and `dim_q`, in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitDecoration {
    pub dim_p: usize,
    pub dim_q: usize,
}

impl SplitDecoration {
    pub fn new(dim_p: usize, dim_q: usize) -> Self {
        SplitDecoration { dim_p, dim_q }
    }

    pub fn halves(n: usize) -> Self {
        SplitDecoration { dim_p: n, dim_q: n }
    }

    pub fn total(&self) -> usize {
        self.dim_p + self.dim_q
    }

    fn blocks(&self) -> [(&'static str, usize, usize); 2] {
        [("block-p", 0, self.dim_p), ("block-q", self.dim_p, self.dim_q)]
    }
}

pub fn eval_form(w: &BilinearForm, x: &[Scalar], y: &[Scalar]) -> Scalar {
    dot(x, &w.apply(y))
}

/// `omega(x + xi, y + eta) = <xi, y> - <eta, x>` on `P ⊕ P*`.
pub fn standard_omega(n: usize) -> BilinearForm {
    let mut w = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        w.set(i, n + i, int(-1));
        w.set(n + i, i, int(1));
    }
    w
}

fn square_form(w: &BilinearForm, n: usize) -> Result<()> {
    if w.rows() != n || w.cols() != n {
        return Err(dim_err(format!("form is {}x{}, algebra has dimension {n}", w.rows(), w.cols())));
    }
    Ok(())
}

fn check_skew_nondegenerate(w: &BilinearForm, ck: &mut Checker) {
    let n = w.rows();
    for i in 0..n {
        for j in i..n {
            ck.eq("skew", &[i, j], vec![w.get(i, j).clone()], vec![-w.get(j, i)]);
        }
    }
    let det = w.determinant().expect("square form");
    if det.is_zero() {
        ck.fail("nondegenerate", &[], vec![det], vec![]);
    }
}

fn cyclic(w: &BilinearForm, t: &MultTable, id: &str, ck: &mut Checker) {
    let n = t.dim();
    let e: Vec<Vector> = (0..n).map(|i| basis_vec(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = eval_form(w, t.basis_product(i, j), &e[k])
                    + eval_form(w, t.basis_product(j, k), &e[i])
                    + eval_form(w, t.basis_product(k, i), &e[j]);
                ck.eq(id, &[i, j, k], vec![s], vec![Scalar::zero()]);
            }
        }
    }
}

/// Poisson axioms, and `w` skew, non-degenerate, a 2-cocycle for the bracket
/// and a Connes cocycle for the product.
pub fn is_symplectic_poisson(p: &PoissonAlgebra, w: &BilinearForm) -> Result<CheckReport> {
    square_form(w, p.dim())?;
    let mut report = p.check().tagged("algebra");
    let mut ck = Checker::full();
    check_skew_nondegenerate(w, &mut ck);
    cyclic(w, p.bracket(), "cocycle-bracket", &mut ck);
    cyclic(w, p.dot(), "connes-cocycle", &mut ck);
    report.merge(ck.finish());
    Ok(report)
}

/// Solves `omega(x*y, z) = omega(y, x.z)` and `omega(x o y, z) = -omega(y, {x,z})`.
pub fn compatible_pre_poisson(p: &PoissonAlgebra, w: &BilinearForm) -> Result<PrePoissonAlgebra> {
    let report = is_symplectic_poisson(p, w)?;
    if !report.passed() {
        return Err(Error::NotSymplectic);
    }
    let n = p.dim();
    let wt = w.transpose();
    let wt_inv = invert_matrix(&wt)?;
    let mut star = MultTable::zeros(n);
    let mut circ = MultTable::zeros(n);
    for i in 0..n {
        let s = &(&wt_inv * &p.dot().left_basis(i).transpose()) * &wt;
        let c = -&(&(&wt_inv * &p.bracket().left_basis(i).transpose()) * &wt);
        for j in 0..n {
            for k in 0..n {
                star.set(i, j, k, s.get(k, j).clone());
                circ.set(i, j, k, c.get(k, j).clone());
            }
        }
    }
    Ok(PrePoissonAlgebra::from_parts(star, circ))
}

/// Pre-Poisson axioms, invariance of `omega` under both products, and the derived cross-check identities.
pub fn is_quadratic_pre_poisson(p: &PrePoissonAlgebra, w: &BilinearForm) -> Result<CheckReport> {
    let n = p.dim();
    square_form(w, n)?;
    let (star, circ) = (p.star(), p.circ());
    let e: Vec<Vector> = (0..n).map(|i| basis_vec(n, i)).collect();
    let mut ck = Checker::full();
    check_skew_nondegenerate(w, &mut ck);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let idx = [i, j, k];
                let xs_y = star.basis_product(i, j);
                let xc_y = circ.basis_product(i, j);
                ck.eq(
                    "quadratic-1",
                    &idx,
                    vec![eval_form(w, xs_y, &e[k])],
                    vec![eval_form(
                        w,
                        &e[j],
                        &vec_add(star.basis_product(i, k), star.basis_product(k, i)),
                    )],
                );
                ck.eq(
                    "quadratic-2",
                    &idx,
                    vec![eval_form(w, xc_y, &e[k])],
                    vec![-eval_form(
                        w,
                        &e[j],
                        &vec_sub(circ.basis_product(i, k), circ.basis_product(k, i)),
                    )],
                );
                ck.eq(
                    "quadratic-cross-star",
                    &idx,
                    vec![eval_form(w, xs_y, &e[k])],
                    vec![eval_form(w, star.basis_product(k, j), &e[i])],
                );
                ck.eq(
                    "quadratic-cross-circ",
                    &idx,
                    vec![eval_form(w, xc_y, &e[k])],
                    vec![-eval_form(w, circ.basis_product(k, j), &e[i])],
                );
            }
        }
    }
    let mut report = p.check().tagged("algebra");
    report.merge(ck.finish());
    Ok(report)
}

fn check_split(split: &SplitDecoration, n: usize) -> Result<()> {
    if split.total() != n {
        return Err(dim_err(format!(
            "split ({}, {}) does not partition dimension {n}",
            split.dim_p, split.dim_q
        )));
    }
    Ok(())
}

fn closure(t: &MultTable, name: &str, split: &SplitDecoration, ck: &mut Checker) {
    for (block, start, len) in split.blocks() {
        for (i, j, k) in t.block_leaks(start, len) {
            ck.fail(
                &format!("{block}/closed-{name}"),
                &[i, j, k],
                vec![t.get(i, j, k).clone()],
                vec![Scalar::zero()],
            );
        }
    }
}

/// Symplectic with the standard form, and both blocks closed under both products.
pub fn is_phase_space(big: &PoissonAlgebra, split: &SplitDecoration, w: &BilinearForm) -> Result<CheckReport> {
    let n = big.dim();
    check_split(split, n)?;
    let mut report = is_symplectic_poisson(big, w)?;
    let mut ck = Checker::full();
    if split.dim_p != split.dim_q || *w != standard_omega(split.dim_p) {
        ck.fail("standard-form", &[], w.entries().to_vec(), vec![]);
    }
    closure(big.dot(), "dot", split, &mut ck);
    closure(big.bracket(), "bracket", split, &mut ck);
    report.merge(ck.finish());
    Ok(report)
}

/// Quadratic, with both blocks isotropic subalgebras.
pub fn is_manin_triple(p: &PrePoissonAlgebra, split: &SplitDecoration, w: &BilinearForm) -> Result<CheckReport> {
    let n = p.dim();
    check_split(split, n)?;
    let mut report = is_quadratic_pre_poisson(p, w)?;
    let mut ck = Checker::full();
    closure(p.star(), "star", split, &mut ck);
    closure(p.circ(), "circ", split, &mut ck);
    for (block, start, len) in split.blocks() {
        for i in start..start + len {
            for j in start..start + len {
                if !w.get(i, j).is_zero() {
                    ck.fail(&format!("{block}/isotropic"), &[i, j], vec![w.get(i, j).clone()], vec![Scalar::zero()]);
                }
            }
        }
    }
    report.merge(ck.finish());
    Ok(report)
}

/// `P^c ⋉ P*` by `(varrho, varsigma) = (L_o^*, -L_*^*)`, with the standard form.
pub fn phase_space(p: &PrePoissonAlgebra) -> Result<(PoissonAlgebra, BilinearForm)> {
    p.ensure_valid()?;
    let n = p.dim();
    let base = crate::algebras::sub_adjacent(p)?;
    let varsigma: Vec<Matrix> = (0..n).map(|i| p.star().left_basis(i).transpose()).collect();
    let varrho: Vec<Matrix> = (0..n).map(|i| -&p.circ().left_basis(i).transpose()).collect();
    let rep = PoissonRep::new(base.clone(), n, varrho, varsigma)?;
    let big = semidirect_poisson(&base, &rep)?;
    Ok((big, standard_omega(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::sub_adjacent;

    fn z2() -> PrePoissonAlgebra {
        PrePoissonAlgebra::new(MultTable::from_entries(2, &[(0, 0, 1, 1)]), MultTable::zeros(2)).unwrap()
    }

    #[test]
    fn standard_forms() {
        assert_eq!(standard_omega(1), Matrix::from_ints(&[&[0, -1], &[1, 0]]));
        for n in 1..4 {
            let w = standard_omega(n);
            assert!(w.is_skew());
            assert_eq!(w.determinant().unwrap(), int(1));
        }
        // omega(x + xi, y + eta) = xi(y) - eta(x)
        let w = standard_omega(1);
        assert_eq!(eval_form(&w, &[int(0), int(1)], &[int(1), int(0)]), int(1));
    }

    #[test]
    fn symplectic_checks() {
        let z = PoissonAlgebra::zero(2);
        assert!(is_symplectic_poisson(&z, &standard_omega(1)).unwrap().passed());
        let degenerate = Matrix::from_ints(&[&[0, 0], &[0, 0]]);
        assert!(is_symplectic_poisson(&z, &degenerate).unwrap().fails("nondegenerate"));
        assert!(is_symplectic_poisson(&z, &standard_omega(2)).is_err());
    }

    #[test]
    fn phase_space_of_z2() {
        let (big, w) = phase_space(&z2()).unwrap();
        assert_eq!(big.dim(), 4);
        assert!(big.check().passed());
        assert!(is_symplectic_poisson(&big, &w).unwrap().passed());
        assert!(is_phase_space(&big, &SplitDecoration::halves(2), &w).unwrap().passed());
        let c = compatible_pre_poisson(&big, &w).unwrap();
        assert!(c.check().passed());
        assert_eq!(c.restrict(0, 2), z2());
        assert_eq!(sub_adjacent(&c).unwrap(), big);
        assert!(is_manin_triple(&c, &SplitDecoration::halves(2), &w).unwrap().passed());
    }

    #[test]
    fn quadratic_counterexample() {
        let w = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let r = is_quadratic_pre_poisson(&z2(), &w).unwrap();
        let v = r
            .violations()
            .iter()
            .find(|v| v.identity == "quadratic-1" && v.indices == [0, 0, 0])
            .unwrap();
        assert_eq!(v.lhs, vec![int(-1)]);
        assert_eq!(v.rhs, vec![int(2)]);
    }

    #[test]
    fn manin_triple_failures() {
        let z = PrePoissonAlgebra::zero(2);
        let split = SplitDecoration::halves(1);
        assert!(is_manin_triple(&z, &split, &standard_omega(1)).unwrap().passed());
        let sym = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(is_manin_triple(&z, &split, &sym).unwrap().fails("skew"));
        let w = Matrix::from_ints(&[&[1, -1], &[1, 0]]);
        assert!(is_manin_triple(&z, &split, &w).unwrap().fails("isotropic"));
    }

    #[test]
    fn phase_space_closure_failure() {
        let (big, w) = phase_space(&z2()).unwrap();
        let mut dot = big.dot().clone();
        // e1 . e1 leaks into the dual block
        dot.set(0, 0, 2, int(1));
        let bad = PoissonAlgebra::new_unchecked(dot, big.bracket().clone()).unwrap();
        let r = is_phase_space(&bad, &SplitDecoration::halves(2), &w).unwrap();
        assert!(r.fails("block-p/closed-dot"));
    }
}
