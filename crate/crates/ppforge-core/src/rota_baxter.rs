//! Rota–Baxter operators of weight `lambda`, descendent algebras, quadratic
//! Rota–Baxter pre-Poisson algebras, Rota–Baxter symplectic Poisson algebras
//! and their correspondence with factorizable r-matrices.

use num::{One, Zero};

use crate::algebras::{is_homomorphism, sub_adjacent, MultTable, PoissonAlgebra, PrePoissonAlgebra};
use crate::bialgebra::{is_bialgebra_morphism, Cobracket, PrePoissonBialgebra};
use crate::error::{dim_err, Error, Result};
use crate::geometry::{
    compatible_pre_poisson, is_phase_space, is_quadratic_pre_poisson, is_symplectic_poisson, standard_omega,
    BilinearForm, SplitDecoration,
};
use crate::linalg::{basis_vec, invert_matrix, vec_add, vec_scale, vec_sub, LinearMap, Matrix, Scalar, Vector};
use crate::report::{CheckReport, Checker};
use crate::yang_baxter::{classify_r, coboundary_bialgebra, i_map, induced_products_r, r_minus, RMatrix};

fn square_op(b: &LinearMap, n: usize) -> Result<()> {
    if b.rows() != n || b.cols() != n {
        return Err(dim_err(format!("operator is {}x{}, algebra has dimension {n}", b.rows(), b.cols())));
    }
    Ok(())
}

/// `B(x)#B(y) = B(B(x)#y + x#B(y) + lambda x#y)` on basis pairs.
fn rb_identity(t: &MultTable, b: &LinearMap, images: &[Vector], lambda: &Scalar, id: &str, ck: &mut Checker) {
    let n = t.dim();
    for i in 0..n {
        let ei = basis_vec(n, i);
        for j in 0..n {
            let ej = basis_vec(n, j);
            let inner = vec_add(
                &vec_add(&t.mul(&images[i], &ej), &t.mul(&ei, &images[j])),
                &vec_scale(lambda, t.basis_product(i, j)),
            );
            ck.eq(id, &[i, j], t.mul(&images[i], &images[j]), b.apply(&inner));
        }
    }
}

fn rb_report(tables: [(&str, &MultTable); 2], b: &LinearMap, lambda: &Scalar) -> CheckReport {
    let n = tables[0].1.dim();
    let images: Vec<Vector> = (0..n).map(|i| b.column(i)).collect();
    let mut ck = Checker::full();
    for (id, t) in tables {
        rb_identity(t, b, &images, lambda, id, &mut ck);
    }
    ck.finish()
}

pub fn is_rb_poisson(p: &PoissonAlgebra, b: &LinearMap, lambda: &Scalar) -> Result<CheckReport> {
    square_op(b, p.dim())?;
    Ok(rb_report([("rb-dot", p.dot()), ("rb-bracket", p.bracket())], b, lambda))
}

pub fn is_rb_pre_poisson(p: &PrePoissonAlgebra, b: &LinearMap, lambda: &Scalar) -> Result<CheckReport> {
    square_op(b, p.dim())?;
    Ok(rb_report([("rb-star", p.star()), ("rb-circ", p.circ())], b, lambda))
}

fn descendent_table(t: &MultTable, b: &LinearMap, lambda: &Scalar) -> MultTable {
    let n = t.dim();
    let images: Vec<Vector> = (0..n).map(|i| b.column(i)).collect();
    let mut out = MultTable::zeros(n);
    for i in 0..n {
        let ei = basis_vec(n, i);
        for j in 0..n {
            let ej = basis_vec(n, j);
            let v = vec_add(
                &vec_add(&t.mul(&images[i], &ej), &t.mul(&ei, &images[j])),
                &vec_scale(lambda, t.basis_product(i, j)),
            );
            for (k, c) in v.into_iter().enumerate() {
                out.set(i, j, k, c);
            }
        }
    }
    out
}

/// `x *_B y = B(x)*y + x*B(y) + lambda x*y`, and the same for `o`, with no checks.
pub fn descendent_unchecked(p: &PrePoissonAlgebra, b: &LinearMap, lambda: &Scalar) -> PrePoissonAlgebra {
    PrePoissonAlgebra::from_parts(
        descendent_table(p.star(), b, lambda),
        descendent_table(p.circ(), b, lambda),
    )
}

pub fn descendent(p: &PrePoissonAlgebra, b: &LinearMap, lambda: &Scalar) -> Result<PrePoissonAlgebra> {
    p.ensure_valid()?;
    if !is_rb_pre_poisson(p, b, lambda)?.passed() {
        return Err(Error::NotRotaBaxter);
    }
    descendent_unchecked(p, b, lambda).validated()
}

/// `omega(Bx, y) + omega(x, By) + lambda omega(x, y) = 0`, i.e. `B^T W + W B + lambda W = 0`.
fn rb_form(b: &LinearMap, lambda: &Scalar, w: &BilinearForm) -> CheckReport {
    let m = &(&(&b.transpose() * w) + &(w * b)) + &w.scaled(lambda);
    let mut ck = Checker::full();
    let n = w.rows();
    for i in 0..n {
        for j in 0..n {
            if !m.get(i, j).is_zero() {
                ck.fail("rb-form", &[i, j], vec![m.get(i, j).clone()], vec![Scalar::zero()]);
            }
        }
    }
    ck.finish()
}

fn check_shapes(n: usize, b: &LinearMap, w: &BilinearForm) -> Result<()> {
    square_op(b, n)?;
    if w.rows() != n || w.cols() != n {
        return Err(dim_err(format!("form is {}x{}, algebra has dimension {n}", w.rows(), w.cols())));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRBPrePoisson {
    pub algebra: PrePoissonAlgebra,
    pub b: LinearMap,
    pub weight: Scalar,
    pub omega: BilinearForm,
}

impl QuadraticRBPrePoisson {
    /// Checks shapes only.
    pub fn new(algebra: PrePoissonAlgebra, b: LinearMap, weight: Scalar, omega: BilinearForm) -> Result<Self> {
        check_shapes(algebra.dim(), &b, &omega)?;
        Ok(QuadraticRBPrePoisson { algebra, b, weight, omega })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RBSymplecticPoisson {
    pub algebra: PoissonAlgebra,
    pub b: LinearMap,
    pub weight: Scalar,
    pub omega: BilinearForm,
}

impl RBSymplecticPoisson {
    /// Checks shapes only.
    pub fn new(algebra: PoissonAlgebra, b: LinearMap, weight: Scalar, omega: BilinearForm) -> Result<Self> {
        check_shapes(algebra.dim(), &b, &omega)?;
        Ok(RBSymplecticPoisson { algebra, b, weight, omega })
    }
}

/// Violations are tagged `quadratic/`, `rb/`, and the compatibility of `B` with the form is `rb-form`.
pub fn is_quadratic_rb(q: &QuadraticRBPrePoisson) -> Result<CheckReport> {
    check_shapes(q.algebra.dim(), &q.b, &q.omega)?;
    let mut report = is_quadratic_pre_poisson(&q.algebra, &q.omega)?.tagged("quadratic");
    report.merge(is_rb_pre_poisson(&q.algebra, &q.b, &q.weight)?.tagged("rb"));
    report.merge(rb_form(&q.b, &q.weight, &q.omega));
    Ok(report)
}

/// Violations are tagged `symplectic/`, `rb/`, plus `rb-form`.
pub fn is_rb_symplectic_poisson(q: &RBSymplecticPoisson) -> Result<CheckReport> {
    check_shapes(q.algebra.dim(), &q.b, &q.omega)?;
    let mut report = is_symplectic_poisson(&q.algebra, &q.omega)?.tagged("symplectic");
    report.merge(is_rb_poisson(&q.algebra, &q.b, &q.weight)?.tagged("rb"));
    report.merge(rb_form(&q.b, &q.weight, &q.omega));
    Ok(report)
}

/// Same `B`, form and weight on the compatible pre-Poisson algebra of the form.
pub fn rb_pre_poisson_from_rb_symplectic(q: &RBSymplecticPoisson) -> Result<QuadraticRBPrePoisson> {
    q.algebra.ensure_valid().map_err(|_| Error::NotRBSymplectic)?;
    if !is_rb_symplectic_poisson(q)?.passed() {
        return Err(Error::NotRBSymplectic);
    }
    let algebra = compatible_pre_poisson(&q.algebra, &q.omega)?;
    Ok(QuadraticRBPrePoisson {
        algebra,
        b: q.b.clone(),
        weight: q.weight.clone(),
        omega: q.omega.clone(),
    })
}

/// Sub-adjacent Poisson algebra with the same `B`, form and weight.
pub fn rb_symplectic_from_quadratic_rb(q: &QuadraticRBPrePoisson) -> Result<RBSymplecticPoisson> {
    if !is_quadratic_rb(q)?.passed() {
        return Err(Error::NotQuadraticRB);
    }
    Ok(RBSymplecticPoisson {
        algebra: sub_adjacent(&q.algebra)?,
        b: q.b.clone(),
        weight: q.weight.clone(),
        omega: q.omega.clone(),
    })
}

fn require_factorizable(rm: &RMatrix) -> Result<LinearMap> {
    if !classify_r(rm).factorizable {
        return Err(Error::NotFactorizable);
    }
    invert_matrix(&i_map(rm)).map_err(|_| Error::NotFactorizable)
}

/// `B = lambda r_- I^-1` and `omega_I(x, y) = <I^-1 x, y>`.
pub fn quadratic_rb_from_factorizable(rm: &RMatrix, lambda: &Scalar) -> Result<QuadraticRBPrePoisson> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let i_inv = require_factorizable(rm)?;
    let b = (&r_minus(rm) * &i_inv).scaled(lambda);
    Ok(QuadraticRBPrePoisson {
        algebra: rm.algebra().clone(),
        b,
        weight: lambda.clone(),
        omega: i_inv.transpose(),
    })
}

/// `-lambda Id - B`
pub fn tilde_rb(b: &LinearMap, lambda: &Scalar) -> LinearMap {
    &Matrix::scalar(b.rows(), &-lambda) - b
}

/// `I_omega` with `<I_omega^-1 x, y> = omega(x, y)`.
pub fn i_omega(w: &BilinearForm) -> Result<LinearMap> {
    invert_matrix(&w.transpose())
}

/// `r_+ = (1/lambda)(B + lambda Id) I_omega`, read back as the tensor `r`.
pub fn factorizable_from_quadratic_rb(q: &QuadraticRBPrePoisson) -> Result<RMatrix> {
    if q.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    if !is_quadratic_rb(q)?.passed() {
        return Err(Error::NotQuadraticRB);
    }
    let n = q.algebra.dim();
    let io = i_omega(&q.omega)?;
    let shifted = &q.b + &Matrix::scalar(n, &q.weight);
    let r_plus = (&shifted * &io).scaled(&(Scalar::one() / &q.weight));
    RMatrix::new(q.algebra.clone(), r_plus.transpose())
}

fn transported(t: &MultTable, i: &LinearMap, i_inv: &LinearMap, lambda: &Scalar) -> MultTable {
    // xi #_I eta = -lambda I^-1((1/lambda) I xi # (1/lambda) I eta)
    let n = t.dim();
    let scale = Scalar::one() / lambda;
    let imgs: Vec<Vector> = (0..n).map(|k| vec_scale(&scale, &i.column(k))).collect();
    let mut out = MultTable::zeros(n);
    for a in 0..n {
        for b in 0..n {
            let v = vec_scale(&-lambda, &i_inv.apply(&t.mul(&imgs[a], &imgs[b])));
            for (k, c) in v.into_iter().enumerate() {
                out.set(a, b, k, c);
            }
        }
    }
    out
}

/// The products `*_I` and `o_I` on `P*`.
pub fn products_i(rm: &RMatrix, lambda: &Scalar) -> Result<PrePoissonAlgebra> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let i_inv = require_factorizable(rm)?;
    let i = i_map(rm);
    let p = rm.algebra();
    Ok(PrePoissonAlgebra::from_parts(
        transported(p.star(), &i, &i_inv, lambda),
        transported(p.circ(), &i, &i_inv, lambda),
    ))
}

/// `(1/lambda) I` as an isomorphism `(P*, *_r, o_r) -> (P, *_B, o_B)` and as a bialgebra
/// isomorphism from `(P*_r, P)` onto `(P_B, (P*, *_I, o_I))`. Uses `q.b` and `q.weight`.
pub fn iso_check_descendent(rm: &RMatrix, q: &QuadraticRBPrePoisson) -> Result<CheckReport> {
    if q.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    require_factorizable(rm)?;
    let n = rm.dim();
    check_shapes(n, &q.b, &q.omega)?;
    let lambda = &q.weight;
    let phi = i_map(rm).scaled(&(Scalar::one() / lambda));
    let src_alg = induced_products_r(rm);
    let dst_alg = descendent_unchecked(rm.algebra(), &q.b, lambda);

    let mut report = is_rb_pre_poisson(rm.algebra(), &q.b, lambda)?.tagged("rb");
    report.merge(is_homomorphism(&phi, &src_alg, &dst_alg)?.tagged("algebra"));
    if invert_matrix(&phi).is_err() {
        let mut ck = Checker::full();
        ck.fail("invertible", &[], vec![], vec![]);
        report.merge(ck.finish());
    }

    let p = rm.algebra();
    let src = PrePoissonBialgebra::new(
        src_alg,
        Cobracket::dual_of_table(p.star()),
        Cobracket::dual_of_table(p.circ()),
    )?;
    let ti = products_i(rm, lambda)?;
    let dst = PrePoissonBialgebra::new(
        dst_alg,
        Cobracket::dual_of_table(ti.star()),
        Cobracket::dual_of_table(ti.circ()),
    )?;
    report.merge(is_bialgebra_morphism(&phi, &src, &dst)?.tagged("bialgebra"));
    Ok(report)
}

/// Dual operator of a left multiplication: `<A^*(x) eta, y> = -<eta, A(x) y>`.
fn dual_left(t: &MultTable, x: &[Scalar]) -> Matrix {
    -&t.left(x).transpose()
}

/// The displayed products on `P ⊕ P*`, given compatible products on `P` and `*_r, o_r` on `P*`.
pub fn rb_phase_space_displayed(p: &PrePoissonAlgebra, dual: &PrePoissonAlgebra) -> PoissonAlgebra {
    let n = p.dim();
    let (pd, pb) = (p.dot_table(), p.bracket_table());
    let (qd, qb) = (dual.dot_table(), dual.bracket_table());
    let split = |v: &[Scalar]| (v[..n].to_vec(), v[n..].to_vec());
    let join = |a: Vector, b: Vector| {
        let mut out = a;
        out.extend(b);
        out
    };
    let m = 2 * n;
    let mut dot = MultTable::zeros(m);
    let mut bracket = MultTable::zeros(m);
    for a in 0..m {
        let (x, xi) = split(&basis_vec(m, a));
        for b in 0..m {
            let (y, eta) = split(&basis_vec(m, b));
            let p_part = vec_sub(
                &pd.mul(&x, &y),
                &vec_add(&dual_left(dual.star(), &xi).apply(&y), &dual_left(dual.star(), &eta).apply(&x)),
            );
            let q_part = vec_sub(
                &qd.mul(&xi, &eta),
                &vec_add(&dual_left(p.star(), &x).apply(&eta), &dual_left(p.star(), &y).apply(&xi)),
            );
            for (k, c) in join(p_part, q_part).into_iter().enumerate() {
                dot.set(a, b, k, c);
            }
            let p_part = vec_add(
                &pb.mul(&x, &y),
                &vec_sub(
                    &dual_left(dual.circ(), &xi).apply(&y),
                    &dual_left(dual.circ(), &eta).apply(&x),
                ),
            );
            let q_part = vec_add(
                &qb.mul(&xi, &eta),
                &vec_sub(&dual_left(p.circ(), &x).apply(&eta), &dual_left(p.circ(), &y).apply(&xi)),
            );
            for (k, c) in join(p_part, q_part).into_iter().enumerate() {
                bracket.set(a, b, k, c);
            }
        }
    }
    PoissonAlgebra::from_parts(dot, bracket)
}

/// Compatible products, then the factorizable r, the bialgebra `(P, P*_r)`, its double,
/// and the sub-adjacent Poisson algebra with the standard form. The result is
/// compared with the displayed formulas and checked as a phase space.
pub fn phase_space_from_rb_symplectic(
    q: &RBSymplecticPoisson,
) -> Result<(PoissonAlgebra, BilinearForm, SplitDecoration)> {
    if q.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let qr = rb_pre_poisson_from_rb_symplectic(q)?;
    let rm = factorizable_from_quadratic_rb(&qr)?;
    let bialg = coboundary_bialgebra(&rm)?;
    let (double, w, split) = crate::bialgebra::double_of_bialgebra(&bialg)?;
    let big = sub_adjacent(&double)?;
    let shown = rb_phase_space_displayed(&qr.algebra, &induced_products_r(&rm));
    if shown != big {
        return Err(Error::InvalidInput(
            "composed phase space disagrees with the displayed products".into(),
        ));
    }
    if !is_phase_space(&big, &split, &w)?.passed() {
        return Err(Error::InvalidInput("constructed algebra is not a phase space".into()));
    }
    debug_assert_eq!(w, standard_omega(q.algebra.dim()));
    Ok((big, w, split))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::int;

    fn projection_p(n: usize) -> LinearMap {
        Matrix::from_fn(2 * n, 2 * n, |i, j| if i == j && i < n { int(1) } else { Scalar::zero() })
    }

    #[test]
    fn trivial_operators_pass() {
        for (_, p) in catalog::algebras() {
            let n = p.dim();
            let pp = sub_adjacent(&p).unwrap();
            for l in [0, 1, -2] {
                let l = int(l);
                let zero = Matrix::zeros(n, n);
                let neg = Matrix::scalar(n, &-&l);
                for b in [&zero, &neg] {
                    assert!(is_rb_pre_poisson(&p, b, &l).unwrap().passed());
                    assert!(is_rb_poisson(&pp, b, &l).unwrap().passed());
                }
                let d = descendent(&p, &neg, &l).unwrap();
                assert_eq!(d.star(), &p.star().scaled(&-&l));
                assert_eq!(descendent(&p, &zero, &l).unwrap().star(), &p.star().scaled(&l));
            }
        }
    }

    #[test]
    fn weight_zero_poisson_example() {
        let p = PoissonAlgebra::from_parts(MultTable::from_entries(2, &[(0, 0, 1, 2)]), MultTable::zeros(2));
        let b = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        assert!(is_rb_poisson(&p, &b, &Scalar::zero()).unwrap().passed());
        let bad = Matrix::from_ints(&[&[1, 0], &[1, 0]]);
        assert!(!is_rb_poisson(&p, &bad, &Scalar::zero()).unwrap().passed());
        assert!(is_rb_poisson(&p, &Matrix::zeros(3, 3), &Scalar::zero()).is_err());
    }

    #[test]
    fn example_on_the_zero_double() {
        let (rm, q) = catalog::example_bundle("double-zero1", 1).unwrap();
        assert_eq!(q.b, Matrix::from_ints(&[&[-1, 0], &[0, 0]]));
        assert_eq!(q.omega, Matrix::from_ints(&[&[0, -1], &[1, 0]]));
        assert!(is_quadratic_rb(&q).unwrap().passed());
        let t = tilde_rb(&q.b, &q.weight);
        assert_eq!(t, Matrix::from_ints(&[&[0, 0], &[0, -1]]));
        assert_eq!(factorizable_from_quadratic_rb(&q).unwrap(), rm);
    }

    #[test]
    fn example_operator_on_doubles() {
        for (name, rm) in catalog::doubles() {
            let n = rm.dim() / 2;
            for l in [1, 2, 3] {
                let q = quadratic_rb_from_factorizable(&rm, &int(l)).unwrap();
                assert_eq!(q.b, projection_p(n).scaled(&int(-l)), "{name}");
                assert_eq!(q.omega, standard_omega(n), "{name}");
                assert!(is_rb_pre_poisson(rm.algebra(), &q.b, &int(l)).unwrap().passed());
                let r_plus_form = (&crate::yang_baxter::r_plus(&rm) * &invert_matrix(&i_map(&rm)).unwrap()).scaled(&int(-l));
                assert_eq!(tilde_rb(&q.b, &q.weight), r_plus_form, "{name}");
                assert!(iso_check_descendent(&rm, &q).unwrap().passed(), "{name} {l}");
            }
        }
    }

    #[test]
    fn tilde_is_an_involution() {
        let b = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let l = int(5);
        assert_eq!(tilde_rb(&tilde_rb(&b, &l), &l), b);
        assert_eq!(tilde_rb(&Matrix::zeros(2, 2), &l), Matrix::scalar(2, &int(-5)));
    }

    #[test]
    fn zero_weight_is_rejected() {
        let (rm, q) = catalog::example_bundle("double-z2", 1).unwrap();
        assert_eq!(quadratic_rb_from_factorizable(&rm, &Scalar::zero()), Err(Error::ZeroWeight));
        let q0 = QuadraticRBPrePoisson { weight: Scalar::zero(), ..q.clone() };
        assert_eq!(factorizable_from_quadratic_rb(&q0), Err(Error::ZeroWeight));
        assert_eq!(iso_check_descendent(&rm, &q0).unwrap_err(), Error::ZeroWeight);
    }

    #[test]
    fn mutations_are_detected() {
        let (rm, q) = catalog::example_bundle("double-z2", 1).unwrap();
        let mut w = q.omega.clone();
        w.set(2, 3, int(1));
        w.set(3, 2, int(-1));
        let scaled = QuadraticRBPrePoisson { omega: w, ..q.clone() };
        let rep = is_quadratic_rb(&scaled).unwrap();
        assert!(rep.fails("rb-form"), "{rep}");

        let mut b = q.b.clone();
        b.set(0, 0, int(0));
        let bent = QuadraticRBPrePoisson { b, ..q.clone() };
        assert!(is_quadratic_rb(&bent).unwrap().fails("rb/rb-star"));
        assert!(!iso_check_descendent(&rm, &bent).unwrap().passed());
        assert_eq!(factorizable_from_quadratic_rb(&bent), Err(Error::NotQuadraticRB));

        let s = rb_symplectic_from_quadratic_rb(&q).unwrap();
        let mut b = s.b.clone();
        b.set(0, 1, int(1));
        let broken = RBSymplecticPoisson { b, ..s };
        assert!(!is_rb_symplectic_poisson(&broken).unwrap().passed());
        assert_eq!(rb_pre_poisson_from_rb_symplectic(&broken), Err(Error::NotRBSymplectic));
    }

    #[test]
    fn symplectic_roundtrip() {
        for (name, rm) in catalog::doubles() {
            let q = quadratic_rb_from_factorizable(&rm, &int(2)).unwrap();
            let s = rb_symplectic_from_quadratic_rb(&q).unwrap();
            assert!(is_rb_symplectic_poisson(&s).unwrap().passed(), "{name}");
            assert_eq!(rb_pre_poisson_from_rb_symplectic(&s).unwrap(), q, "{name}");
        }
    }

    #[test]
    fn zero_dual_products_give_the_semidirect_phase_space() {
        let (_, q) = catalog::example_bundle("double-zero1", 1).unwrap();
        let s = rb_symplectic_from_quadratic_rb(&q).unwrap();
        let (big, w, _) = phase_space_from_rb_symplectic(&s).unwrap();
        let (semi, w2) = crate::geometry::phase_space(&q.algebra).unwrap();
        assert_eq!((big, w), (semi, w2));
    }
}
