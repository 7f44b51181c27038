//! Small named instances used by the tests and the command-line tool.
//!
//! Indices are 0-based. Doubles use the block basis `e_1..e_n, f_1..f_n`.

use crate::algebras::{MultTable, PoissonAlgebra, PrePoissonAlgebra};
use crate::bialgebra::{double_of_bialgebra, dual_bialgebra, PrePoissonBialgebra};
use crate::linalg::{int, LinearMap, Matrix};
use crate::rota_baxter::{quadratic_rb_from_factorizable, QuadraticRBPrePoisson};
use crate::yang_baxter::{canonical_double_r, coboundary_bialgebra, RMatrix};

fn pre_poisson(dim: usize, star: &[(usize, usize, usize, i64)], circ: &[(usize, usize, usize, i64)]) -> PrePoissonAlgebra {
    PrePoissonAlgebra::new(MultTable::from_entries(dim, star), MultTable::from_entries(dim, circ))
        .expect("catalog algebra is pre-Poisson")
}

/// `e1 * e1 = e2`
pub fn z2() -> PrePoissonAlgebra {
    pre_poisson(2, &[(0, 0, 1, 1)], &[])
}

/// `e1 o e2 = e2`
pub fn pl2() -> PrePoissonAlgebra {
    pre_poisson(2, &[], &[(0, 1, 1, 1)])
}

/// `e1 * e1 = e2` with `e1 o e1 = e1`, `e1 o e2 = e2`, `e2 o e1 = e2`.
pub fn zp2() -> PrePoissonAlgebra {
    pre_poisson(2, &[(0, 0, 1, 1)], &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
}

/// `e1 * e1 = e2` with `e1 o e1 = e2`, `e1 o e3 = e3`.
pub fn h3() -> PrePoissonAlgebra {
    pre_poisson(3, &[(0, 0, 1, 1)], &[(0, 0, 1, 1), (0, 2, 2, 1)])
}

/// Named pre-Poisson algebras, excluding doubles.
pub fn algebras() -> Vec<(String, PrePoissonAlgebra)> {
    vec![
        ("zero1".into(), PrePoissonAlgebra::zero(1)),
        ("zero2".into(), PrePoissonAlgebra::zero(2)),
        ("z2".into(), z2()),
        ("pl2".into(), pl2()),
        ("zp2".into(), zp2()),
        ("h3".into(), h3()),
    ]
}

fn poisson(dim: usize, dot: &[(usize, usize, usize, i64)], bracket: &[(usize, usize, usize, i64)]) -> PoissonAlgebra {
    PoissonAlgebra::new(MultTable::from_entries(dim, dot), MultTable::from_entries(dim, bracket))
        .expect("catalog algebra is Poisson")
}

/// Poisson algebras with a Rota–Baxter operator of weight zero. Column `j` of `B` is `B(e_j)`.
pub fn rb0_pairs() -> Vec<(String, PoissonAlgebra, LinearMap)> {
    let z2c = poisson(2, &[(0, 0, 1, 2)], &[]);
    let h3c = poisson(3, &[(0, 0, 1, 2)], &[(0, 2, 2, 1), (2, 0, 2, -1)]);
    let aff = poisson(2, &[], &[(0, 1, 1, 1), (1, 0, 1, -1)]);
    vec![
        ("z2-sub".into(), z2c.clone(), Matrix::from_ints(&[&[0, 0], &[1, 0]])),
        (
            "h3-sub".into(),
            h3c,
            Matrix::from_ints(&[&[0, 0, 0], &[-1, -1, 0], &[-1, 0, 0]]),
        ),
        ("aff".into(), aff, Matrix::from_ints(&[&[-1, 0], &[0, 0]])),
        ("z2-zero".into(), z2c, Matrix::zeros(2, 2)),
    ]
}

/// Trivial bialgebras `(P, 0, 0)` on every catalog algebra, their duals, and the
/// coboundary bialgebra of the triangular `r = e2 ⊗ e2` on `Z2`.
pub fn bialgebras() -> Vec<(String, PrePoissonBialgebra)> {
    let mut out = Vec::new();
    for (name, p) in algebras() {
        let b = PrePoissonBialgebra::trivial(p);
        let d = dual_bialgebra(&b).expect("trivial bialgebra");
        out.push((format!("trivial-{name}"), b));
        out.push((format!("dual-{name}"), d));
    }
    let t = coboundary_bialgebra(&triangular_z2()).expect("square r");
    out.push(("coboundary-z2".into(), t));
    out
}

/// `r = e2 ⊗ e2` on `Z2`.
pub fn triangular_z2() -> RMatrix {
    let mut r = Matrix::zeros(2, 2);
    r.set(1, 1, int(1));
    RMatrix::new(z2(), r).expect("square r")
}

/// Canonical `r` on the double of every catalog bialgebra.
pub fn doubles() -> Vec<(String, RMatrix)> {
    bialgebras()
        .into_iter()
        .map(|(name, b)| {
            let (d, _, split) = double_of_bialgebra(&b).expect("catalog bialgebra");
            let rm = RMatrix::new(d, canonical_double_r(split.dim_p)).expect("square r");
            (format!("double-{}", name.trim_start_matches("trivial-")), rm)
        })
        .collect()
}

pub fn factorizable() -> Vec<(String, RMatrix)> {
    doubles()
}

pub fn quasi_triangular() -> Vec<(String, RMatrix)> {
    let mut out = doubles();
    out.push(("triangular-z2".into(), triangular_z2()));
    out
}

/// Quadratic Rota–Baxter data on a double with weight `lambda`.
pub fn example_bundle(name: &str, lambda: i64) -> Option<(RMatrix, QuadraticRBPrePoisson)> {
    let rm = doubles().into_iter().find(|(n, _)| n == name)?.1;
    let q = quadratic_rb_from_factorizable(&rm, &int(lambda)).ok()?;
    Some((rm, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rota_baxter::is_rb_poisson;
    use num::Zero;

    #[test]
    fn catalog_is_valid() {
        for (_, p) in algebras() {
            assert!(p.check().passed());
        }
        for (name, p, b) in rb0_pairs() {
            let r = is_rb_poisson(&p, &b, &crate::linalg::Scalar::zero()).unwrap();
            assert!(r.passed(), "{name}: {r}");
        }
        assert_eq!(doubles().len(), bialgebras().len());
        assert!(doubles().iter().all(|(_, rm)| rm.dim() <= 8));
    }
}
