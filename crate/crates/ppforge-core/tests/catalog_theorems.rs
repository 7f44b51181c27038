use ppforge_core::algebras::is_homomorphism;
use ppforge_core::catalog;
use ppforge_core::linalg::{int, invert_matrix};
use ppforge_core::representations::{coregular_rep, is_relative_rb, Action};
use ppforge_core::rota_baxter::*;
use ppforge_core::yang_baxter::*;

#[test]
fn canonical_r_solves_both_equations_on_doubles() {
    for (name, rm) in catalog::doubles() {
        let z = zinbiel_ybe(&rm);
        let s = s_equation(&rm);
        assert!(z.is_zero(), "{name}: Z(r) has {} nonzero entries", z.support());
        assert!(s.is_zero(), "{name}: S(r) has {} nonzero entries", s.support());
        let c = classify_r(&rm);
        assert!(c.factorizable, "{name}: {c:?}");
        assert!(invert_matrix(&i_map(&rm)).is_ok());
    }
}

#[test]
fn coboundary_conditions_agree_with_the_pin() {
    for (name, rm) in catalog::quasi_triangular() {
        let r = check_coboundary_conditions(&rm);
        assert!(r.passed(), "{name}: {r}");
        let lr = is_lr_invariant(&ppforge_core::RMatrix::new(rm.algebra().clone(), ppforge_core::linalg::skew_part(rm.r())).unwrap());
        assert!(lr.passed(), "{name}: {lr}");
    }
}

#[test]
fn quasi_triangular_gives_homomorphisms() {
    for (name, rm) in catalog::quasi_triangular() {
        let dual = induced_products_r(&rm);
        assert!(dual.check().passed(), "{name}");
        let p = rm.algebra();
        assert!(is_homomorphism(&r_plus(&rm), &dual, p).unwrap().passed(), "{name} r+");
        assert!(is_homomorphism(&r_minus(&rm), &dual, p).unwrap().passed(), "{name} r-");
    }
}

#[test]
fn r_plus_is_relative_rb_on_induced_plus() {
    for (name, rm) in catalog::quasi_triangular() {
        let plus = induced_plus(&rm).unwrap();
        let act = Action::new(coregular_rep(rm.algebra()).unwrap(), plus).unwrap();
        let r = is_relative_rb(&r_plus(&rm), &int(1), &act).unwrap();
        assert!(r.passed(), "{name}: {r}");
    }
}

#[test]
fn rb_roundtrip_on_doubles() {
    for (name, rm) in catalog::factorizable() {
        for l in [1, 2, -3] {
            let q = quadratic_rb_from_factorizable(&rm, &int(l)).unwrap();
            let rep = is_quadratic_rb(&q).unwrap();
            assert!(rep.passed(), "{name} {l}: {rep}");
            assert_eq!(&factorizable_from_quadratic_rb(&q).unwrap(), &rm, "{name} {l}");
            let t = QuadraticRBPrePoisson { b: tilde_rb(&q.b, &q.weight), ..q.clone() };
            assert!(is_quadratic_rb(&t).unwrap().passed(), "{name} {l} tilde");
            let iso = iso_check_descendent(&rm, &q).unwrap();
            assert!(iso.passed(), "{name} {l}: {iso}");
        }
    }
}

#[test]
fn rb_phase_space_pipeline() {
    for (name, rm) in catalog::factorizable() {
        let q = quadratic_rb_from_factorizable(&rm, &int(1)).unwrap();
        let s = rb_symplectic_from_quadratic_rb(&q).unwrap();
        let (big, _, split) = phase_space_from_rb_symplectic(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(big.dim(), 2 * rm.dim());
        assert_eq!(big.restrict(0, split.dim_p), s.algebra);
    }
}
