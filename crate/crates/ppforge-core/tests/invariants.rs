use ppforge_core::algebras::{is_poisson, sub_adjacent};
use ppforge_core::bialgebra::double_of_bialgebra;
use ppforge_core::geometry::{compatible_pre_poisson, is_phase_space, is_symplectic_poisson, phase_space};
use ppforge_core::linalg::{format_scalar, frac, int, invert_matrix, parse_scalar};
use ppforge_core::representations::{coregular_rep, dual_rep, is_pre_poisson_rep, is_relative_rb, regular_rep};
use ppforge_core::rota_baxter::{
    descendent_unchecked, factorizable_from_quadratic_rb, is_quadratic_rb, is_rb_pre_poisson,
    quadratic_rb_from_factorizable, tilde_rb,
};
use ppforge_core::yang_baxter::{canonical_double_r, s_equation, zinbiel_ybe};
use ppforge_core::{Action, Matrix, MultTable, PrePoissonAlgebra, PrePoissonBialgebra, RMatrix, SplitDecoration};
use proptest::prelude::*;

type Entry = (usize, usize, usize, i64);

fn table(n: usize, entries: &[Entry]) -> MultTable {
    let mut t = MultTable::zeros(n);
    for &(i, j, k, v) in entries {
        t.add_at(i % n, j % n, k % n, &int(v));
    }
    t
}

fn entries() -> impl Strategy<Value = Vec<Entry>> {
    prop::collection::vec((0..3usize, 0..3usize, 0..3usize, prop::sample::select(vec![-1i64, 1, 2])), 0..4)
}

/// Sparse random tables of dimension at most `max_dim`, kept when they are pre-Poisson.
fn pre_poisson(max_dim: usize) -> impl Strategy<Value = PrePoissonAlgebra> {
    (1..=max_dim, entries(), entries())
        .prop_filter_map("not pre-Poisson", |(n, s, c)| PrePoissonAlgebra::new(table(n, &s), table(n, &c)).ok())
}

fn scalar() -> impl Strategy<Value = ppforge_core::Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn nonzero_scalar() -> impl Strategy<Value = ppforge_core::Scalar> {
    (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        max_global_rejects: 100_000,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn sub_adjacent_is_poisson(p in pre_poisson(3)) {
        let pc = sub_adjacent(&p).unwrap();
        prop_assert!(is_poisson(pc.dot(), pc.bracket()).unwrap().passed());
    }

    #[test]
    fn dual_of_regular_is_coregular(p in pre_poisson(3)) {
        let d = dual_rep(&regular_rep(&p).unwrap()).unwrap();
        prop_assert!(is_pre_poisson_rep(&d).passed());
        prop_assert_eq!(d, coregular_rep(&p).unwrap());
    }

    #[test]
    fn phase_space_recovers_p(p in pre_poisson(3)) {
        let n = p.dim();
        let (big, w) = phase_space(&p).unwrap();
        prop_assert!(is_symplectic_poisson(&big, &w).unwrap().passed());
        prop_assert!(is_phase_space(&big, &SplitDecoration::halves(n), &w).unwrap().passed());
        prop_assert_eq!(compatible_pre_poisson(&big, &w).unwrap().restrict(0, n), p);
    }

    #[test]
    fn scalar_operators_are_rota_baxter(p in pre_poisson(3), l in nonzero_scalar()) {
        let n = p.dim();
        let zero = Matrix::zeros(n, n);
        prop_assert!(is_rb_pre_poisson(&p, &zero, &l).unwrap().passed());
        let minus = tilde_rb(&zero, &l);
        prop_assert!(is_rb_pre_poisson(&p, &minus, &l).unwrap().passed());
        let d = descendent_unchecked(&p, &zero, &l);
        prop_assert_eq!(d.star(), &p.star().scaled(&l));
        prop_assert_eq!(d.circ(), &p.circ().scaled(&l));
    }

    #[test]
    fn relative_rb_on_the_regular_action(
        p in pre_poisson(2),
        cells in prop::collection::vec(-1i64..=1, 4),
        l in prop::sample::select(vec![0i64, 1, -2]),
    ) {
        let n = p.dim();
        let b = Matrix::from_fn(n, n, |i, j| int(cells[i * 2 + j]));
        let l = int(l);
        let act = Action::regular(&p).unwrap();
        prop_assert_eq!(
            is_relative_rb(&b, &l, &act).unwrap().passed(),
            is_rb_pre_poisson(&p, &b, &l).unwrap().passed()
        );
    }

    #[test]
    fn tilde_is_an_involution(rows in prop::collection::vec(prop::collection::vec(scalar(), 3), 3), l in scalar()) {
        let b = Matrix::from_rows(rows).unwrap();
        prop_assert_eq!(tilde_rb(&tilde_rb(&b, &l), &l), b);
    }

    #[test]
    fn inverse_is_exact(rows in prop::collection::vec(prop::collection::vec(scalar(), 3), 3)) {
        let m = Matrix::from_rows(rows).unwrap();
        match invert_matrix(&m) {
            Ok(inv) => prop_assert_eq!(&m * &inv, Matrix::identity(3)),
            Err(_) => prop_assert_eq!(m.determinant().unwrap(), int(0)),
        }
    }

    #[test]
    fn scalars_roundtrip(s in scalar()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..config() })]

    #[test]
    fn doubles_of_trivial_bialgebras(p in pre_poisson(2), l in nonzero_scalar()) {
        let (d, _, split) = double_of_bialgebra(&PrePoissonBialgebra::trivial(p)).unwrap();
        let rm = RMatrix::new(d, canonical_double_r(split.dim_p)).unwrap();
        prop_assert!(zinbiel_ybe(&rm).is_zero());
        prop_assert!(s_equation(&rm).is_zero());
        let q = quadratic_rb_from_factorizable(&rm, &l).unwrap();
        prop_assert!(is_quadratic_rb(&q).unwrap().passed());
        prop_assert_eq!(factorizable_from_quadratic_rb(&q).unwrap(), rm);
    }
}
