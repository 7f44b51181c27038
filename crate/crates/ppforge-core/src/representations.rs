//! Representations, actions, semidirect products and relative Rota–Baxter
//! operators.
//!
//! Every map is stored as one `dim_v x dim_v` matrix per basis element of the
//! acting algebra. Dual spaces use `e_i*` identified with `e_i`, so a starred
//! operator is `A* = -A^T`.

use num::Zero;

use crate::algebras::{MultTable, PoissonAlgebra, PrePoissonAlgebra};
use crate::error::{dim_err, Error, Result};
use crate::linalg::{basis_vec, vec_add, vec_sub, LinearMap, Matrix, Scalar, Vector};
use crate::report::{CheckReport, Checker};

/// `sum_i x_i maps[i]`
pub fn eval_op(maps: &[Matrix], dim_v: usize, x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(dim_v, dim_v);
    for (m, xi) in maps.iter().zip(x) {
        if xi.is_zero() {
            continue;
        }
        out = &out + &m.scaled(xi);
    }
    out
}

fn check_maps(name: &str, maps: &[Matrix], n: usize, dim_v: usize) -> Result<()> {
    if maps.len() != n {
        return Err(dim_err(format!("{name} has {} matrices, expected {n}", maps.len())));
    }
    for (i, m) in maps.iter().enumerate() {
        if m.rows() != dim_v || m.cols() != dim_v {
            return Err(dim_err(format!(
                "{name}(e{}) is {}x{}, expected {dim_v}x{dim_v}",
                i + 1,
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(())
}

fn starred_transpose(maps: &[Matrix]) -> Vec<Matrix> {
    maps.iter().map(Matrix::transpose).collect()
}

/// Lie part `varrho` and associative part `varsigma` on a space of dimension `dim_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonRep {
    algebra: PoissonAlgebra,
    dim_v: usize,
    varrho: Vec<Matrix>,
    varsigma: Vec<Matrix>,
}

impl PoissonRep {
    /// Shapes are validated; the representation laws are not.
    pub fn new(algebra: PoissonAlgebra, dim_v: usize, varrho: Vec<Matrix>, varsigma: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        check_maps("varrho", &varrho, n, dim_v)?;
        check_maps("varsigma", &varsigma, n, dim_v)?;
        Ok(PoissonRep {
            algebra,
            dim_v,
            varrho,
            varsigma,
        })
    }

    pub fn algebra(&self) -> &PoissonAlgebra {
        &self.algebra
    }
    pub fn dim_v(&self) -> usize {
        self.dim_v
    }
    pub fn varrho(&self) -> &[Matrix] {
        &self.varrho
    }
    pub fn varsigma(&self) -> &[Matrix] {
        &self.varsigma
    }
}

pub fn is_poisson_rep(r: &PoissonRep) -> CheckReport {
    let p = &r.algebra;
    let n = p.dim();
    let dv = r.dim_v;
    let vr = |x: &[Scalar]| eval_op(&r.varrho, dv, x);
    let vs = |x: &[Scalar]| eval_op(&r.varsigma, dv, x);
    let mut ck = Checker::full();
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&r.varrho[i], &r.varrho[j]);
            let (s, t) = (&r.varsigma[i], &r.varsigma[j]);
            let br = p.bracket().basis_product(i, j);
            let dt = p.dot().basis_product(i, j);
            ck.eq(
                "lie-rep",
                &[i, j],
                vr(br).entries().to_vec(),
                (&(a * b) - &(b * a)).entries().to_vec(),
            );
            ck.eq("assoc-rep", &[i, j], vs(dt).entries().to_vec(), (s * t).entries().to_vec());
            ck.eq(
                "poisson-rep-1",
                &[i, j],
                vr(dt).entries().to_vec(),
                (&(t * a) + &(s * b)).entries().to_vec(),
            );
            ck.eq(
                "poisson-rep-2",
                &[i, j],
                vs(br).entries().to_vec(),
                (&(a * t) - &(t * a)).entries().to_vec(),
            );
        }
    }
    ck.finish()
}

/// `(rho, mu)` Zinbiel part and `(theta, gamma)` pre-Lie part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrePoissonRep {
    algebra: PrePoissonAlgebra,
    dim_v: usize,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
    theta: Vec<Matrix>,
    gamma: Vec<Matrix>,
}

impl PrePoissonRep {
    /// Shapes are validated; the representation laws are not.
    pub fn new(
        algebra: PrePoissonAlgebra,
        dim_v: usize,
        rho: Vec<Matrix>,
        mu: Vec<Matrix>,
        theta: Vec<Matrix>,
        gamma: Vec<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        check_maps("rho", &rho, n, dim_v)?;
        check_maps("mu", &mu, n, dim_v)?;
        check_maps("theta", &theta, n, dim_v)?;
        check_maps("gamma", &gamma, n, dim_v)?;
        Ok(PrePoissonRep {
            algebra,
            dim_v,
            rho,
            mu,
            theta,
            gamma,
        })
    }

    pub fn algebra(&self) -> &PrePoissonAlgebra {
        &self.algebra
    }
    pub fn dim_v(&self) -> usize {
        self.dim_v
    }
    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }
    pub fn mu(&self) -> &[Matrix] {
        &self.mu
    }
    pub fn theta(&self) -> &[Matrix] {
        &self.theta
    }
    pub fn gamma(&self) -> &[Matrix] {
        &self.gamma
    }

    pub fn rho_at(&self, x: &[Scalar]) -> Matrix {
        eval_op(&self.rho, self.dim_v, x)
    }
    pub fn mu_at(&self, x: &[Scalar]) -> Matrix {
        eval_op(&self.mu, self.dim_v, x)
    }
    pub fn theta_at(&self, x: &[Scalar]) -> Matrix {
        eval_op(&self.theta, self.dim_v, x)
    }
    pub fn gamma_at(&self, x: &[Scalar]) -> Matrix {
        eval_op(&self.gamma, self.dim_v, x)
    }
}

fn ent(m: Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

pub fn is_pre_poisson_rep(r: &PrePoissonRep) -> CheckReport {
    let p = &r.algebra;
    let (star, circ) = (p.star(), p.circ());
    let n = p.dim();
    let mut ck = Checker::full();
    for i in 0..n {
        for j in 0..n {
            let (rx, ry) = (&r.rho[i], &r.rho[j]);
            let (mx, my) = (&r.mu[i], &r.mu[j]);
            let (tx, ty) = (&r.theta[i], &r.theta[j]);
            let (gx, gy) = (&r.gamma[i], &r.gamma[j]);
            let xs_y = star.basis_product(i, j);
            let ys_x = star.basis_product(j, i);
            let xc_y = circ.basis_product(i, j);
            let yc_x = circ.basis_product(j, i);
            let sym = vec_add(xs_y, ys_x);
            let br = vec_sub(xc_y, yc_x);
            let idx = [i, j];

            ck.eq("zinbiel-rep-1", &idx, ent(rx * ry), ent(r.rho_at(&sym)));
            ck.eq("zinbiel-rep-2", &idx, ent(rx * my), ent(r.mu_at(xs_y)));
            ck.eq("zinbiel-rep-3", &idx, ent(r.mu_at(xs_y)), ent(&(my * rx) + &(my * mx)));

            ck.eq("pre-lie-rep-1", &idx, ent(r.theta_at(&br)), ent(&(tx * ty) - &(ty * tx)));
            ck.eq(
                "pre-lie-rep-2",
                &idx,
                ent(&(tx * gy) - &(gy * tx)),
                ent(&r.gamma_at(xc_y) - &(gy * gx)),
            );

            ck.eq("rep-1", &idx, ent(r.rho_at(&br)), ent(&(tx * ry) - &(ry * tx)));
            ck.eq(
                "rep-2",
                &idx,
                ent(r.mu_at(xc_y)),
                ent(&(&(my * gx) - &(my * tx)) + &(tx * my)),
            );
            ck.eq(
                "rep-3",
                &idx,
                ent(r.mu_at(xc_y)),
                ent(&(&(gy * rx) + &(gy * mx)) - &(rx * gy)),
            );
            ck.eq("rep-4", &idx, ent(r.theta_at(&sym)), ent(&(rx * ty) + &(ry * tx)));
            ck.eq(
                "rep-5",
                &idx,
                ent(r.gamma_at(xs_y)),
                ent(&(&(rx * gy) + &(my * gx)) - &(my * tx)),
            );
        }
    }
    ck.finish()
}

fn ensure_rep(r: &PrePoissonRep) -> Result<()> {
    let report = is_pre_poisson_rep(r);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "not a representation: {}",
            report.violations()[0]
        )))
    }
}

/// `(L_*, R_*, L_o, R_o)` on `P` itself.
pub fn regular_rep(p: &PrePoissonAlgebra) -> Result<PrePoissonRep> {
    p.ensure_valid()?;
    let n = p.dim();
    Ok(PrePoissonRep {
        algebra: p.clone(),
        dim_v: n,
        rho: (0..n).map(|i| p.star().left_basis(i)).collect(),
        mu: (0..n).map(|i| p.star().right_basis(i)).collect(),
        theta: (0..n).map(|i| p.circ().left_basis(i)).collect(),
        gamma: (0..n).map(|i| p.circ().right_basis(i)).collect(),
    })
}

/// `(-rho* - mu*, mu*, theta* - gamma*, -gamma*)` on `V*`.
pub fn dual_rep(r: &PrePoissonRep) -> Result<PrePoissonRep> {
    ensure_rep(r)?;
    let rt = starred_transpose(&r.rho);
    let mt = starred_transpose(&r.mu);
    let tt = starred_transpose(&r.theta);
    let gt = starred_transpose(&r.gamma);
    Ok(PrePoissonRep {
        algebra: r.algebra.clone(),
        dim_v: r.dim_v,
        rho: rt.iter().zip(&mt).map(|(a, b)| a + b).collect(),
        mu: mt.iter().map(|a| -a).collect(),
        theta: tt.iter().zip(&gt).map(|(a, b)| b - a).collect(),
        gamma: gt,
    })
}

/// Matrix of the starred left or right multiplication by `e_i`, built from
/// the pairing `<A*(x) xi, y> = -<xi, A(x) y>`.
pub(crate) fn starred_left(t: &MultTable, i: usize) -> Matrix {
    let n = t.dim();
    Matrix::from_fn(n, n, |a, b| -t.get(i, a, b))
}

pub(crate) fn starred_right(t: &MultTable, j: usize) -> Matrix {
    let n = t.dim();
    Matrix::from_fn(n, n, |a, b| -t.get(a, j, b))
}

/// `(-L_*^* - R_*^*, R_*^*, L_o^* - R_o^*, -R_o^*)` on `P*`.
pub fn coregular_rep(p: &PrePoissonAlgebra) -> Result<PrePoissonRep> {
    p.ensure_valid()?;
    let n = p.dim();
    let (star, circ) = (p.star(), p.circ());
    Ok(PrePoissonRep {
        algebra: p.clone(),
        dim_v: n,
        rho: (0..n)
            .map(|i| -&(&starred_left(star, i) + &starred_right(star, i)))
            .collect(),
        mu: (0..n).map(|i| starred_right(star, i)).collect(),
        theta: (0..n)
            .map(|i| &starred_left(circ, i) - &starred_right(circ, i))
            .collect(),
        gamma: (0..n).map(|i| -&starred_right(circ, i)).collect(),
    })
}

/// `P ⋉ V` with `(x+u).(y+v) = x.y + s(x)v + s(y)u` and
/// `{x+u, y+v} = {x,y} + r(x)v - r(y)u`.
pub fn semidirect_poisson(p: &PoissonAlgebra, r: &PoissonRep) -> Result<PoissonAlgebra> {
    p.ensure_valid()?;
    if r.algebra != *p {
        return Err(Error::InvalidInput("representation is attached to a different algebra".into()));
    }
    let report = is_poisson_rep(r);
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "not a representation: {}",
            report.violations()[0]
        )));
    }
    let n = p.dim();
    let m = r.dim_v;
    let d = n + m;
    let mut dot = MultTable::zeros(d);
    let mut bracket = MultTable::zeros(d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                dot.set(i, j, k, p.dot().get(i, j, k).clone());
                bracket.set(i, j, k, p.bracket().get(i, j, k).clone());
            }
        }
        for b in 0..m {
            for k in 0..m {
                let s = r.varsigma[i].get(k, b);
                let q = r.varrho[i].get(k, b);
                dot.set(i, n + b, n + k, s.clone());
                dot.set(n + b, i, n + k, s.clone());
                bracket.set(i, n + b, n + k, q.clone());
                bracket.set(n + b, i, n + k, -q);
            }
        }
    }
    Ok(PoissonAlgebra::from_parts(dot, bracket))
}

/// Structure constants on `P ⊕ Q` (P first) for
/// `(x+u)*(y+v) = x*y + rho'(u)y + mu'(v)x + u*v + rho(x)v + mu(y)u`
/// and the analogous `o` with `theta, gamma`. `on_q` is a rep of `P` on `Q`,
/// `on_p` an optional rep of `Q` on `P`.
pub(crate) fn matched_sum(
    p: &PrePoissonAlgebra,
    q: &PrePoissonAlgebra,
    on_q: &PrePoissonRep,
    on_p: Option<&PrePoissonRep>,
) -> PrePoissonAlgebra {
    let n = p.dim();
    let m = q.dim();
    let d = n + m;
    let mut star = MultTable::zeros(d);
    let mut circ = MultTable::zeros(d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                star.set(i, j, k, p.star().get(i, j, k).clone());
                circ.set(i, j, k, p.circ().get(i, j, k).clone());
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for k in 0..m {
                star.set(n + a, n + b, n + k, q.star().get(a, b, k).clone());
                circ.set(n + a, n + b, n + k, q.circ().get(a, b, k).clone());
            }
        }
    }
    // x in P, u in Q
    for i in 0..n {
        for a in 0..m {
            for k in 0..m {
                // e_i * f_a = rho(e_i) f_a + ..., f_a * e_i = mu(e_i) f_a + ...
                star.add_at(i, n + a, n + k, on_q.rho[i].get(k, a));
                star.add_at(n + a, i, n + k, on_q.mu[i].get(k, a));
                circ.add_at(i, n + a, n + k, on_q.theta[i].get(k, a));
                circ.add_at(n + a, i, n + k, on_q.gamma[i].get(k, a));
            }
            if let Some(op) = on_p {
                for k in 0..n {
                    // f_a * e_i = rho'(f_a) e_i + ..., e_i * f_a = mu'(f_a) e_i + ...
                    star.add_at(n + a, i, k, op.rho[a].get(k, i));
                    star.add_at(i, n + a, k, op.mu[a].get(k, i));
                    circ.add_at(n + a, i, k, op.theta[a].get(k, i));
                    circ.add_at(i, n + a, k, op.gamma[a].get(k, i));
                }
            }
        }
    }
    PrePoissonAlgebra::from_parts(star, circ)
}

/// `P ⋉ V` with `(x+u)*(y+v) = x*y + rho(x)v + mu(y)u` and the analogous `o`.
pub fn semidirect_pre_poisson(p: &PrePoissonAlgebra, r: &PrePoissonRep) -> Result<PrePoissonAlgebra> {
    p.ensure_valid()?;
    if r.algebra != *p {
        return Err(Error::InvalidInput("representation is attached to a different algebra".into()));
    }
    ensure_rep(r)?;
    Ok(semidirect_unchecked(r))
}

/// The semidirect tables for any shapes; used to test the representation
/// criterion from the other side.
pub fn semidirect_unchecked(r: &PrePoissonRep) -> PrePoissonAlgebra {
    matched_sum(&r.algebra, &PrePoissonAlgebra::zero(r.dim_v), r, None)
}

/// An action of `source` on the pre-Poisson algebra `target` by a
/// representation on the underlying space of `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    rep: PrePoissonRep,
    target: PrePoissonAlgebra,
}

impl Action {
    pub fn new(rep: PrePoissonRep, target: PrePoissonAlgebra) -> Result<Self> {
        if rep.dim_v != target.dim() {
            return Err(dim_err(format!(
                "representation space has dimension {} but target has {}",
                rep.dim_v,
                target.dim()
            )));
        }
        Ok(Action { rep, target })
    }

    /// The action of `p` on itself by `(L_*, R_*, L_o, R_o)`.
    pub fn regular(p: &PrePoissonAlgebra) -> Result<Self> {
        Ok(Action {
            rep: regular_rep(p)?,
            target: p.clone(),
        })
    }

    pub fn source(&self) -> &PrePoissonAlgebra {
        &self.rep.algebra
    }
    pub fn target(&self) -> &PrePoissonAlgebra {
        &self.target
    }
    pub fn rep(&self) -> &PrePoissonRep {
        &self.rep
    }
}

pub fn is_action(a: &Action) -> CheckReport {
    let mut report = is_pre_poisson_rep(&a.rep);
    let q = &a.target;
    let (qs, qc) = (q.star(), q.circ());
    let r = &a.rep;
    let n = r.algebra.dim();
    let m = q.dim();
    let f: Vec<Vector> = (0..m).map(|i| basis_vec(m, i)).collect();
    let mut ck = Checker::full();
    for i in 0..n {
        let (rho, mu, th, ga) = (&r.rho[i], &r.mu[i], &r.theta[i], &r.gamma[i]);
        for ua in 0..m {
            let u = &f[ua];
            let (rho_u, mu_u, th_u, ga_u) = (rho.apply(u), mu.apply(u), th.apply(u), ga.apply(u));
            for vb in 0..m {
                let v = &f[vb];
                let (rho_v, mu_v, th_v, ga_v) = (rho.apply(v), mu.apply(v), th.apply(v), ga.apply(v));
                let us_v = qs.basis_product(ua, vb);
                let vs_u = qs.basis_product(vb, ua);
                let uc_v = qc.basis_product(ua, vb);
                let vc_u = qc.basis_product(vb, ua);
                let idx = [i, ua, vb];

                ck.eq(
                    "action-1",
                    &idx,
                    qs.mul(u, &mu_v),
                    mu.apply(&vec_add(us_v, vs_u)),
                );
                ck.eq(
                    "action-2",
                    &idx,
                    qs.mul(u, &rho_v),
                    qs.mul(&vec_add(&mu_u, &rho_u), v),
                );
                ck.eq(
                    "action-3",
                    &idx,
                    rho.apply(us_v),
                    qs.mul(&vec_add(&mu_u, &rho_u), v),
                );
                ck.eq(
                    "action-4",
                    &idx,
                    th.apply(uc_v),
                    vec_sub(&vec_add(&qc.mul(&th_u, v), &qc.mul(u, &th_v)), &qc.mul(&ga_u, v)),
                );
                ck.eq(
                    "action-5",
                    &idx,
                    ga.apply(uc_v),
                    vec_add(&vec_sub(&qc.mul(u, &ga_v), &qc.mul(v, &ga_u)), &ga.apply(vc_u)),
                );
                ck.eq(
                    "action-6",
                    &idx,
                    mu.apply(&vec_sub(uc_v, vc_u)),
                    vec_sub(&qc.mul(u, &mu_v), &qs.mul(v, &ga_u)),
                );
                ck.eq(
                    "action-7",
                    &idx,
                    th.apply(us_v),
                    vec_add(&qs.mul(&vec_sub(&th_u, &ga_u), v), &qs.mul(u, &th_v)),
                );
                ck.eq(
                    "action-8",
                    &idx,
                    rho.apply(uc_v),
                    vec_add(&qs.mul(&vec_sub(&th_u, &ga_u), v), &qc.mul(u, &rho_v)),
                );
                ck.eq(
                    "action-9",
                    &idx,
                    ga.apply(&vec_add(us_v, vs_u)),
                    vec_add(&qs.mul(u, &ga_v), &qs.mul(v, &ga_u)),
                );
                ck.eq(
                    "action-10",
                    &idx,
                    rho.apply(uc_v),
                    vec_sub(&qc.mul(&vec_add(&rho_u, &mu_u), v), &qs.mul(u, &th_v)),
                );
            }
        }
    }
    report.merge(ck.finish());
    report
}

/// `(Tu)*(Tv) = T(rho(Tu)v + mu(Tv)u + lambda u*v)` and the `o` analogue
/// with `theta, gamma`, for all basis `u, v` of the target.
pub fn is_relative_rb(t: &LinearMap, lambda: &Scalar, a: &Action) -> Result<CheckReport> {
    let n = a.rep.algebra.dim();
    let m = a.target.dim();
    if t.rows() != n || t.cols() != m {
        return Err(dim_err(format!("operator is {}x{}, expected {n}x{m}", t.rows(), t.cols())));
    }
    let p = &a.rep.algebra;
    let q = &a.target;
    let r = &a.rep;
    let images: Vec<Vector> = (0..m).map(|u| t.column(u)).collect();
    let mut ck = Checker::full();
    for u in 0..m {
        let tu = &images[u];
        let (rho_tu, theta_tu) = (r.rho_at(tu), r.theta_at(tu));
        for v in 0..m {
            let tv = &images[v];
            let (mu_tv, gamma_tv) = (r.mu_at(tv), r.gamma_at(tv));
            let eu = basis_vec(m, u);
            let ev = basis_vec(m, v);

            let inner = vec_add(
                &vec_add(&rho_tu.apply(&ev), &mu_tv.apply(&eu)),
                &q.star().basis_product(u, v).iter().map(|c| c * lambda).collect::<Vec<_>>(),
            );
            ck.eq("rrb-star", &[u, v], p.star().mul(tu, tv), t.apply(&inner));

            let inner = vec_add(
                &vec_add(&theta_tu.apply(&ev), &gamma_tv.apply(&eu)),
                &q.circ().basis_product(u, v).iter().map(|c| c * lambda).collect::<Vec<_>>(),
            );
            ck.eq("rrb-circ", &[u, v], p.circ().mul(tu, tv), t.apply(&inner));
        }
    }
    Ok(ck.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{is_poisson, is_pre_poisson};
    use crate::linalg::int;

    fn z2() -> PrePoissonAlgebra {
        PrePoissonAlgebra::new(MultTable::from_entries(2, &[(0, 0, 1, 1)]), MultTable::zeros(2)).unwrap()
    }

    fn pl2() -> PrePoissonAlgebra {
        PrePoissonAlgebra::new(MultTable::zeros(2), MultTable::from_entries(2, &[(0, 1, 1, 1)])).unwrap()
    }

    #[test]
    fn regular_reps() {
        for p in [z2(), pl2(), PrePoissonAlgebra::zero(2)] {
            let r = regular_rep(&p).unwrap();
            assert!(is_pre_poisson_rep(&r).passed());
        }
        let r = regular_rep(&z2()).unwrap();
        assert_eq!(r.rho()[0], Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        assert!(r.rho()[1].is_zero());
        let r = regular_rep(&pl2()).unwrap();
        assert_eq!(r.theta()[0], Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert_eq!(r.gamma()[1], Matrix::from_ints(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn swapped_regular_rep_fails() {
        let r = regular_rep(&z2()).unwrap();
        let bad = PrePoissonRep::new(
            z2(),
            2,
            r.mu().to_vec(),
            r.rho().to_vec(),
            r.theta().to_vec(),
            r.gamma().to_vec(),
        )
        .unwrap();
        // L = R on Z2, so the swap is invisible; give e2 a nonzero theta instead
        assert!(is_pre_poisson_rep(&bad).passed());
        let twisted = PrePoissonRep::new(
            z2(),
            2,
            r.rho().to_vec(),
            r.mu().to_vec(),
            vec![Matrix::zeros(2, 2), Matrix::identity(2)],
            r.gamma().to_vec(),
        )
        .unwrap();
        assert!(is_pre_poisson_rep(&twisted).fails("rep-4"));
    }

    #[test]
    fn zero_rep_on_nonzero_algebra() {
        let z = vec![Matrix::zeros(3, 3); 2];
        let r = PrePoissonRep::new(z2(), 3, z.clone(), z.clone(), z.clone(), z).unwrap();
        assert!(is_pre_poisson_rep(&r).passed());
        assert_eq!(dual_rep(&r).unwrap(), r);
    }

    #[test]
    fn coregular_is_dual_of_regular() {
        for p in [z2(), pl2()] {
            let reg = regular_rep(&p).unwrap();
            let co = coregular_rep(&p).unwrap();
            assert_eq!(dual_rep(&reg).unwrap(), co);
            assert!(is_pre_poisson_rep(&co).passed());
            assert_eq!(dual_rep(&co).unwrap(), reg);
        }
        // <L_*^*(e1) e2*, e1> = -<e2*, e1*e1> = -1
        let l = starred_left(z2().star(), 0);
        assert_eq!(l.get(0, 1), &int(-1));
    }

    #[test]
    fn semidirect_products() {
        for p in [z2(), pl2()] {
            let s = semidirect_pre_poisson(&p, &regular_rep(&p).unwrap()).unwrap();
            assert_eq!(s.dim(), 4);
            assert!(s.check().passed());
            let s = semidirect_pre_poisson(&p, &coregular_rep(&p).unwrap()).unwrap();
            assert!(s.check().passed());
        }
        let q = PoissonAlgebra::new(MultTable::from_entries(2, &[(0, 0, 1, 2)]), MultTable::zeros(2)).unwrap();
        let r = PoissonRep::new(q.clone(), 0, vec![Matrix::zeros(0, 0); 2], vec![Matrix::zeros(0, 0); 2]).unwrap();
        assert_eq!(semidirect_poisson(&q, &r).unwrap(), q);
        let sigma = (0..2).map(|i| q.dot().left_basis(i)).collect();
        let r = PoissonRep::new(q.clone(), 2, vec![Matrix::zeros(2, 2); 2], sigma).unwrap();
        assert!(is_poisson_rep(&r).passed());
        let s = semidirect_poisson(&q, &r).unwrap();
        assert!(is_poisson(s.dot(), s.bracket()).unwrap().passed());
        let bad = PoissonRep::new(q.clone(), 2, vec![Matrix::zeros(2, 2); 2], vec![Matrix::identity(2); 2]).unwrap();
        assert!(is_poisson_rep(&bad).fails("assoc-rep"));
    }

    #[test]
    fn semidirect_criterion_detects_bad_rep() {
        let r = regular_rep(&z2()).unwrap();
        let bad = PrePoissonRep::new(
            z2(),
            2,
            r.rho().to_vec(),
            r.mu().to_vec(),
            vec![Matrix::zeros(2, 2), Matrix::identity(2)],
            r.gamma().to_vec(),
        )
        .unwrap();
        let s = semidirect_unchecked(&bad);
        assert!(!is_pre_poisson(s.star(), s.circ()).unwrap().passed());
        assert!(semidirect_pre_poisson(&z2(), &bad).is_err());
    }

    #[test]
    fn regular_action_passes() {
        for p in [z2(), pl2(), PrePoissonAlgebra::zero(1)] {
            assert!(is_action(&Action::regular(&p).unwrap()).passed());
        }
    }

    #[test]
    fn relative_rb_basics() {
        let a = Action::regular(&z2()).unwrap();
        assert!(is_relative_rb(&Matrix::zeros(2, 2), &int(5), &a).unwrap().passed());
        let b = Matrix::scalar(2, &int(-3));
        assert!(is_relative_rb(&b, &int(3), &a).unwrap().passed());
        assert!(!is_relative_rb(&Matrix::identity(2), &int(0), &a).unwrap().passed());
        assert!(is_relative_rb(&Matrix::zeros(3, 2), &int(0), &a).is_err());
    }
}
