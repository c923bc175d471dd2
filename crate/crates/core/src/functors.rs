//! Cohom, induction and restriction, the diagonal action, the hom identity,
//! semidirect induction, weight spaces, block decompositions and twists.
//!
//! `Hom(D (x) M, B)` has basis `d^i (x) m^a (x) b` at `(i * dim M + a) * dim B + b`.

use std::sync::Arc;

use crate::algebra::unit_vec;
use crate::certificate::Certificate;
use crate::comodcontra::{
    free_contramodule, hom_contra, is_morphism, restrict, Comodule, Contramodule, Side,
};
use crate::error::{Error, Result};
use crate::hopf::{
    constant_group_scheme, grouplike_elements, CoalgebraMorphism, CoalgebraSpec,
    GroupSchemeDescriptor, HopfAlgebraSpec, Provenance,
};
use crate::linalg::{tensor_permutation, Matrix, QuotientPresentation};
use crate::repthy::central_idempotents;

/// The two maps `Hom(D (x) M, B) -> Hom(M, B)` whose coequalizer is `Cohom_D(M, B)`:
/// precomposition with the coaction, and postcomposition with `theta_B`.
pub fn cohom_maps(m: &Comodule, b: &Contramodule) -> Result<(Matrix, Matrix)> {
    if m.side != Side::Left {
        return Err(Error::Input("Cohom takes a left comodule".into()));
    }
    if *m.over != *b.over {
        return Err(Error::CoalgebraMismatch("comodule and contramodule over different coalgebras".into()));
    }
    let p = b.characteristic();
    let n = m.over.dim();
    let (dm, db) = (m.dim, b.dim);
    let mut f1 = Matrix::zeros(p, dm * db, n * dm * db);
    let mut f2 = Matrix::zeros(p, dm * db, n * dm * db);
    for i in 0..n {
        for a in 0..dm {
            for x in 0..db {
                let col = (i * dm + a) * db + x;
                for c in 0..dm {
                    let l = m.coefficient(c, a, i);
                    if l != 0 {
                        f1.add_at(c * db + x, col, l);
                    }
                }
                for y in 0..db {
                    let t = b.theta[i].get(y, x);
                    if t != 0 {
                        f2.set(a * db + y, col, t);
                    }
                }
            }
        }
    }
    Ok((f1, f2))
}

pub fn cohom(m: &Comodule, b: &Contramodule) -> Result<QuotientPresentation> {
    let (f1, f2) = cohom_maps(m, b)?;
    crate::linalg::coequalizer(&f1, &f2)
}

/// `C` as a left `D`-comodule through `(pi (x) id) Delta`.
pub fn comodule_along(pi: &CoalgebraMorphism) -> Comodule {
    let p = pi.source.characteristic();
    let n = pi.source.dim();
    let map = pi.map.kron(&Matrix::identity(p, n)).mul(&pi.source.comul_matrix());
    Comodule::new(pi.target.clone(), Side::Left, map).expect("shape")
}

#[derive(Clone, Debug)]
pub struct InducedContramodule {
    pub result: Contramodule,
    /// Quotient of the free contramodule `Hom(C, B)`.
    pub presentation: QuotientPresentation,
    pub along: CoalgebraMorphism,
    /// `f1 - f2`, whose image is the relation space.
    pub difference: Matrix,
}

/// `Ind_D^C B = Cohom_D(C, B)`, a quotient of `free(C, dim B)`.
pub fn induce(pi: &CoalgebraMorphism, b: &Contramodule) -> Result<InducedContramodule> {
    if *pi.target != *b.over {
        return Err(Error::CoalgebraMismatch("induction of a contramodule over another coalgebra".into()));
    }
    let c = comodule_along(pi);
    let (f1, f2) = cohom_maps(&c, b)?;
    let difference = f1.sub(&f2);
    let presentation = QuotientPresentation::by_span(b.characteristic(), f1.rows(), &difference);
    let free = free_contramodule(pi.source.clone(), b.dim);
    let mut theta = Vec::with_capacity(free.theta.len());
    for t in &free.theta {
        let Some(d) = presentation.descend_endomorphism(t) else {
            return Err(Error::Falsified(
                "relation space of the induced contramodule is not a subcontramodule".into(),
            ));
        };
        theta.push(d);
    }
    let result = Contramodule::new(pi.source.clone(), presentation.quotient_dim(), theta)?;
    Ok(InducedContramodule {
        result,
        presentation,
        along: pi.clone(),
        difference,
    })
}

/// `Hom^C(Ind B, V) -> Hom^D(B, Res V)`, `f -> f o unit`, with `unit(b) = [epsilon (x) b]`.
pub fn adjunction_check(pi: &CoalgebraMorphism, b: &Contramodule, v: &Contramodule) -> Result<Certificate> {
    if *pi.source != *v.over {
        return Err(Error::CoalgebraMismatch("V must live over the source of pi".into()));
    }
    let p = b.characteristic();
    let ind = induce(pi, b)?;
    let res = restrict(pi, v)?;
    let left = hom_contra(&ind.result, v)?;
    let right = hom_contra(b, &res)?;
    let n = pi.source.dim();
    let db = b.dim;
    let mut eps = Matrix::zeros(p, n * db, db);
    for (a, &e) in pi.source.counit().iter().enumerate() {
        if e != 0 {
            for x in 0..db {
                eps.set(a * db + x, x, e);
            }
        }
    }
    let unit = ind.presentation.projection.mul(&eps);
    let res_ind = restrict(pi, &ind.result)?;
    let mut cert = Certificate::new("induction left adjoint to restriction");
    cert.check("unit is a morphism", is_morphism(b, &res_ind, &unit), true);
    cert.equal("dim Hom(Ind B, V) = dim Hom(B, Res V)", left.dim(), right.dim());
    let images: Vec<Matrix> = left.basis.iter().map(|f| f.mul(&unit)).collect();
    let all_morphisms = images.iter().all(|g| is_morphism(b, &res, g));
    cert.check("images are morphisms", all_morphisms, all_morphisms);
    let mut stacked = Matrix::zeros(p, v.dim * db, 0);
    for g in &images {
        stacked = stacked.hstack(&Matrix::from_data(p, v.dim * db, 1, g.data().to_vec()));
    }
    let rank = stacked.rank();
    cert.equal("bijection rank", rank, right.dim());
    cert.check(
        "bijection injective",
        rank == left.dim(),
        serde_json::json!({"rank": rank, "dim": left.dim()}),
    );
    Ok(cert)
}

/// `Hom(M, B)` with the diagonal contra-action over a Hopf algebra;
/// basis `m^a (x) b` at `a * dim B + b`.
pub fn diagonal_hom(m: &Comodule, b: &Contramodule, h: &HopfAlgebraSpec) -> Result<Contramodule> {
    if m.side != Side::Right {
        return Err(Error::Input("the diagonal action takes a right comodule".into()));
    }
    if *m.over != *h.coalgebra || *b.over != *h.coalgebra {
        return Err(Error::CoalgebraMismatch("diagonal action over mismatched Hopf algebras".into()));
    }
    let p = h.characteristic();
    let n = h.dim();
    let (dm, db) = (m.dim, b.dim);
    // theta_i(m^a (x) b) = sum_{c,j,l} kappa_c^{aj} nabla^i_{jl} m^c (x) theta_l b
    let mut theta = vec![Matrix::zeros(p, dm * db, dm * db); n];
    for j in 0..n {
        for l in 0..n {
            for &(i, nab) in h.algebra.basis_product(j, l) {
                for a in 0..dm {
                    for c in 0..dm {
                        let k = m.coefficient(c, a, j);
                        if k == 0 {
                            continue;
                        }
                        let s = k * nab % p;
                        let tl = &b.theta[l];
                        for x in 0..db {
                            for y in 0..db {
                                let t = tl.get(y, x);
                                if t != 0 {
                                    theta[i].add_at(c * db + y, a * db + x, s * t % p);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Contramodule::new(h.coalgebra.clone(), dm * db, theta)
}

/// Output of the hom identity certification.
#[derive(Clone, Debug)]
pub struct HomIdentity {
    /// On `Hom(G (x) M, B)`.
    pub alpha: Matrix,
    pub beta: Matrix,
    /// `Hom(M, Ind B)` and `Ind Hom(M, B)`.
    pub left: Contramodule,
    pub right: Contramodule,
    /// Descended maps `L -> R` and `R -> L`.
    pub alpha_bar: Matrix,
    pub beta_bar: Matrix,
    pub certificate: Certificate,
}

/// `A(f (x) m) = S(m_1) f (x) m_0`, or without `S` when `antipode` is false.
fn twisted_multiplication(g: &HopfAlgebraSpec, m: &Comodule, antipode: bool) -> Matrix {
    let p = g.characteristic();
    let n = g.dim();
    let dm = m.dim;
    let mut a = Matrix::zeros(p, n * dm, n * dm);
    for c in 0..dm {
        for d in 0..dm {
            for l in 0..n {
                let k = m.coefficient(c, d, l);
                if k == 0 {
                    continue;
                }
                let factor = if antipode {
                    g.antipode.column(l)
                } else {
                    unit_vec(n, l)
                };
                for j in 0..n {
                    let prod = g.product(&factor, &unit_vec(n, j));
                    for (x, &v) in prod.iter().enumerate() {
                        if v != 0 {
                            a.add_at(x * dm + d, j * dm + c, k * v % p);
                        }
                    }
                }
            }
        }
    }
    a
}

/// Certifies `Hom(M, Ind_H^G B) = Ind_H^G Hom(M, B)` through the maps
/// `alpha(phi)(f (x) m) = phi(S(m_1) f (x) m_0)` and
/// `beta(psi)(f (x) m) = psi(m_1 f (x) m_0)`.
pub fn hom_identity_maps(
    g: &HopfAlgebraSpec,
    h: &HopfAlgebraSpec,
    pi: &CoalgebraMorphism,
    m: &Comodule,
    b: &Contramodule,
) -> Result<HomIdentity> {
    if *pi.source != *g.coalgebra || *pi.target != *h.coalgebra {
        return Err(Error::CoalgebraMismatch("pi must map k[G] to k[H]".into()));
    }
    if *m.over != *g.coalgebra || m.side != Side::Right {
        return Err(Error::Input("M must be a right k[G]-comodule".into()));
    }
    let p = g.characteristic();
    let n = g.dim();
    let (dm, db) = (m.dim, b.dim);
    let x_dim = n * dm * db;
    let id_b = Matrix::identity(p, db);
    let alpha = twisted_multiplication(g, m, true).transpose().kron(&id_b);
    let beta = twisted_multiplication(g, m, false).transpose().kron(&id_b);
    let mut cert = Certificate::new("hom identity");
    cert.residual("beta alpha = id", &beta.mul(&alpha).sub(&Matrix::identity(p, x_dim)));
    cert.residual("alpha beta = id", &alpha.mul(&beta).sub(&Matrix::identity(p, x_dim)));

    // L = Hom(M, Ind B), presented on X through Hom(M, Hom(G, B)).
    let ind_b = induce(pi, b)?;
    let left = diagonal_hom(m, &ind_b.result, g)?;
    let swap = tensor_permutation(p, &[n, dm, db], &[1, 0, 2]);
    let swap_back = tensor_permutation(p, &[dm, n, db], &[1, 0, 2]);
    let id_m = Matrix::identity(p, dm);
    let proj_l = id_m.kron(&ind_b.presentation.projection).mul(&swap);
    let sec_l = swap_back.mul(&id_m.kron(&ind_b.presentation.section));
    let diff_l = swap_back.mul(&id_m.kron(&ind_b.difference));

    // R = Ind Hom(M, B), with M corestricted to k[H].
    let m_h = m.corestrict(pi)?;
    let hom_mb = diagonal_hom(&m_h, b, h)?;
    let ind_r = induce(pi, &hom_mb)?;
    let right = ind_r.result.clone();
    let proj_r = &ind_r.presentation.projection;
    let sec_r = &ind_r.presentation.section;
    let diff_r = &ind_r.difference;
    cert.equal("dim L = dim R", left.dim, right.dim);

    // Descent: alpha (f_L - g_L) = (f_R - g_R) T and (f_L - g_L) U = beta (f_R - g_R).
    let t = diff_r.solve(&alpha.mul(&diff_l));
    let u = diff_l.solve(&beta.mul(diff_r));
    cert.check("alpha descends (T exists)", t.is_some(), t.is_some());
    cert.check("beta descends (U exists)", u.is_some(), u.is_some());
    if let Some(t) = &t {
        cert.residual("T factorization", &diff_r.mul(t).sub(&alpha.mul(&diff_l)));
    }
    if let Some(u) = &u {
        cert.residual("U factorization", &diff_l.mul(u).sub(&beta.mul(diff_r)));
    }
    let alpha_bar = proj_r.mul(&alpha).mul(&sec_l);
    let beta_bar = proj_l.mul(&beta).mul(sec_r);
    cert.residual(
        "beta_bar alpha_bar = id_L",
        &beta_bar.mul(&alpha_bar).sub(&Matrix::identity(p, left.dim)),
    );
    cert.residual(
        "alpha_bar beta_bar = id_R",
        &alpha_bar.mul(&beta_bar).sub(&Matrix::identity(p, right.dim)),
    );
    let mut bad = 0usize;
    for (tl, tr) in left.theta.iter().zip(&right.theta) {
        bad += alpha_bar.mul(tl).sub(&tr.mul(&alpha_bar)).nnz();
    }
    cert.check("alpha_bar is a contramodule morphism", bad == 0, bad);
    cert.absorb("L", left.validate());
    cert.absorb("R", right.validate());
    Ok(HomIdentity {
        alpha,
        beta,
        left,
        right,
        alpha_bar,
        beta_bar,
        certificate: cert,
    })
}

/// Parts of a constant group scheme `G = N K` with `N` normal.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub group: GroupSchemeDescriptor,
    pub normal: Vec<usize>,
    pub complement: Vec<usize>,
    pub n_scheme: GroupSchemeDescriptor,
    pub k_scheme: GroupSchemeDescriptor,
    /// Restrictions of functions `k[G] -> k[N]`, `k[G] -> k[K]`.
    pub to_n: CoalgebraMorphism,
    pub to_k: CoalgebraMorphism,
}

impl Semidirect {
    pub fn new(group: GroupSchemeDescriptor, normal: &[usize], complement: &[usize]) -> Result<Self> {
        let Provenance::Constant(table) = &group.provenance else {
            return Err(Error::Input("semidirect induction needs a constant group scheme".into()));
        };
        let p = group.characteristic();
        let nt = table.subgroup("N", normal)?;
        let kt = table.subgroup("K", complement)?;
        let order = table.order();
        let normal_ok = (0..order).all(|g| {
            normal
                .iter()
                .all(|&x| normal.contains(&table.mul[table.mul[g][x]][table.inverse(g)]))
        });
        let mut products: Vec<usize> = normal
            .iter()
            .flat_map(|&x| complement.iter().map(move |&y| (x, y)))
            .map(|(x, y)| table.mul[x][y])
            .collect();
        products.sort();
        products.dedup();
        if !normal_ok || products.len() != order {
            return Err(Error::Input("not a semidirect decomposition N K".into()));
        }
        let n_scheme = constant_group_scheme(&nt, p)?;
        let k_scheme = constant_group_scheme(&kt, p)?;
        let to_n = crate::hopf::constant_restriction(&group, &n_scheme, normal)?;
        let to_k = crate::hopf::constant_restriction(&group, &k_scheme, complement)?;
        Ok(Semidirect {
            group,
            normal: normal.to_vec(),
            complement: complement.to_vec(),
            n_scheme,
            k_scheme,
            to_n,
            to_k,
        })
    }

    fn table(&self) -> &crate::hopf::GroupTable {
        match &self.group.provenance {
            Provenance::Constant(t) => t,
            _ => unreachable!("checked in new"),
        }
    }

    /// `Delta_R f(g, k) = f(k g)` as `k[G] -> k[G] (x) k[K]`.
    pub fn delta_r(&self) -> Matrix {
        let t = self.table();
        let (n, kk) = (t.order(), self.complement.len());
        let mut m = Matrix::zeros(self.group.characteristic(), n * kk, n);
        for g in 0..n {
            for (ki, &k) in self.complement.iter().enumerate() {
                m.set(g * kk + ki, t.mul[k][g], 1);
            }
        }
        m
    }

    /// `Delta_L f(k, g) = f(g k)` as `k[G] -> k[K] (x) k[G]`.
    pub fn delta_l(&self) -> Matrix {
        let t = self.table();
        let (n, kk) = (t.order(), self.complement.len());
        let mut m = Matrix::zeros(self.group.characteristic(), n * kk, n);
        for g in 0..n {
            for (ki, &k) in self.complement.iter().enumerate() {
                m.set(ki * n + g, t.mul[g][k], 1);
            }
        }
        m
    }

    /// Conjugation `f(k g k^-1)` on the given elements, as `k[X] -> k[X] (x) k[K]`.
    pub fn delta_cong(&self, elements: &[usize]) -> Matrix {
        let t = self.table();
        let (n, kk) = (elements.len(), self.complement.len());
        let mut m = Matrix::zeros(self.group.characteristic(), n * kk, n);
        for (xi, &x) in elements.iter().enumerate() {
            for (ki, &k) in self.complement.iter().enumerate() {
                let conj = t.mul[t.mul[k][x]][t.inverse(k)];
                let ci = elements.iter().position(|&e| e == conj).expect("closed under conjugation");
                m.set(xi * kk + ki, ci, 1);
            }
        }
        m
    }

    /// Residual of `Delta_R = (id (x) mu) omega (id (x) Delta_cong) Delta_L`.
    pub fn comorphism_residual(&self) -> Matrix {
        let p = self.group.characteristic();
        let n = self.group.order();
        let kk = self.complement.len();
        let all: Vec<usize> = (0..n).collect();
        let cong = self.delta_cong(&all);
        let step1 = Matrix::identity(p, kk).kron(&cong).mul(&self.delta_l());
        let omega = tensor_permutation(p, &[kk, n, kk], &[1, 2, 0]);
        let mu = self.k_scheme.ring.algebra.mul_matrix();
        let rhs = Matrix::identity(p, n).kron(&mu).mul(&omega).mul(&step1);
        rhs.sub(&self.delta_r())
    }
}

/// Certifies `Ind_{k[K]}^{k[G]} M = Hom(k[N], M)` through `phi -> [phi o iota*]`.
pub fn semidirect_induction(sd: &Semidirect, m: &Contramodule) -> Result<Certificate> {
    if *m.over != *sd.k_scheme.ring.coalgebra {
        return Err(Error::CoalgebraMismatch("M must be a k[K]-contramodule".into()));
    }
    let p = m.characteristic();
    let mut cert = Certificate::new("semidirect induction");
    cert.residual("comorphism identity", &sd.comorphism_residual());
    let ind = induce(&sd.to_k, m)?;
    let nn = sd.normal.len();
    let dm = m.dim;
    let g = sd.group.order();
    // phi o iota*: e^n (x) v -> e^{iota n} (x) v
    let mut j = Matrix::zeros(p, g * dm, nn * dm);
    for (ni, &x) in sd.normal.iter().enumerate() {
        for a in 0..dm {
            j.set(x * dm + a, ni * dm + a, 1);
        }
    }
    let psi = ind.presentation.projection.mul(&j);
    cert.equal("dimensions", ind.result.dim, nn * dm);
    let inv = psi.inverse();
    cert.check("bijective", inv.is_some(), inv.is_some());
    // k[K]-structure: diagonal on Hom(k[N], M) with k[N] coacted on by conjugation.
    let kn = Comodule::new(
        sd.k_scheme.ring.coalgebra.clone(),
        Side::Right,
        sd.delta_cong(&sd.normal),
    )?;
    cert.absorb("k[N] comodule", kn.validate());
    let diag = diagonal_hom(&kn, m, &sd.k_scheme.ring)?;
    let res_k = restrict(&sd.to_k, &ind.result)?;
    cert.check("K-equivariant", is_morphism(&diag, &res_k, &psi), true);
    // k[N]-structure: free on M.
    let free = free_contramodule(sd.n_scheme.ring.coalgebra.clone(), dm);
    let res_n = restrict(&sd.to_n, &ind.result)?;
    cert.check("N-equivariant", is_morphism(&free, &res_n, &psi), true);
    Ok(cert)
}

#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    /// Grouplikes of `k[T]`.
    pub weights: Vec<Vec<u64>>,
    /// Basis columns of each weight space.
    pub spaces: Vec<Matrix>,
    pub torus_map: CoalgebraMorphism,
    /// `dim B - sum dim B_lambda`.
    pub defect: usize,
}

impl WeightDecomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.cols()).collect()
    }
}

/// `B_lambda = { b : theta(psi (x) b) = psi(lambda) b for all psi in k[T]* }`.
pub fn weight_decompose(b: &Contramodule, torus: &CoalgebraMorphism) -> Result<WeightDecomposition> {
    let bt = restrict(torus, b)?;
    let p = b.characteristic();
    let weights = grouplike_elements(&torus.target);
    let mut spaces = Vec::new();
    for lambda in &weights {
        let mut stacked = Matrix::zeros(p, 0, b.dim);
        for (t, &l) in bt.theta.iter().zip(lambda) {
            stacked = stacked.vstack(&t.sub(&Matrix::identity(p, b.dim).scale(l)));
        }
        spaces.push(stacked.kernel());
    }
    let total: usize = spaces.iter().map(|s| s.cols()).sum();
    let mut all = Matrix::zeros(p, b.dim, 0);
    for s in &spaces {
        all = all.hstack(s);
    }
    let independent = all.rank() == total;
    if !independent {
        return Err(Error::Falsified("weight spaces are not independent".into()));
    }
    Ok(WeightDecomposition {
        weights,
        spaces,
        torus_map: torus.clone(),
        defect: b.dim - total,
    })
}

/// `M_lambda = { m : Delta_M(m) = m (x) lambda }` for a right comodule.
pub fn comodule_weight_space(m: &Comodule, lambda: &[u64]) -> Matrix {
    let p = m.characteristic();
    let target = Matrix::identity(p, m.dim).kron(&Matrix::column_vector(p, lambda));
    m.coaction.sub(&target).kernel()
}

/// Summand of a coalgebra decomposition.
#[derive(Clone, Debug)]
pub struct Block {
    pub idempotent: Vec<u64>,
    pub subcoalgebra: Arc<CoalgebraSpec>,
    /// Columns: basis of the subcoalgebra inside `C`.
    pub inclusion: Matrix,
    pub piece: Contramodule,
}

#[derive(Clone, Debug)]
pub struct SumDecomposition {
    pub blocks: Vec<Block>,
    /// `B -> prod B_alpha`.
    pub iso: Matrix,
    pub certificate: Certificate,
}

/// `B = prod B_alpha` over a decomposition `C = sum C_alpha` given by central
/// idempotents of `C*` (found automatically when not supplied).
pub fn direct_sum_decompose(b: &Contramodule, idempotents: Option<&[Vec<u64>]>) -> Result<SumDecomposition> {
    let c = b.over.clone();
    let p = c.characteristic();
    let n = c.dim();
    let dual = c.dual_algebra();
    let idems = match idempotents {
        Some(list) => list.to_vec(),
        None => central_idempotents(&dual),
    };
    let mut total = vec![0u64; n];
    for (x, e) in idems.iter().enumerate() {
        if dual.product(e, e) != *e {
            return Err(Error::Input(format!("element {x} is not idempotent")));
        }
        for y in 0..n {
            let ey = dual.product(e, &unit_vec(n, y));
            if ey != dual.product(&unit_vec(n, y), e) {
                return Err(Error::Input(format!("element {x} is not central")));
            }
        }
        for (z, f) in idems.iter().enumerate() {
            if z != x && dual.product(e, f).iter().any(|&v| v != 0) {
                return Err(Error::Input("idempotents are not orthogonal".into()));
            }
        }
        for (t, &v) in total.iter_mut().zip(e) {
            *t = (*t + v) % p;
        }
    }
    if total != dual.unit() {
        return Err(Error::Input("idempotents do not sum to the counit".into()));
    }
    let mut blocks = Vec::new();
    let mut iso = Matrix::zeros(p, 0, b.dim);
    let mut cert = Certificate::new("contramodules over a decomposed coalgebra");
    for e in &idems {
        // P_e(c) = c_(1) e(c_(2)), the dual of right convolution by e.
        let mut proj = Matrix::zeros(p, n, n);
        for k in 0..n {
            for &(i, j, v) in c.coproduct(k) {
                proj.add_at(i, k, v * e[j] % p);
            }
        }
        let incl = proj.column_space();
        let m = incl.cols();
        let (_, rows) = incl.transpose().rref();
        let left_inv = incl.select_rows(&rows).inverse().expect("independent");
        let coords = |v: &[u64]| -> Vec<u64> {
            let picked: Vec<u64> = rows.iter().map(|&r| v[r]).collect();
            left_inv.apply(&picked)
        };
        let mut comul = Vec::with_capacity(m);
        for s in 0..m {
            let d = c.apply_comul(&incl.column(s));
            // Coordinates in the basis v_t (x) v_u, row by row of the n x n matrix.
            let mut rows_coords = Vec::with_capacity(n);
            for i in 0..n {
                rows_coords.push(d[i * n..(i + 1) * n].to_vec());
            }
            let right: Vec<Vec<u64>> = rows_coords.iter().map(|r| coords(r)).collect();
            let mut terms = Vec::new();
            for u in 0..m {
                let col: Vec<u64> = right.iter().map(|r| r[u]).collect();
                for (t, v) in coords(&col).into_iter().enumerate() {
                    if v != 0 {
                        terms.push((t, u, v));
                    }
                }
            }
            comul.push(terms);
        }
        let counit: Vec<u64> = (0..m).map(|s| c.apply_counit(&incl.column(s))).collect();
        let sub = Arc::new(CoalgebraSpec::new(p, m, comul, counit)?);
        CoalgebraMorphism::new(sub.clone(), c.clone(), incl.clone())?;
        let image = b.act(e).column_space();
        let piece_module = b.to_dual_module().submodule(&image);
        let full = Contramodule::new(c.clone(), piece_module.dim(), piece_module.action)?;
        // theta_alpha(x) = theta(x o P_e) on B_alpha, for x dual to v_k.
        let coord_proj: Vec<Vec<u64>> = (0..n).map(|k| coords(&proj.column(k))).collect();
        let theta = (0..m)
            .map(|k| {
                let functional: Vec<u64> = coord_proj.iter().map(|v| v[k]).collect();
                full.act(&functional)
            })
            .collect();
        let piece = Contramodule::new(sub.clone(), full.dim, theta)?;
        cert.absorb("piece", piece.validate());
        // Coordinates of theta_e b in the chosen basis of B_alpha.
        let (_, irows) = image.transpose().rref();
        let iinv = image.select_rows(&irows).inverse().expect("independent");
        let to_piece = iinv.mul(&b.act(e).select_rows(&irows));
        iso = iso.vstack(&to_piece);
        blocks.push(Block {
            idempotent: e.clone(),
            subcoalgebra: sub,
            inclusion: incl,
            piece,
        });
    }
    let dims: usize = blocks.iter().map(|b| b.piece.dim).sum();
    cert.equal("dims add up", dims, b.dim);
    let inv = iso.inverse();
    cert.check("reassembly is invertible", inv.is_some(), inv.is_some());
    let mut bad = 0usize;
    for i in 0..n {
        let x = unit_vec(n, i);
        let mut blockdiag = Matrix::zeros(p, 0, 0);
        for blk in &blocks {
            let restricted = blk.inclusion.transpose().apply(&x);
            let t = blk.piece.act(&restricted);
            let (r, cdim) = (blockdiag.rows(), blockdiag.cols());
            let top = blockdiag.hstack(&Matrix::zeros(p, r, t.cols()));
            let bottom = Matrix::zeros(p, t.rows(), cdim).hstack(&t);
            blockdiag = top.vstack(&bottom);
        }
        if iso.mul(&b.theta[i]) != blockdiag.mul(&iso) {
            bad += 1;
        }
    }
    cert.check("reassembly is a morphism", bad == 0, bad);
    Ok(SumDecomposition {
        blocks,
        iso,
        certificate: cert,
    })
}

/// Restriction along `(F#)^r`.
pub fn frobenius_twist(b: &Contramodule, g: &GroupSchemeDescriptor, r: u64) -> Result<Contramodule> {
    if *b.over != *g.ring.coalgebra {
        return Err(Error::CoalgebraMismatch("twist of a contramodule over another scheme".into()));
    }
    let map = g.frobenius_power(r);
    let morph = CoalgebraMorphism::new(g.coalgebra(), g.coalgebra(), map)?;
    restrict(&morph, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        additive_kernel_scheme, additive_quotient, artin_schreier_power_poly, frobenius_kernel_poly,
        mu_n, GroupTable,
    };

    fn p2_ambient() -> (GroupSchemeDescriptor, GroupSchemeDescriptor, CoalgebraMorphism) {
        let amb = additive_kernel_scheme(&artin_schreier_power_poly(2, 2, 1), 2).unwrap();
        let z2 = additive_kernel_scheme(&[0, -1, 1], 2).unwrap();
        let pi = additive_quotient(&amb, &z2).unwrap();
        (amb, z2, pi)
    }

    #[test]
    fn cohom_over_ground_field() {
        let amb = p2_ambient().0;
        let c = amb.coalgebra();
        let counit = CoalgebraMorphism::counit(c.clone());
        let k = Contramodule::trivial(counit.target.clone(), &[1], 2);
        let ind = induce(&counit, &k).unwrap();
        assert_eq!(ind.result, free_contramodule(c, 2));
    }

    #[test]
    fn witness_has_dim_two() {
        let (amb, z2, pi) = p2_ambient();
        let k = Contramodule::trivial_hopf(&z2.ring, 1);
        let ind = induce(&pi, &k).unwrap();
        assert_eq!(ind.result.dim, 2);
        assert!(ind.result.validate().verdict());
        let v = free_contramodule(amb.coalgebra(), 1);
        assert!(adjunction_check(&pi, &k, &v).unwrap().verdict());
    }

    #[test]
    fn regular_cohom_is_b() {
        let g = mu_n(2, 3).unwrap();
        let d = g.coalgebra();
        let reg = Comodule::regular(d.clone(), Side::Left);
        let b = free_contramodule(d, 1);
        assert_eq!(cohom(&reg, &b).unwrap().quotient_dim(), b.dim);
    }

    #[test]
    fn diagonal_with_trivial_comodule() {
        let (amb, _, _) = p2_ambient();
        let k = Comodule::trivial(amb.coalgebra(), Side::Right, amb.ring.unit(), 1);
        let b = free_contramodule(amb.coalgebra(), 1);
        assert_eq!(diagonal_hom(&k, &b, &amb.ring).unwrap(), b);
    }

    #[test]
    fn hom_identity_small() {
        let (amb, z2, pi) = p2_ambient();
        let m = Comodule::regular(amb.coalgebra(), Side::Right);
        let b = Contramodule::trivial_hopf(&z2.ring, 1);
        let hi = hom_identity_maps(&amb.ring, &z2.ring, &pi, &m, &b).unwrap();
        assert!(hi.certificate.verdict(), "{:?}", hi.certificate.failures());
        assert_eq!(hi.left.dim, 8);
    }

    #[test]
    fn semidirect_s3() {
        let g = constant_group_scheme(&GroupTable::symmetric3(), 3).unwrap();
        let sd = Semidirect::new(g, &[0, 1, 2], &[0, 3]).unwrap();
        assert!(sd.comorphism_residual().is_zero());
        let k = Contramodule::trivial_hopf(&sd.k_scheme.ring, 1);
        let cert = semidirect_induction(&sd, &k).unwrap();
        assert!(cert.verdict(), "{:?}", cert.failures());
        let free = free_contramodule(sd.k_scheme.coalgebra(), 1);
        let cert = semidirect_induction(&sd, &free).unwrap();
        assert!(cert.verdict(), "{:?}", cert.failures());
    }

    #[test]
    fn weights_of_free_mu2() {
        let t = mu_n(2, 3).unwrap();
        let id = CoalgebraMorphism::identity(t.coalgebra());
        let w = weight_decompose(&free_contramodule(t.coalgebra(), 1), &id).unwrap();
        assert_eq!(w.dims(), vec![1, 1]);
        assert_eq!(w.defect, 0);
    }

    #[test]
    fn decompose_z2_at_3() {
        let g = constant_group_scheme(&GroupTable::cyclic(2), 3).unwrap();
        let b = free_contramodule(g.coalgebra(), 2);
        let d = direct_sum_decompose(&b, None).unwrap();
        assert!(d.certificate.verdict(), "{:?}", d.certificate.failures());
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks.iter().map(|b| b.piece.dim).collect::<Vec<_>>(), vec![2, 2]);
    }

    #[test]
    fn twists() {
        let ga = additive_kernel_scheme(&frobenius_kernel_poly(2, 1), 2).unwrap();
        let b = free_contramodule(ga.coalgebra(), 1);
        let t = frobenius_twist(&b, &ga, 1).unwrap();
        assert!(t.is_trivial_at(ga.ring.unit()));
        let z3 = constant_group_scheme(&GroupTable::cyclic(3), 2).unwrap();
        let b = free_contramodule(z3.coalgebra(), 1);
        assert_eq!(frobenius_twist(&b, &z3, 1).unwrap(), b);
    }

    #[test]
    fn weights_multiply_in_hom() {
        let t = mu_n(3, 2).unwrap();
        let c = t.coalgebra();
        let id = CoalgebraMorphism::identity(c.clone());
        for a in 0..3 {
            for b in 0..3 {
                let m = Comodule::trivial(c.clone(), Side::Right, &unit_vec(3, a), 1);
                let bb = Contramodule::trivial(c.clone(), &unit_vec(3, b), 1);
                let d = diagonal_hom(&m, &bb, &t.ring).unwrap();
                let w = weight_decompose(&d, &id).unwrap();
                let hit = w.dims().iter().position(|&x| x == 1).unwrap();
                assert_eq!(w.weights[hit], unit_vec(3, (a + b) % 3));
            }
        }
    }
}
