//! Comodules and contramodules over finite-dimensional coalgebras.
//!
//! A contramodule `B` over `C` is stored as the family `theta_i = theta(c^i (x) -)`
//! of operators on `B`, which is the contra-action `Hom(C, B) = C* (x) B -> B`
//! read one dual basis vector at a time. Contra-associativity becomes
//! `theta_j theta_i = sum_k Delta_k^{ij} theta_k` where
//! `Delta(c_k) = sum Delta_k^{ij} c_i (x) c_j`, and contra-unity becomes
//! `sum_i epsilon(c_i) theta_i = id`.

use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::algebra::unit_vec;
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::hopf::{CoalgebraMorphism, CoalgebraSpec, HopfAlgebraSpec};
use crate::linalg::Matrix;
use crate::repthy::{self, intertwiners, AlgebraRep, ProjectivityCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A comodule. Right coactions land in `M (x) C` (index `a * n + i`), left
/// coactions in `C (x) M` (index `i * dim + a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub over: Arc<CoalgebraSpec>,
    pub side: Side,
    pub dim: usize,
    pub coaction: Matrix,
}

impl Comodule {
    pub fn new(over: Arc<CoalgebraSpec>, side: Side, coaction: Matrix) -> Result<Self> {
        let n = over.dim();
        let dim = coaction.cols();
        if coaction.rows() != dim * n {
            return Err(Error::Shape(format!(
                "coaction of a {dim}-dim comodule must be {}x{dim}",
                dim * n
            )));
        }
        Ok(Comodule {
            over,
            side,
            dim,
            coaction,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.over.characteristic()
    }

    /// `C` coacting on itself by `Delta`.
    pub fn regular(c: Arc<CoalgebraSpec>, side: Side) -> Self {
        let m = c.comul_matrix();
        let dim = c.dim();
        Comodule {
            over: c,
            side,
            dim,
            coaction: m,
        }
    }

    /// `k^dim` with `m -> m (x) g` for a grouplike `g`.
    pub fn trivial(c: Arc<CoalgebraSpec>, side: Side, grouplike: &[u64], dim: usize) -> Self {
        let n = c.dim();
        let p = c.characteristic();
        let mut coaction = Matrix::zeros(p, dim * n, dim);
        for a in 0..dim {
            for (i, &g) in grouplike.iter().enumerate() {
                let row = match side {
                    Side::Right => a * n + i,
                    Side::Left => i * dim + a,
                };
                coaction.set(row, a, g);
            }
        }
        Comodule {
            over: c,
            side,
            dim,
            coaction,
        }
    }

    /// `kappa_c^{a i}`: coefficient of `m_a (x) c_i` (or `c_i (x) m_a`) in the coaction of `m_c`.
    pub fn coefficient(&self, c: usize, a: usize, i: usize) -> u64 {
        let n = self.over.dim();
        match self.side {
            Side::Right => self.coaction.get(a * n + i, c),
            Side::Left => self.coaction.get(i * self.dim + a, c),
        }
    }

    pub fn validate(&self) -> Certificate {
        let p = self.characteristic();
        let n = self.over.dim();
        let d = self.dim;
        let comul = self.over.comul_matrix();
        let counit = self.over.counit_matrix();
        let mut cert = Certificate::new(format!("{:?} comodule axioms", self.side).to_lowercase());
        let (assoc, unit) = match self.side {
            Side::Right => {
                let lhs = self.coaction.kron(&Matrix::identity(p, n)).mul(&self.coaction);
                let rhs = Matrix::identity(p, d).kron(&comul).mul(&self.coaction);
                let u = Matrix::identity(p, d).kron(&counit).mul(&self.coaction);
                (lhs.sub(&rhs), u.sub(&Matrix::identity(p, d)))
            }
            Side::Left => {
                let lhs = Matrix::identity(p, n).kron(&self.coaction).mul(&self.coaction);
                let rhs = comul.kron(&Matrix::identity(p, d)).mul(&self.coaction);
                let u = counit.kron(&Matrix::identity(p, d)).mul(&self.coaction);
                (lhs.sub(&rhs), u.sub(&Matrix::identity(p, d)))
            }
        };
        cert.residual("coassociativity", &assoc);
        cert.residual("counit", &unit);
        cert
    }

    /// Corestriction along a coalgebra map `C -> D`.
    pub fn corestrict(&self, pi: &CoalgebraMorphism) -> Result<Comodule> {
        if *pi.source != *self.over {
            return Err(Error::CoalgebraMismatch("corestriction along a map from another coalgebra".into()));
        }
        let p = self.characteristic();
        let d = self.dim;
        let map = match self.side {
            Side::Right => Matrix::identity(p, d).kron(&pi.map),
            Side::Left => pi.map.kron(&Matrix::identity(p, d)),
        };
        Comodule::new(pi.target.clone(), self.side, map.mul(&self.coaction))
    }

    fn lift(&self, m: &Matrix, n: usize) -> Matrix {
        let p = self.characteristic();
        match self.side {
            Side::Right => m.kron(&Matrix::identity(p, n)),
            Side::Left => Matrix::identity(p, n).kron(m),
        }
    }

    /// New basis given by the columns of `t`.
    pub fn change_basis(&self, t: &Matrix) -> Option<Comodule> {
        let inv = t.inverse()?;
        let n = self.over.dim();
        Some(Comodule {
            over: self.over.clone(),
            side: self.side,
            dim: self.dim,
            coaction: self.lift(&inv, n).mul(&self.coaction).mul(t),
        })
    }

    /// The subcomodule spanned by the columns of `basis`.
    pub fn subcomodule(&self, basis: &Matrix) -> Result<Comodule> {
        let n = self.over.dim();
        let image = self.coaction.mul(basis);
        let coaction = self
            .lift(basis, n)
            .solve(&image)
            .ok_or_else(|| Error::Input("subspace is not a subcomodule".into()))?;
        Comodule::new(self.over.clone(), self.side, coaction)
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.over != other.over || self.side != other.side {
            return Err(Error::CoalgebraMismatch("direct sum of comodules over different coalgebras".into()));
        }
        let p = self.characteristic();
        let n = self.over.dim();
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 + d2;
        let mut coaction = Matrix::zeros(p, d * n, d);
        for (src, off) in [(self, 0), (other, d1)] {
            for c in 0..src.dim {
                for a in 0..src.dim {
                    for i in 0..n {
                        let v = src.coefficient(c, a, i);
                        if v != 0 {
                            let row = match self.side {
                                Side::Right => (a + off) * n + i,
                                Side::Left => i * d + a + off,
                            };
                            coaction.set(row, c + off, v);
                        }
                    }
                }
            }
        }
        Comodule::new(self.over.clone(), self.side, coaction)
    }

    /// `M (x) N` for right comodules over a Hopf algebra: `m_0 (x) n_0 (x) m_1 n_1`.
    pub fn tensor(&self, other: &Comodule, h: &HopfAlgebraSpec) -> Result<Comodule> {
        if self.side != Side::Right || other.side != Side::Right {
            return Err(Error::Input("tensor products are formed for right comodules".into()));
        }
        if *self.over != *h.coalgebra || *other.over != *h.coalgebra {
            return Err(Error::CoalgebraMismatch("tensor factors over different Hopf algebras".into()));
        }
        let p = self.characteristic();
        let n = h.dim();
        let (dm, dn) = (self.dim, other.dim);
        let d = dm * dn;
        let mut coaction = Matrix::zeros(p, d * n, d);
        for a in 0..dm {
            for b in 0..dn {
                for a2 in 0..dm {
                    for i in 0..n {
                        let x = self.coefficient(a, a2, i);
                        if x == 0 {
                            continue;
                        }
                        for b2 in 0..dn {
                            for j in 0..n {
                                let y = other.coefficient(b, b2, j);
                                if y == 0 {
                                    continue;
                                }
                                let s = x * y % p;
                                for &(k, v) in h.algebra.basis_product(i, j) {
                                    coaction.add_at((a2 * dn + b2) * n + k, a * dn + b, s * v % p);
                                }
                            }
                        }
                    }
                }
            }
        }
        Comodule::new(self.over.clone(), Side::Right, coaction)
    }

    /// The dual right comodule `M*`: `m^a -> sum m^c (x) S(kappa_c^{a i} c_i)`.
    pub fn dual(&self, h: &HopfAlgebraSpec) -> Result<Comodule> {
        if self.side != Side::Right {
            return Err(Error::Input("duals are formed for right comodules".into()));
        }
        let p = self.characteristic();
        let n = h.dim();
        let d = self.dim;
        let mut coaction = Matrix::zeros(p, d * n, d);
        for a in 0..d {
            for c in 0..d {
                for i in 0..n {
                    let k = self.coefficient(c, a, i);
                    if k == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let s = h.antipode.get(j, i);
                        if s != 0 {
                            coaction.add_at(c * n + j, a, k * s % p);
                        }
                    }
                }
            }
        }
        Comodule::new(self.over.clone(), Side::Right, coaction)
    }

    /// Right to left via the antipode: `m -> S(m_1) (x) m_0`.
    pub fn right_to_left(&self, h: &HopfAlgebraSpec) -> Result<Comodule> {
        if self.side != Side::Right {
            return Err(Error::Input("expected a right comodule".into()));
        }
        let p = self.characteristic();
        let n = h.dim();
        let d = self.dim;
        let mut coaction = Matrix::zeros(p, d * n, d);
        for c in 0..d {
            for a in 0..d {
                for i in 0..n {
                    let k = self.coefficient(c, a, i);
                    if k == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let s = h.antipode.get(j, i);
                        if s != 0 {
                            coaction.add_at(j * d + a, c, k * s % p);
                        }
                    }
                }
            }
        }
        Comodule::new(self.over.clone(), Side::Left, coaction)
    }
}

/// A finite-dimensional contramodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contramodule {
    pub over: Arc<CoalgebraSpec>,
    pub dim: usize,
    /// `theta[i] = theta(c^i (x) -)`.
    pub theta: Vec<Matrix>,
}

impl Contramodule {
    pub fn new(over: Arc<CoalgebraSpec>, dim: usize, theta: Vec<Matrix>) -> Result<Self> {
        if theta.len() != over.dim() {
            return Err(Error::Shape(format!(
                "{} contra-action operators over a coalgebra of dim {}",
                theta.len(),
                over.dim()
            )));
        }
        if theta.iter().any(|t| t.rows() != dim || t.cols() != dim) {
            return Err(Error::Shape(format!("contra-action operators must be {dim}x{dim}")));
        }
        Ok(Contramodule { over, dim, theta })
    }

    /// From the contra-action as a `dim x (dim C * dim)` map `C* (x) B -> B`.
    pub fn from_map(over: Arc<CoalgebraSpec>, map: &Matrix) -> Result<Self> {
        let n = over.dim();
        let dim = map.rows();
        if map.cols() != n * dim {
            return Err(Error::Shape("contra-action must be dim x (dim C * dim)".into()));
        }
        let theta = (0..n)
            .map(|i| map.select_columns(&(i * dim..(i + 1) * dim).collect::<Vec<_>>()))
            .collect();
        Contramodule::new(over, dim, theta)
    }

    /// The contra-action `C* (x) B -> B`.
    pub fn theta_map(&self) -> Matrix {
        let p = self.characteristic();
        let mut m = Matrix::zeros(p, self.dim, 0);
        for t in &self.theta {
            m = m.hstack(t);
        }
        m
    }

    pub fn characteristic(&self) -> u64 {
        self.over.characteristic()
    }

    /// `theta(x (x) -)` for an arbitrary functional `x` in `C*`.
    pub fn act(&self, x: &[u64]) -> Matrix {
        let mut m = Matrix::zeros(self.characteristic(), self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.axpy(c, &self.theta[i]);
            }
        }
        m
    }

    pub fn validate(&self) -> Certificate {
        let p = self.characteristic();
        let n = self.over.dim();
        let d = self.dim;
        let mut cert = Certificate::new("contramodule axioms");
        let mut expected = vec![Matrix::zeros(p, d, d); n * n];
        for k in 0..n {
            for &(i, j, v) in self.over.coproduct(k) {
                expected[i * n + j].axpy(v, &self.theta[k]);
            }
        }
        let mut bad = 0usize;
        for i in 0..n {
            for j in 0..n {
                if self.theta[j].mul(&self.theta[i]) != expected[i * n + j] {
                    bad += 1;
                }
            }
        }
        cert.check("contra-associativity", bad == 0, bad);
        let unit = self.act(self.over.counit());
        let ok = unit.is_identity();
        cert.check("contra-unity", ok, unit.sub(&Matrix::identity(p, d)).rank());
        cert
    }

    pub fn validated(self) -> Result<Self> {
        let cert = self.validate();
        if let Some(e) = cert.failures().first() {
            return Err(Error::Axiom {
                axiom: e.label.clone(),
                residual: e.value.as_u64().unwrap_or(1) as usize,
            });
        }
        Ok(self)
    }

    /// Evaluation at a grouplike `g`: `theta(phi) = phi(g)`.
    pub fn trivial(c: Arc<CoalgebraSpec>, grouplike: &[u64], dim: usize) -> Self {
        let p = c.characteristic();
        let theta = grouplike
            .iter()
            .map(|&g| Matrix::identity(p, dim).scale(g))
            .collect();
        Contramodule { over: c, dim, theta }
    }

    /// The trivial contramodule `k^dim` over a Hopf algebra (evaluation at 1).
    pub fn trivial_hopf(h: &HopfAlgebraSpec, dim: usize) -> Self {
        Contramodule::trivial(h.coalgebra.clone(), h.unit(), dim)
    }

    pub fn to_dual_module(&self) -> AlgebraRep {
        AlgebraRep::new(self.over.contra_ring(), self.theta.clone()).expect("shapes checked")
    }

    pub fn from_dual_module(c: Arc<CoalgebraSpec>, m: &AlgebraRep) -> Result<Self> {
        if *m.ring != *c.contra_ring() {
            return Err(Error::CoalgebraMismatch("module is not over the contra algebra".into()));
        }
        Contramodule::new(c, m.dim(), m.action.clone())
    }

    pub fn is_projective(&self) -> ProjectivityCertificate {
        repthy::is_projective(&self.to_dual_module())
    }

    /// Whether every operator is evaluation at `g`.
    pub fn is_trivial_at(&self, grouplike: &[u64]) -> bool {
        let p = self.characteristic();
        self.theta
            .iter()
            .zip(grouplike)
            .all(|(t, &g)| *t == Matrix::identity(p, self.dim).scale(g))
    }

    /// Sub- and quotient objects along a stable subspace.
    pub fn submodule(&self, basis: &Matrix) -> Contramodule {
        let m = self.to_dual_module().submodule(basis);
        Contramodule::new(self.over.clone(), m.dim(), m.action).expect("shape")
    }

    pub fn change_basis(&self, t: &Matrix) -> Option<Contramodule> {
        let inv = t.inverse()?;
        Some(Contramodule {
            over: self.over.clone(),
            dim: self.dim,
            theta: self.theta.iter().map(|x| inv.mul(&x.mul(t))).collect(),
        })
    }
}

/// `Hom(C, V)` with the contra-action from `Delta` in the first factor;
/// basis `c^j (x) v_s` at index `j * d + s`.
pub fn free_contramodule(c: Arc<CoalgebraSpec>, d: usize) -> Contramodule {
    let p = c.characteristic();
    let n = c.dim();
    let mut theta = vec![Matrix::zeros(p, n * d, n * d); n];
    for k in 0..n {
        for &(j, i, v) in c.coproduct(k) {
            for s in 0..d {
                theta[i].add_at(k * d + s, j * d + s, v);
            }
        }
    }
    Contramodule {
        over: c,
        dim: n * d,
        theta,
    }
}

/// `Hom(M, V)` for a right comodule `M`, contra-action `Hom(Delta_M, V)`;
/// basis `m^a (x) v_s` at index `a * d + s`.
pub fn dualize_comodule(m: &Comodule, d: usize) -> Result<Contramodule> {
    if m.side != Side::Right {
        return Err(Error::Input("dualize_comodule expects a right comodule".into()));
    }
    let p = m.characteristic();
    let n = m.over.dim();
    let dim = m.dim * d;
    let mut theta = vec![Matrix::zeros(p, dim, dim); n];
    for b in 0..m.dim {
        for a in 0..m.dim {
            for (i, t) in theta.iter_mut().enumerate() {
                let k = m.coefficient(b, a, i);
                if k != 0 {
                    for s in 0..d {
                        t.add_at(b * d + s, a * d + s, k);
                    }
                }
            }
        }
    }
    Ok(Contramodule {
        over: m.over.clone(),
        dim,
        theta,
    })
}

/// Basis of `Hom^C(B, D)`.
#[derive(Clone, Debug)]
pub struct MorphismSpace {
    pub source: Contramodule,
    pub target: Contramodule,
    pub basis: Vec<Matrix>,
}

impl MorphismSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Every basis map commutes with the contra-actions.
    pub fn verify(&self) -> bool {
        self.basis.iter().all(|f| is_morphism(&self.source, &self.target, f))
    }
}

pub fn is_morphism(b: &Contramodule, d: &Contramodule, f: &Matrix) -> bool {
    f.rows() == d.dim
        && f.cols() == b.dim
        && b.theta
            .iter()
            .zip(&d.theta)
            .all(|(tb, td)| f.mul(tb) == td.mul(f))
}

pub fn hom_contra(b: &Contramodule, d: &Contramodule) -> Result<MorphismSpace> {
    if *b.over != *d.over {
        return Err(Error::CoalgebraMismatch("contramodules over different coalgebras".into()));
    }
    let ring = b.over.contra_ring();
    let am: Vec<&Matrix> = ring.generators().iter().map(|&g| &b.theta[g]).collect();
    let an: Vec<&Matrix> = ring.generators().iter().map(|&g| &d.theta[g]).collect();
    let basis = intertwiners(b.characteristic(), b.dim, d.dim, &am, &an);
    Ok(MorphismSpace {
        source: b.clone(),
        target: d.clone(),
        basis,
    })
}

/// Restriction along `pi: C -> D`: `theta^D(d^i) = theta(d^i o pi)`.
pub fn restrict(pi: &CoalgebraMorphism, b: &Contramodule) -> Result<Contramodule> {
    if *pi.source != *b.over {
        return Err(Error::CoalgebraMismatch("restriction along a map from another coalgebra".into()));
    }
    let p = b.characteristic();
    let m = pi.target.dim();
    let theta = (0..m)
        .map(|i| {
            let mut t = Matrix::zeros(p, b.dim, b.dim);
            for j in 0..pi.source.dim() {
                let c = pi.map.get(i, j);
                if c != 0 {
                    t.axpy(c, &b.theta[j]);
                }
            }
            t
        })
        .collect();
    Ok(Contramodule {
        over: pi.target.clone(),
        dim: b.dim,
        theta,
    })
}

/// A random contramodule from a random module over the contra algebra.
pub fn random_contramodule(c: &Arc<CoalgebraSpec>, rng: &mut ChaCha8Rng, max_rank: usize) -> Contramodule {
    let m = repthy::random_module(&c.contra_ring(), rng, max_rank);
    Contramodule::from_dual_module(c.clone(), &m).expect("same ring")
}

/// A basis vector of `C*` as a functional.
pub fn dual_basis(c: &CoalgebraSpec, i: usize) -> Vec<u64> {
    unit_vec(c.dim(), i)
}
