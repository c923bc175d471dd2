//! Representation theory of finite-dimensional algebras over F_p: radical,
//! simple modules, projective covers and projectivity certificates.
//!
//! Modules are left modules given by the action matrices of every basis
//! element. Contramodules reach this module through their dual modules.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{unit_vec, AlgebraSpec};
use crate::certificate::Certificate;
use crate::comodcontra::{hom_contra, Comodule, Contramodule};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraSpec;
use crate::linalg::{Matrix, RowEchelon};
use crate::poly;

const MEATAXE_TRIES: usize = 400;
const ANALYSIS_SEED: u64 = 0x6d65_6174_6178_65;

/// An algebra with a fixed generating set and lazily computed
/// representation data.
#[derive(Debug)]
pub struct Ring {
    spec: AlgebraSpec,
    generators: Vec<usize>,
    radical: OnceLock<Vec<Vec<u64>>>,
    data: OnceLock<std::result::Result<Arc<RepData>, String>>,
}

/// Simples, primitive idempotents and projective covers, as action matrices.
#[derive(Debug)]
pub struct RepData {
    pub simples: Vec<Vec<Matrix>>,
    pub idempotents: Vec<Vec<u64>>,
    pub covers: Vec<Vec<Matrix>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(spec: AlgebraSpec) -> Arc<Ring> {
        let generators = spec.basis_generators();
        Arc::new(Ring {
            spec,
            generators,
            radical: OnceLock::new(),
            data: OnceLock::new(),
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.characteristic()
    }

    /// Basis indices generating the algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Basis of the Jacobson radical.
    pub fn radical(&self) -> &[Vec<u64>] {
        self.radical.get_or_init(|| radical(&self.spec))
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_empty()
    }

    pub fn data(self: &Arc<Self>) -> Result<Arc<RepData>> {
        let r = self.data.get_or_init(|| analyze(self).map(Arc::new));
        match r {
            Ok(d) => Ok(d.clone()),
            Err(detail) => Err(Error::Unsplit {
                p: self.characteristic(),
                detail: detail.clone(),
            }),
        }
    }
}

/// A left module over a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraRep {
    pub ring: Arc<Ring>,
    /// `action[i]` is the matrix of basis element `a_i`.
    pub action: Vec<Matrix>,
    dim: usize,
}

impl AlgebraRep {
    pub fn new(ring: Arc<Ring>, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != ring.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of dim {}",
                action.len(),
                ring.dim()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape("action matrices must be square of equal size".into()));
        }
        Ok(AlgebraRep { ring, action, dim })
    }

    /// For algebras of dim 0 the module dim cannot be read off the action.
    fn with_dim(ring: Arc<Ring>, action: Vec<Matrix>, dim: usize) -> Self {
        AlgebraRep { ring, action, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn regular(ring: &Arc<Ring>) -> Self {
        let action = ring.spec.left_regular();
        let n = ring.dim();
        AlgebraRep::with_dim(ring.clone(), action, n)
    }

    /// `A^t`, copy `s` occupying coordinates `s*dim A .. (s+1)*dim A`.
    pub fn free(ring: &Arc<Ring>, t: usize) -> Self {
        let p = ring.characteristic();
        let id = Matrix::identity(p, t);
        let action = ring.spec.left_regular().iter().map(|l| id.kron(l)).collect();
        AlgebraRep::with_dim(ring.clone(), action, t * ring.dim())
    }

    /// The action of an arbitrary algebra element.
    pub fn act(&self, a: &[u64]) -> Matrix {
        let p = self.characteristic();
        let mut m = Matrix::zeros(p, self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m.axpy(c, &self.action[i]);
            }
        }
        m
    }

    pub fn generator_actions(&self) -> Vec<&Matrix> {
        self.ring.generators().iter().map(|&g| &self.action[g]).collect()
    }

    /// Module axioms on every pair of basis elements.
    pub fn validate(&self) -> Certificate {
        let spec = &self.ring.spec;
        let n = spec.dim();
        let mut cert = Certificate::new("module axioms");
        let mut bad = 0usize;
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let prod = spec.product(&unit_vec(n, i), &unit_vec(n, j));
                if lhs != self.act(&prod) {
                    bad += 1;
                }
            }
        }
        cert.check("associativity", bad == 0, bad);
        let unit_ok = self.act(spec.unit()).is_identity();
        cert.check("unit", unit_ok, unit_ok);
        cert
    }

    /// Submodule on the columns of `basis` (assumed stable).
    pub fn submodule(&self, basis: &Matrix) -> AlgebraRep {
        let k = basis.cols();
        let p = self.characteristic();
        let (_, rows) = basis.transpose().rref();
        let square = basis.select_rows(&rows);
        let inv = square.inverse().expect("independent columns");
        let action = self
            .action
            .iter()
            .map(|a| inv.mul(&a.mul(basis).select_rows(&rows)))
            .collect();
        let _ = p;
        AlgebraRep::with_dim(self.ring.clone(), action, k)
    }

    /// Quotient by the stable subspace spanned by `basis`; returns the
    /// quotient with its projection and a section.
    pub fn quotient(&self, basis: &Matrix) -> (AlgebraRep, Matrix, Matrix) {
        let p = self.characteristic();
        let d = self.dim;
        let mut ech = RowEchelon::new(p, d);
        for c in 0..basis.cols() {
            ech.insert(&basis.column(c));
        }
        let mut comp = Vec::new();
        for i in 0..d {
            let e = unit_vec(d, i);
            if ech.insert(&e) {
                comp.push(e);
            }
        }
        let section = Matrix::from_columns(p, d, &comp);
        let full = basis.column_space().hstack(&section);
        let inv = full.inverse().expect("complement completes a basis");
        let k = full.cols() - comp.len();
        let proj = inv.select_rows(&(k..d).collect::<Vec<_>>());
        let action = self
            .action
            .iter()
            .map(|a| proj.mul(&a.mul(&section)))
            .collect();
        (
            AlgebraRep::with_dim(self.ring.clone(), action, comp.len()),
            proj,
            section,
        )
    }

    /// Conjugate by an invertible change of basis: new coordinates `t^-1 v`.
    pub fn change_basis(&self, t: &Matrix) -> Option<AlgebraRep> {
        let inv = t.inverse()?;
        let action = self.action.iter().map(|a| inv.mul(&a.mul(t))).collect();
        Some(AlgebraRep::with_dim(self.ring.clone(), action, self.dim))
    }

    pub fn direct_sum(&self, other: &AlgebraRep) -> AlgebraRep {
        let p = self.characteristic();
        let (a, b) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                let top = x.hstack(&Matrix::zeros(p, a, b));
                let bottom = Matrix::zeros(p, b, a).hstack(y);
                top.vstack(&bottom)
            })
            .collect();
        AlgebraRep::with_dim(self.ring.clone(), action, a + b)
    }

    /// `rad(A) M`, as basis columns.
    pub fn radical_submodule(&self) -> Matrix {
        let p = self.characteristic();
        let mut ech = RowEchelon::new(p, self.dim);
        let mut cols = Vec::new();
        for r in self.ring.radical() {
            let m = self.act(r);
            for c in 0..self.dim {
                let v = m.column(c);
                if ech.insert(&v) {
                    cols.push(v);
                }
            }
        }
        Matrix::from_columns(p, self.dim, &cols)
    }

    /// Vectors whose images span the head `M / rad(A) M`; they generate `M`.
    pub fn head_generators(&self) -> Vec<Vec<u64>> {
        let p = self.characteristic();
        let rad = self.radical_submodule();
        let mut ech = RowEchelon::new(p, self.dim);
        for c in 0..rad.cols() {
            ech.insert(&rad.column(c));
        }
        let mut out = Vec::new();
        for i in 0..self.dim {
            let e = unit_vec(self.dim, i);
            if ech.insert(&e) {
                out.push(e);
            }
        }
        out
    }
}

/// Smallest subspace containing `seeds` and stable under `actions`, as columns.
pub fn spin(p: u64, dim: usize, actions: &[&Matrix], seeds: &[Vec<u64>]) -> Matrix {
    let mut ech = RowEchelon::new(p, dim);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for s in seeds {
        if ech.insert(s) {
            basis.push(s.clone());
        }
    }
    let mut q = 0;
    while q < basis.len() && basis.len() < dim {
        for a in actions {
            let v = a.apply(&basis[q]);
            if ech.insert(&v) {
                basis.push(v);
            }
        }
        q += 1;
    }
    Matrix::from_columns(p, dim, &basis)
}

enum Origin {
    Seed(usize),
    Step(usize, usize),
}

/// Basis of the space of linear maps `f: M -> N` with `f a = b f` for
/// each paired action. `M` is spun from a few seeds, so `f` is determined by
/// the images of those seeds.
pub fn intertwiners(p: u64, dm: usize, dn: usize, am: &[&Matrix], an: &[&Matrix]) -> Vec<Matrix> {
    assert_eq!(am.len(), an.len());
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let mut ech = RowEchelon::new(p, dm);
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut origin = Vec::new();
    let mut known: HashMap<(usize, usize), usize> = HashMap::new();
    let mut seeds = 0;
    let mut next_std = 0;
    let mut q = 0;
    loop {
        while q < basis.len() {
            for (g, a) in am.iter().enumerate() {
                let v = a.apply(&basis[q]);
                if ech.insert(&v) {
                    known.insert((q, g), basis.len());
                    basis.push(v);
                    origin.push(Origin::Step(q, g));
                }
            }
            q += 1;
        }
        if basis.len() == dm {
            break;
        }
        while ech.contains(&unit_vec(dm, next_std)) {
            next_std += 1;
        }
        let e = unit_vec(dm, next_std);
        ech.insert(&e);
        basis.push(e);
        origin.push(Origin::Seed(seeds));
        seeds += 1;
    }
    let width = seeds * dn;
    let mut words: Vec<Matrix> = Vec::with_capacity(dm);
    for o in &origin {
        let w = match *o {
            Origin::Seed(s) => {
                let mut w = Matrix::zeros(p, dn, width);
                for i in 0..dn {
                    w.set(i, s * dn + i, 1);
                }
                w
            }
            Origin::Step(parent, g) => an[g].mul(&words[parent]),
        };
        words.push(w);
    }
    let bmat = Matrix::from_columns(p, dm, &basis);
    let binv = bmat.inverse().expect("spun basis is a basis");
    let mut eqs = RowEchelon::new(p, width);
    for j in 0..dm {
        for (g, a) in am.iter().enumerate() {
            if known.contains_key(&(j, g)) {
                continue;
            }
            let coords = binv.apply(&a.apply(&basis[j]));
            let mut e = an[g].mul(&words[j]);
            for (k, &c) in coords.iter().enumerate() {
                if c != 0 {
                    e.axpy(p - c, &words[k]);
                }
            }
            for r in 0..dn {
                if eqs.rank() == width {
                    break;
                }
                eqs.insert(e.row(r));
            }
        }
    }
    let sols = if eqs.rank() == 0 {
        Matrix::identity(p, width)
    } else {
        eqs.basis_rows().kernel()
    };
    (0..sols.cols())
        .map(|s| {
            let n = sols.column(s);
            let cols: Vec<Vec<u64>> = words.iter().map(|w| w.apply(&n)).collect();
            Matrix::from_columns(p, dn, &cols).mul(&binv)
        })
        .collect()
}

/// Basis of `Hom_A(M, N)`.
pub fn hom(m: &AlgebraRep, n: &AlgebraRep) -> Result<Vec<Matrix>> {
    if m.ring != n.ring {
        return Err(Error::CoalgebraMismatch("modules over different algebras".into()));
    }
    Ok(intertwiners(
        m.characteristic(),
        m.dim(),
        n.dim(),
        &m.generator_actions(),
        &n.generator_actions(),
    ))
}

fn lifted_trace_power(m: &Matrix, e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let mul = |a: &[u64], b: &[u64]| {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut base: Vec<u64> = m.data().iter().map(|&x| x % modulus).collect();
    let mut acc: Vec<u64> = (0..n * n).map(|x| u64::from(x / n == x % n)).collect();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    (0..n).fold(0, |s, i| (s + acc[i * n + i]) % modulus)
}

/// Jacobson radical by iterated p-trace kernels on the left regular
/// representation: `I_i = { x in I_(i-1) : g_i(x y) = 0 for all y }` with
/// `g_i(x) = Tr(X^(p^i)) / p^i mod p` on an integer lift `X`, stopping at
/// `p^(i+1) > dim A`.
pub fn radical(spec: &AlgebraSpec) -> Vec<Vec<u64>> {
    let n = spec.dim();
    let p = spec.characteristic();
    let mut ideal: Vec<Vec<u64>> = (0..n).map(|i| unit_vec(n, i)).collect();
    let mut pi = 1u64;
    while !ideal.is_empty() {
        let modulus = pi * p;
        let s = ideal.len();
        let mut g = Matrix::zeros(p, s, n);
        for (a, u) in ideal.iter().enumerate() {
            for j in 0..n {
                let x = spec.product(u, &unit_vec(n, j));
                let t = lifted_trace_power(&spec.left_mult(&x), pi, modulus);
                debug_assert_eq!(t % pi, 0);
                g.set(a, j, (t / pi) % p);
            }
        }
        let k = g.transpose().kernel();
        ideal = (0..k.cols())
            .map(|c| {
                let coeffs = k.column(c);
                let mut v = vec![0u64; n];
                for (a, &cf) in coeffs.iter().enumerate() {
                    if cf != 0 {
                        for (x, &y) in v.iter_mut().zip(&ideal[a]) {
                            *x = (*x + cf * y) % p;
                        }
                    }
                }
                v
            })
            .collect();
        if pi * p > n as u64 {
            break;
        }
        pi *= p;
    }
    ideal
}

/// Smallest `k` with `rad^k = 0`, if at most `dim A + 1`.
pub fn nilpotency_index(spec: &AlgebraSpec, rad: &[Vec<u64>]) -> Option<usize> {
    let p = spec.characteristic();
    let n = spec.dim();
    let mut power: Vec<Vec<u64>> = rad.to_vec();
    let mut k = 1;
    while !power.is_empty() {
        if k > n + 1 {
            return None;
        }
        let mut ech = RowEchelon::new(p, n);
        let mut next = Vec::new();
        for x in &power {
            for r in rad {
                let v = spec.product(x, r);
                if ech.insert(&v) {
                    next.push(v);
                }
            }
        }
        power = next;
        k += 1;
    }
    Some(k)
}

/// Radical as `{ x : AxA nilpotent }`, searched over coset representatives
/// of the part found so far. `None` when `p^dim A` exceeds `limit`.
pub fn radical_by_search(spec: &AlgebraSpec, limit: u64) -> Option<Vec<Vec<u64>>> {
    let p = spec.characteristic();
    let n = spec.dim();
    if (p as f64).powi(n as i32) > limit as f64 {
        return None;
    }
    let mut found = RowEchelon::new(p, n);
    'grow: loop {
        let mut span = found.clone();
        let free: Vec<usize> = (0..n).filter(|&i| span.insert(&unit_vec(n, i))).collect();
        let count = p.pow(free.len() as u32);
        for code in 1..count {
            let mut x = vec![0u64; n];
            let mut c = code;
            for &i in &free {
                x[i] = c % p;
                c /= p;
            }
            let mut ideal = found.clone();
            for a in 0..n {
                let ax = spec.product(&unit_vec(n, a), &x);
                for b in 0..n {
                    ideal.insert(&spec.product(&ax, &unit_vec(n, b)));
                }
            }
            let basis = ideal.basis_rows().to_rows();
            if nilpotency_index(spec, &basis).is_some() {
                found = ideal;
                continue 'grow;
            }
        }
        return Some(found.basis_rows().to_rows());
    }
}

pub enum Splitting {
    Irreducible,
    /// Basis columns of a proper nonzero submodule.
    Reducible(Matrix),
    Undecided,
}

/// Eigenvalues in F_p of `a`, read from the minimal polynomial of a random
/// vector.
fn eigen_candidates(a: &Matrix, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let p = a.characteristic();
    let d = a.rows();
    let v: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
    let mut krylov = vec![v];
    let mut ech = RowEchelon::new(p, d);
    ech.insert(&krylov[0]);
    loop {
        let next = a.apply(krylov.last().unwrap());
        if !ech.insert(&next) {
            let k = Matrix::from_columns(p, d, &krylov);
            let c = k
                .solve(&Matrix::column_vector(p, &next))
                .expect("dependent on Krylov basis");
            let mut f: Vec<u64> = c.column(0).iter().map(|&x| (p - x) % p).collect();
            f.push(1);
            return poly::roots(&f, p);
        }
        krylov.push(next);
    }
}

/// One round of Norton's irreducibility test with seeded random elements.
pub fn meataxe(rep: &AlgebraRep, rng: &mut ChaCha8Rng, tries: usize) -> Splitting {
    let d = rep.dim();
    let p = rep.characteristic();
    if d <= 1 {
        return Splitting::Irreducible;
    }
    let acts = rep.generator_actions();
    let dual: Vec<Matrix> = acts.iter().map(|a| a.transpose()).collect();
    let dual_refs: Vec<&Matrix> = dual.iter().collect();
    let n = rep.ring.dim();
    for _ in 0..tries {
        let coeffs: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = rep.act(&coeffs);
        for lambda in eigen_candidates(&a, rng) {
            let shifted = a.sub(&Matrix::identity(p, d).scale(lambda));
            let ker = shifted.kernel();
            if ker.cols() == 0 {
                continue;
            }
            for c in 0..ker.cols().min(3) {
                let w = spin(p, d, &acts, &[ker.column(c)]);
                if w.cols() < d {
                    return Splitting::Reducible(w);
                }
            }
            let kt = shifted.transpose().kernel();
            for c in 0..kt.cols().min(3) {
                let w = spin(p, d, &dual_refs, &[kt.column(c)]);
                if w.cols() < d {
                    // The annihilator of a dual submodule is a submodule.
                    let ann = w.transpose().kernel();
                    return Splitting::Reducible(ann);
                }
            }
            if ker.cols() == 1 {
                return Splitting::Irreducible;
            }
        }
    }
    Splitting::Undecided
}

/// Composition factors; pieces whose irreducibility could not be certified
/// are returned with `false`.
pub fn composition_factors_lenient(rep: &AlgebraRep, rng: &mut ChaCha8Rng) -> Vec<(AlgebraRep, bool)> {
    let mut out = Vec::new();
    let mut stack = vec![rep.clone()];
    while let Some(m) = stack.pop() {
        if m.dim() == 0 {
            continue;
        }
        match meataxe(&m, rng, MEATAXE_TRIES) {
            Splitting::Irreducible => out.push((m, true)),
            Splitting::Undecided => out.push((m, false)),
            Splitting::Reducible(w) => {
                let sub = m.submodule(&w);
                let (quo, _, _) = m.quotient(&w);
                stack.push(quo);
                stack.push(sub);
            }
        }
    }
    out
}

pub fn composition_factors(rep: &AlgebraRep, rng: &mut ChaCha8Rng) -> Result<Vec<AlgebraRep>> {
    let mut out = Vec::new();
    for (m, ok) in composition_factors_lenient(rep, rng) {
        if !ok {
            return Err(Error::Unsplit {
                p: rep.characteristic(),
                detail: format!("a composition factor of dim {} is not absolutely irreducible", m.dim()),
            });
        }
        out.push(m);
    }
    Ok(out)
}

fn isomorphic_simple(a: &AlgebraRep, b: &AlgebraRep) -> bool {
    a.dim() == b.dim() && !hom(a, b).map(|h| h.is_empty()).unwrap_or(true)
}

fn analyze(ring: &Arc<Ring>) -> std::result::Result<RepData, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(ANALYSIS_SEED);
    let regular = AlgebraRep::regular(ring);
    let factors = composition_factors(&regular, &mut rng).map_err(|e| match e {
        Error::Unsplit { detail, .. } => detail,
        e => e.to_string(),
    })?;
    let mut simples: Vec<AlgebraRep> = Vec::new();
    for f in factors {
        if !simples.iter().any(|s| isomorphic_simple(s, &f)) {
            simples.push(f);
        }
    }
    for s in &simples {
        let end = hom(s, s).map_err(|e| e.to_string())?.len();
        if end != 1 {
            return Err(format!(
                "simple module of dim {} has endomorphism ring of dim {end}",
                s.dim()
            ));
        }
    }
    simples.sort_by_key(|s| s.dim());
    let spec = ring.spec();
    let n = spec.dim();
    let p = ring.characteristic();
    // x acting as E_11 on one simple and 0 on the others, then lifted.
    let mut idempotents = Vec::new();
    let mut covers = Vec::new();
    let rows: usize = simples.iter().map(|s| s.dim() * s.dim()).sum();
    let mut system = Matrix::zeros(p, rows, n);
    for i in 0..n {
        let mut r = 0;
        for s in &simples {
            for &v in s.action[i].data() {
                system.set(r, i, v);
                r += 1;
            }
        }
    }
    let mut offset = 0;
    for s in &simples {
        let mut rhs = Matrix::zeros(p, rows, 1);
        rhs.set(offset, 0, 1);
        offset += s.dim() * s.dim();
        let x = system
            .solve(&rhs)
            .ok_or_else(|| "semisimple quotient is not a product of matrix algebras".to_string())?
            .column(0);
        let e = lift_idempotent(spec, &x);
        let cover_basis = spec.right_mult(&e).column_space();
        let cover = regular.submodule(&cover_basis);
        idempotents.push(e);
        covers.push(cover.action);
    }
    Ok(RepData {
        simples: simples.into_iter().map(|s| s.action).collect(),
        idempotents,
        covers,
    })
}

/// Lifts an idempotent modulo the radical with `e <- 3e^2 - 2e^3`.
pub fn lift_idempotent(spec: &AlgebraSpec, x: &[u64]) -> Vec<u64> {
    let p = spec.characteristic();
    let mut e = x.to_vec();
    for _ in 0..64 {
        let e2 = spec.product(&e, &e);
        if e2 == e {
            return e;
        }
        let e3 = spec.product(&e2, &e);
        e = e2
            .iter()
            .zip(&e3)
            .map(|(&a, &b)| (3 * a % p + (p - 2 % p) * b % p) % p)
            .collect();
    }
    panic!("idempotent lifting did not converge");
}

fn wrap(ring: &Arc<Ring>, action: &[Matrix]) -> AlgebraRep {
    let dim = action.first().map_or(0, |m| m.rows());
    AlgebraRep::with_dim(ring.clone(), action.to_vec(), dim)
}

/// The simple modules, sorted by dimension.
pub fn simple_modules(ring: &Arc<Ring>) -> Result<Vec<AlgebraRep>> {
    Ok(ring.data()?.simples.iter().map(|a| wrap(ring, a)).collect())
}

/// Position of `s` in the list of simples.
pub fn simple_index(s: &AlgebraRep) -> Result<usize> {
    simple_modules(&s.ring)?
        .iter()
        .position(|t| isomorphic_simple(t, s))
        .ok_or_else(|| Error::Input("module is not simple".into()))
}

/// `P = A e` for a primitive idempotent `e` with head `s`.
pub fn projective_cover(s: &AlgebraRep) -> Result<AlgebraRep> {
    let i = simple_index(s)?;
    Ok(wrap(&s.ring, &s.ring.data()?.covers[i]))
}

pub fn projective_covers(ring: &Arc<Ring>) -> Result<Vec<AlgebraRep>> {
    Ok(ring.data()?.covers.iter().map(|a| wrap(ring, a)).collect())
}

pub fn primitive_idempotents(ring: &Arc<Ring>) -> Result<Vec<Vec<u64>>> {
    Ok(ring.data()?.idempotents.clone())
}

/// Evidence for or against projectivity.
#[derive(Clone, Debug)]
pub struct ProjectivityCertificate {
    pub verdict: bool,
    /// Number of generators in the free presentation (head dimension).
    pub head_dim: usize,
    /// `A^t -> M`.
    pub presentation: Matrix,
    /// `s: M -> A^t` with `presentation * s = id`, when projective.
    pub splitting: Option<Matrix>,
    /// Rank gained by appending `id` to the splitting system; zero iff solvable.
    pub residual_rank: usize,
}

impl ProjectivityCertificate {
    /// Re-checks the witness against the module.
    pub fn recheck(&self, m: &AlgebraRep) -> bool {
        let free = AlgebraRep::free(&m.ring, self.head_dim);
        match (&self.splitting, self.verdict) {
            (Some(s), true) => {
                self.presentation.mul(s).is_identity()
                    && m
                        .action
                        .iter()
                        .zip(&free.action)
                        .all(|(a, f)| s.mul(a) == f.mul(s))
                    && m
                        .action
                        .iter()
                        .zip(&free.action)
                        .all(|(a, f)| self.presentation.mul(f) == a.mul(&self.presentation))
            }
            (None, false) => self.residual_rank > 0,
            _ => false,
        }
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut c = Certificate::new("projectivity");
        c.check("head dim", true, self.head_dim);
        c.check("residual rank", true, self.residual_rank);
        c.check("projective", self.verdict, self.verdict);
        c
    }
}

/// Projectivity by splitting the free presentation on a lift of the head.
pub fn is_projective(m: &AlgebraRep) -> ProjectivityCertificate {
    let p = m.characteristic();
    let n = m.ring.dim();
    let d = m.dim();
    let gens = m.head_generators();
    let t = gens.len();
    let mut presentation = Matrix::zeros(p, d, t * n);
    for (s, g) in gens.iter().enumerate() {
        for i in 0..n {
            for (r, v) in m.action[i].apply(g).into_iter().enumerate() {
                presentation.set(r, s * n + i, v);
            }
        }
    }
    if d == 0 {
        return ProjectivityCertificate {
            verdict: true,
            head_dim: 0,
            presentation,
            splitting: Some(Matrix::zeros(p, 0, 0)),
            residual_rank: 0,
        };
    }
    let free = AlgebraRep::free(&m.ring, t);
    let homs = hom(m, &free).expect("same ring");
    let mut system = Matrix::zeros(p, d * d, homs.len());
    for (l, h) in homs.iter().enumerate() {
        for (x, &v) in presentation.mul(h).data().iter().enumerate() {
            system.set(x, l, v);
        }
    }
    let rhs = Matrix::from_data(p, d * d, 1, Matrix::identity(p, d).data().to_vec());
    match system.solve(&rhs) {
        Some(x) => {
            let mut s = Matrix::zeros(p, t * n, d);
            for (l, h) in homs.iter().enumerate() {
                let c = x.get(l, 0);
                if c != 0 {
                    s.axpy(c, h);
                }
            }
            ProjectivityCertificate {
                verdict: true,
                head_dim: t,
                presentation,
                splitting: Some(s),
                residual_rank: 0,
            }
        }
        None => ProjectivityCertificate {
            verdict: false,
            head_dim: t,
            presentation,
            splitting: None,
            residual_rank: system.hstack(&rhs).rank() - system.rank(),
        },
    }
}

/// Head multiplicities `dim Hom_A(M, S_i)` over the simple list.
pub fn head(m: &AlgebraRep) -> Result<Vec<usize>> {
    simple_modules(&m.ring)?
        .iter()
        .map(|s| hom(m, s).map(|h| h.len()))
        .collect()
}

/// Composition multiplicities `[M : S_i]` from a composition series.
pub fn composition_multiplicities(m: &AlgebraRep) -> Result<Vec<usize>> {
    let simples = simple_modules(&m.ring)?;
    let mut rng = ChaCha8Rng::seed_from_u64(ANALYSIS_SEED ^ m.dim() as u64);
    let mut counts = vec![0usize; simples.len()];
    for f in composition_factors(m, &mut rng)? {
        let i = simples
            .iter()
            .position(|s| isomorphic_simple(s, &f))
            .ok_or_else(|| Error::Unsplit {
                p: m.characteristic(),
                detail: "composition factor outside the simple list".into(),
            })?;
        counts[i] += 1;
    }
    Ok(counts)
}

pub fn multiplicity(m: &AlgebraRep, s: &AlgebraRep) -> Result<usize> {
    let i = simple_index(s)?;
    Ok(composition_multiplicities(m)?[i])
}

/// `dim` of the projective cover of `M`, from head multiplicities.
pub fn cover_dimension(m: &AlgebraRep) -> Result<usize> {
    let covers = projective_covers(&m.ring)?;
    Ok(head(m)?
        .iter()
        .zip(&covers)
        .map(|(k, c)| k * c.dim())
        .sum())
}

/// `M` is projective iff it has the dimension of its projective cover.
pub fn projective_by_cover(m: &AlgebraRep) -> Result<bool> {
    Ok(cover_dimension(m)? == m.dim())
}

/// Random elements generating `M`, each added only if it enlarges
/// `span(gens) + rad M`.
pub fn small_generating_set(m: &AlgebraRep) -> Vec<Vec<u64>> {
    let p = m.characteristic();
    let d = m.dim();
    let rad = m.radical_submodule();
    let actions = m.generator_actions();
    let mut rng = ChaCha8Rng::seed_from_u64(ANALYSIS_SEED ^ (d as u64) << 8);
    let mut gens: Vec<Vec<u64>> = Vec::new();
    let mut covered = rad.rank();
    let mut misses = 0;
    while covered < d {
        let x: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
        let mut trial = gens.clone();
        trial.push(x);
        let span = spin(p, d, &actions, &trial).hstack(&rad).rank();
        if span > covered {
            covered = span;
            gens = trial;
        } else {
            misses += 1;
            if misses > 64 {
                // fall back to a basis of the head
                return m.head_generators();
            }
        }
    }
    gens
}

/// Direct-summand search for a split mono `s: M -> A^t`, `M` generated by
/// `t` elements, checking that `s g` is an idempotent of `End(A^t)` with
/// image `s(M)`. Split monos form a union of cosets of
/// `J = { d : g d in rad End(M) for all g: A^t -> M }`, so after a few random
/// probes the search runs over every coset of `J`. `None` when there are more
/// than `limit` cosets.
pub fn projective_by_search(m: &AlgebraRep, limit: u64) -> Option<bool> {
    let p = m.characteristic();
    let d = m.dim();
    if d == 0 {
        return Some(true);
    }
    let t = small_generating_set(m).len();
    let free = AlgebraRep::free(&m.ring, t);
    let into = hom(m, &free).ok()?;
    let out = hom(&free, m).ok()?;
    let split = |s: &Matrix| -> Option<bool> {
        if s.rank() < d {
            return None;
        }
        let mut system = Matrix::zeros(p, d * d, out.len());
        for (l, g) in out.iter().enumerate() {
            for (x, &v) in g.mul(s).data().iter().enumerate() {
                system.set(x, l, v);
            }
        }
        let id = Matrix::from_data(p, d * d, 1, Matrix::identity(p, d).data().to_vec());
        let y = system.solve(&id)?;
        let mut g = Matrix::zeros(p, d, free.dim());
        for (l, b) in out.iter().enumerate() {
            let c = y.get(l, 0);
            if c != 0 {
                g.axpy(c, b);
            }
        }
        let e = s.mul(&g);
        Some(e.mul(&e) == e && e.rank() == d)
    };
    let combine = |coeffs: &[u64], basis: &[Matrix]| -> Matrix {
        let mut s = Matrix::zeros(p, free.dim(), d);
        for (c, b) in coeffs.iter().zip(basis) {
            if *c != 0 {
                s.axpy(*c, b);
            }
        }
        s
    };
    let mut rng = ChaCha8Rng::seed_from_u64(ANALYSIS_SEED ^ d as u64);
    for _ in 0..64 {
        let coeffs: Vec<u64> = (0..into.len()).map(|_| rng.gen_range(0..p)).collect();
        if let Some(v) = split(&combine(&coeffs, &into)) {
            return Some(v);
        }
    }
    let reps = coset_representatives(m, &into, &out)?;
    if (p as f64).powi(reps.len() as i32) > limit as f64 {
        return None;
    }
    let mut coeffs = vec![0u64; reps.len()];
    loop {
        if let Some(v) = split(&combine(&coeffs, &reps)) {
            return Some(v);
        }
        // next coefficient vector, little-endian base p
        let mut i = 0;
        loop {
            if i == coeffs.len() {
                return Some(false);
            }
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Maps spanning a complement of `J` in `Hom(M, F)`.
fn coset_representatives(m: &AlgebraRep, into: &[Matrix], out: &[Matrix]) -> Option<Vec<Matrix>> {
    let p = m.characteristic();
    let d = m.dim();
    let ends = hom(m, m).ok()?;
    let e = ends.len();
    let mut stacked = Matrix::zeros(p, d * d, 0);
    for x in &ends {
        stacked = stacked.hstack(&Matrix::from_data(p, d * d, 1, x.data().to_vec()));
    }
    let coords = |x: &Matrix| -> Option<Vec<u64>> {
        let v = Matrix::from_data(p, d * d, 1, x.data().to_vec());
        Some(stacked.solve(&v)?.column(0))
    };
    let mut mul = Vec::with_capacity(e * e);
    for a in &ends {
        for b in &ends {
            mul.push(crate::algebra::sparse(&coords(&a.mul(b))?));
        }
    }
    let spec = AlgebraSpec::new(p, e, mul, coords(&Matrix::identity(p, d))?).ok()?;
    let rad = radical(&spec);
    // Quotient coordinates End(M) -> End(M)/rad.
    let mut rad_cols = Matrix::zeros(p, e, 0);
    for r in &rad {
        rad_cols = rad_cols.hstack(&Matrix::column_vector(p, r));
    }
    let complement = {
        let mut ech = RowEchelon::new(p, e);
        for r in &rad {
            ech.insert(r);
        }
        let mut extra = Vec::new();
        for i in 0..e {
            if ech.insert(&unit_vec(e, i)) {
                extra.push(unit_vec(e, i));
            }
        }
        extra
    };
    let mut basis = rad_cols.clone();
    for c in &complement {
        basis = basis.hstack(&Matrix::column_vector(p, c));
    }
    let to_quotient = basis.inverse()?.select_rows(&(rad.len()..e).collect::<Vec<_>>());
    // d -> (g_j d mod rad)_j
    let h = into.len();
    let mut big = Matrix::zeros(p, 0, h);
    for g in out {
        let mut block = Matrix::zeros(p, to_quotient.rows(), h);
        for (l, delta) in into.iter().enumerate() {
            let q = to_quotient.apply(&coords(&g.mul(delta))?);
            for (r, v) in q.into_iter().enumerate() {
                block.set(r, l, v);
            }
        }
        big = big.vstack(&block);
    }
    let j = big.kernel();
    let mut ech = RowEchelon::new(p, h);
    for c in 0..j.cols() {
        ech.insert(&j.column(c));
    }
    let mut reps = Vec::new();
    for l in 0..h {
        if ech.insert(&unit_vec(h, l)) {
            reps.push(into[l].clone());
        }
    }
    Some(reps)
}

/// `Some(r)` when `M` is free of rank `r`.
pub fn free_rank(m: &AlgebraRep) -> Result<Option<usize>> {
    let n = m.ring.dim();
    if n == 0 || m.dim() % n != 0 || !is_projective(m).verdict {
        return Ok(None);
    }
    let r = m.dim() / n;
    let simples = simple_modules(&m.ring)?;
    let h = head(m)?;
    Ok(h.iter()
        .zip(&simples)
        .all(|(&k, s)| k == r * s.dim())
        .then_some(r))
}

/// Primitive central idempotents, via the Frobenius-fixed part of the centre.
pub fn central_idempotents(spec: &AlgebraSpec) -> Vec<Vec<u64>> {
    let p = spec.characteristic();
    let n = spec.dim();
    let z = spec.center();
    let zmat = Matrix::from_columns(p, n, &z);
    let power = |x: &[u64]| {
        let mut acc = spec.unit().to_vec();
        for _ in 0..p.min(1 << 20) {
            acc = spec.product(&acc, x);
        }
        acc
    };
    // Frobenius on the centre is linear; its fixed points form F_p^b.
    let frob: Vec<Vec<u64>> = z.iter().map(|x| power(x)).collect();
    let fmat = Matrix::from_columns(p, n, &frob);
    let fz = zmat.solve(&fmat).expect("centre is closed under powers");
    let fixed = fz.sub(&Matrix::identity(p, z.len())).kernel();
    let fixed: Vec<Vec<u64>> = (0..fixed.cols())
        .map(|c| zmat.apply(&fixed.column(c)))
        .collect();
    let mut idems = vec![spec.unit().to_vec()];
    for f in &fixed {
        let mut next = Vec::new();
        for e in &idems {
            let y = spec.product(e, f);
            next.extend(split_by_values(spec, e, &y));
        }
        idems = next;
    }
    idems.sort();
    idems
}

/// Splits idempotent `e` along the distinct values of `y = e y` in `F_p^b`.
fn split_by_values(spec: &AlgebraSpec, e: &[u64], y: &[u64]) -> Vec<Vec<u64>> {
    let p = spec.characteristic();
    let n = spec.dim();
    // Minimal polynomial of y inside eA.
    let mut pows = vec![e.to_vec()];
    let mut ech = RowEchelon::new(p, n);
    ech.insert(e);
    let minpoly = loop {
        let next = spec.product(pows.last().unwrap(), y);
        if !ech.insert(&next) {
            let k = Matrix::from_columns(p, n, &pows);
            let c = k.solve(&Matrix::column_vector(p, &next)).expect("dependent");
            let mut f: Vec<u64> = c.column(0).iter().map(|&x| (p - x) % p).collect();
            f.push(1);
            break f;
        }
        pows.push(next);
    };
    let roots = poly::roots(&minpoly, p);
    if roots.len() <= 1 {
        return vec![e.to_vec()];
    }
    // Lagrange idempotents prod_(mu != lambda) (y - mu e) / (lambda - mu).
    roots
        .iter()
        .map(|&lambda| {
            let mut acc = e.to_vec();
            for &mu in roots.iter().filter(|&&m| m != lambda) {
                let shifted: Vec<u64> = y
                    .iter()
                    .zip(e)
                    .map(|(&a, &b)| (a + (p - mu) * b) % p)
                    .collect();
                let inv = crate::linalg::inv_mod((lambda + p - mu) % p, p);
                acc = spec
                    .product(&acc, &shifted)
                    .iter()
                    .map(|&v| v * inv % p)
                    .collect();
            }
            acc
        })
        .collect()
}

/// Algebra maps `A -> F_p`, as the vector of values on the basis.
pub fn one_dimensional_characters(spec: &AlgebraSpec) -> Vec<Vec<u64>> {
    let ring = Ring::new(spec.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(ANALYSIS_SEED);
    let mut out: Vec<Vec<u64>> = composition_factors_lenient(&AlgebraRep::regular(&ring), &mut rng)
        .into_iter()
        .filter(|(m, _)| m.dim() == 1)
        .map(|(m, _)| m.action.iter().map(|a| a.get(0, 0)).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A random module: a submodule or quotient of a small free module spanned
/// by random vectors, in a random basis.
pub fn random_module(ring: &Arc<Ring>, rng: &mut ChaCha8Rng, max_rank: usize) -> AlgebraRep {
    let p = ring.characteristic();
    loop {
        let t = rng.gen_range(1..=max_rank.max(1));
        let free = AlgebraRep::free(ring, t);
        let d = free.dim();
        let k = rng.gen_range(1..=2);
        let seeds: Vec<Vec<u64>> = (0..k)
            .map(|_| (0..d).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        let w = spin(p, d, &free.generator_actions(), &seeds);
        let m = if rng.gen_bool(0.5) {
            free.submodule(&w)
        } else {
            free.quotient(&w).0
        };
        if m.dim() == 0 {
            continue;
        }
        let dm = m.dim();
        loop {
            let data: Vec<u64> = (0..dm * dm).map(|_| rng.gen_range(0..p)).collect();
            if let Some(r) = m.change_basis(&Matrix::from_data(p, dm, dm, data)) {
                return r;
            }
        }
    }
}

/// Report of the structure of an algebra, for the CLI.
pub fn describe(ring: &Arc<Ring>) -> serde_json::Value {
    let simples = simple_modules(ring);
    json!({
        "dim": ring.dim(),
        "radical_dim": ring.radical().len(),
        "simple_dims": simples.as_ref().map(|s| s.iter().map(|x| x.dim()).collect::<Vec<_>>()).ok(),
        "unsplit": simples.err().map(|e| e.to_string()),
    })
}

/// `dim Hom(Hom(M, P(lambda)), L(mu)) = [Hom(M*, L(mu)) : L(lambda)]` over a
/// Hopf algebra, with the diagonal contra-action on both inner homs.
pub fn multiplicity_identity_check(
    h: &HopfAlgebraSpec,
    m: &Comodule,
    lambda: usize,
    mu: usize,
) -> Result<Certificate> {
    let c = h.coalgebra.clone();
    let ring = c.contra_ring();
    let simples = simple_modules(&ring)?;
    let covers = projective_covers(&ring)?;
    let (Some(l_mu), Some(p_lambda)) = (simples.get(mu), covers.get(lambda)) else {
        return Err(Error::Input("simple index out of range".into()));
    };
    let l_mu = Contramodule::from_dual_module(c.clone(), l_mu)?;
    let p_lambda = Contramodule::from_dual_module(c.clone(), p_lambda)?;
    let left = crate::functors::diagonal_hom(m, &p_lambda, h)?;
    let lhs = hom_contra(&left, &l_mu)?.dim();
    let right = crate::functors::diagonal_hom(&m.dual(h)?, &l_mu, h)?;
    let rhs = multiplicity(&right.to_dual_module(), &simples[lambda])?;
    let mut cert = Certificate::new(format!("multiplicity identity ({lambda}, {mu})"));
    cert.absorb("Hom(M, P)", left.validate());
    cert.absorb("Hom(M*, L)", right.validate());
    cert.equal("dim Hom = multiplicity", lhs, rhs);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{additive_kernel_scheme, constant_group_scheme, frobenius_kernel_poly, mu_n, GroupTable};

    fn group_algebra(g: &GroupTable, p: u64) -> Arc<Ring> {
        constant_group_scheme(g, p).unwrap().ring.coalgebra.contra_ring()
    }

    #[test]
    fn radicals() {
        let z2 = constant_group_scheme(&GroupTable::cyclic(2), 3).unwrap();
        assert!(z2.ring.coalgebra.contra_ring().is_semisimple());
        let dn = additive_kernel_scheme(&frobenius_kernel_poly(2, 1), 2).unwrap();
        assert_eq!(dn.ring.coalgebra.contra_ring().radical().len(), 1);
        let g = group_algebra(&GroupTable::cyclic(2), 2);
        let rad = g.radical();
        assert_eq!(rad, &[vec![1, 1]]);
        assert_eq!(nilpotency_index(g.spec(), rad), Some(2));
    }

    #[test]
    fn trace_radical_matches_search() {
        for name in crate::catalog::scheme_names() {
            let ring = crate::catalog::scheme(&name).unwrap().coalgebra().contra_ring();
            let Some(found) = radical_by_search(ring.spec(), 1 << 16) else {
                continue;
            };
            let p = ring.characteristic();
            let mut ech = RowEchelon::new(p, ring.dim());
            for v in ring.radical() {
                ech.insert(v);
            }
            assert_eq!(found.len(), ring.radical().len(), "{name}");
            assert!(found.iter().all(|v| ech.contains(v)), "{name}");
        }
    }

    #[test]
    fn group_algebra_radical_matches_augmentation() {
        // For a p-group the radical is the augmentation ideal.
        for (g, p) in [
            (GroupTable::cyclic(4), 2),
            (GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2)), 2),
            (GroupTable::cyclic(3), 3),
            (GroupTable::cyclic(9), 3),
        ] {
            let r = group_algebra(&g, p);
            assert_eq!(r.radical().len(), g.order() - 1);
        }
        // S3 at p = 3: the radical is the augmentation of the normal Z/3
        // times the group algebra, dim 4.
        assert_eq!(group_algebra(&GroupTable::symmetric3(), 3).radical().len(), 4);
        // S3 at p = 2: simples of dims 1 and 2, so 6 - 1 - 4.
        assert_eq!(group_algebra(&GroupTable::symmetric3(), 2).radical().len(), 1);
    }

    #[test]
    fn simples_of_s3() {
        let r = group_algebra(&GroupTable::symmetric3(), 3);
        let s = simple_modules(&r).unwrap();
        assert_eq!(s.iter().map(|x| x.dim()).collect::<Vec<_>>(), vec![1, 1]);
        let covers = projective_covers(&r).unwrap();
        let total: usize = s.iter().zip(&covers).map(|(a, b)| a.dim() * b.dim()).sum();
        assert_eq!(total, 6);
        let r2 = group_algebra(&GroupTable::symmetric3(), 2);
        let s2 = simple_modules(&r2).unwrap();
        assert_eq!(s2.iter().map(|x| x.dim()).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn unsplit_is_reported() {
        let r = group_algebra(&GroupTable::cyclic(3), 2);
        assert!(matches!(simple_modules(&r), Err(Error::Unsplit { .. })));
        assert_eq!(central_idempotents(r.spec()).len(), 2);
    }

    #[test]
    fn projectivity_of_trivial() {
        let r = group_algebra(&GroupTable::cyclic(2), 2);
        let k = AlgebraRep::new(r.clone(), vec![Matrix::identity(2, 1); 2]).unwrap();
        let cert = is_projective(&k);
        assert!(!cert.verdict);
        assert_eq!(cert.residual_rank, 1);
        assert!(cert.recheck(&k));
        let free = AlgebraRep::free(&r, 2);
        let c2 = is_projective(&free);
        assert!(c2.verdict && c2.recheck(&free));
        assert_eq!(free_rank(&free).unwrap(), Some(2));
        assert_eq!(composition_multiplicities(&AlgebraRep::regular(&r)).unwrap(), vec![2]);
    }

    #[test]
    fn central_idempotents_of_mu2() {
        let g = mu_n(2, 3).unwrap();
        let e = central_idempotents(&g.ring.coalgebra.dual_algebra());
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn multiplicity_identity_small() {
        use crate::comodcontra::Side;
        for (g, p) in [(GroupTable::symmetric3(), 3), (GroupTable::cyclic(2), 2)] {
            let h = constant_group_scheme(&g, p).unwrap().ring;
            let reg = Comodule::regular(h.coalgebra.clone(), Side::Right);
            let k = Comodule::trivial(h.coalgebra.clone(), Side::Right, h.unit(), 1);
            let n = simple_modules(&h.coalgebra.contra_ring()).unwrap().len();
            for m in [&k, &reg] {
                for l in 0..n {
                    for u in 0..n {
                        let c = multiplicity_identity_check(&h, m, l, u).unwrap();
                        assert!(c.verdict(), "{:?}", c.failures());
                    }
                }
            }
        }
    }

    #[test]
    fn search_oracle_agrees() {
        let g = constant_group_scheme(&GroupTable::cyclic(2), 2).unwrap();
        let ring = g.coalgebra().contra_ring();
        let k = simple_modules(&ring).unwrap()[0].clone();
        assert_eq!(projective_by_search(&k, 1 << 16), Some(false));
        assert_eq!(projective_by_search(&AlgebraRep::regular(&ring), 1 << 16), Some(true));
        let s3 = constant_group_scheme(&GroupTable::symmetric3(), 3).unwrap();
        let ring = s3.coalgebra().contra_ring();
        for c in projective_covers(&ring).unwrap() {
            assert_eq!(projective_by_search(&c, 1 << 16), Some(true));
        }
        for s in simple_modules(&ring).unwrap() {
            assert_eq!(projective_by_search(&s, 1 << 16), Some(false));
        }
    }
}
