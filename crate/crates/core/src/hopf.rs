//! Coalgebras and Hopf algebras as structure-constant data, with axiom
//! validators and constructors for finite group schemes.
//!
//! Basis conventions: a coalgebra has basis `c_0..c_{n-1}`, and
//! `comul[i]` lists the terms `(j, k, v)` of `Delta(c_i) = sum v c_j (x) c_k`.
//! The dual basis of `C*` is written `c^i`.

use std::sync::{Arc, OnceLock};

use crate::algebra::{sparse, unit_vec, AlgebraSpec};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::repthy::Ring;
use crate::linalg::{add_mod, check_characteristic, inv_mod, is_prime, sub_mod, Matrix};

#[derive(Clone, Debug)]
pub struct CoalgebraSpec {
    p: u64,
    dim: usize,
    comul: Vec<Vec<(usize, usize, u64)>>,
    counit: Vec<u64>,
    contra: OnceLock<Arc<Ring>>,
}

impl PartialEq for CoalgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.dim == other.dim
            && self.comul == other.comul
            && self.counit == other.counit
    }
}

impl Eq for CoalgebraSpec {}

impl CoalgebraSpec {
    pub fn new(
        p: u64,
        dim: usize,
        comul: Vec<Vec<(usize, usize, u64)>>,
        counit: Vec<u64>,
    ) -> Result<Self> {
        check_characteristic(p)?;
        if comul.len() != dim || counit.len() != dim {
            return Err(Error::Shape(format!(
                "coalgebra of dim {dim} needs {dim} coproducts and counit values"
            )));
        }
        let mut clean = Vec::with_capacity(dim);
        for terms in comul {
            let mut dense = vec![0u64; dim * dim];
            for (j, k, v) in terms {
                if j >= dim || k >= dim {
                    return Err(Error::Shape(format!("coproduct index ({j},{k}) out of range")));
                }
                dense[j * dim + k] = add_mod(dense[j * dim + k], v % p, p);
            }
            clean.push(
                sparse(&dense)
                    .into_iter()
                    .map(|(x, v)| (x / dim, x % dim, v))
                    .collect(),
            );
        }
        Ok(CoalgebraSpec {
            p,
            dim,
            comul: clean,
            counit: counit.into_iter().map(|v| v % p).collect(),
            contra: OnceLock::new(),
        })
    }

    /// From `Delta` as an `n^2 x n` matrix and `epsilon` as `1 x n`.
    pub fn from_matrices(comul: &Matrix, counit: &Matrix) -> Result<Self> {
        let n = comul.cols();
        if comul.rows() != n * n || counit.rows() != 1 || counit.cols() != n {
            return Err(Error::Shape("comultiplication must be n^2 x n, counit 1 x n".into()));
        }
        let terms = (0..n)
            .map(|i| {
                sparse(&comul.column(i))
                    .into_iter()
                    .map(|(x, v)| (x / n, x % n, v))
                    .collect()
            })
            .collect();
        CoalgebraSpec::new(comul.characteristic(), n, terms, counit.row(0).to_vec())
    }

    /// The one-dimensional coalgebra `k`.
    pub fn ground(p: u64) -> Self {
        CoalgebraSpec {
            p,
            dim: 1,
            comul: vec![vec![(0, 0, 1)]],
            counit: vec![1],
            contra: OnceLock::new(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[u64] {
        &self.counit
    }

    pub fn coproduct(&self, i: usize) -> &[(usize, usize, u64)] {
        &self.comul[i]
    }

    pub fn apply_comul(&self, v: &[u64]) -> Vec<u64> {
        let (n, p) = (self.dim, self.p);
        let mut out = vec![0u64; n * n];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(j, k, c) in &self.comul[i] {
                out[j * n + k] = (out[j * n + k] + x * c) % p;
            }
        }
        out
    }

    pub fn apply_counit(&self, v: &[u64]) -> u64 {
        v.iter()
            .zip(&self.counit)
            .fold(0, |s, (&a, &b)| (s + a * b) % self.p)
    }

    pub fn comul_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.p, n * n, n);
        for (i, terms) in self.comul.iter().enumerate() {
            for &(j, k, v) in terms {
                m.set(j * n + k, i, v);
            }
        }
        m
    }

    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_data(self.p, 1, self.dim, self.counit.clone())
    }

    /// Coassociativity and counit residuals.
    pub fn validate(&self) -> Certificate {
        let (n, p) = (self.dim, self.p);
        let mut cert = Certificate::new("coalgebra axioms");
        let mut bad_coassoc = 0usize;
        let mut bad_counit = 0usize;
        for i in 0..n {
            let mut left = vec![0u64; n * n * n];
            let mut right = vec![0u64; n * n * n];
            for &(j, k, v) in &self.comul[i] {
                // (Delta (x) id): expand the first factor.
                for &(a, b, w) in &self.comul[j] {
                    let idx = (a * n + b) * n + k;
                    left[idx] = (left[idx] + v * w) % p;
                }
                for &(a, b, w) in &self.comul[k] {
                    let idx = (j * n + a) * n + b;
                    right[idx] = (right[idx] + v * w) % p;
                }
            }
            if left != right {
                bad_coassoc += 1;
            }
            let mut l = vec![0u64; n];
            let mut r = vec![0u64; n];
            for &(j, k, v) in &self.comul[i] {
                l[k] = (l[k] + self.counit[j] * v) % p;
                r[j] = (r[j] + self.counit[k] * v) % p;
            }
            let e = unit_vec(n, i);
            if l != e || r != e {
                bad_counit += 1;
            }
        }
        cert.check("coassociativity", bad_coassoc == 0, bad_coassoc);
        cert.check("counit", bad_counit == 0, bad_counit);
        cert
    }

    /// `C*` with the convolution product `(f g)(c) = sum f(c_(1)) g(c_(2))`
    /// and unit `epsilon`.
    pub fn dual_algebra(&self) -> AlgebraSpec {
        let n = self.dim;
        let mut mul = vec![Vec::new(); n * n];
        for (k, terms) in self.comul.iter().enumerate() {
            for &(i, j, v) in terms {
                mul[i * n + j].push((k, v));
            }
        }
        AlgebraSpec::new(self.p, n, mul, self.counit.clone()).expect("well-formed dual")
    }

    /// The algebra whose left modules are the contramodules over this
    /// coalgebra: the opposite of the convolution algebra.
    pub fn contra_algebra(&self) -> AlgebraSpec {
        self.dual_algebra().opposite()
    }

    /// The contra algebra with its cached representation data.
    pub fn contra_ring(&self) -> Arc<Ring> {
        self.contra
            .get_or_init(|| Ring::new(self.contra_algebra()))
            .clone()
    }
}

/// A finite-dimensional Hopf algebra `(H, mul, unit, Delta, epsilon, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraSpec {
    pub name: String,
    pub coalgebra: Arc<CoalgebraSpec>,
    pub algebra: AlgebraSpec,
    /// Column `i` is `S(c_i)`.
    pub antipode: Matrix,
}

impl HopfAlgebraSpec {
    pub fn new(
        name: impl Into<String>,
        coalgebra: CoalgebraSpec,
        algebra: AlgebraSpec,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = coalgebra.dim();
        if algebra.dim() != n || antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Shape("Hopf structure maps disagree on dimension".into()));
        }
        if algebra.characteristic() != coalgebra.characteristic() {
            return Err(Error::Shape("Hopf structure maps disagree on characteristic".into()));
        }
        Ok(HopfAlgebraSpec {
            name: name.into(),
            coalgebra: Arc::new(coalgebra),
            algebra,
            antipode,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.coalgebra.characteristic()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn unit(&self) -> &[u64] {
        self.algebra.unit()
    }

    pub fn product(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.algebra.product(a, b)
    }

    pub fn antipode_of(&self, v: &[u64]) -> Vec<u64> {
        self.antipode.apply(v)
    }

    /// Checks all Hopf axioms by exact contraction on basis elements.
    pub fn validate(&self) -> Certificate {
        let c = &self.coalgebra;
        let (n, p) = (self.dim(), self.characteristic());
        let mut cert = Certificate::new(format!("Hopf axioms for {}", self.name));
        cert.absorb("coalgebra", c.validate());
        cert.absorb("algebra", self.algebra.validate());

        // Delta and epsilon are algebra maps.
        let mut bad_mult = 0usize;
        let mut bad_counit_mult = 0usize;
        for a in 0..n {
            for b in 0..n {
                let ab = self.algebra.product(&unit_vec(n, a), &unit_vec(n, b));
                let lhs = c.apply_comul(&ab);
                let mut rhs = vec![0u64; n * n];
                for &(i, j, v) in c.coproduct(a) {
                    for &(k, l, w) in c.coproduct(b) {
                        let s = v * w % p;
                        for &(x, u) in self.algebra.basis_product(i, k) {
                            for &(y, t) in self.algebra.basis_product(j, l) {
                                let idx = x * n + y;
                                rhs[idx] = (rhs[idx] + s * (u * t % p)) % p;
                            }
                        }
                    }
                }
                if lhs != rhs {
                    bad_mult += 1;
                }
                if c.apply_counit(&ab) != c.counit()[a] * c.counit()[b] % p {
                    bad_counit_mult += 1;
                }
            }
        }
        let unit = self.unit().to_vec();
        let du = c.apply_comul(&unit);
        let uu: Vec<u64> = (0..n * n).map(|x| unit[x / n] * unit[x % n] % p).collect();
        cert.check("bialgebra/comultiplication multiplicative", bad_mult == 0, bad_mult);
        cert.check("bialgebra/comultiplication unital", du == uu, du == uu);
        cert.check(
            "bialgebra/counit multiplicative",
            bad_counit_mult == 0,
            bad_counit_mult,
        );
        let eu = c.apply_counit(&unit);
        cert.check("bialgebra/counit unital", eu == 1, eu);

        // m (S (x) id) Delta = eta epsilon = m (id (x) S) Delta
        let mut bad_left = 0usize;
        let mut bad_right = 0usize;
        for a in 0..n {
            let mut l = vec![0u64; n];
            let mut r = vec![0u64; n];
            for &(i, j, v) in c.coproduct(a) {
                let si = self.antipode.column(i);
                let sj = self.antipode.column(j);
                let x = self.algebra.product(&si, &unit_vec(n, j));
                let y = self.algebra.product(&unit_vec(n, i), &sj);
                for k in 0..n {
                    l[k] = (l[k] + v * x[k]) % p;
                    r[k] = (r[k] + v * y[k]) % p;
                }
            }
            let target: Vec<u64> = unit.iter().map(|&u| u * c.counit()[a] % p).collect();
            if l != target {
                bad_left += 1;
            }
            if r != target {
                bad_right += 1;
            }
        }
        cert.check("antipode/left", bad_left == 0, bad_left);
        cert.check("antipode/right", bad_right == 0, bad_right);
        cert
    }

    /// Validation as a `Result`, naming the first violated axiom.
    pub fn validated(&self) -> Result<Certificate> {
        let cert = self.validate();
        if let Some(e) = cert.failures().first() {
            return Err(Error::Axiom {
                axiom: e.label.clone(),
                residual: e.value.as_u64().unwrap_or(1) as usize,
            });
        }
        Ok(cert)
    }
}

/// Checks that `map: H -> K` preserves every Hopf structure map.
pub fn hopf_morphism_certificate(
    source: &HopfAlgebraSpec,
    target: &HopfAlgebraSpec,
    map: &Matrix,
) -> Certificate {
    let mut cert = Certificate::new(format!("Hopf morphism {} -> {}", source.name, target.name));
    let (n, m) = (source.dim(), target.dim());
    if map.rows() != m || map.cols() != n {
        cert.check("shape", false, format!("{}x{}", map.rows(), map.cols()));
        return cert;
    }
    let mut bad_mul = 0usize;
    for a in 0..n {
        for b in 0..n {
            let ab = source.product(&unit_vec(n, a), &unit_vec(n, b));
            let lhs = map.apply(&ab);
            let rhs = target.product(&map.column(a), &map.column(b));
            if lhs != rhs {
                bad_mul += 1;
            }
        }
    }
    cert.check("multiplication", bad_mul == 0, bad_mul);
    let unit_ok = map.apply(source.unit()) == target.unit();
    cert.check("unit", unit_ok, unit_ok);
    cert.absorb(
        "coalgebra",
        coalgebra_morphism_certificate(&source.coalgebra, &target.coalgebra, map),
    );
    let s_ok = map.mul(&source.antipode) == target.antipode.mul(map);
    cert.check("antipode", s_ok, s_ok);
    cert
}

pub fn coalgebra_morphism_certificate(
    source: &CoalgebraSpec,
    target: &CoalgebraSpec,
    map: &Matrix,
) -> Certificate {
    let mut cert = Certificate::new("coalgebra morphism");
    let (n, m, p) = (source.dim(), target.dim(), source.characteristic());
    if map.rows() != m || map.cols() != n {
        cert.check("shape", false, format!("{}x{}", map.rows(), map.cols()));
        return cert;
    }
    let mut bad_comul = 0usize;
    let mut bad_counit = 0usize;
    for i in 0..n {
        let img = map.column(i);
        let lhs = target.apply_comul(&img);
        let mut rhs = vec![0u64; m * m];
        for &(j, k, v) in source.coproduct(i) {
            let (a, b) = (map.column(j), map.column(k));
            for (x, &ax) in a.iter().enumerate() {
                if ax == 0 {
                    continue;
                }
                for (y, &by) in b.iter().enumerate() {
                    if by != 0 {
                        rhs[x * m + y] = (rhs[x * m + y] + v * (ax * by % p)) % p;
                    }
                }
            }
        }
        if lhs != rhs {
            bad_comul += 1;
        }
        if target.apply_counit(&img) != source.counit()[i] {
            bad_counit += 1;
        }
    }
    cert.check("comultiplication", bad_comul == 0, bad_comul);
    cert.check("counit", bad_counit == 0, bad_counit);
    cert
}

/// A validated coalgebra map `C -> D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMorphism {
    pub source: Arc<CoalgebraSpec>,
    pub target: Arc<CoalgebraSpec>,
    pub map: Matrix,
}

impl CoalgebraMorphism {
    pub fn new(source: Arc<CoalgebraSpec>, target: Arc<CoalgebraSpec>, map: Matrix) -> Result<Self> {
        let cert = coalgebra_morphism_certificate(&source, &target, &map);
        if !cert.verdict() {
            let labels: Vec<String> = cert.failures().iter().map(|e| e.label.clone()).collect();
            return Err(Error::Morphism(format!("not a coalgebra map: {}", labels.join(", "))));
        }
        Ok(CoalgebraMorphism { source, target, map })
    }

    pub fn identity(c: Arc<CoalgebraSpec>) -> Self {
        let map = Matrix::identity(c.characteristic(), c.dim());
        CoalgebraMorphism {
            source: c.clone(),
            target: c,
            map,
        }
    }

    /// The counit `C -> k` as a coalgebra map.
    pub fn counit(c: Arc<CoalgebraSpec>) -> Self {
        let p = c.characteristic();
        let map = c.counit_matrix();
        CoalgebraMorphism {
            source: c,
            target: Arc::new(CoalgebraSpec::ground(p)),
            map,
        }
    }

    /// `then` after `self`.
    pub fn then(&self, then: &CoalgebraMorphism) -> Result<CoalgebraMorphism> {
        if *self.target != *then.source {
            return Err(Error::CoalgebraMismatch("composition of non-composable maps".into()));
        }
        Ok(CoalgebraMorphism {
            source: self.source.clone(),
            target: then.target.clone(),
            map: then.map.mul(&self.map),
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.map.rank() == self.target.dim()
    }

    /// Checks the transpose `D* -> C*` is a unital algebra map.
    pub fn dual_is_algebra_map(&self) -> bool {
        let d = self.target.dual_algebra();
        let c = self.source.dual_algebra();
        let t = self.map.transpose();
        let m = d.dim();
        for i in 0..m {
            for j in 0..m {
                let lhs = t.apply(&d.product(&unit_vec(m, i), &unit_vec(m, j)));
                let rhs = c.product(&t.column(i), &t.column(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        t.apply(d.unit()) == c.unit()
    }
}

/// Multiplication table of a finite group; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn new(name: impl Into<String>, labels: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 || labels.len() != n || mul.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table must be square and nonempty".into()));
        }
        if mul.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup("table entry out of range".into()));
        }
        for a in 0..n {
            if mul[0][a] != a || mul[a][0] != a {
                return Err(Error::NotAGroup("element 0 is not the identity".into()));
            }
            if !(0..n).any(|b| mul[a][b] == 0) {
                return Err(Error::NotAGroup(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(GroupTable {
            name: name.into(),
            labels,
            mul,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul[a][b] == 0).expect("validated group")
    }

    pub fn trivial() -> Self {
        GroupTable {
            name: "1".into(),
            labels: vec!["e".into()],
            mul: vec![vec![0]],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|a| a.to_string()).collect();
        GroupTable {
            name: format!("Z/{n}"),
            labels,
            mul,
        }
    }

    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let (n, m) = (a.order(), b.order());
        let mut mul = vec![vec![0; n * m]; n * m];
        let mut labels = Vec::with_capacity(n * m);
        for x in 0..n * m {
            labels.push(format!("({},{})", a.labels[x / m], b.labels[x % m]));
            for y in 0..n * m {
                mul[x][y] = a.mul[x / m][y / m] * m + b.mul[x % m][y % m];
            }
        }
        GroupTable {
            name: format!("{}x{}", a.name, b.name),
            labels,
            mul,
        }
    }

    /// Closure of the given permutations under composition `(s t)(i) = s(t(i))`.
    pub fn from_permutations(name: impl Into<String>, perms: Vec<Vec<usize>>) -> Result<Self> {
        let Some(first) = perms.first() else {
            return Err(Error::NotAGroup("no permutations".into()));
        };
        let deg = first.len();
        let id: Vec<usize> = (0..deg).collect();
        let mut elems = vec![id.clone()];
        for perm in perms.into_iter().filter(|q| *q != id) {
            if !elems.contains(&perm) {
                elems.push(perm);
            }
        }
        let compose = |s: &[usize], t: &[usize]| t.iter().map(|&i| s[i]).collect::<Vec<_>>();
        let mut i = 0;
        while i < elems.len() {
            let cur = elems[i].clone();
            for j in 0..=i {
                for prod in [compose(&cur, &elems[j]), compose(&elems[j], &cur)] {
                    if !elems.contains(&prod) {
                        elems.push(prod);
                    }
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mul = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let prod = compose(&elems[a], &elems[b]);
                mul[a][b] = elems.iter().position(|e| *e == prod).expect("closed");
            }
        }
        let labels = elems.iter().map(|e| format!("{e:?}")).collect();
        GroupTable::new(name, labels, mul)
    }

    /// `S_3` with `N = {0, 1, 2}` the rotations and `K = {0, 3}` a reflection.
    pub fn symmetric3() -> Self {
        let perms = vec![
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![1, 0, 2],
            vec![2, 1, 0],
            vec![0, 2, 1],
        ];
        let compose = |s: &[usize], t: &[usize]| t.iter().map(|&i| s[i]).collect::<Vec<_>>();
        let mul = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let prod = compose(&perms[a], &perms[b]);
                        perms.iter().position(|e| *e == prod).unwrap()
                    })
                    .collect()
            })
            .collect();
        let labels = ["e", "r", "r2", "s", "sr", "sr2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        GroupTable::new("S3", labels, mul).expect("S3 is a group")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    /// Checks `elements` is closed under products and inverses.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        elements.contains(&0)
            && elements.iter().all(|&a| {
                elements.contains(&self.inverse(a))
                    && elements.iter().all(|&b| elements.contains(&self.mul[a][b]))
            })
    }

    /// The subgroup on the given elements, relabelled `0..k` in the given order.
    pub fn subgroup(&self, name: impl Into<String>, elements: &[usize]) -> Result<GroupTable> {
        if !self.is_subgroup(elements) || elements[0] != 0 {
            return Err(Error::NotAGroup("not a subgroup listed identity-first".into()));
        }
        let pos = |x: usize| elements.iter().position(|&e| e == x).unwrap();
        let mul = elements
            .iter()
            .map(|&a| elements.iter().map(|&b| pos(self.mul[a][b])).collect())
            .collect();
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        GroupTable::new(name, labels, mul)
    }
}

/// Where a group scheme came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Constant(GroupTable),
    /// Kernel of an additive polynomial; coefficients by degree.
    Additive(Vec<u64>),
    Multiplicative(usize),
    Imported,
}

/// A finite group scheme carried by its coordinate ring and Frobenius comorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSchemeDescriptor {
    pub name: String,
    pub ring: HopfAlgebraSpec,
    /// `F#: k[G] -> k[G]`.
    pub frobenius: Matrix,
    pub provenance: Provenance,
}

impl GroupSchemeDescriptor {
    pub fn order(&self) -> usize {
        self.ring.dim()
    }

    pub fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }

    pub fn coalgebra(&self) -> Arc<CoalgebraSpec> {
        self.ring.coalgebra.clone()
    }

    /// Hopf axioms plus the Frobenius comorphism being a Hopf endomorphism.
    pub fn validate(&self) -> Certificate {
        let mut cert = Certificate::new(format!("group scheme {}", self.name));
        cert.absorb("hopf", self.ring.validate());
        cert.absorb(
            "frobenius",
            hopf_morphism_certificate(&self.ring, &self.ring, &self.frobenius),
        );
        cert
    }

    pub fn frobenius_power(&self, r: u64) -> Matrix {
        self.frobenius.pow(r)
    }
}

/// Coordinate ring of a finite constant group: functions with basis `e_g`.
pub fn constant_group_scheme(group: &GroupTable, p: u64) -> Result<GroupSchemeDescriptor> {
    check_characteristic(p)?;
    let group = GroupTable::new(group.name.clone(), group.labels.clone(), group.mul.clone())?;
    let n = group.order();
    let mut mul = vec![Vec::new(); n * n];
    for g in 0..n {
        mul[g * n + g] = vec![(g, 1)];
    }
    let unit = vec![1; n];
    let mut comul = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            comul[group.mul[a][b]].push((a, b, 1));
        }
    }
    let counit = unit_vec(n, 0);
    let mut antipode = Matrix::zeros(p, n, n);
    for g in 0..n {
        antipode.set(group.inverse(g), g, 1);
    }
    let ring = HopfAlgebraSpec::new(
        format!("k^{}", group.name),
        CoalgebraSpec::new(p, n, comul, counit)?,
        AlgebraSpec::new(p, n, mul, unit)?,
        antipode,
    )?;
    Ok(GroupSchemeDescriptor {
        name: format!("{} at p={p}", group.name),
        ring,
        frobenius: Matrix::identity(p, n),
        provenance: Provenance::Constant(group),
    })
}

/// Reduces `x^k` modulo a polynomial given by coefficients (by degree).
pub fn reduce_monomial(k: usize, poly: &[u64], p: u64) -> Vec<u64> {
    let d = poly.len() - 1;
    let lead_inv = inv_mod(poly[d], p);
    let mut coeffs = vec![0u64; k.max(d) + 1];
    coeffs[k] = 1;
    for top in (d..=k).rev() {
        let c = coeffs[top];
        if c == 0 {
            continue;
        }
        let f = c * lead_inv % p;
        for (i, &a) in poly.iter().enumerate() {
            let idx = top - d + i;
            coeffs[idx] = sub_mod(coeffs[idx], f * a % p, p);
        }
    }
    coeffs.truncate(d);
    coeffs
}

fn binomial_mod(n: usize, k: usize, p: u64) -> u64 {
    // Lucas' theorem.
    let (mut n, mut k) = (n as u64, k as u64);
    let mut r = 1u64;
    while n > 0 || k > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for i in 0..b {
            c = c * ((a - i) % p) % p;
            c = c * inv_mod((i + 1) % p, p) % p;
        }
        r = r * c % p;
        n /= p;
        k /= p;
    }
    r
}

fn poly_string(poly: &[u64]) -> String {
    let terms: Vec<String> = poly
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| match (c, d) {
            (1, 0) => "1".into(),
            (1, 1) => "x".into(),
            (1, _) => format!("x^{d}"),
            (_, 0) => format!("{c}"),
            (_, 1) => format!("{c}x"),
            _ => format!("{c}x^{d}"),
        })
        .collect();
    terms.join("+")
}

/// `k[x]/(phi)` for an additive polynomial `phi`, with `x` primitive.
pub fn additive_kernel_scheme(phi: &[i64], p: u64) -> Result<GroupSchemeDescriptor> {
    check_characteristic(p)?;
    let mut poly: Vec<u64> = phi.iter().map(|&c| crate::linalg::reduce_i64(c, p)).collect();
    while poly.last() == Some(&0) {
        poly.pop();
    }
    if poly.len() < 2 {
        return Err(Error::NotAdditive("polynomial must be nonzero with a root at 0".into()));
    }
    for (d, &c) in poly.iter().enumerate() {
        if c != 0 && !is_p_power(d as u64, p) {
            return Err(Error::NotAdditive(format!(
                "monomial x^{d} in {} is not a p-power",
                poly_string(&poly)
            )));
        }
    }
    let d = poly.len() - 1;
    let reductions: Vec<Vec<u64>> = (0..(2 * d).max(p as usize * d))
        .map(|k| reduce_monomial(k, &poly, p))
        .collect();
    let mut mul = vec![Vec::new(); d * d];
    for a in 0..d {
        for b in 0..d {
            mul[a * d + b] = sparse(&reductions[a + b]);
        }
    }
    let mut comul = vec![Vec::new(); d];
    for (k, terms) in comul.iter_mut().enumerate() {
        for i in 0..=k {
            let c = binomial_mod(k, i, p);
            if c != 0 {
                terms.push((i, k - i, c));
            }
        }
    }
    let mut antipode = Matrix::zeros(p, d, d);
    let mut frobenius = Matrix::zeros(p, d, d);
    for k in 0..d {
        antipode.set(k, k, if k % 2 == 0 { 1 } else { p - 1 });
        for (i, &v) in reductions[p as usize * k].iter().enumerate() {
            frobenius.set(i, k, v);
        }
    }
    let label = poly_string(&poly);
    let ring = HopfAlgebraSpec::new(
        format!("k[x]/({label})"),
        CoalgebraSpec::new(p, d, comul, unit_vec(d, 0))?,
        AlgebraSpec::new(p, d, mul, unit_vec(d, 0))?,
        antipode,
    )?;
    Ok(GroupSchemeDescriptor {
        name: format!("ker({label}) at p={p}"),
        ring,
        frobenius,
        provenance: Provenance::Additive(poly),
    })
}

fn is_p_power(d: u64, p: u64) -> bool {
    let mut x = 1;
    while x < d {
        x *= p;
    }
    x == d
}

/// Coefficients of `x^(p^r)`.
pub fn frobenius_kernel_poly(p: u64, r: u32) -> Vec<i64> {
    let d = p.pow(r) as usize;
    let mut v = vec![0; d + 1];
    v[d] = 1;
    v
}

/// Coefficients of `(x^q - x)^(p^r) = x^(q p^r) - x^(p^r)`.
pub fn artin_schreier_power_poly(p: u64, q: u64, r: u32) -> Vec<i64> {
    let pr = p.pow(r) as usize;
    let d = q as usize * pr;
    let mut v = vec![0; d + 1];
    v[d] = 1;
    v[pr] = -1;
    v
}

/// `mu_n`: `k[x]/(x^n - 1)` with `x` grouplike.
pub fn mu_n(n: usize, p: u64) -> Result<GroupSchemeDescriptor> {
    check_characteristic(p)?;
    if n == 0 {
        return Err(Error::Input("mu_n needs n >= 1".into()));
    }
    let mut mul = vec![Vec::new(); n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = vec![((a + b) % n, 1)];
        }
    }
    let comul = (0..n).map(|k| vec![(k, k, 1)]).collect();
    let mut antipode = Matrix::zeros(p, n, n);
    let mut frobenius = Matrix::zeros(p, n, n);
    for k in 0..n {
        antipode.set((n - k) % n, k, 1);
        frobenius.set((k * p as usize) % n, k, 1);
    }
    let ring = HopfAlgebraSpec::new(
        format!("k[mu_{n}]"),
        CoalgebraSpec::new(p, n, comul, vec![1; n])?,
        AlgebraSpec::new(p, n, mul, unit_vec(n, 0))?,
        antipode,
    )?;
    Ok(GroupSchemeDescriptor {
        name: format!("mu_{n} at p={p}"),
        ring,
        frobenius,
        provenance: Provenance::Multiplicative(n),
    })
}

/// Validates a surjective Hopf map `k[G] -> k[H]` and returns it as a coalgebra map.
pub fn subgroup_quotient_map(
    g: &GroupSchemeDescriptor,
    h: &GroupSchemeDescriptor,
    map: Matrix,
) -> Result<CoalgebraMorphism> {
    let cert = hopf_morphism_certificate(&g.ring, &h.ring, &map);
    if !cert.verdict() {
        let labels: Vec<String> = cert.failures().iter().map(|e| e.label.clone()).collect();
        return Err(Error::Morphism(format!(
            "{} -> {} is not a Hopf map: {}",
            g.name,
            h.name,
            labels.join(", ")
        )));
    }
    let morph = CoalgebraMorphism {
        source: g.coalgebra(),
        target: h.coalgebra(),
        map,
    };
    if !morph.is_surjective() {
        return Err(Error::Morphism(format!("{} -> {} is not surjective", g.name, h.name)));
    }
    Ok(morph)
}

/// `x -> x` between additive kernel rings (valid when `phi_H` divides `phi_G`).
pub fn additive_quotient(
    g: &GroupSchemeDescriptor,
    h: &GroupSchemeDescriptor,
) -> Result<CoalgebraMorphism> {
    let Provenance::Additive(phi_h) = &h.provenance else {
        return Err(Error::Morphism("target is not an additive kernel".into()));
    };
    let p = g.characteristic();
    let (n, m) = (g.order(), h.order());
    let mut map = Matrix::zeros(p, m, n);
    for k in 0..n {
        for (i, &v) in reduce_monomial(k, phi_h, p).iter().enumerate() {
            map.set(i, k, v);
        }
    }
    subgroup_quotient_map(g, h, map)
}

/// Restriction of functions `k^G -> k^H` along `H -> G`, `h -> embedding[h]`.
pub fn constant_restriction(
    g: &GroupSchemeDescriptor,
    h: &GroupSchemeDescriptor,
    embedding: &[usize],
) -> Result<CoalgebraMorphism> {
    let p = g.characteristic();
    let (n, m) = (g.order(), h.order());
    if embedding.len() != m || embedding.iter().any(|&x| x >= n) {
        return Err(Error::Morphism("embedding has the wrong length".into()));
    }
    let mut map = Matrix::zeros(p, m, n);
    for (hi, &gi) in embedding.iter().enumerate() {
        map.set(hi, gi, 1);
    }
    subgroup_quotient_map(g, h, map)
}

/// All grouplike elements `Delta c = c (x) c`, `epsilon(c) = 1`.
///
/// Small coalgebras are enumerated directly; larger ones go through the
/// one-dimensional representations of the dual algebra.
pub fn grouplike_elements(c: &CoalgebraSpec) -> Vec<Vec<u64>> {
    let n = c.dim() as u32;
    let p = c.characteristic();
    if (p as f64).powi(n as i32) <= 65536.0 {
        grouplikes_by_enumeration(c)
    } else {
        grouplikes_by_characters(c)
    }
}

pub fn is_grouplike(c: &CoalgebraSpec, v: &[u64]) -> bool {
    let n = c.dim();
    let p = c.characteristic();
    if c.apply_counit(v) != 1 {
        return false;
    }
    let d = c.apply_comul(v);
    (0..n * n).all(|x| d[x] == v[x / n] * v[x % n] % p)
}

pub fn grouplikes_by_enumeration(c: &CoalgebraSpec) -> Vec<Vec<u64>> {
    let n = c.dim();
    let p = c.characteristic();
    let total = p.pow(n as u32);
    let mut out = Vec::new();
    let mut v = vec![0u64; n];
    for code in 0..total {
        let mut x = code;
        for slot in v.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        if is_grouplike(c, &v) {
            out.push(v.clone());
        }
    }
    out.sort();
    out
}

/// Grouplikes as the characters `C* -> k` found among the simple modules.
pub fn grouplikes_by_characters(c: &CoalgebraSpec) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = crate::repthy::one_dimensional_characters(&c.dual_algebra())
        .into_iter()
        .filter(|v| is_grouplike(c, v))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Whether `p` is prime; re-exported for callers validating parameters.
pub fn valid_characteristic(p: u64) -> bool {
    is_prime(p)
}
