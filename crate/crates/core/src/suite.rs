//! Certification suite: named checks over builtin instances, run in
//! parallel and reduced into a canonical report.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::catalog;
use crate::certificate::Certificate;
use crate::comodcontra::{
    dualize_comodule, free_contramodule, hom_contra, random_contramodule, restrict, Comodule, Contramodule,
    Side,
};
use crate::error::{Error, Result};
use crate::functors::{
    adjunction_check, comodule_weight_space, diagonal_hom, frobenius_twist, hom_identity_maps, induce,
    semidirect_induction, weight_decompose, Semidirect,
};
use crate::hopf::{grouplike_elements, CoalgebraMorphism, CoalgebraSpec, GroupSchemeDescriptor};
use crate::interchange::{scheme_to_doc, Document};
use crate::linalg::Matrix;
use crate::mockproj::{self, Tower};
use crate::repthy;

pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
}

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo { id: "hopf_axioms", anchor: "bundled coordinate rings satisfy the Hopf axioms" },
    CheckInfo { id: "free_universal", anchor: "Hom(Hom(C, V), W) over C is Hom(V, W)" },
    CheckInfo { id: "injective_dualize", anchor: "duals of injective comodules are projective contramodules" },
    CheckInfo { id: "adjunction", anchor: "induction is left adjoint to restriction" },
    CheckInfo { id: "hom_identity", anchor: "Hom(M, Ind B) = Ind Hom(M, B)" },
    CheckInfo { id: "semidirect_induction", anchor: "induction from a complement K of N is Hom(k[N], M)" },
    CheckInfo { id: "weight_lemma", anchor: "weights of Hom(M, B) are sums of weights" },
    CheckInfo { id: "mock_gate", anchor: "proper mock projectives exist iff p divides |H|" },
    CheckInfo { id: "induction_biconditional", anchor: "Ind k projective iff k projective over k[H]" },
    CheckInfo { id: "twist_family", anchor: "Frobenius twists of free contramodules are proper" },
    CheckInfo { id: "unipotent", anchor: "k is the only simple over a unipotent scheme" },
    CheckInfo { id: "multiplicity_identity", anchor: "dim Hom(Hom(M, P(l)), L(m)) = [Hom(M*, L(m)) : L(l)]" },
    CheckInfo { id: "projectivity_oracle", anchor: "splitting solver agrees with direct-summand search" },
    CheckInfo { id: "document", anchor: "structural validators on a supplied document" },
];

pub fn anchor(id: &str) -> Option<&'static str> {
    CHECKS.iter().find(|c| c.id == id).map(|c| c.anchor)
}

/// Largest candidate count for the direct-summand search.
pub const SEARCH_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    /// Builtin names to keep, or inline documents.
    #[serde(default)]
    pub instances: Vec<Value>,
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub budget: Option<f64>,
    /// `(p, q, r)`.
    #[serde(default)]
    pub towers: Vec<[u64; 3]>,
}

impl Manifest {
    pub fn default_suite(seed: u64) -> Self {
        Manifest {
            seed,
            ..Default::default()
        }
    }

    pub fn check_ids(&self) -> Result<Vec<&'static str>> {
        if self.checks.is_empty() {
            let mut all: Vec<&'static str> = CHECKS.iter().map(|c| c.id).filter(|&c| c != "document").collect();
            if self.instances.iter().any(|v| v.is_object()) {
                all.push("document");
            }
            return Ok(all);
        }
        self.checks
            .iter()
            .map(|c| {
                CHECKS
                    .iter()
                    .find(|x| x.id == c)
                    .map(|x| x.id)
                    .ok_or_else(|| Error::Input(format!("unknown check {c}")))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Falsified,
    Error,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub anchor: String,
    pub instance: String,
    pub verdict: Verdict,
    pub digest: String,
    /// Failed labels or the error message.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub detail: Vec<String>,
    #[serde(skip)]
    pub runtime_ms: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub falsified: usize,
    pub error: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub seed: u64,
    pub checks: Vec<String>,
    /// sha256 of each builtin instance document.
    pub instances: BTreeMap<String, String>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.summary.falsified == 0 && self.summary.error == 0 && self.summary.skipped == 0
    }

    /// Sorted keys, no timings.
    pub fn canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    }

    pub fn text(&self, timings: bool) -> String {
        let mut out = String::new();
        for r in &self.records {
            let v = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Falsified => "FALSIFIED",
                Verdict::Error => "ERROR",
                Verdict::Skipped => "SKIPPED",
            };
            out.push_str(&format!("{v:9} {:24} {}", r.check, r.instance));
            if timings {
                out.push_str(&format!(" ({:.1} ms)", r.runtime_ms));
            }
            if !r.detail.is_empty() {
                out.push_str(&format!(" [{}]", r.detail.join("; ")));
            }
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "seed {}: {} pass, {} falsified, {} error, {} skipped\n",
            self.seed, s.pass, s.falsified, s.error, s.skipped
        ));
        out
    }
}

type JobFn = Box<dyn Fn(&mut ChaCha8Rng) -> Result<Certificate> + Send + Sync>;

pub struct Job {
    pub check: &'static str,
    pub instance: String,
    run: JobFn,
}

fn job(check: &'static str, instance: impl Into<String>, f: impl Fn(&mut ChaCha8Rng) -> Result<Certificate> + Send + Sync + 'static) -> Job {
    Job {
        check,
        instance: instance.into(),
        run: Box::new(f),
    }
}

impl Job {
    /// Seeded from the suite seed, the check and the instance, so the outcome
    /// does not depend on scheduling.
    pub fn run(&self, seed: u64) -> Result<Certificate> {
        let mut h = Sha256::new();
        h.update(seed.to_le_bytes());
        h.update(self.check.as_bytes());
        h.update([0]);
        h.update(self.instance.as_bytes());
        let bytes: [u8; 32] = h.finalize().into();
        let mut rng = ChaCha8Rng::from_seed(bytes);
        (self.run)(&mut rng)
    }
}

fn split_schemes() -> Vec<String> {
    catalog::scheme_names()
        .into_iter()
        .filter(|n| n != "z3_p2")
        .collect()
}

/// Towers used by the tower checks: the manifest's, or the builtin additive ones.
fn additive_towers(m: &Manifest) -> Vec<String> {
    if m.towers.is_empty() {
        vec!["tower_p2_r1".into(), "tower_p2_r2".into(), "tower_p3_r1".into()]
    } else {
        m.towers.iter().map(|[p, q, r]| format!("tower_p{p}_q{q}_r{r}")).collect()
    }
}

fn load_tower(name: &str) -> Result<Tower> {
    let parts: Vec<&str> = name.split('_').collect();
    if let ["tower", p, q, r] = parts.as_slice() {
        let num = |s: &str, pre: char| s.strip_prefix(pre).and_then(|x| x.parse::<u64>().ok());
        if let (Some(p), Some(q), Some(r)) = (num(p, 'p'), num(q, 'q'), num(r, 'r')) {
            return mockproj::build_tower(p, q, r as u32);
        }
    }
    catalog::tower(name)
}

fn tower_levels(t: &Tower) -> Vec<(String, mockproj::Level)> {
    let mut out: Vec<(String, mockproj::Level)> = t
        .kernels
        .iter()
        .enumerate()
        .map(|(s, l)| (format!("pi_{}", s + 1), l.clone()))
        .collect();
    out.push(("pi_H".into(), t.finite_subgroup.clone()));
    out
}

/// Direct sums of trivial comodules at random grouplikes, in a random basis.
pub fn random_weight_comodule(c: &Arc<CoalgebraSpec>, rng: &mut ChaCha8Rng, max_dim: usize) -> Comodule {
    let p = c.characteristic();
    let weights = grouplike_elements(c);
    let d = rng.gen_range(1..=max_dim.max(1));
    let mut m = Comodule::trivial(c.clone(), Side::Right, &weights[rng.gen_range(0..weights.len())], 1);
    for _ in 1..d {
        let w = &weights[rng.gen_range(0..weights.len())];
        m = m
            .direct_sum(&Comodule::trivial(c.clone(), Side::Right, w, 1))
            .expect("same coalgebra");
    }
    loop {
        let data: Vec<u64> = (0..d * d).map(|_| rng.gen_range(0..p)).collect();
        if let Some(r) = m.change_basis(&Matrix::from_data(p, d, d, data)) {
            return r;
        }
    }
}

/// Injective summands `e . C` of the regular right comodule, one per primitive idempotent.
pub fn injective_summands(g: &GroupSchemeDescriptor) -> Result<Vec<Comodule>> {
    let c = g.coalgebra();
    let p = c.characteristic();
    let n = c.dim();
    let reg = Comodule::regular(c.clone(), Side::Right);
    let mut out = Vec::new();
    for e in repthy::primitive_idempotents(&c.contra_ring())? {
        let mut l = Matrix::zeros(p, n, n);
        for i in 0..n {
            for &(j, k, v) in c.coproduct(i) {
                l.add_at(k, i, v * e[j] % p);
            }
        }
        out.push(reg.subcomodule(&l.column_space())?);
    }
    Ok(out)
}

/// Projectivity verdict against the search oracle, or the cover count when
/// the search space is too large.
pub fn oracle_certificate(b: &Contramodule) -> Result<Certificate> {
    let m = b.to_dual_module();
    let mut cert = Certificate::new("projectivity oracle");
    let v = repthy::is_projective(&m);
    cert.check("certificate rechecks", v.recheck(&m), v.residual_rank);
    match repthy::projective_by_search(&m, SEARCH_LIMIT) {
        Some(found) => {
            cert.check("route", true, "search");
            cert.equal("solver = search", v.verdict, found);
        }
        None => {
            cert.check("route", true, "cover");
            cert.equal("solver = cover count", v.verdict, repthy::projective_by_cover(&m)?);
        }
    }
    Ok(cert)
}

fn jobs_for(check: &'static str, m: &Manifest) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    match check {
        "hopf_axioms" => {
            for name in catalog::scheme_names() {
                jobs.push(job(check, name.clone(), move |_| Ok(catalog::scheme(&name)?.validate())));
            }
        }
        "free_universal" => {
            for name in catalog::scheme_names() {
                for j in 0..20 {
                    let name = name.clone();
                    jobs.push(job(check, format!("{name}/{j:02}"), move |rng| {
                        let c = catalog::scheme(&name)?.coalgebra();
                        free_universal(&c, 1 + j % 2, rng)
                    }));
                }
            }
        }
        "injective_dualize" => {
            for name in catalog::scheme_names() {
                let n2 = name.clone();
                jobs.push(job(check, format!("{name}/cofree"), move |_| {
                    let g = catalog::scheme(&n2)?;
                    let reg = Comodule::regular(g.coalgebra(), Side::Right);
                    projective_dual(&reg, 2)
                }));
                if name == "z3_p2" {
                    continue;
                }
                let count = injective_summands(&catalog::scheme(&name)?)?.len();
                for i in 0..count {
                    let name = name.clone();
                    jobs.push(job(check, format!("{name}/summand{i}"), move |_| {
                        let g = catalog::scheme(&name)?;
                        projective_dual(&injective_summands(&g)?[i], 1)
                    }));
                }
            }
            jobs.push(job(check, "ga1_p2/trivial", |_| {
                let g = catalog::scheme("ga1_p2")?;
                let k = Comodule::trivial(g.coalgebra(), Side::Right, g.ring.unit(), 1);
                let mut cert = Certificate::new("non-injective comodule");
                cert.absorb("comodule", k.validate());
                let v = dualize_comodule(&k, 1)?.is_projective();
                cert.check("refused", !v.verdict, v.verdict);
                cert.check("nonzero obstruction", v.residual_rank > 0, v.residual_rank);
                Ok(cert)
            }));
        }
        "adjunction" => {
            let mut towers = additive_towers(m);
            towers.push("control_z2_p3".into());
            towers.push("s3_over_z2_p3".into());
            for t in towers {
                let levels = tower_levels(&load_tower(&t)?);
                for (lname, _) in levels {
                    for j in 0..5 {
                        let (t, lname) = (t.clone(), lname.clone());
                        jobs.push(job(check, format!("{t}/{lname}/{j}"), move |rng| {
                            let tower = load_tower(&t)?;
                            let level = tower_levels(&tower).into_iter().find(|(n, _)| *n == lname).expect("level").1;
                            let b = random_contramodule(&level.scheme.coalgebra(), rng, 2);
                            let v = random_contramodule(&tower.ambient.coalgebra(), rng, 1);
                            let mut cert = adjunction_check(&level.map, &b, &v)?;
                            cert.absorb("Ind B", induce(&level.map, &b)?.result.validate());
                            Ok(cert)
                        }));
                    }
                }
            }
        }
        "hom_identity" => {
            let triples: &[(&str, &str, &str, &str)] = &[
                ("tower_p2_r1", "pi_H", "trivial", "trivial"),
                ("tower_p2_r1", "pi_H", "trivial", "free"),
                ("tower_p2_r1", "pi_H", "regular", "trivial"),
                ("tower_p2_r1", "pi_H", "regular", "free"),
                ("tower_p2_r1", "pi_1", "trivial", "trivial"),
                ("tower_p2_r1", "pi_1", "regular", "trivial"),
                ("tower_p2_r1", "pi_1", "regular", "free"),
                ("tower_p2_r2", "pi_H", "regular", "trivial"),
                ("tower_p2_r2", "pi_2", "trivial", "free"),
                ("tower_p3_r1", "pi_H", "trivial", "trivial"),
                ("tower_p3_r1", "pi_H", "regular", "trivial"),
                ("tower_p3_r1", "pi_H", "trivial", "free"),
                ("s3_over_z2_p3", "pi_H", "trivial", "trivial"),
                ("s3_over_z2_p3", "pi_H", "trivial", "free"),
                ("s3_over_z2_p3", "pi_H", "regular", "trivial"),
                ("s3_over_z2_p3", "pi_H", "regular", "free"),
            ];
            for &(t, l, mm, b) in triples {
                jobs.push(job(check, format!("{t}/{l}/M={mm}/B={b}"), move |_| {
                    let tower = load_tower(t)?;
                    let level = tower_levels(&tower).into_iter().find(|(n, _)| n == l).expect("level").1;
                    let g = &tower.ambient;
                    let module = match mm {
                        "regular" => Comodule::regular(g.coalgebra(), Side::Right),
                        _ => Comodule::trivial(g.coalgebra(), Side::Right, g.ring.unit(), 1),
                    };
                    let bb = match b {
                        "free" => free_contramodule(level.scheme.coalgebra(), 1),
                        _ => Contramodule::trivial_hopf(&level.scheme.ring, 1),
                    };
                    Ok(hom_identity_maps(&g.ring, &level.scheme.ring, &level.map, &module, &bb)?.certificate)
                }));
            }
        }
        "semidirect_induction" => {
            for which in ["trivial", "free"] {
                jobs.push(job(check, format!("s3_p3/M={which}"), move |_| {
                    let sd = Semidirect::new(catalog::scheme("s3_p3")?, &[0, 1, 2], &[0, 3])?;
                    let module = if which == "free" {
                        free_contramodule(sd.k_scheme.coalgebra(), 1)
                    } else {
                        Contramodule::trivial_hopf(&sd.k_scheme.ring, 1)
                    };
                    semidirect_induction(&sd, &module)
                }));
            }
        }
        "weight_lemma" => {
            for j in 0..10 {
                jobs.push(job(check, format!("mu2_p3/{j}"), |rng| weight_lemma(&catalog::scheme("mu2_p3")?, rng)));
            }
        }
        "mock_gate" => {
            for t in additive_towers(m) {
                jobs.push(job(check, t.clone(), move |rng| {
                    let tower = load_tower(&t)?;
                    let mut cert = mockproj::gate_check(&tower, rng.gen(), 0)?;
                    let w = mockproj::build_witness(&tower)?;
                    let v = mockproj::is_mock_projective(&w.result, &tower)?;
                    cert.check("witness is proper mock projective", v.is_proper(), v.levels());
                    Ok(cert)
                }));
            }
            jobs.push(job(check, "control_z2_p3", |rng| {
                mockproj::gate_check(&catalog::tower("control_z2_p3")?, rng.gen(), 20)
            }));
            jobs.push(job(check, "degenerate_p2_r1", |rng| {
                let tower = catalog::tower("degenerate_p2_r1")?;
                let mut cert = mockproj::gate_check(&tower, rng.gen(), 0)?;
                let w = mockproj::build_witness(&tower)?;
                cert.check("witness is free", w.result == free_contramodule(tower.ambient.coalgebra(), 1), true);
                Ok(cert)
            }));
        }
        "induction_biconditional" => {
            for (t, expect) in [("tower_p2_r1", false), ("tower_p3_r1", false), ("s3_over_z2_p3", true)] {
                jobs.push(job(check, t, move |_| {
                    let tower = catalog::tower(t)?;
                    let mut cert = mockproj::induction_biconditional(&tower)?;
                    let k = Contramodule::trivial_hopf(&tower.finite_subgroup.scheme.ring, 1).is_projective();
                    let w = mockproj::build_witness(&tower)?.result.is_projective();
                    cert.equal("k projective over k[H]", k.verdict, expect);
                    cert.equal("witness projective over the ambient", w.verdict, expect);
                    Ok(cert)
                }));
                for module in ["trivial", "regular"] {
                    jobs.push(job(check, format!("{t}/hom_{module}"), move |_| {
                        let tower = catalog::tower(t)?;
                        let c = tower.ambient.coalgebra();
                        let m = if module == "trivial" {
                            Comodule::trivial(c.clone(), Side::Right, tower.ambient.ring.unit(), 1)
                        } else {
                            Comodule::regular(c, Side::Right)
                        };
                        mockproj::hom_induction_check(&tower, &m)
                    }));
                }
            }
        }
        "twist_family" => {
            let mut cases: Vec<(String, u32)> = additive_towers(m)
                .into_iter()
                .filter(|t| !t.contains("r2"))
                .map(|t| (t, 1))
                .collect();
            cases.push(("tower_p2_r1".into(), 0));
            cases.push(("control_z2_p3".into(), 1));
            for (t, r) in cases {
                jobs.push(job(check, format!("{t}/r={r}"), move |_| {
                    let tower = load_tower(&t)?;
                    let mut cert = mockproj::twist_family_check(&tower, r)?;
                    if r == 0 || !tower.is_additive() {
                        let free = free_contramodule(tower.ambient.coalgebra(), 1);
                        let tw = frobenius_twist(&free, &tower.ambient, r as u64)?;
                        cert.check("twist is the original", tw == free, true);
                    }
                    Ok(cert)
                }));
            }
        }
        "unipotent" => {
            for t in additive_towers(m) {
                jobs.push(job(check, t.clone(), move |_| mockproj::unipotent_checks(&load_tower(&t)?)));
            }
            for name in catalog::scheme_names() {
                if !(name.starts_with("ga") || name.starts_with("as") || name.starts_with("amb")) {
                    continue;
                }
                jobs.push(job(check, name.clone(), move |_| {
                    let g = catalog::scheme(&name)?;
                    let ring = g.coalgebra().contra_ring();
                    let mut cert = Certificate::new(format!("unique simple over {name}"));
                    let dims: Vec<usize> = repthy::simple_modules(&ring)?.iter().map(|s| s.dim()).collect();
                    cert.equal("simples", dims, vec![1]);
                    cert.equal("characters", repthy::one_dimensional_characters(ring.spec()).len(), 1);
                    cert.equal("codim of radical", ring.dim() - ring.radical().len(), 1);
                    Ok(cert)
                }));
            }
        }
        "multiplicity_identity" => {
            for name in ["s3_p3", "z2_p2"] {
                for which in ["trivial", "regular", "regular2"] {
                    jobs.push(job(check, format!("{name}/M={which}"), move |_| {
                        let g = catalog::scheme(name)?;
                        let h = &g.ring;
                        let reg = Comodule::regular(g.coalgebra(), Side::Right);
                        let module = match which {
                            "trivial" => Comodule::trivial(g.coalgebra(), Side::Right, h.unit(), 1),
                            "regular" => reg,
                            _ => reg.tensor(&reg, h)?,
                        };
                        let n = repthy::simple_modules(&g.coalgebra().contra_ring())?.len();
                        let mut cert = Certificate::new(format!("multiplicity identity over {name}"));
                        for l in 0..n {
                            for u in 0..n {
                                cert.absorb(
                                    &format!("({l},{u})"),
                                    repthy::multiplicity_identity_check(h, &module, l, u)?,
                                );
                            }
                        }
                        Ok(cert)
                    }));
                }
            }
        }
        "projectivity_oracle" => {
            for (name, b) in oracle_instances(m)? {
                jobs.push(job(check, name, move |_| oracle_certificate(&b)));
            }
        }
        "document" => {
            for (i, v) in m.instances.iter().enumerate() {
                if !v.is_object() {
                    continue;
                }
                let text = v.to_string();
                jobs.push(job(check, format!("document{i}"), move |_| {
                    Ok(Document::parse(&text)?.load()?.validate())
                }));
            }
        }
        other => return Err(Error::Input(format!("unknown check {other}"))),
    }
    Ok(jobs)
}

fn free_universal(c: &Arc<CoalgebraSpec>, d: usize, rng: &mut ChaCha8Rng) -> Result<Certificate> {
    let p = c.characteristic();
    let n = c.dim();
    let w = random_contramodule(c, rng, 2);
    let free = free_contramodule(c.clone(), d);
    let mut cert = Certificate::new("free universal property");
    cert.absorb("W", w.validate());
    let hom = hom_contra(&free, &w)?;
    cert.check("basis maps are morphisms", hom.verify(), hom.dim());
    cert.equal("dim Hom(free, W) = d dim W", hom.dim(), d * w.dim);
    // f -> (f(epsilon (x) v_s))_s
    let mut eval = Matrix::zeros(p, d * w.dim, 0);
    for f in &hom.basis {
        let mut col = Vec::with_capacity(d * w.dim);
        for s in 0..d {
            let mut u = vec![0u64; n * d];
            for (j, &e) in c.counit().iter().enumerate() {
                u[j * d + s] = e;
            }
            col.extend(f.apply(&u));
        }
        eval = eval.hstack(&Matrix::column_vector(p, &col));
    }
    cert.equal("evaluation is injective", eval.rank(), hom.dim());
    Ok(cert)
}

fn projective_dual(m: &Comodule, d: usize) -> Result<Certificate> {
    let mut cert = Certificate::new("dual of an injective comodule");
    cert.absorb("comodule", m.validate());
    let b = dualize_comodule(m, d)?;
    let v = b.is_projective();
    cert.check("certificate rechecks", v.recheck(&b.to_dual_module()), v.residual_rank);
    cert.check("projective", v.verdict, v.residual_rank);
    Ok(cert)
}

fn weight_lemma(t: &GroupSchemeDescriptor, rng: &mut ChaCha8Rng) -> Result<Certificate> {
    let c = t.coalgebra();
    let h = &t.ring;
    let id = CoalgebraMorphism::identity(c.clone());
    let m = random_weight_comodule(&c, rng, 3);
    let b = random_contramodule(&c, rng, 2);
    let mut cert = Certificate::new("weights of Hom(M, B)");
    cert.absorb("M", m.validate());
    cert.absorb("B", b.validate());
    let hom = diagonal_hom(&m, &b, h)?;
    let lhs = weight_decompose(&hom, &id)?;
    let wb = weight_decompose(&b, &id)?;
    cert.equal("defect of B", wb.defect, 0);
    cert.equal("defect of Hom(M, B)", lhs.defect, 0);
    for (nu, space) in lhs.weights.iter().zip(&lhs.spaces) {
        let mut rhs = 0usize;
        for alpha in &wb.weights {
            let dm = comodule_weight_space(&m, alpha).cols();
            for (beta, bs) in wb.weights.iter().zip(&wb.spaces) {
                if h.product(alpha, beta) == *nu {
                    rhs += dm * bs.cols();
                }
            }
        }
        cert.equal(format!("weight {nu:?}"), space.cols(), rhs);
    }
    Ok(cert)
}

/// Every contramodule of dimension at most 32 that the suite handles.
pub fn oracle_instances(m: &Manifest) -> Result<Vec<(String, Contramodule)>> {
    let mut out = Vec::new();
    let mut towers = additive_towers(m);
    towers.extend(["control_z2_p3", "degenerate_p2_r1", "s3_over_z2_p3"].map(String::from));
    for t in &towers {
        let tower = load_tower(t)?;
        let w = mockproj::build_witness(&tower)?.result;
        let free = free_contramodule(tower.ambient.coalgebra(), 1);
        out.push((format!("{t}/trivial"), Contramodule::trivial_hopf(&tower.ambient.ring, 1)));
        for (lname, level) in tower_levels(&tower) {
            out.push((format!("{t}/witness|{lname}"), restrict(&level.map, &w)?));
        }
        out.push((format!("{t}/twisted"), frobenius_twist(&free, &tower.ambient, 1)?));
        out.push((format!("{t}/free"), free));
        out.push((format!("{t}/witness"), w));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(m.seed ^ 0x6f72_6163);
    for name in split_schemes() {
        let g = catalog::scheme(&name)?;
        let c = g.coalgebra();
        for j in 0..3 {
            out.push((format!("{name}/random{j}"), random_contramodule(&c, &mut rng, 2)));
        }
        out.push((format!("{name}/trivial"), Contramodule::trivial_hopf(&g.ring, 1)));
        for (i, s) in injective_summands(&g)?.iter().enumerate() {
            out.push((format!("{name}/summand{i}"), dualize_comodule(s, 1)?));
        }
    }
    out.retain(|(_, b)| b.dim <= 32);
    Ok(out)
}

/// sha256 of each builtin scheme's interchange document.
pub fn instance_hashes() -> BTreeMap<String, String> {
    catalog::scheme_names()
        .into_iter()
        .filter_map(|n| {
            let g = catalog::scheme(&n).ok()?;
            let text = serde_json::to_string(&scheme_to_doc(&g)).ok()?;
            let h = Sha256::digest(text.as_bytes());
            Some((n, h.iter().map(|b| format!("{b:02x}")).collect()))
        })
        .collect()
}

fn keep(m: &Manifest, instance: &str) -> bool {
    let names: Vec<&str> = m.instances.iter().filter_map(|v| v.as_str()).collect();
    names.is_empty() || names.iter().any(|n| instance.split('/').next() == Some(n))
}

pub fn collect_jobs(m: &Manifest) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for id in m.check_ids()? {
        jobs.extend(jobs_for(id, m)?.into_iter().filter(|j| j.check == "document" || keep(m, &j.instance)));
    }
    Ok(jobs)
}

/// Runs the manifest on `jobs` worker threads (0 = all cores).
pub fn run_suite(m: &Manifest, jobs: usize) -> Result<Report> {
    let start = Instant::now();
    let work = collect_jobs(m)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Input(e.to_string()))?;
    let budget = m.budget;
    let mut records: Vec<Record> = pool.install(|| {
        work.par_iter()
            .map(|j| {
                let anchor = anchor(j.check).unwrap_or_default().to_string();
                let base = Record {
                    check: j.check.to_string(),
                    anchor,
                    instance: j.instance.clone(),
                    verdict: Verdict::Skipped,
                    digest: String::new(),
                    detail: Vec::new(),
                    runtime_ms: 0.0,
                };
                if budget.is_some_and(|b| start.elapsed().as_secs_f64() > b) {
                    return Record {
                        detail: vec!["budget exhausted".into()],
                        ..base
                    };
                }
                let t0 = Instant::now();
                let out = j.run(m.seed);
                let runtime_ms = t0.elapsed().as_secs_f64() * 1e3;
                match out {
                    Ok(cert) => Record {
                        verdict: if cert.verdict() { Verdict::Pass } else { Verdict::Falsified },
                        digest: cert.digest(),
                        detail: cert.failures().iter().map(|e| format!("{}: {}", e.label, e.value)).collect(),
                        runtime_ms,
                        ..base
                    },
                    Err(e) => {
                        let msg = e.to_string();
                        let h = Sha256::digest(msg.as_bytes());
                        Record {
                            verdict: Verdict::Error,
                            digest: h.iter().map(|b| format!("{b:02x}")).collect(),
                            detail: vec![msg],
                            runtime_ms,
                            ..base
                        }
                    }
                }
            })
            .collect()
    });
    records.sort_by(|a, b| (&a.check, &a.instance).cmp(&(&b.check, &b.instance)));
    let mut summary = Summary::default();
    for r in &records {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Falsified => summary.falsified += 1,
            Verdict::Error => summary.error += 1,
            Verdict::Skipped => summary.skipped += 1,
        }
    }
    Ok(Report {
        seed: m.seed,
        checks: m.check_ids()?.into_iter().map(String::from).collect(),
        instances: instance_hashes(),
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_filters() {
        let m = Manifest {
            checks: vec!["hopf_axioms".into()],
            instances: vec![Value::from("s3_p3")],
            ..Default::default()
        };
        let r = run_suite(&m, 2).unwrap();
        assert_eq!(r.records.len(), 1);
        assert!(r.all_pass());
        let bad = Manifest {
            checks: vec!["nonsense".into()],
            ..Default::default()
        };
        assert!(run_suite(&bad, 1).is_err());
    }

    #[test]
    fn deterministic_reports() {
        let m = Manifest {
            checks: vec!["weight_lemma".into(), "semidirect_induction".into()],
            seed: 11,
            ..Default::default()
        };
        let a = run_suite(&m, 1).unwrap().canonical_json();
        let b = run_suite(&m, 4).unwrap().canonical_json();
        assert_eq!(a, b);
        assert!(!a.contains("runtime"));
    }
}
