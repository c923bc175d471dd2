//! Towers of Frobenius kernels inside a finite ambient scheme, the induced
//! witness, and mock-projectivity verdicts.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::Certificate;
use crate::comodcontra::{free_contramodule, hom_contra, random_contramodule, restrict, Comodule, Contramodule};
use crate::error::{Error, Result};
use crate::functors::{diagonal_hom, frobenius_twist, induce, InducedContramodule};
use crate::hopf::{
    additive_kernel_scheme, additive_quotient, artin_schreier_power_poly, constant_group_scheme,
    frobenius_kernel_poly, subgroup_quotient_map, CoalgebraMorphism, GroupSchemeDescriptor, GroupTable,
    Provenance,
};
use crate::linalg::Matrix;
use crate::repthy::{self, ProjectivityCertificate};

/// A subgroup scheme together with its quotient map from the ambient ring.
#[derive(Clone, Debug)]
pub struct Level {
    pub scheme: GroupSchemeDescriptor,
    pub map: CoalgebraMorphism,
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub name: String,
    pub ambient: GroupSchemeDescriptor,
    /// `G_1 ⊂ ... ⊂ G_r`.
    pub kernels: Vec<Level>,
    pub finite_subgroup: Level,
    pub p: u64,
    pub q: u64,
    pub r: u32,
}

fn level_to(ambient: &GroupSchemeDescriptor, scheme: GroupSchemeDescriptor, map: Matrix) -> Result<Level> {
    let map = subgroup_quotient_map(ambient, &scheme, map)?;
    Ok(Level { scheme, map })
}

fn trivial_level(ambient: &GroupSchemeDescriptor) -> Result<Level> {
    let p = ambient.characteristic();
    let triv = constant_group_scheme(&GroupTable::trivial(), p)?;
    level_to(ambient, triv, ambient.coalgebra().counit_matrix())
}

/// Ambient `ker (x^q - x)^{p^r}` in `G_a`, kernels `ker x^{p^s}` and `H = ker(x^q - x)`.
pub fn build_tower(p: u64, q: u64, r: u32) -> Result<Tower> {
    if r == 0 {
        return Err(Error::Input("tower depth must be at least 1".into()));
    }
    let mut x = p;
    while x < q {
        x *= p;
    }
    if x != q {
        return Err(Error::Input(format!("q = {q} is not a power of p = {p}")));
    }
    let ambient = additive_kernel_scheme(&artin_schreier_power_poly(p, q, r), p)?;
    let mut kernels = Vec::new();
    for s in 1..=r {
        let scheme = additive_kernel_scheme(&frobenius_kernel_poly(p, s), p)?;
        let map = additive_quotient(&ambient, &scheme)?;
        kernels.push(Level { scheme, map });
    }
    let mut as_poly = vec![0i64; q as usize + 1];
    as_poly[1] = -1;
    as_poly[q as usize] = 1;
    let h = additive_kernel_scheme(&as_poly, p)?;
    let map = additive_quotient(&ambient, &h)?;
    let tower = Tower {
        name: format!("p={p} q={q} r={r}"),
        ambient,
        kernels,
        finite_subgroup: Level { scheme: h, map },
        p,
        q,
        r,
    };
    tower.validated()
}

/// A constant ambient group: its Frobenius kernels are trivial.
pub fn constant_tower(group: &GroupTable, subgroup: &[usize], p: u64, r: u32) -> Result<Tower> {
    let ambient = constant_group_scheme(group, p)?;
    let kernels = (0..r).map(|_| trivial_level(&ambient)).collect::<Result<Vec<_>>>()?;
    let h = group.subgroup(format!("{} in {}", subgroup.len(), group.name), subgroup)?;
    let hs = constant_group_scheme(&h, p)?;
    let map = crate::hopf::constant_restriction(&ambient, &hs, subgroup)?;
    let tower = Tower {
        name: format!("{} > {} at p={p}", group.name, h.name),
        ambient,
        kernels,
        finite_subgroup: Level { scheme: hs, map },
        p,
        q: p,
        r,
    };
    tower.validated()
}

/// The additive tower with `H` replaced by the trivial group.
pub fn degenerate_tower(p: u64, r: u32) -> Result<Tower> {
    let mut t = build_tower(p, p, r)?;
    t.finite_subgroup = trivial_level(&t.ambient)?;
    t.name = format!("p={p} r={r}, H trivial");
    Ok(t)
}

impl Tower {
    /// Hopf axioms of every piece and `pi_s o F#^s = 1 epsilon`.
    pub fn validate(&self) -> Certificate {
        let mut cert = Certificate::new(format!("tower {}", self.name));
        cert.absorb("ambient", self.ambient.validate());
        let eps = self.ambient.coalgebra().counit_matrix();
        for (s, level) in self.kernels.iter().enumerate() {
            let s1 = s as u64 + 1;
            cert.absorb(&format!("G_{s1}"), level.scheme.validate());
            let unit = Matrix::column_vector(self.p, level.scheme.ring.unit());
            let lhs = level.map.map.mul(&self.ambient.frobenius_power(s1));
            cert.residual(format!("G_{s1} is the kernel of F^{s1}"), &lhs.sub(&unit.mul(&eps)));
        }
        cert.absorb("H", self.finite_subgroup.scheme.validate());
        cert
    }

    pub fn validated(self) -> Result<Self> {
        let cert = self.validate();
        if let Some(f) = cert.failures().first() {
            return Err(Error::Axiom {
                axiom: f.label.clone(),
                residual: f.value.get("nonzero_entries").and_then(|v| v.as_u64()).unwrap_or(1) as usize,
            });
        }
        Ok(self)
    }

    pub fn subgroup_order(&self) -> usize {
        self.finite_subgroup.scheme.order()
    }

    pub fn is_additive(&self) -> bool {
        matches!(self.ambient.provenance, Provenance::Additive(_))
    }
}

/// `Ind_{k[H]}^{k[ambient]} k`.
pub fn build_witness(t: &Tower) -> Result<InducedContramodule> {
    let k = Contramodule::trivial_hopf(&t.finite_subgroup.scheme.ring, 1);
    induce(&t.finite_subgroup.map, &k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mock {
    ProperMockProjective,
    Projective,
    NotMockProjective,
}

#[derive(Clone, Debug)]
pub struct MockVerdict {
    pub per_level: Vec<ProjectivityCertificate>,
    pub ambient: ProjectivityCertificate,
}

impl MockVerdict {
    pub fn levels(&self) -> Vec<bool> {
        self.per_level.iter().map(|c| c.verdict).collect()
    }

    pub fn kind(&self) -> Mock {
        if !self.per_level.iter().all(|c| c.verdict) {
            Mock::NotMockProjective
        } else if self.ambient.verdict {
            Mock::Projective
        } else {
            Mock::ProperMockProjective
        }
    }

    pub fn is_proper(&self) -> bool {
        self.kind() == Mock::ProperMockProjective
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut c = Certificate::new("mock projectivity");
        c.check("levels", true, self.levels());
        c.check("ambient", true, self.ambient.verdict);
        c.check("obstruction", true, self.ambient.residual_rank);
        c.check("verdict", true, serde_json::to_value(self.kind()).unwrap_or_default());
        c
    }
}

pub fn is_mock_projective(b: &Contramodule, t: &Tower) -> Result<MockVerdict> {
    if *b.over != *t.ambient.ring.coalgebra {
        return Err(Error::CoalgebraMismatch("contramodule is not over the ambient ring".into()));
    }
    let per_level = t
        .kernels
        .iter()
        .map(|l| Ok(restrict(&l.map, b)?.is_projective()))
        .collect::<Result<Vec<_>>>()?;
    Ok(MockVerdict {
        per_level,
        ambient: b.is_projective(),
    })
}

/// `Ind k` projective over the ambient iff `k` projective over `k[H]`, both
/// sides computed separately.
pub fn induction_biconditional(t: &Tower) -> Result<Certificate> {
    let mut cert = Certificate::new(format!("induced trivial on {}", t.name));
    let w = build_witness(t)?;
    let ind = w.result.is_projective();
    let k = Contramodule::trivial_hopf(&t.finite_subgroup.scheme.ring, 1).is_projective();
    cert.check("Ind k certificate rechecks", ind.recheck(&w.result.to_dual_module()), ind.residual_rank);
    cert.check(
        "k certificate rechecks",
        k.recheck(&Contramodule::trivial_hopf(&t.finite_subgroup.scheme.ring, 1).to_dual_module()),
        k.residual_rank,
    );
    cert.check("k projective over k[H] implies Ind k projective", !k.verdict || ind.verdict, serde_json::json!({"k": k.verdict, "ind": ind.verdict}));
    cert.check("Ind k projective implies k projective over k[H]", !ind.verdict || k.verdict, serde_json::json!({"k": k.verdict, "ind": ind.verdict}));
    Ok(cert)
}

/// `Hom(M, Ind k)` projective over the ambient iff `Hom(M, k)` projective over
/// `k[H]`, for a right comodule `M` over the ambient. The hypothesis that every
/// simple over `k[H]` is restricted from the ambient is checked first; when it
/// fails the biconditional is not asserted.
pub fn hom_induction_check(t: &Tower, m: &Comodule) -> Result<Certificate> {
    let mut cert = Certificate::new(format!("Hom(M, Ind k) on {}", t.name));
    let h = &t.finite_subgroup;
    let h_ring = h.scheme.coalgebra().contra_ring();
    let ambient_simples = repthy::simple_modules(&t.ambient.coalgebra().contra_ring())?
        .iter()
        .map(|l| {
            let b = Contramodule::from_dual_module(t.ambient.coalgebra(), l)?;
            Ok(restrict(&h.map, &b)?.to_dual_module())
        })
        .collect::<Result<Vec<_>>>()?;
    let mut hypothesis = true;
    for s in repthy::simple_modules(&h_ring)? {
        let mut found = false;
        for r in ambient_simples.iter().filter(|r| r.dim() == s.dim()) {
            // a nonzero map out of a simple of equal dimension is an isomorphism
            if !repthy::hom(&s, r)?.is_empty() {
                found = true;
                break;
            }
        }
        hypothesis &= found;
    }
    cert.check("simples over k[H] are restricted from the ambient", true, hypothesis);
    if !hypothesis {
        return Ok(cert);
    }
    let w = build_witness(t)?;
    let lhs = diagonal_hom(m, &w.result, &t.ambient.ring)?;
    let rhs = diagonal_hom(
        &m.corestrict(&h.map)?,
        &Contramodule::trivial_hopf(&h.scheme.ring, 1),
        &h.scheme.ring,
    )?;
    cert.absorb("Hom(M, Ind k)", lhs.validate());
    cert.absorb("Hom(M, k)", rhs.validate());
    let (l, r) = (lhs.is_projective(), rhs.is_projective());
    cert.check("Hom(M, Ind k) certificate rechecks", l.recheck(&lhs.to_dual_module()), l.residual_rank);
    cert.check("Hom(M, k) certificate rechecks", r.recheck(&rhs.to_dual_module()), r.residual_rank);
    cert.equal("Hom(M, Ind k) projective iff Hom(M, k) projective over k[H]", l.verdict, r.verdict);
    Ok(cert)
}

/// The finite-scale gate: a proper witness exists iff `p` divides `|H|`.
/// Cosemisimple ambients additionally get `samples` random contramodules,
/// all of which must be projective.
pub fn gate_check(t: &Tower, seed: u64, samples: usize) -> Result<Certificate> {
    let mut cert = Certificate::new(format!("gate on {}", t.name));
    cert.absorb("tower", t.validate());
    let w = build_witness(t)?;
    let v = is_mock_projective(&w.result, t)?;
    let divides = t.subgroup_order() as u64 % t.p == 0;
    cert.check("witness verdict", true, serde_json::to_value(v.kind()).unwrap_or_default());
    cert.equal("proper witness iff p divides |H|", v.is_proper(), divides);
    cert.absorb("biconditional", induction_biconditional(t)?);
    let free = free_contramodule(t.ambient.coalgebra(), 1);
    for (s, l) in t.kernels.iter().enumerate() {
        let ok = restrict(&l.map, &free)?.is_projective().verdict;
        cert.check(format!("free restricts to a projective over G_{}", s + 1), ok, ok);
    }
    let ring = t.ambient.coalgebra().contra_ring();
    if ring.is_semisimple() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = t.ambient.coalgebra();
        let mut projective = 0usize;
        for _ in 0..samples {
            let b = random_contramodule(&c, &mut rng, 2);
            if b.validate().verdict() && b.is_projective().verdict {
                projective += 1;
            }
        }
        cert.equal("cosemisimple: sampled contramodules projective", projective, samples);
    }
    Ok(cert)
}

/// The free contramodule twisted by `F#^r`: projective over `k[H]`, trivial
/// over `G_s` for `s <= r`, and not projective over the ambient once `F` is
/// not invertible.
pub fn twist_family_check(t: &Tower, r: u32) -> Result<Certificate> {
    let mut cert = Certificate::new(format!("twist by F^{r} on {}", t.name));
    let free = free_contramodule(t.ambient.coalgebra(), 1);
    let twisted = frobenius_twist(&free, &t.ambient, r as u64)?;
    cert.absorb("twisted", twisted.validate());
    let fr = t.ambient.frobenius_power(r as u64);
    let h = &t.finite_subgroup;
    cert.residual("F# restricts to the identity on H", &h.map.map.mul(&fr).sub(&h.map.map));
    let over_h = restrict(&h.map, &twisted)?.is_projective();
    cert.check("projective over k[H]", over_h.verdict, over_h.residual_rank);
    for (s, l) in t.kernels.iter().enumerate().take(r as usize) {
        let res = restrict(&l.map, &twisted)?;
        cert.check(
            format!("trivial over G_{}", s + 1),
            res.is_trivial_at(l.scheme.ring.unit()),
            true,
        );
    }
    let ambient = twisted.is_projective();
    let frobenius_invertible = fr.inverse().is_some();
    cert.equal("ambient projective iff F^r invertible", ambient.verdict, frobenius_invertible);
    if fr.is_identity() {
        let same = twisted == free;
        cert.check("twist by the identity is the original", same, same);
    }
    Ok(cert)
}

/// Unique simple over a unipotent ambient and the head of the witness.
pub fn unipotent_checks(t: &Tower) -> Result<Certificate> {
    let mut cert = Certificate::new(format!("unipotent checks on {}", t.name));
    let ring = t.ambient.coalgebra().contra_ring();
    let simples = repthy::simple_modules(&ring)?;
    let dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
    cert.equal("simples", dims, vec![1]);
    // Exhaustive: every one-dimensional character, and the radical has codimension one.
    let chars = repthy::one_dimensional_characters(ring.spec());
    cert.equal("one-dimensional characters", chars.len(), 1);
    cert.equal("codim of radical", ring.dim() - ring.radical().len(), 1);
    let w = build_witness(t)?;
    cert.equal("head of witness", repthy::head(&w.result.to_dual_module())?, vec![1]);
    let k = Contramodule::trivial_hopf(&t.ambient.ring, 1);
    let direct = hom_contra(&w.result, &k)?.dim();
    let kh = Contramodule::trivial_hopf(&t.finite_subgroup.scheme.ring, 1);
    let adjoint = hom_contra(&kh, &restrict(&t.finite_subgroup.map, &k)?)?.dim();
    cert.equal("dim Hom(witness, k) direct", direct, 1);
    cert.equal("dim Hom(witness, k) by adjunction", adjoint, direct);
    let free2 = free_contramodule(t.ambient.coalgebra(), 2);
    cert.equal("head of free rank 2", repthy::head(&free2.to_dual_module())?, vec![2]);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_dims() {
        let t = build_tower(2, 2, 1).unwrap();
        assert_eq!(t.ambient.order(), 4);
        assert_eq!(t.kernels[0].scheme.order(), 2);
        assert_eq!(t.subgroup_order(), 2);
        assert_eq!(build_tower(3, 3, 1).unwrap().ambient.order(), 9);
        let t = build_tower(2, 2, 2).unwrap();
        assert_eq!(t.ambient.order(), 8);
        assert_eq!(t.kernels.len(), 2);
        assert!(build_tower(2, 3, 1).is_err());
        assert!(build_tower(2, 2, 0).is_err());
    }

    #[test]
    fn hom_into_induced_trivial() {
        use crate::comodcontra::Side;
        for (name, expect) in [("tower_p2_r1", [false, true]), ("tower_p3_r1", [false, true]), ("s3_over_z2_p3", [true, true])] {
            let t = crate::catalog::tower(name).unwrap();
            let c = t.ambient.coalgebra();
            let ms = [
                Comodule::trivial(c.clone(), Side::Right, t.ambient.ring.unit(), 1),
                Comodule::regular(c, Side::Right),
            ];
            for (m, e) in ms.iter().zip(expect) {
                let cert = hom_induction_check(&t, m).unwrap();
                assert!(cert.verdict(), "{name}: {:?}", cert.failures());
                let get = |l: &str| &cert.entries.iter().find(|x| x.label == l).unwrap().value;
                assert_eq!(get("simples over k[H] are restricted from the ambient"), &serde_json::json!(true));
                let both = get("Hom(M, Ind k) projective iff Hom(M, k) projective over k[H]");
                assert_eq!(both["lhs"], serde_json::json!(e), "{name}");
            }
        }
    }

    #[test]
    fn witness_verdicts() {
        let t = build_tower(2, 2, 1).unwrap();
        let w = build_witness(&t).unwrap();
        assert_eq!(w.result.dim, 2);
        let v = is_mock_projective(&w.result, &t).unwrap();
        assert_eq!(v.levels(), vec![true]);
        assert_eq!(v.kind(), Mock::ProperMockProjective);
        let k = Contramodule::trivial_hopf(&t.ambient.ring, 1);
        assert_eq!(is_mock_projective(&k, &t).unwrap().kind(), Mock::NotMockProjective);
        let free = free_contramodule(t.ambient.coalgebra(), 1);
        assert_eq!(is_mock_projective(&free, &t).unwrap().kind(), Mock::Projective);
        let t3 = build_tower(3, 3, 1).unwrap();
        assert_eq!(build_witness(&t3).unwrap().result.dim, 3);
    }

    #[test]
    fn degenerate_is_free() {
        let t = degenerate_tower(2, 1).unwrap();
        let w = build_witness(&t).unwrap();
        assert_eq!(w.result, free_contramodule(t.ambient.coalgebra(), 1));
        assert!(gate_check(&t, 1, 0).unwrap().verdict());
    }

    #[test]
    fn gates() {
        let t = build_tower(2, 2, 1).unwrap();
        let c = gate_check(&t, 7, 0).unwrap();
        assert!(c.verdict(), "{:?}", c.failures());
        let ctrl = constant_tower(&GroupTable::cyclic(2), &[0, 1], 3, 1).unwrap();
        let c = gate_check(&ctrl, 7, 5).unwrap();
        assert!(c.verdict(), "{:?}", c.failures());
        let neg = constant_tower(&GroupTable::symmetric3(), &[0, 3], 3, 1).unwrap();
        let c = induction_biconditional(&neg).unwrap();
        assert!(c.verdict(), "{:?}", c.failures());
        assert!(build_witness(&neg).unwrap().result.is_projective().verdict);
    }

    #[test]
    fn twists_and_heads() {
        let t = build_tower(2, 2, 1).unwrap();
        let c = twist_family_check(&t, 1).unwrap();
        assert!(c.verdict(), "{:?}", c.failures());
        let c = twist_family_check(&t, 0).unwrap();
        assert!(c.verdict(), "{:?}", c.failures());
        let c = unipotent_checks(&t).unwrap();
        assert!(c.verdict(), "{:?}", c.failures());
    }
}
