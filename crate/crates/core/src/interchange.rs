//! JSON documents for Hopf algebras, morphisms, comodules and contramodules.
//!
//! Tensors are sparse lists of `[indices..., value]`. A document is either a
//! single algebra at top level, or an `algebras` array; both may carry
//! `morphisms`, `comodules`, `contramodules` and `towers`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::AlgebraSpec;
use crate::certificate::Certificate;
use crate::comodcontra::{Comodule, Contramodule, Side};
use crate::error::{Error, Result};
use crate::hopf::{
    coalgebra_morphism_certificate, CoalgebraMorphism, CoalgebraSpec, GroupSchemeDescriptor,
    HopfAlgebraSpec, Provenance,
};
use crate::linalg::{reduce_i64, Matrix};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HopfDoc {
    #[serde(default = "default_name")]
    pub name: String,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
    /// `[k, i, j, v]`: `Delta(c_k)` has `v c_i (x) c_j`.
    pub comul: Vec<[i64; 4]>,
    /// `[i, j, k, v]`: `c_i c_j` has `v c_k`.
    pub mul: Vec<[i64; 4]>,
    /// `[i, v]`.
    pub counit: Vec<[i64; 2]>,
    pub unit: Vec<[i64; 2]>,
    /// `[i, j, v]`: `S(c_i)` has `v c_j`.
    pub antipode: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<Vec<[i64; 3]>>,
}

fn default_name() -> String {
    "H".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Dense rows; column `j` is the image of `c_j`.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComoduleDoc {
    pub name: String,
    pub over: String,
    pub side: Side,
    pub dim: usize,
    /// `[c, a, i, v]`: `Delta(m_c)` has `v m_a (x) c_i` (right) or `v c_i (x) m_a` (left).
    pub coaction: Vec<[i64; 4]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContramoduleDoc {
    pub name: String,
    pub over: String,
    pub dim: usize,
    /// `[i, row, col, v]`: entries of `theta(c^i (x) -)`.
    pub theta: Vec<[i64; 4]>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<HopfDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorphismDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comodules: Vec<ComoduleDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contramodules: Vec<ContramoduleDoc>,
    /// `(p, q, r)`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub towers: Vec<[u64; 3]>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let value: Value = serde_json::from_str(text)?;
        let Value::Object(map) = &value else {
            return Err(Error::Input("document must be a JSON object".into()));
        };
        let mut doc: Document = serde_json::from_value(value.clone())?;
        if map.contains_key("char") {
            doc.algebras.insert(0, serde_json::from_value(value)?);
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn load(&self) -> Result<Workspace> {
        Workspace::from_document(self)
    }
}

fn index(v: i64, bound: usize, what: &str) -> Result<usize> {
    if v < 0 || v as usize >= bound {
        return Err(Error::Shape(format!("{what} index {v} out of range 0..{bound}")));
    }
    Ok(v as usize)
}

fn hopf_from_doc(d: &HopfDoc) -> Result<(HopfAlgebraSpec, Option<Matrix>)> {
    let p = d.characteristic;
    crate::linalg::check_characteristic(p)?;
    let n = d.dim;
    let mut comul = vec![Vec::new(); n];
    for &[k, i, j, v] in &d.comul {
        comul[index(k, n, "comul")?].push((index(i, n, "comul")?, index(j, n, "comul")?, reduce_i64(v, p)));
    }
    let mut mul = vec![Vec::new(); n * n];
    for &[i, j, k, v] in &d.mul {
        let (i, j) = (index(i, n, "mul")?, index(j, n, "mul")?);
        mul[i * n + j].push((index(k, n, "mul")?, reduce_i64(v, p)));
    }
    let dense = |entries: &[[i64; 2]], what: &str| -> Result<Vec<u64>> {
        let mut out = vec![0u64; n];
        for &[i, v] in entries {
            let i = index(i, n, what)?;
            out[i] = (out[i] + reduce_i64(v, p)) % p;
        }
        Ok(out)
    };
    let square = |entries: &[[i64; 3]], what: &str| -> Result<Matrix> {
        let mut m = Matrix::zeros(p, n, n);
        for &[i, j, v] in entries {
            m.add_at(index(j, n, what)?, index(i, n, what)?, reduce_i64(v, p));
        }
        Ok(m)
    };
    if let Some(labels) = &d.basis_labels {
        if labels.len() != n {
            return Err(Error::Shape(format!("{} basis labels for dim {n}", labels.len())));
        }
    }
    let h = HopfAlgebraSpec::new(
        d.name.clone(),
        CoalgebraSpec::new(p, n, comul, dense(&d.counit, "counit")?)?,
        AlgebraSpec::new(p, n, mul, dense(&d.unit, "unit")?)?,
        square(&d.antipode, "antipode")?,
    )?;
    let frob = d.frobenius.as_ref().map(|f| square(f, "frobenius")).transpose()?;
    Ok((h, frob))
}

fn square_entries(m: &Matrix) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for i in 0..m.cols() {
        for j in 0..m.rows() {
            let v = m.get(j, i);
            if v != 0 {
                out.push([i as i64, j as i64, v as i64]);
            }
        }
    }
    out
}

pub fn hopf_to_doc(h: &HopfAlgebraSpec, frobenius: Option<&Matrix>) -> HopfDoc {
    let n = h.dim();
    let c = &h.coalgebra;
    let mut comul = Vec::new();
    for k in 0..n {
        for &(i, j, v) in c.coproduct(k) {
            comul.push([k as i64, i as i64, j as i64, v as i64]);
        }
    }
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for &(k, v) in h.algebra.basis_product(i, j) {
                mul.push([i as i64, j as i64, k as i64, v as i64]);
            }
        }
    }
    let pairs = |v: &[u64]| -> Vec<[i64; 2]> {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| [i as i64, x as i64])
            .collect()
    };
    HopfDoc {
        name: h.name.clone(),
        characteristic: h.characteristic(),
        dim: n,
        basis_labels: None,
        comul,
        mul,
        counit: pairs(c.counit()),
        unit: pairs(h.unit()),
        antipode: square_entries(&h.antipode),
        frobenius: frobenius.map(square_entries),
    }
}

pub fn scheme_to_doc(g: &GroupSchemeDescriptor) -> HopfDoc {
    let mut d = hopf_to_doc(&g.ring, Some(&g.frobenius));
    d.name = g.name.clone();
    d.basis_labels = Some(match &g.provenance {
        Provenance::Constant(t) => t.labels.iter().map(|l| format!("e_{l}")).collect(),
        Provenance::Additive(_) => (0..g.order()).map(|k| format!("x^{k}")).collect(),
        Provenance::Multiplicative(_) => (0..g.order()).map(|k| format!("t^{k}")).collect(),
        Provenance::Imported => (0..g.order()).map(|k| format!("c{k}")).collect(),
    });
    d
}

pub fn contramodule_to_doc(name: &str, over: &str, b: &Contramodule) -> ContramoduleDoc {
    let mut theta = Vec::new();
    for (i, t) in b.theta.iter().enumerate() {
        for r in 0..t.rows() {
            for c in 0..t.cols() {
                let v = t.get(r, c);
                if v != 0 {
                    theta.push([i as i64, r as i64, c as i64, v as i64]);
                }
            }
        }
    }
    ContramoduleDoc {
        name: name.into(),
        over: over.into(),
        dim: b.dim,
        theta,
    }
}

pub fn comodule_to_doc(name: &str, over: &str, m: &Comodule) -> ComoduleDoc {
    let n = m.over.dim();
    let mut coaction = Vec::new();
    for c in 0..m.dim {
        for a in 0..m.dim {
            for i in 0..n {
                let v = m.coefficient(c, a, i);
                if v != 0 {
                    coaction.push([c as i64, a as i64, i as i64, v as i64]);
                }
            }
        }
    }
    ComoduleDoc {
        name: name.into(),
        over: over.into(),
        side: m.side,
        dim: m.dim,
        coaction,
    }
}

pub fn morphism_to_doc(name: &str, source: &str, target: &str, f: &CoalgebraMorphism) -> MorphismDoc {
    MorphismDoc {
        name: name.into(),
        source: source.into(),
        target: target.into(),
        matrix: f.map.to_rows().into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect(),
    }
}

/// A loaded document: every object resolved and shape-checked, not yet validated.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub algebras: BTreeMap<String, (HopfAlgebraSpec, Option<Matrix>)>,
    /// Stored unvalidated; `validate` reports whether each is a coalgebra map.
    pub morphisms: BTreeMap<String, CoalgebraMorphism>,
    pub comodules: BTreeMap<String, Comodule>,
    pub contramodules: BTreeMap<String, Contramodule>,
    pub towers: Vec<[u64; 3]>,
}

impl Workspace {
    pub fn from_document(doc: &Document) -> Result<Workspace> {
        let mut ws = Workspace {
            towers: doc.towers.clone(),
            ..Default::default()
        };
        for a in &doc.algebras {
            if ws.algebras.insert(a.name.clone(), hopf_from_doc(a)?).is_some() {
                return Err(Error::Input(format!("algebra {} defined twice", a.name)));
            }
        }
        for m in &doc.morphisms {
            let src = ws.coalgebra(&m.source)?;
            let tgt = ws.coalgebra(&m.target)?;
            let rows: Vec<Vec<i64>> = m.matrix.clone();
            let map = Matrix::from_rows(src.characteristic(), &rows)?;
            if map.rows() != tgt.dim() || map.cols() != src.dim() {
                return Err(Error::Shape(format!("morphism {} has the wrong shape", m.name)));
            }
            ws.morphisms.insert(
                m.name.clone(),
                CoalgebraMorphism {
                    source: src,
                    target: tgt,
                    map,
                },
            );
        }
        for m in &doc.comodules {
            let c = ws.coalgebra(&m.over)?;
            let p = c.characteristic();
            let n = c.dim();
            let mut coaction = Matrix::zeros(p, m.dim * n, m.dim);
            for &[cc, a, i, v] in &m.coaction {
                let (cc, a, i) = (index(cc, m.dim, "coaction")?, index(a, m.dim, "coaction")?, index(i, n, "coaction")?);
                let row = match m.side {
                    Side::Right => a * n + i,
                    Side::Left => i * m.dim + a,
                };
                coaction.add_at(row, cc, reduce_i64(v, p));
            }
            ws.comodules.insert(m.name.clone(), Comodule::new(c, m.side, coaction)?);
        }
        for b in &doc.contramodules {
            let c = ws.coalgebra(&b.over)?;
            let p = c.characteristic();
            let mut theta = vec![Matrix::zeros(p, b.dim, b.dim); c.dim()];
            for &[i, r, col, v] in &b.theta {
                let i = index(i, c.dim(), "theta")?;
                theta[i].add_at(index(r, b.dim, "theta")?, index(col, b.dim, "theta")?, reduce_i64(v, p));
            }
            ws.contramodules.insert(b.name.clone(), Contramodule::new(c, b.dim, theta)?);
        }
        Ok(ws)
    }

    pub fn coalgebra(&self, name: &str) -> Result<Arc<CoalgebraSpec>> {
        self.algebras
            .get(name)
            .map(|(h, _)| h.coalgebra.clone())
            .ok_or_else(|| Error::Input(format!("unknown algebra {name}")))
    }

    pub fn hopf(&self, name: &str) -> Result<&HopfAlgebraSpec> {
        self.algebras
            .get(name)
            .map(|(h, _)| h)
            .ok_or_else(|| Error::Input(format!("unknown algebra {name}")))
    }

    /// Runs every structural validator.
    pub fn validate(&self) -> Certificate {
        let mut cert = Certificate::new("document");
        for (name, (h, frob)) in &self.algebras {
            cert.absorb(name, h.validate());
            if let Some(f) = frob {
                cert.absorb(
                    &format!("{name}/frobenius"),
                    crate::hopf::hopf_morphism_certificate(h, h, f),
                );
            }
        }
        for (name, m) in &self.morphisms {
            cert.absorb(name, coalgebra_morphism_certificate(&m.source, &m.target, &m.map));
        }
        for (name, m) in &self.comodules {
            cert.absorb(name, m.validate());
        }
        for (name, b) in &self.contramodules {
            cert.absorb(name, b.validate());
        }
        cert
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodcontra::free_contramodule;
    use crate::hopf::{constant_group_scheme, mu_n, GroupTable};

    #[test]
    fn round_trip() {
        let g = constant_group_scheme(&GroupTable::symmetric3(), 3).unwrap();
        let mut doc = Document::default();
        doc.algebras.push(scheme_to_doc(&g));
        let free = free_contramodule(g.coalgebra(), 2);
        doc.contramodules.push(contramodule_to_doc("F", &g.name, &free));
        let reg = Comodule::regular(g.coalgebra(), Side::Left);
        doc.comodules.push(comodule_to_doc("R", &g.name, &reg));
        let text = doc.to_json();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back, doc);
        let ws = back.load().unwrap();
        assert_eq!(ws.contramodules["F"], free);
        assert_eq!(ws.comodules["R"], reg);
        let h = &ws.algebras[&g.name].0;
        assert_eq!((&h.coalgebra, &h.algebra, &h.antipode), (&g.ring.coalgebra, &g.ring.algebra, &g.ring.antipode));
        assert!(ws.validate().verdict());
    }

    #[test]
    fn top_level_algebra_and_errors() {
        let g = mu_n(2, 3).unwrap();
        let text = serde_json::to_string(&scheme_to_doc(&g)).unwrap();
        let ws = Document::parse(&text).unwrap().load().unwrap();
        assert_eq!(ws.algebras.len(), 1);
        let mut d = scheme_to_doc(&g);
        d.comul.push([5, 0, 0, 1]);
        assert!(matches!(Document { algebras: vec![d], ..Default::default() }.load(), Err(Error::Shape(_))));
        assert!(Document::parse("[1,2]").is_err());
    }
}
