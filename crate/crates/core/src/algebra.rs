//! Finite-dimensional associative unital algebras given by structure constants.

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::linalg::{add_mod, Matrix, RowEchelon};

/// Algebra with basis `a_0..a_{n-1}`; `a_i a_j = sum_k mul[i*n+j][k] a_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    p: u64,
    dim: usize,
    mul: Vec<Vec<(usize, u64)>>,
    unit: Vec<u64>,
}

impl AlgebraSpec {
    /// Builds from a product table; entries are reduced and zero terms dropped.
    pub fn new(p: u64, dim: usize, mul: Vec<Vec<(usize, u64)>>, unit: Vec<u64>) -> Result<Self> {
        if mul.len() != dim * dim || unit.len() != dim {
            return Err(Error::Shape(format!(
                "algebra of dim {dim} needs {} products and a unit of length {dim}",
                dim * dim
            )));
        }
        let mut clean = Vec::with_capacity(mul.len());
        for terms in mul {
            let mut dense = vec![0u64; dim];
            for (k, v) in terms {
                if k >= dim {
                    return Err(Error::Shape(format!("product index {k} out of range")));
                }
                dense[k] = add_mod(dense[k], v % p, p);
            }
            clean.push(sparse(&dense));
        }
        Ok(AlgebraSpec {
            p,
            dim,
            mul: clean,
            unit: unit.into_iter().map(|v| v % p).collect(),
        })
    }

    /// From a multiplication map `A (x) A -> A` and a unit column.
    pub fn from_matrices(mul: &Matrix, unit: &Matrix) -> Result<Self> {
        let n = unit.rows();
        if mul.rows() != n || mul.cols() != n * n || unit.cols() != 1 {
            return Err(Error::Shape("multiplication must be n x n^2".into()));
        }
        let table = (0..n * n)
            .map(|c| sparse(&mul.column(c)))
            .collect();
        AlgebraSpec::new(mul.characteristic(), n, table, unit.column(0))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.mul[i * self.dim + j]
    }

    pub fn product(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let s = x * y % p;
                for &(k, v) in &self.mul[i * self.dim + j] {
                    out[k] = (out[k] + s * v) % p;
                }
            }
        }
        out
    }

    /// Matrix of `x -> a x`.
    pub fn left_mult(&self, a: &[u64]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.p, n, n);
        for j in 0..n {
            let col = self.product(a, &unit_vec(n, j));
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Matrix of `x -> x a`.
    pub fn right_mult(&self, a: &[u64]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.p, n, n);
        for j in 0..n {
            let col = self.product(&unit_vec(n, j), a);
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Left regular representation of basis elements.
    pub fn left_regular(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| self.left_mult(&unit_vec(self.dim, i)))
            .collect()
    }

    pub fn opposite(&self) -> AlgebraSpec {
        let n = self.dim;
        let mut mul = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = self.mul[j * n + i].clone();
            }
        }
        AlgebraSpec {
            p: self.p,
            dim: n,
            mul,
            unit: self.unit.clone(),
        }
    }

    /// The product as a map `A (x) A -> A`.
    pub fn mul_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.p, n, n * n);
        for (c, terms) in self.mul.iter().enumerate() {
            for &(k, v) in terms {
                m.set(k, c, v);
            }
        }
        m
    }

    pub fn validate(&self) -> Certificate {
        let n = self.dim;
        let mut cert = Certificate::new("algebra axioms");
        let mut bad_assoc = 0usize;
        for i in 0..n {
            let ei = unit_vec(n, i);
            for j in 0..n {
                let ij = self.product(&ei, &unit_vec(n, j));
                for k in 0..n {
                    let ek = unit_vec(n, k);
                    let lhs = self.product(&ij, &ek);
                    let jk = self.product(&unit_vec(n, j), &ek);
                    let rhs = self.product(&ei, &jk);
                    if lhs != rhs {
                        bad_assoc += 1;
                    }
                }
            }
        }
        cert.check("associativity", bad_assoc == 0, bad_assoc);
        let mut bad_unit = 0usize;
        for i in 0..n {
            let ei = unit_vec(n, i);
            if self.product(&self.unit, &ei) != ei || self.product(&ei, &self.unit) != ei {
                bad_unit += 1;
            }
        }
        cert.check("unit", bad_unit == 0, bad_unit);
        cert
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| self.mul[i * n + j] == self.mul[j * n + i]))
    }

    /// Basis of the centre, as coordinate vectors.
    pub fn center(&self) -> Vec<Vec<u64>> {
        let n = self.dim;
        // z = sum z_k a_k commutes with every a_i.
        let mut eqs = RowEchelon::new(self.p, n);
        for i in 0..n {
            let ei = unit_vec(n, i);
            let l = self.right_mult(&ei); // z -> z a_i
            let r = self.left_mult(&ei); // z -> a_i z
            let d = l.sub(&r);
            for row in 0..n {
                eqs.insert(d.row(row));
            }
        }
        eqs.basis_rows().kernel().columns()
    }

    /// Span of the subalgebra generated by the given elements (including 1).
    pub fn generated_subalgebra(&self, gens: &[Vec<u64>]) -> RowEchelon {
        let mut span = RowEchelon::new(self.p, self.dim);
        let mut queue: Vec<Vec<u64>> = vec![self.unit.clone()];
        queue.extend(gens.iter().cloned());
        while let Some(v) = queue.pop() {
            if span.insert(&v) {
                for g in gens {
                    queue.push(self.product(&v, g));
                }
            }
        }
        span
    }

    /// A subset of basis indices generating the algebra.
    pub fn basis_generators(&self) -> Vec<usize> {
        let n = self.dim;
        let mut gens: Vec<usize> = Vec::new();
        let mut vecs: Vec<Vec<u64>> = Vec::new();
        let mut span = self.generated_subalgebra(&vecs);
        for i in 0..n {
            if span.rank() == n {
                break;
            }
            let ei = unit_vec(n, i);
            if span.contains(&ei) {
                continue;
            }
            gens.push(i);
            vecs.push(ei);
            span = self.generated_subalgebra(&vecs);
        }
        gens
    }
}

pub fn unit_vec(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn sparse(v: &[u64]) -> Vec<(usize, u64)> {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i, x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// F_p[x]/(x^2) with basis 1, x.
    fn dual_numbers(p: u64) -> AlgebraSpec {
        AlgebraSpec::new(
            p,
            2,
            vec![vec![(0, 1)], vec![(1, 1)], vec![(1, 1)], vec![]],
            vec![1, 0],
        )
        .unwrap()
    }

    #[test]
    fn dual_numbers_valid_and_commutative() {
        let a = dual_numbers(2);
        assert!(a.validate().verdict());
        assert!(a.is_commutative());
        assert_eq!(a.center().len(), 2);
        assert_eq!(a.basis_generators(), vec![1]);
    }

    #[test]
    fn matrix_algebra_center_is_scalars() {
        // M_2(F_3) with matrix units e11, e12, e21, e22.
        let p = 3;
        let n = 4;
        let mut mul = vec![Vec::new(); n * n];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            mul[(i * 2 + j) * n + (k * 2 + l)] = vec![(i * 2 + l, 1)];
                        }
                    }
                }
            }
        }
        let a = AlgebraSpec::new(p, n, mul, vec![1, 0, 0, 1]).unwrap();
        assert!(a.validate().verdict());
        assert!(!a.is_commutative());
        assert_eq!(a.center(), vec![vec![1, 0, 0, 1]]);
        let o = a.opposite();
        assert!(o.validate().verdict());
    }
}
