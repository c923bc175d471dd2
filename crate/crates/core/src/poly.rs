//! Dense univariate polynomials over F_p, coefficients lowest degree first.

use crate::linalg::{inv_mod, sub_mod};

pub fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Quotient and remainder of `f / g`; `g` must be nonzero.
pub fn div_rem(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let g = trim(g.to_vec());
    let dg = g.len() - 1;
    let lead_inv = inv_mod(g[dg], p);
    let mut r = trim(f.to_vec());
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - dg];
    while r.len() > dg {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        q[top - dg] = c;
        for (i, &a) in g.iter().enumerate() {
            let idx = top - dg + i;
            r[idx] = sub_mod(r[idx], c * a % p, p);
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    div_rem(&mul(a, b, p), m, p).1
}

/// `base^e mod m`.
pub fn pow_mod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = div_rem(&[1], m, p).1;
    let mut b = div_rem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

/// Monic gcd.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = div_rem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = inv_mod(lead, p);
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

/// Distinct roots in F_p, sorted.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    // gcd(f, x^p - x) is the product of the distinct linear factors.
    let xp = pow_mod(&[0, 1], p, &f, p);
    let mut xp_minus_x = xp;
    xp_minus_x.resize(xp_minus_x.len().max(2), 0);
    xp_minus_x[1] = sub_mod(xp_minus_x[1], 1, p);
    let g = gcd(&f, &xp_minus_x, p);
    let mut out = Vec::new();
    split_linear(&g, p, &mut out);
    out.sort();
    out
}

fn split_linear(g: &[u64], p: u64, out: &mut Vec<u64>) {
    let d = match degree(g) {
        None | Some(0) => return,
        Some(d) => d,
    };
    if d == 1 {
        out.push(sub_mod(0, g[0] * inv_mod(g[1], p) % p, p));
        return;
    }
    if p == 2 {
        for x in 0..2u64 {
            if g.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0 {
                out.push(x);
            }
        }
        return;
    }
    for a in 0..p {
        let mut h = pow_mod(&[a, 1], (p - 1) / 2, g, p);
        h.resize(h.len().max(1), 0);
        h[0] = sub_mod(h[0], 1, p);
        let h = gcd(g, &h, p);
        let dh = degree(&h).unwrap_or(0);
        if dh > 0 && dh < d {
            let other = div_rem(g, &h, p).0;
            split_linear(&h, p, out);
            split_linear(&other, p, out);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_split_and_irreducible() {
        // (x-1)(x-2)(x-4) over F_7
        let f = mul(&mul(&[6, 1], &[5, 1], 7), &[3, 1], 7);
        assert_eq!(roots(&f, 7), vec![1, 2, 4]);
        // x^2 + x + 1 is irreducible over F_2
        assert!(roots(&[1, 1, 1], 2).is_empty());
        // (x - 1)^2 over F_3
        assert_eq!(roots(&[1, 1, 1], 3), vec![1]);
    }

    #[test]
    fn division() {
        let (q, r) = div_rem(&[1, 0, 0, 1], &[1, 1], 2);
        assert_eq!(q, vec![1, 1, 1]);
        assert!(r.is_empty());
    }
}
