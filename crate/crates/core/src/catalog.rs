//! Builtin instances, generated by constructors.

use crate::error::{Error, Result};
use crate::hopf::{
    additive_kernel_scheme, artin_schreier_power_poly, constant_group_scheme, frobenius_kernel_poly, mu_n,
    GroupSchemeDescriptor, GroupTable,
};
use crate::mockproj::{build_tower, constant_tower, degenerate_tower, Tower};

fn group(name: &str) -> Option<GroupTable> {
    Some(match name {
        "z2" => GroupTable::cyclic(2),
        "z3" => GroupTable::cyclic(3),
        "z2z2" => GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2)),
        "s3" => GroupTable::symmetric3(),
        _ => return None,
    })
}

/// Names of every builtin group scheme.
pub fn scheme_names() -> Vec<String> {
    let mut out = Vec::new();
    for p in [2, 3] {
        for g in ["z2", "z3", "z2z2", "s3"] {
            out.push(format!("{g}_p{p}"));
        }
        for r in 1..=2 {
            out.push(format!("ga{r}_p{p}"));
        }
        out.push(format!("as_p{p}"));
        for r in 1..=2 {
            out.push(format!("amb_p{p}_r{r}"));
        }
        for n in 1..=4 {
            out.push(format!("mu{n}_p{p}"));
        }
    }
    out
}

fn parse_p(s: &str) -> Option<u64> {
    s.strip_prefix('p')?.parse().ok()
}

/// A builtin group scheme by name, e.g. `s3_p3`, `ga2_p2`, `amb_p2_r1`, `mu4_p3`.
pub fn scheme(name: &str) -> Result<GroupSchemeDescriptor> {
    let unknown = || Error::Input(format!("unknown builtin {name}"));
    let parts: Vec<&str> = name.split('_').collect();
    let mut g = match parts.as_slice() {
        ["amb", p, r] => {
            let p = parse_p(p).ok_or_else(unknown)?;
            let r: u32 = r.strip_prefix('r').and_then(|r| r.parse().ok()).ok_or_else(unknown)?;
            additive_kernel_scheme(&artin_schreier_power_poly(p, p, r), p)?
        }
        ["as", p] => {
            let p = parse_p(p).ok_or_else(unknown)?;
            additive_kernel_scheme(&artin_schreier_power_poly(p, p, 0), p)?
        }
        [head, p] => {
            let p = parse_p(p).ok_or_else(unknown)?;
            if let Some(t) = group(head) {
                constant_group_scheme(&t, p)?
            } else if let Some(r) = head.strip_prefix("ga").and_then(|r| r.parse::<u32>().ok()) {
                additive_kernel_scheme(&frobenius_kernel_poly(p, r), p)?
            } else if let Some(n) = head.strip_prefix("mu").and_then(|n| n.parse::<usize>().ok()) {
                mu_n(n, p)?
            } else {
                return Err(unknown());
            }
        }
        _ => return Err(unknown()),
    };
    g.name = name.to_string();
    Ok(g)
}

pub fn tower_names() -> Vec<&'static str> {
    vec!["tower_p2_r1", "tower_p2_r2", "tower_p3_r1", "control_z2_p3", "degenerate_p2_r1", "s3_over_z2_p3"]
}

/// A builtin tower: `tower_p{p}_r{r}`, `degenerate_p{p}_r{r}`, `control_z2_p3` or `s3_over_z2_p3`.
pub fn tower(name: &str) -> Result<Tower> {
    let unknown = || Error::Input(format!("unknown tower {name}"));
    let parts: Vec<&str> = name.split('_').collect();
    match parts.as_slice() {
        ["control", "z2", "p3"] => constant_tower(&GroupTable::cyclic(2), &[0, 1], 3, 1),
        ["s3", "over", "z2", "p3"] => constant_tower(&GroupTable::symmetric3(), &[0, 3], 3, 1),
        [kind @ ("tower" | "degenerate"), p, r] => {
            let p = parse_p(p).ok_or_else(unknown)?;
            let r: u32 = r.strip_prefix('r').and_then(|r| r.parse().ok()).ok_or_else(unknown)?;
            if *kind == "tower" {
                build_tower(p, p, r)
            } else {
                degenerate_tower(p, r)
            }
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_names_resolve() {
        for n in scheme_names() {
            let g = scheme(&n).unwrap();
            assert_eq!(g.name, n);
        }
        assert_eq!(scheme("amb_p2_r2").unwrap().order(), 8);
        assert_eq!(scheme("as_p3").unwrap().order(), 3);
        for t in tower_names() {
            tower(t).unwrap();
        }
        assert!(scheme("q8_p2").is_err());
        assert!(tower("tower_p2").is_err());
    }
}
