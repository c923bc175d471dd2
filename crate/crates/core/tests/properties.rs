use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use contrabench::catalog;
use contrabench::comodcontra::{
    dualize_comodule, free_contramodule, hom_contra, is_morphism, random_contramodule, restrict, Comodule, Side,
};
use contrabench::functors::{adjunction_check, cohom_maps, frobenius_twist, induce};
use contrabench::interchange::{contramodule_to_doc, scheme_to_doc, Document};
use contrabench::repthy;
use contrabench::suite::SEARCH_LIMIT;
use contrabench::Matrix;

fn small_schemes() -> Vec<String> {
    catalog::scheme_names()
        .into_iter()
        .filter(|n| catalog::scheme(n).unwrap().order() <= 9)
        .collect()
}

fn scheme_and_seed() -> impl Strategy<Value = (String, u64)> {
    (prop::sample::select(small_schemes()), any::<u64>())
}

fn tower_and_seed() -> impl Strategy<Value = (&'static str, usize, u64)> {
    (prop::sample::select(catalog::tower_names()), 0usize..3, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_contramodules_satisfy_axioms((name, seed) in scheme_and_seed()) {
        let c = catalog::scheme(&name).unwrap().coalgebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_contramodule(&c, &mut rng, 2);
        prop_assert!(b.validate().verdict());
        // a shear change of basis keeps the axioms and the projectivity verdict
        let p = c.characteristic();
        let mut shuffled = Matrix::identity(p, b.dim);
        if b.dim > 1 {
            shuffled.set(0, b.dim - 1, 1);
        }
        let b2 = b.change_basis(&shuffled).unwrap();
        prop_assert!(b2.validate().verdict());
        prop_assert_eq!(b.is_projective().verdict, b2.is_projective().verdict);
    }

    #[test]
    fn free_universal_property((name, seed) in scheme_and_seed(), d in 1usize..3) {
        let c = catalog::scheme(&name).unwrap().coalgebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = random_contramodule(&c, &mut rng, 2);
        let free = free_contramodule(c.clone(), d);
        prop_assert!(free.validate().verdict());
        let hom = hom_contra(&free, &w).unwrap();
        prop_assert_eq!(hom.dim(), d * w.dim);
        for f in &hom.basis {
            prop_assert!(is_morphism(&free, &w, f));
        }
        prop_assert!(free.is_projective().verdict);
    }

    #[test]
    fn projectivity_matches_search((name, seed) in scheme_and_seed()) {
        let c = catalog::scheme(&name).unwrap().coalgebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_contramodule(&c, &mut rng, 2);
        let m = b.to_dual_module();
        let v = repthy::is_projective(&m);
        prop_assert!(v.recheck(&m));
        if let Some(found) = repthy::projective_by_search(&m, SEARCH_LIMIT) {
            prop_assert_eq!(v.verdict, found);
        }
    }

    #[test]
    fn induction_is_a_coequalizer((t, level, seed) in tower_and_seed()) {
        let tower = catalog::tower(t).unwrap();
        let lv = if level < tower.kernels.len() { &tower.kernels[level] } else { &tower.finite_subgroup };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_contramodule(&lv.scheme.coalgebra(), &mut rng, 1);
        let ind = induce(&lv.map, &b).unwrap();
        prop_assert!(ind.result.validate().verdict());
        // the projection kills f1 - f2, and nothing more
        prop_assert!(ind.presentation.projection.mul(&ind.difference).is_zero());
        let ambient = ind.presentation.ambient_dim;
        prop_assert_eq!(ind.result.dim, ambient - ind.difference.rank());
        let m = contrabench::functors::comodule_along(&lv.map);
        let (f1, f2) = cohom_maps(&m, &b).unwrap();
        prop_assert_eq!(f1.sub(&f2).column_space().cols(), ind.difference.rank());
        let v = random_contramodule(&tower.ambient.coalgebra(), &mut rng, 1);
        prop_assert!(adjunction_check(&lv.map, &b, &v).unwrap().verdict());
    }

    #[test]
    fn restriction_preserves_axioms((t, level, seed) in tower_and_seed()) {
        let tower = catalog::tower(t).unwrap();
        let lv = if level < tower.kernels.len() { &tower.kernels[level] } else { &tower.finite_subgroup };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_contramodule(&tower.ambient.coalgebra(), &mut rng, 1);
        let r = restrict(&lv.map, &b).unwrap();
        prop_assert!(r.validate().verdict());
        prop_assert_eq!(r.dim, b.dim);
        // free restricts to free along a quotient of a finite group scheme
        let free = free_contramodule(tower.ambient.coalgebra(), 1);
        prop_assert!(restrict(&lv.map, &free).unwrap().is_projective().verdict);
    }

    #[test]
    fn twist_is_functorial_in_r((name, seed) in scheme_and_seed(), r in 0u64..3, s in 0u64..3) {
        let g = catalog::scheme(&name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_contramodule(&g.coalgebra(), &mut rng, 2);
        let once = frobenius_twist(&b, &g, r + s).unwrap();
        let twice = frobenius_twist(&frobenius_twist(&b, &g, r).unwrap(), &g, s).unwrap();
        prop_assert!(once.validate().verdict());
        prop_assert_eq!(once.theta, twice.theta);
        prop_assert_eq!(frobenius_twist(&b, &g, 0).unwrap().theta, b.theta);
    }

    #[test]
    fn induction_keeps_free_modules_projective((t, level, _seed) in tower_and_seed(), d in 1usize..3) {
        let tower = catalog::tower(t).unwrap();
        let lv = if level < tower.kernels.len() { &tower.kernels[level] } else { &tower.finite_subgroup };
        let free = free_contramodule(lv.scheme.coalgebra(), d);
        let ind = induce(&lv.map, &free).unwrap();
        prop_assert!(ind.result.is_projective().verdict);
    }

    #[test]
    fn documents_round_trip((name, seed) in scheme_and_seed()) {
        let g = catalog::scheme(&name).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_contramodule(&g.coalgebra(), &mut rng, 2);
        let doc = Document {
            algebras: vec![scheme_to_doc(&g)],
            contramodules: vec![contramodule_to_doc("b", &name, &b)],
            ..Default::default()
        };
        let text = doc.to_json();
        let again = Document::parse(&text).unwrap();
        prop_assert_eq!(again.to_json(), text);
        let ws = again.load().unwrap();
        prop_assert!(ws.validate().verdict());
        prop_assert_eq!(&ws.contramodules["b"].theta, &b.theta);
        prop_assert_eq!(&*ws.coalgebra(&name).unwrap(), &*g.coalgebra());
    }

    #[test]
    fn linear_algebra_rank_nullity(p in prop::sample::select(vec![2u64, 3]), rows in 1usize..7, cols in 1usize..7, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<u64> = (0..rows * cols).map(|_| rng.gen_range(0..p)).collect();
        let a = Matrix::from_data(p, rows, cols, data);
        let k = a.kernel();
        prop_assert_eq!(a.rank() + k.cols(), cols);
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }
}

#[test]
fn duals_of_cofree_sums_are_projective() {
    for name in small_schemes() {
        let g = catalog::scheme(&name).unwrap();
        let reg = Comodule::regular(g.coalgebra(), Side::Right);
        let two = reg.direct_sum(&reg).unwrap();
        assert!(two.validate().verdict());
        assert!(dualize_comodule(&two, 1).unwrap().is_projective().verdict, "{name}");
    }
}

#[test]
fn golden_documents_parse() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    let good = Document::parse(&std::fs::read_to_string(dir.join("z2_p3.json")).unwrap()).unwrap();
    let ws = good.load().unwrap();
    assert!(ws.validate().verdict());
    let builtin = catalog::scheme("z2_p3").unwrap();
    assert_eq!(*ws.coalgebra("z2_p3").unwrap(), *builtin.coalgebra());
    assert_eq!(good.algebras[0], scheme_to_doc(&builtin));

    let bad = Document::parse(&std::fs::read_to_string(dir.join("z2_p3_bad_antipode.json")).unwrap()).unwrap();
    let cert = bad.load().unwrap().validate();
    assert!(!cert.verdict());
    assert!(cert.failures().iter().all(|f| f.label.contains("antipode")));

    assert!(Document::parse(&std::fs::read_to_string(dir.join("z2_p3_bad_shape.json")).unwrap()).is_err());
}
