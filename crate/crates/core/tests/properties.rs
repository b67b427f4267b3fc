use proptest::prelude::*;

use svkan::formats::{canonical_string, FromJson, ToJson};
use svkan::kan::{
    check_kan, fill_horn_linear, horn_projection, horn_space_direct, horn_space_recursive, HornElement, HornIndex,
};
use svkan::linalg::rational::{format_rational, parse_rational, ratio};
use svkan::linalg::{intersect, kernel_basis, subspace_equal, Rational, RationalMatrix, Subspace};
use svkan::normalization::{homology_dims, kernel_projection_identity, normalize, NormalizationVariant};
use svkan::simplicial::random::random_recipe;
use svkan::simplicial::{
    dold_kan_inverse, random_chain_complex, ChainComplex, ComplexRecipe, FaceMaps, SplitMix64, TruncatedSVS,
};
use svkan::Error;

fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec((-4i64..=4, 1i64..=3), r * c)
            .prop_map(move |e| RationalMatrix::new(r, c, e.iter().map(|&(p, q)| ratio(p, q)).collect()).unwrap())
    })
}

fn recipe_and_seed(max_level: usize) -> impl Strategy<Value = (ComplexRecipe, u64, usize)> {
    (any::<u64>(), 1..=max_level).prop_map(|(seed, level)| {
        let recipe = random_recipe(&mut SplitMix64::new(seed), level, 16);
        (recipe, seed, level)
    })
}

fn object(max_level: usize) -> impl Strategy<Value = TruncatedSVS> {
    recipe_and_seed(max_level)
        .prop_map(|(recipe, seed, level)| dold_kan_inverse(&random_chain_complex(&recipe, seed), level))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rationals_print_and_parse_back(p in -1000i64..1000, q in 1i64..50) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn kernel_has_complementary_dimension(m in small_matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + m.rank(), m.cols());
        prop_assert!((&m * k.basis()).is_zero());
        prop_assert!(k.is_canonical());
    }

    #[test]
    fn canonical_basis_ignores_spanning_set(m in small_matrix(), mix in prop::collection::vec(-3i64..=3, 25)) {
        let s = Subspace::span(&m);
        let c = m.cols();
        let entries: Vec<Rational> = (0..c * c).map(|k| ratio(mix[k % mix.len()], 1)).collect();
        let remix = &m * &RationalMatrix::new(c, c, entries).unwrap();
        let widened = RationalMatrix::hstack(m.rows(), &[&m, &remix]).unwrap();
        prop_assert_eq!(Subspace::span(&widened), s.clone());
        prop_assert!(subspace_equal(&s, &Subspace::span(&s.basis().clone())).unwrap());
    }

    #[test]
    fn intersection_is_symmetric_and_contained(a in small_matrix(), b in small_matrix()) {
        prop_assume!(a.rows() == b.rows());
        let (sa, sb) = (Subspace::span(&a), Subspace::span(&b));
        let i = intersect(&sa, &sb).unwrap();
        prop_assert_eq!(&i, &intersect(&sb, &sa).unwrap());
        for v in i.basis().columns() {
            prop_assert!(sa.contains(&v).unwrap() && sb.contains(&v).unwrap());
        }
    }

    #[test]
    fn generated_complexes_have_recipe_homology((recipe, seed, _) in recipe_and_seed(5)) {
        let c = random_chain_complex(&recipe, seed);
        prop_assert_eq!(homology_dims(&c), recipe.homology_dims());
    }

    #[test]
    fn dold_kan_objects_satisfy_simplicial_identities(x in object(4)) {
        prop_assert!(x.validate().is_valid());
    }

    #[test]
    fn normalization_inverts_dold_kan((recipe, seed, _) in recipe_and_seed(4)) {
        let c = random_chain_complex(&recipe, seed);
        let x = dold_kan_inverse(&c, c.top());
        for v in [NormalizationVariant::N, NormalizationVariant::Tilde] {
            let normalized = normalize(&x, v).unwrap();
            prop_assert_eq!(normalized.dims(), c.dims());
        }
        let n = normalize(&x, NormalizationVariant::N).unwrap();
        prop_assert_eq!(n.complex, c);
    }

    #[test]
    fn every_ordinary_horn_fills(x in object(4)) {
        for n in 1..=x.level() {
            for i in 0..=n {
                prop_assert!(check_kan(&x, n, i).unwrap());
            }
        }
    }

    #[test]
    fn recursion_matches_equations_on_shaped_horns(x in object(4), mask in any::<u32>()) {
        let n = x.level();
        let removed: Vec<usize> = (0..=n).filter(|&i| mask & (1 << i) != 0).collect();
        prop_assume!(removed.len() <= n);
        let h = HornIndex::new(n, removed).unwrap();
        match horn_space_recursive(&x, &h) {
            Ok(r) => prop_assert_eq!(r, horn_space_direct(&x, &h).unwrap()),
            Err(e) => {
                prop_assert!(!h.is_shaped());
                prop_assert!(matches!(e, Error::Unsupported(_)));
            }
        }
    }

    #[test]
    fn linear_filler_reproduces_projected_simplices(x in object(4), mask in any::<u32>(), seed in any::<u64>()) {
        let n = x.level();
        let removed: Vec<usize> = (0..=n).filter(|&i| mask & (1 << i) != 0).collect();
        prop_assume!(removed.len() <= n);
        let h = HornIndex::new(n, removed).unwrap();
        let v = SplitMix64::new(seed).small_vector(x.dim(n));
        let p = horn_projection(&x, &h).unwrap();
        let e = HornElement::from_concatenated(h, x.dim(n - 1), &p.mul_vec(&v).unwrap()).unwrap();
        let w = fill_horn_linear(&x, &e).unwrap();
        for (&i, expected) in &e.components {
            prop_assert_eq!(&x.face(n, i).mul_vec(&w).unwrap(), expected);
        }
    }

    #[test]
    fn projection_kernels_are_normalized_levels(x in object(4)) {
        for n in 1..=x.level() {
            prop_assert_eq!(kernel_projection_identity(&x, n).unwrap(), (true, true));
        }
    }

    #[test]
    fn json_round_trip_is_canonical(x in object(3)) {
        let doc = x.to_json();
        let text = canonical_string(&doc);
        let back = TruncatedSVS::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(canonical_string(&back.to_json()), text);
    }
}

#[test]
fn chain_complex_json_round_trip() {
    let c = random_chain_complex(&"S0,D1,S2,D3".parse().unwrap(), 17);
    assert_eq!(ChainComplex::from_json(&c.to_json()).unwrap(), c);
}
