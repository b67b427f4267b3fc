//! Acceptance gate: each criterion runs in full and prints one PASS or FAIL
//! line. The process exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::Instant;

use svkan::affine::{build_example_5_1, horn_profile, local_kan_check};
use svkan::kan::{
    check_generalized_kan, check_kan, fill_generalized_horn, horn_projection, horn_space_direct, horn_space_recursive,
    HornElement, HornIndex,
};
use svkan::linalg::rational::int;
use svkan::linalg::Rational;
use svkan::normalization::{
    chain_identity_holds, chain_isomorphism, check_naturality, gamma_inverse_holds, homology_dims,
    kernel_projection_identity, normalize, tangent_complex, NormalizationVariant, PointedFamily,
};
use svkan::simplicial::random::random_recipe;
use svkan::simplicial::{
    dold_kan_inverse, dold_kan_morphism, random_chain_complex, random_chain_map, ChainComplex, FaceMaps, SplitMix64,
    TruncatedSVS,
};

const CORPUS_SIZE: u64 = 50;
const MAX_LEVEL: usize = 5;
const MAX_DIM: usize = 40;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(failures: &[String], summary: String) -> Verdict {
    match failures.first() {
        None => Verdict { passed: true, detail: summary },
        Some(first) => Verdict { passed: false, detail: format!("{} failures, first: {first}", failures.len()) },
    }
}

/// Objects for criteria 1, 2, 4, 5 and 7: levels 1 through 5, every level
/// of dimension at most 40.
fn corpus() -> Vec<(u64, TruncatedSVS)> {
    (0..CORPUS_SIZE)
        .map(|seed| {
            let level = 1 + (seed as usize % MAX_LEVEL);
            let mut rng = SplitMix64::new(seed);
            let recipe = random_recipe(&mut rng, level, MAX_DIM);
            let x = dold_kan_inverse(&random_chain_complex(&recipe, seed), level);
            assert!(x.dims().iter().all(|&d| d <= MAX_DIM));
            (seed, x)
        })
        .collect()
}

fn kan_property(corpus: &[(u64, TruncatedSVS)]) -> Verdict {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (seed, x) in corpus {
        for n in 1..=x.level() {
            for i in 0..=n {
                checks += 1;
                if !check_kan(x, n, i).unwrap() {
                    failures.push(format!("seed {seed}, horn ({n}, {i})"));
                }
            }
        }
    }
    let largest = corpus.iter().flat_map(|(_, x)| x.dims().iter().copied()).max().unwrap_or(0);
    let top = corpus.iter().filter(|(_, x)| x.level() == MAX_LEVEL).count();
    verdict(
        &failures,
        format!("{} objects, {top} at level {MAX_LEVEL}, largest level dim {largest}, {checks} horns", corpus.len()),
    )
}

fn shaped_kan_property(corpus: &[(u64, TruncatedSVS)]) -> Verdict {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (seed, x) in corpus {
        for n in 1..=x.level() {
            for h in HornIndex::all_shaped(n) {
                checks += 1;
                if !check_generalized_kan(x, &h).unwrap() {
                    failures.push(format!("seed {seed}, horn ({n}, {:?})", h.removed()));
                }
            }
        }
    }
    verdict(&failures, format!("{checks} shaped horns"))
}

fn combine(a: &Rational, u: &[Rational], b: &Rational, v: &[Rational]) -> Vec<Rational> {
    u.iter().zip(v).map(|(p, q)| a * p + b * q).collect()
}

fn random_horn_element(x: &TruncatedSVS, h: &HornIndex, rng: &mut SplitMix64) -> HornElement {
    let v = rng.small_vector(x.dim(h.n()));
    let image = horn_projection(x, h).unwrap().mul_vec(&v).unwrap();
    HornElement::from_concatenated(h.clone(), x.dim(h.n() - 1), &image).unwrap()
}

fn closed_form_filler(corpus: &[(u64, TruncatedSVS)]) -> Verdict {
    let mut rng = SplitMix64::new(0xF111);
    let mut failures = Vec::new();
    let (mut elements, mut pairs) = (0, 0);
    // closed-form horns: {j} ∪ {m+1, ..., n} with 1 <= m < n
    let horns: Vec<(&TruncatedSVS, HornIndex, usize, usize)> = corpus
        .iter()
        .flat_map(|(_, x)| {
            (2..=x.level()).flat_map(move |n| {
                (1..n).flat_map(move |m| (0..=m).map(move |j| (x, HornIndex::shaped(n, j, m).unwrap(), m, j)))
            })
        })
        .collect();
    while elements < 200 || pairs < 50 {
        for (x, h, m, j) in &horns {
            let n = h.n();
            let e = random_horn_element(x, h, &mut rng);
            let filled = fill_generalized_horn(x, n, *m, *j, &e).unwrap();
            elements += 1;
            for (&i, expected) in &e.components {
                if &x.face(n, i).mul_vec(&filled).unwrap() != expected {
                    failures.push(format!("d_{i} on horn ({n}, {:?})", h.removed()));
                }
            }
            if pairs < 50 {
                let f = random_horn_element(x, h, &mut rng);
                let (a, b) = (int(rng.small_int()), int(rng.small_int()));
                let sum: BTreeMap<usize, Vec<Rational>> =
                    e.components.iter().map(|(&i, u)| (i, combine(&a, u, &b, &f.components[&i]))).collect();
                let sum = HornElement::new(h.clone(), sum).unwrap();
                let lhs = fill_generalized_horn(x, n, *m, *j, &sum).unwrap();
                let rhs = combine(&a, &filled, &b, &fill_generalized_horn(x, n, *m, *j, &f).unwrap());
                pairs += 1;
                if lhs != rhs {
                    failures.push(format!("linearity on horn ({n}, {:?})", h.removed()));
                }
            }
        }
    }
    verdict(&failures, format!("{elements} elements, {pairs} linearity pairs"))
}

fn recursive_horns(corpus: &[(u64, TruncatedSVS)]) -> Verdict {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (seed, x) in corpus {
        for n in 1..=x.level() {
            for h in HornIndex::all_shaped(n) {
                checks += 1;
                let direct = horn_space_direct(x, &h).unwrap();
                let recursive = horn_space_recursive(x, &h).unwrap();
                if direct.space != recursive.space || direct.kept != recursive.kept {
                    failures.push(format!("seed {seed}, horn ({n}, {:?})", h.removed()));
                }
            }
        }
    }
    verdict(&failures, format!("{checks} horn spaces"))
}

fn gamma_projections(corpus: &[(u64, TruncatedSVS)]) -> Verdict {
    let mut failures = Vec::new();
    let mut inverse_checks = 0;
    for (seed, x) in corpus {
        for n in 0..=x.level() {
            for m in 0..=n {
                inverse_checks += 1;
                if !gamma_inverse_holds(x, n, m).unwrap() {
                    failures.push(format!("seed {seed}: inverse pair n = {n}, m = {m}"));
                }
            }
            if n >= 1 && !chain_identity_holds(x, n).unwrap() {
                failures.push(format!("seed {seed}: chain identity n = {n}"));
            }
        }
        match chain_isomorphism(x) {
            Ok(iso) => {
                if iso.tilde.dims() != iso.normalized.dims() {
                    failures.push(format!("seed {seed}: normalized dims differ"));
                }
                if homology_dims(&iso.tilde.complex) != homology_dims(&iso.normalized.complex) {
                    failures.push(format!("seed {seed}: homology differs"));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let mut rng = SplitMix64::new(0x6A77);
    let mut morphisms = 0;
    for k in 0..20 {
        let level = 2 + k % 3;
        let source = random_chain_complex(&random_recipe(&mut rng, level, 24).sphere(level), rng.next_u64());
        let target = random_chain_complex(&random_recipe(&mut rng, level, 24).sphere(level), rng.next_u64());
        let phi = random_chain_map(&source, &target, &mut rng).unwrap();
        let f = dold_kan_morphism(&phi, level).unwrap();
        morphisms += 1;
        if !check_naturality(&f).unwrap() {
            failures.push(format!("naturality square {k}"));
        }
    }
    verdict(&failures, format!("{inverse_checks} inverse pairs, {morphisms} naturality squares"))
}

fn dold_kan_round_trip() -> Verdict {
    let mut rng = SplitMix64::new(0xD01D);
    let mut failures = Vec::new();
    for k in 0..50u64 {
        let level = 1 + (k as usize % MAX_LEVEL);
        let recipe = random_recipe(&mut rng, level, MAX_DIM);
        let c = random_chain_complex(&recipe, rng.next_u64());
        let x = dold_kan_inverse(&c, c.top());
        let n = normalize(&x, NormalizationVariant::N).unwrap();
        let same = n.dims() == c.dims() && (1..=c.top()).all(|d| n.complex.differential(d) == c.differential(d));
        if !same {
            failures.push(format!("complex {k} ({recipe})"));
        }
    }
    verdict(&failures, "50 complexes".into())
}

fn kernel_projections(corpus: &[(u64, TruncatedSVS)]) -> Verdict {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (seed, x) in corpus {
        for n in 1..=x.level() {
            checks += 1;
            let (last, first) = kernel_projection_identity(x, n).unwrap();
            if !last || !first {
                failures.push(format!("seed {seed}, n = {n}: ({last}, {first})"));
            }
        }
    }
    verdict(&failures, format!("{checks} levels"))
}

fn affine_example() -> Verdict {
    let frozen: BTreeMap<String, Vec<usize>> = serde_json::from_slice(
        &std::fs::read(common::crate_root().join("tests/golden/example51_profiles.json")).unwrap(),
    )
    .unwrap();
    let a = build_example_5_1(3);
    let mut failures = Vec::new();
    let mut horns = 0;
    for n in 2..=3usize {
        for mask in 0u32..(1 << (n + 1)) {
            let removed: Vec<usize> = (0..=n).filter(|&i| mask & (1 << i) != 0).collect();
            if n + 1 - removed.len() < 2 {
                continue;
            }
            horns += 1;
            let key = format!("{n}:{}", removed.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
            let p = horn_profile(&a, &HornIndex::new(n, removed).unwrap()).unwrap();
            if p.manifold_flag {
                failures.push(format!("{key} flagged as a manifold"));
            }
            if frozen.get(&key) != Some(&p.dimension_multiset()) {
                failures.push(format!("{key}: multiset {:?}", p.dimension_multiset()));
            }
        }
    }
    if horns != frozen.len() {
        failures.push(format!("{horns} horns checked, {} frozen", frozen.len()));
    }
    if !local_kan_check(&a).unwrap().all_hold() {
        failures.push("linearization at the base is not Kan".into());
    }
    verdict(&failures, format!("{horns} horn profiles, local Kan conditions hold"))
}

fn string_group_tangent() -> Verdict {
    let mut failures = Vec::new();
    for g in [3, 8] {
        let fiber = dold_kan_inverse(&ChainComplex::with_zero_differentials(vec![0, g, 1]), 3);
        let t = tangent_complex(&PointedFamily::single("e", fiber), NormalizationVariant::N).unwrap();
        let dims = t.fibers[0].1.dims().to_vec();
        if dims != [0, g, 1, 0] {
            failures.push(format!("g = {g}: dims {dims:?}"));
        }
    }
    verdict(&failures, "g = 3 and g = 8 give (0, g, 1)".into())
}

fn cli_determinism() -> Verdict {
    let first = common::run_suite();
    let second = common::run_suite();
    let mut failures = common::compare_with_golden(&first);
    for ((c, a), b) in common::CASES.iter().zip(&first).zip(&second) {
        if a.stdout != b.stdout || a.exit != b.exit {
            failures.push(format!("{} differs between runs", c.name));
        }
    }
    verdict(&failures, format!("{} commands, two runs, golden files", common::CASES.len()))
}

fn main() {
    let start = Instant::now();
    let corpus = corpus();
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("Kan conditions on the seeded corpus", Box::new(|| kan_property(&corpus))),
        ("shaped horn projections are surjective", Box::new(|| shaped_kan_property(&corpus))),
        ("closed-form filler fills and is linear", Box::new(|| closed_form_filler(&corpus))),
        ("recursive horn spaces equal direct ones", Box::new(|| recursive_horns(&corpus))),
        ("γ projections, chain identity, naturality", Box::new(|| gamma_projections(&corpus))),
        ("Dold–Kan round trip", Box::new(dold_kan_round_trip)),
        ("kernels of horn projections are normalized levels", Box::new(|| kernel_projections(&corpus))),
        ("piecewise-affine example profiles and local Kan", Box::new(affine_example)),
        ("String-group tangent dimensions", Box::new(string_group_tangent)),
        ("CLI golden suite is byte-stable", Box::new(cli_determinism)),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let v = check();
        let mark = if v.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark}: {title} [{}] ({:.2}s)", k + 1, v.detail, t.elapsed().as_secs_f64());
        failed += usize::from(!v.passed);
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
