use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use cycmatch::basic::classify_instance;
use cycmatch::generate::{random_full_degree_instance, random_instance};
use cycmatch::kgen::{k_enumerate_maximal_matchings, k_find_blocking};
use cycmatch::oracle::scan;
use cycmatch::search::{
    choices_from_index, extension_choices, index_of_choices, INSTANCES_PER_SHAPE,
};
use cycmatch::stability::has_stable_matching;
use cycmatch::{
    brute_force_stable_exists, build_instance, enumerate_families, enumerate_maximal_matchings,
    find_blocking_triples, find_stable_matching, is_stable, k_enumerate_families,
    k_find_stable_matching, normalize, parse_instance, rank_in_matching, subdivide, BasicShape,
    ExtendedRank, Family, Instance, Matching, ShapeClass, VertexId,
};

fn instance(seed: u64, n: usize) -> Instance {
    random_instance(n, &mut StdRng::seed_from_u64(seed))
}

fn dense(seed: u64, n: usize) -> Instance {
    random_full_degree_instance(n, &mut StdRng::seed_from_u64(seed))
}

/// Lengths of all simple directed cycles, each counted from its least vertex.
fn cycle_lengths(inst: &Instance) -> Vec<usize> {
    fn walk(inst: &Instance, start: usize, path: &mut Vec<usize>, out: &mut Vec<usize>) {
        let last = *path.last().unwrap();
        for t in inst.prefs(VertexId(last)) {
            if t.0 == start {
                out.push(path.len());
            } else if t.0 > start && !path.contains(&t.0) {
                path.push(t.0);
                walk(inst, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..inst.vertex_count() {
        walk(inst, s, &mut vec![s], &mut out);
    }
    out
}

fn random_matching(inst: &Instance, seed: u64) -> Matching {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut fams = enumerate_families(inst);
    fams.shuffle(&mut rng);
    let keep = rand::Rng::gen_range(&mut rng, 0..=fams.len());
    let mut chosen: Vec<Family> = Vec::new();
    for f in fams.into_iter().take(keep) {
        if chosen.iter().all(|g| !g.intersects(&f)) {
            chosen.push(f);
        }
    }
    Matching::new(inst, chosen).unwrap()
}

fn is_maximal(fams: &[Family], m: &Matching) -> bool {
    fams.iter()
        .all(|f| m.families().iter().any(|g| g.intersects(f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cycles_have_length_divisible_by_three(seed: u64, n in 1usize..=3) {
        for len in cycle_lengths(&instance(seed, n)) {
            prop_assert_eq!(len % 3, 0);
        }
    }

    #[test]
    fn text_format_round_trips(seed: u64, n in 1usize..=4) {
        let inst = instance(seed, n);
        prop_assert_eq!(parse_instance(&inst.to_string()).unwrap(), inst);
    }

    #[test]
    fn normalize_keeps_families(seed: u64, n in 1usize..=3) {
        let inst = instance(seed, n);
        match normalize(&inst) {
            Ok(norm) => {
                prop_assert!(norm.vertices().all(|v| norm.out_degree(v) >= 1));
                prop_assert_eq!(enumerate_families(&norm), enumerate_families(&inst));
                prop_assert_eq!(normalize(&norm).unwrap(), norm.clone());
                // surviving edges keep their relative order
                for v in inst.vertices() {
                    let kept: Vec<VertexId> = inst
                        .prefs(v)
                        .iter()
                        .copied()
                        .filter(|&t| norm.has_edge(v, t))
                        .collect();
                    if kept.len() == norm.out_degree(v) {
                        prop_assert_eq!(&kept[..], norm.prefs(v));
                    }
                }
            }
            Err(_) => prop_assert!(enumerate_families(&inst).is_empty()),
        }
    }

    #[test]
    fn normalized_instances_are_fixed_points(seed: u64, n in 1usize..=3) {
        let inst = dense(seed, n);
        prop_assert_eq!(normalize(&inst).unwrap(), inst);
    }

    #[test]
    fn stable_search_agrees_with_oracle(seed: u64, n in 1usize..=3) {
        let inst = instance(seed, n);
        let found = find_stable_matching(&inst);
        prop_assert_eq!(found.is_some(), brute_force_stable_exists(&inst));
        prop_assert_eq!(found.is_some(), has_stable_matching(&inst));
        if let Some(m) = found {
            prop_assert!(is_stable(&inst, &m));
            prop_assert!(is_maximal(&enumerate_families(&inst), &m));
        }
    }

    #[test]
    fn stable_search_agrees_with_oracle_dense(seed: u64) {
        let inst = dense(seed, 3);
        prop_assert_eq!(find_stable_matching(&inst).is_some(), brute_force_stable_exists(&inst));
    }

    #[test]
    fn completable_matchings_are_blocked(seed: u64, pick: u64, n in 1usize..=3) {
        let inst = instance(seed, n);
        let fams = enumerate_families(&inst);
        let m = random_matching(&inst, pick);
        if !is_maximal(&fams, &m) {
            prop_assert!(!is_stable(&inst, &m));
        }
    }

    #[test]
    fn maximal_matchings_are_maximal_and_complete(seed: u64, n in 1usize..=3) {
        let inst = instance(seed, n);
        let fams = enumerate_families(&inst);
        let maximal = enumerate_maximal_matchings(&inst);
        for m in &maximal {
            prop_assert!(is_maximal(&fams, m));
        }
        let m = random_matching(&inst, seed ^ 0x5a5a);
        if is_maximal(&fams, &m) {
            prop_assert!(maximal.contains(&m));
        }
    }

    #[test]
    fn rank_one_members_never_block(seed: u64, pick: u64, n in 1usize..=3) {
        let inst = instance(seed, n);
        let m = random_matching(&inst, pick);
        for b in find_blocking_triples(&inst, &m) {
            for v in b.members() {
                prop_assert_ne!(rank_in_matching(&inst, &m, v), ExtendedRank::Finite(1));
                prop_assert!(m.family_of(v) != Some(&b));
            }
        }
    }

    #[test]
    fn counting_bounds_hold(seed: u64) {
        let s = scan(&dense(seed, 3));
        prop_assert!(s.families <= 27);
        prop_assert!(s.nonempty_matchings <= 171);
    }

    #[test]
    fn classification_ignores_relabeling(seed: u64, rot in 0usize..9, perm_seed: u64) {
        let inst = dense(seed, 3);
        let class = classify_instance(&inst);
        let rotated: Vec<usize> = (0..9).map(|v| (v + rot) % 9).collect();
        prop_assert_eq!(classify_instance(&inst.relabel(&rotated).unwrap()), class);
        let mut rng = StdRng::seed_from_u64(perm_seed);
        let mut map = vec![0; 9];
        for g in 0..3 {
            let mut slots = vec![g, g + 3, g + 6];
            slots.shuffle(&mut rng);
            for (i, s) in slots.into_iter().enumerate() {
                map[g + 3 * i] = s;
            }
        }
        let permuted = inst.relabel(&map).unwrap();
        prop_assert_eq!(classify_instance(&permuted), class);
        prop_assert_eq!(enumerate_families(&permuted).len(), enumerate_families(&inst).len());
        prop_assert_eq!(has_stable_matching(&permuted), has_stable_matching(&inst));
    }

    #[test]
    fn generated_instances_have_their_shape(shape in 1usize..=6, index in 0..INSTANCES_PER_SHAPE) {
        let shape = BasicShape::from_index(shape).unwrap();
        let choices = choices_from_index(index);
        prop_assert_eq!(index_of_choices(&choices), index);
        let inst = build_instance(shape, &choices);
        prop_assert_eq!(classify_instance(&inst), ShapeClass::Basic(shape));
        prop_assert_eq!(extension_choices(&inst, shape), Some(choices));
        for v in inst.vertices() {
            prop_assert_eq!(inst.prefs(v)[0].0, shape.template()[v.0]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn subdivision_preserves_families_and_stability(
        seed: u64,
        n in 1usize..=3,
        k in 4usize..=5,
        gender in 0usize..3,
    ) {
        let inst = instance(seed, n);
        let sub = subdivide(&inst, k, gender).unwrap();
        let ki = &sub.instance;
        prop_assert_eq!(ki.k(), k);

        let kfams = k_enumerate_families(ki);
        let projected: BTreeSet<Family> =
            kfams.iter().map(|f| sub.project(f).unwrap()).collect();
        prop_assert_eq!(projected.len(), kfams.len());
        let original: BTreeSet<Family> = enumerate_families(&inst).into_iter().collect();
        prop_assert_eq!(&projected, &original);

        for km in k_enumerate_maximal_matchings(ki) {
            let m = Matching::new(&inst, km.iter().map(|f| sub.project(f).unwrap()).collect())
                .unwrap();
            let kblock: BTreeSet<Family> = k_find_blocking(ki, &km)
                .iter()
                .map(|f| sub.project(f).unwrap())
                .collect();
            let block: BTreeSet<Family> = find_blocking_triples(&inst, &m).into_iter().collect();
            prop_assert_eq!(kblock, block);
        }

        prop_assert_eq!(k_find_stable_matching(ki).is_some(), has_stable_matching(&inst));
    }
}

#[test]
fn subdividing_into_three_genders_is_identity() {
    for seed in 0..20 {
        let inst = instance(seed, 3);
        for g in 0..3 {
            let sub = subdivide(&inst, 3, g).unwrap();
            assert_eq!(sub.instance, cycmatch::KInstance::from_instance(&inst));
        }
    }
}
