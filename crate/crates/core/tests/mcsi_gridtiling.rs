use cutlab::bruteforce::has_clique;
use cutlab::gridtiling::{clique_to_gridtiling, gt_solve_bruteforce, gt_verify};
use cutlab::mcsi::{
    assignment_value, build_splitter, clique_to_mcsi_biclique, clique_to_mcsi_clique, max_value_bruteforce,
    verify_splitter, McsiInstance, SplitterMethod, UGraph, DEFAULT_ASSIGNMENT_CAP, DEFAULT_SUBSET_CAP,
};
use cutlab::random::{plant_clique, random_triangle_free, random_ugraph, seeded};
use cutlab::{Error, Rational};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn random_instance(seed: u64, ell: usize, size: usize) -> (McsiInstance, Vec<usize>) {
    let mut rng = seeded(seed);
    let n = ell * size;
    let g = random_ugraph(&mut rng, n, 0.4);
    let groups: Vec<Vec<usize>> = (0..ell).map(|i| (i * size..(i + 1) * size).collect()).collect();
    let phi = groups.iter().map(|grp| *grp.choose(&mut rng).unwrap()).collect();
    (McsiInstance::new(g, groups, UGraph::complete(ell)).unwrap(), phi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn value_is_monotone_in_edges(seed: u64, ell in 2usize..5, size in 1usize..4, u: usize, v: usize) {
        let (inst, phi) = random_instance(seed, ell, size);
        let before = assignment_value(&inst, &phi).unwrap();
        let n = inst.graph.vertex_count();
        let mut grown = inst.clone();
        if u % n != v % n {
            grown.graph.add_edge(u % n, v % n).unwrap();
        }
        prop_assert!(assignment_value(&grown, &phi).unwrap() >= before);
    }

    #[test]
    fn value_ignores_vertex_names(seed: u64, ell in 2usize..5, size in 1usize..4) {
        let (inst, phi) = random_instance(seed, ell, size);
        let n = inst.graph.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut seeded(seed ^ 0x5eed));
        let g = UGraph::from_edges(n, inst.graph.edges().map(|(a, b)| (perm[a], perm[b]))).unwrap();
        let groups = inst.groups.iter().map(|grp| grp.iter().map(|&v| perm[v]).collect()).collect();
        let renamed = McsiInstance::new(g, groups, inst.supergraph.clone()).unwrap();
        let moved: Vec<usize> = phi.iter().map(|&v| perm[v]).collect();
        prop_assert_eq!(assignment_value(&renamed, &moved).unwrap(), assignment_value(&inst, &phi).unwrap());
    }
}

#[test]
fn value_examples() {
    let g = UGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    let inst = McsiInstance::new(g, vec![vec![0], vec![1], vec![2]], UGraph::complete(3)).unwrap();
    assert_eq!(assignment_value(&inst, &[0, 1, 2]).unwrap(), Rational::new(2, 3));
    assert!(matches!(assignment_value(&inst, &[1, 1, 2]), Err(Error::BadAssignment(_))));
    let (v, _) = max_value_bruteforce(&inst, DEFAULT_ASSIGNMENT_CAP).unwrap();
    assert_eq!(v, Rational::new(2, 3));
}

#[test]
fn clique_pipeline_finds_planted_cliques() {
    for seed in 0..6u64 {
        let mut rng = seeded(seed);
        let n = rng.gen_range(8..=12);
        let ell = 3 + (seed as usize % 2);
        let mut g = random_ugraph(&mut rng, n, 0.2);
        plant_clique(&mut rng, &mut g, ell);
        let family = build_splitter(n, ell, SplitterMethod::Greedy { seed }).unwrap();
        assert!(verify_splitter(&family, DEFAULT_SUBSET_CAP).unwrap());
        let instances = clique_to_mcsi_clique(&g, ell, &family).unwrap();
        assert_eq!(instances.len(), family.functions.len());
        let best = instances
            .iter()
            .filter(|i| i.groups.iter().all(|grp| !grp.is_empty()))
            .map(|i| max_value_bruteforce(i, DEFAULT_ASSIGNMENT_CAP).unwrap().0)
            .max()
            .unwrap();
        assert_eq!(best, Rational::from_integer(1), "seed {seed}");
    }
}

#[test]
fn triangle_free_inputs_never_reach_one() {
    for seed in 0..5u64 {
        let g = random_triangle_free(&mut seeded(seed), 9, 0.5);
        let family = build_splitter(9, 3, SplitterMethod::Random { seed }).unwrap();
        for inst in clique_to_mcsi_clique(&g, 3, &family).unwrap() {
            if inst.groups.iter().any(|grp| grp.is_empty()) {
                continue;
            }
            assert!(max_value_bruteforce(&inst, DEFAULT_ASSIGNMENT_CAP).unwrap().0 < Rational::from_integer(1));
        }
    }
}

#[test]
fn biclique_pipeline_value_one_means_biclique() {
    let mut rng = seeded(11);
    let mut g = random_ugraph(&mut rng, 10, 0.15);
    plant_clique(&mut rng, &mut g, 4);
    let family = build_splitter(10, 4, SplitterMethod::Greedy { seed: 1 }).unwrap();
    let mut hits = 0;
    for inst in clique_to_mcsi_biclique(&g, 4, &family).unwrap() {
        let (v, phi) = max_value_bruteforce(&inst, DEFAULT_ASSIGNMENT_CAP).unwrap();
        if v == Rational::from_integer(1) {
            hits += 1;
            let (vs, ws) = phi.split_at(2);
            assert!(vs.iter().all(|&a| ws.iter().all(|&b| g.has_edge(a, b))));
        }
    }
    assert!(hits > 0);
}

#[test]
fn gridtiling_matches_cliques_exhaustively_on_four_vertices() {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    for mask in 0u32..(1 << pairs.len()) {
        let g = UGraph::from_edges(4, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e))
            .unwrap();
        for ell in 2..=3 {
            match clique_to_gridtiling(&g, ell) {
                Ok(gt) => {
                    let sol = gt_solve_bruteforce(&gt);
                    assert_eq!(sol.is_some(), has_clique(&g, ell), "mask {mask}, ell {ell}");
                    if let Some(s) = sol {
                        assert!(gt_verify(&gt, &s));
                    }
                }
                Err(Error::EmptyCell(..)) => assert_eq!(g.edge_count(), 0),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn gridtiling_matches_cliques_on_random_graphs() {
    for seed in 0..100u64 {
        let mut rng = seeded(seed);
        let n = rng.gen_range(3..=8);
        let density = rng.gen_range(0.2..0.7);
        let g = random_ugraph(&mut rng, n, density);
        if g.edge_count() == 0 {
            continue;
        }
        let ell = 3;
        let gt = clique_to_gridtiling(&g, ell).unwrap();
        assert_eq!(gt_solve_bruteforce(&gt).is_some(), has_clique(&g, ell), "seed {seed}");
    }
}
