mod common;

use turan_core::canon::{canonical_labeling, vertex_orbits};
use turan_core::constructions::{circulant, complete_bipartite};
use turan_core::iso::automorphism_count;
use turan_core::{are_isomorphic, canonical_form, Graph};

#[test]
fn relabelling_invariance_on_ten_thousand_samples() {
    let mut rng = common::rng(11);
    for i in 0..10_000 {
        let n = 1 + i % 14;
        let p = [0.1, 0.3, 0.5, 0.7, 0.9][i % 5];
        let g = common::random_graph(n, p, &mut rng);
        let perm = common::random_permutation(n, &mut rng);
        let h = common::permute(&g, &perm);
        assert_eq!(canonical_form(&g), canonical_form(&h), "{g:?} vs {h:?}");
    }
}

#[test]
fn canonical_equality_matches_brute_force_isomorphism() {
    let mut rng = common::rng(12);
    let mut positives = 0;
    let mut negatives = 0;
    for _ in 0..3_000 {
        let n = 4 + rand::Rng::gen_range(&mut rng, 0..4);
        let g = common::random_graph(n, 0.5, &mut rng);
        let h = common::random_graph(n, 0.5, &mut rng);
        if g.degree_sequence() != h.degree_sequence() {
            continue;
        }
        let brute = common::brute_isomorphic(&g, &h);
        assert_eq!(
            canonical_form(&g) == canonical_form(&h),
            brute,
            "{g:?} vs {h:?}"
        );
        assert_eq!(are_isomorphic(&g, &h), brute);
        if brute {
            positives += 1;
        } else {
            negatives += 1;
        }
    }
    assert!(
        positives > 20 && negatives > 20,
        "{positives} / {negatives}"
    );
}

#[test]
fn labelling_is_a_valid_relabelling() {
    let mut rng = common::rng(13);
    for _ in 0..1_000 {
        let g = common::random_graph(9, 0.4, &mut rng);
        let lab = canonical_labeling(&g);
        assert_eq!(&g.permute(&lab.perm), lab.canonical.graph());
        for gen in &lab.generators {
            let perm: Vec<usize> = gen.iter().map(|&x| x as usize).collect();
            assert_eq!(g.permute(&perm), g);
        }
    }
}

#[test]
fn automorphism_counts_match_brute_force() {
    let mut rng = common::rng(14);
    for _ in 0..300 {
        let g = common::random_graph(6, 0.5, &mut rng);
        assert_eq!(
            automorphism_count(&g),
            u128::from(common::brute_automorphisms(&g))
        );
    }
    let b2 = turan_core::constructions::book(2).unwrap();
    assert_eq!(common::brute_automorphisms(&b2), 4);
    assert_eq!(
        turan_core::Pattern::book(2).unwrap().automorphism_count(),
        4
    );
}

#[test]
fn orbits_of_regular_symmetric_graphs() {
    let k33 = complete_bipartite(3, 3).unwrap();
    let c = circulant(6, &[1, 3]).unwrap();
    assert!(are_isomorphic(&k33, &c));
    assert!(common::brute_isomorphic(&k33, &c));
    let lab = canonical_labeling(&c);
    let orbits = vertex_orbits(6, &lab.generators);
    assert!(orbits.iter().all(|&o| o == orbits[0]));
    assert_eq!(automorphism_count(&Graph::complete(7).unwrap()), 5040);
}
