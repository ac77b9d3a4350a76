mod common;

use common::*;
use oscu::bijections::*;
use oscu::enumerate::{generate, generate_vos, OpFilter};
use oscu::orders::{OrderingPair, TotalOrder};
use oscu::partitions::{boundary_pairs, boundary_to_partition, BoundaryPair};
use oscu::tableaux::{enumerate_got, enumerate_ssyt, is_sssyt, GenOscTableau, OscillatingTableau, Tableau};
use oscu::vos::VOSet;

#[test]
fn map_and_unmap_the_running_example() {
    let g = paths_to_got(&ex_paths(), &TotalOrder::CanonicalQ(2)).unwrap();
    assert_eq!(g, ex_got());
    assert_eq!(got_to_paths(4, 2, &TotalOrder::CanonicalQ(2), &g).unwrap(), ex_paths());
}

#[test]
fn grid_for_reflected_example() {
    assert_eq!(grid_for(4, 2), (4, 6));
    assert_eq!(grid_for(4, -2), (6, 4));
    assert_eq!(min_n(2, &part(&[3, 2, 2])), 3);
}

#[test]
fn phi_names_the_failing_hypothesis() {
    let g = ex_got();
    let e = phi(2, 2, &TotalOrder::CanonicalQ(2), &g).unwrap_err().to_string();
    assert!(e.contains("below"), "{e}");
    let e = phi(2, 4, &TotalOrder::NaturalAsc, &g).unwrap_err().to_string();
    assert!(e.contains("not a 2-order"), "{e}");
    let mut bad = g.clone();
    bad.t[0] = 2;
    bad.t[1] = 1;
    let e = phi(2, 4, &TotalOrder::CanonicalQ(2), &bad).unwrap_err().to_string();
    assert!(e.contains("not a generalized oscillating tableau"), "{e}");
}

#[test]
fn theta_phi_round_trip_on_all_small_grids() {
    for a in 1..=3 {
        for b in 1..=4 {
            let q = b as i64 - a as i64;
            let n = a.min(b);
            let pair = OrderingPair::complete(q, a, b).unwrap();
            for s in generate_vos(a, b, &OpFilter::default()).unwrap() {
                let g = theta(&s, &pair).unwrap();
                assert_eq!(phi(q, n, &TotalOrder::CanonicalQ(q), &g).unwrap(), s);
            }
        }
    }
}

#[test]
fn phi_is_onto_for_short_tableaux() {
    // every tableau of GOT([3], ≺_1, λ, l) for l ≤ 4 comes from a set on 3×4
    let pair = OrderingPair::complete(1, 3, 4).unwrap();
    for bp in boundary_pairs(3, 4) {
        let lambda = boundary_to_partition(&bp);
        for l in 0..=4 {
            let gots = enumerate_got(3, &TotalOrder::CanonicalQ(1), &lambda, l);
            let sets = generate_vos(3, 4, &OpFilter::boundary(&bp).with_l(l)).unwrap();
            assert_eq!(gots.len(), sets.len(), "{bp:?} l={l}");
            for g in gots {
                let s = phi(1, 3, &TotalOrder::CanonicalQ(1), &g).unwrap();
                assert_eq!(theta(&s, &pair).unwrap(), g);
            }
        }
    }
}

#[test]
fn lexicographic_inverses() {
    for (a, b) in [(2, 4), (3, 4), (4, 2), (4, 3)] {
        for (s, e) in generate(a, b, &OpFilter::default()).unwrap() {
            let bp = e.boundary();
            if bp.alpha_full() {
                let g = theta(&s, &OrderingPair::lex(a, b)).unwrap();
                assert_eq!(psi_hat(a, b, &g).unwrap(), s);
            }
            if bp.beta_full() {
                let g = theta(&s, &OrderingPair::antilex(a, b)).unwrap();
                assert_eq!(psi_check(a, b, &g).unwrap(), s);
            }
        }
    }
}

#[test]
fn lexicographic_map_is_not_onto_off_the_full_boundary() {
    // α = {2} ≠ [2]: some tableau has no preimage
    let bp = BoundaryPair::new(2, 4, vec![2], vec![1]).unwrap();
    let lambda = boundary_to_partition(&bp);
    let total_sets = generate_vos(2, 4, &OpFilter::boundary(&bp)).unwrap().len();
    let total_gots: usize = (0..=9).map(|l| enumerate_got(2, &TotalOrder::NaturalAsc, &lambda, l).len()).sum();
    assert!(total_sets < total_gots, "{total_sets} vs {total_gots}");
}

#[test]
fn nonintersecting_example_to_semistandard_tableau() {
    let s = VOSet::new(4, 6, vec![(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (3, 6), (4, 3)]).unwrap();
    assert_eq!(s.boundary().unwrap(), BoundaryPair::new(4, 6, vec![1, 2, 4], vec![1, 4, 5]).unwrap());
    assert_eq!(s.chi().unwrap(), 0);
    let g = theta(&s, &OrderingPair::lex(4, 6)).unwrap();
    assert_eq!(g.t, vec![1, 1, 1, 2, 3, 3, 3, 4]);
    let tau = upsilon(&s).unwrap();
    assert_eq!(tau, Tableau { rows: vec![vec![1, 1, 1, 3], vec![2, 3], vec![3, 4]] });
}

#[test]
fn upsilon_is_a_bijection_onto_shifted_semistandard_tableaux() {
    for bp in boundary_pairs(3, 4) {
        let lambda = boundary_to_partition(&bp);
        let sets = generate_vos(3, 4, &OpFilter::boundary(&bp).with_l(lambda.size())).unwrap();
        let mut images: Vec<Tableau> = sets.iter().map(|s| upsilon(s).unwrap()).collect();
        images.sort();
        let mut want: Vec<Tableau> =
            enumerate_ssyt(3, &lambda).into_iter().filter(|t| is_sssyt(3, 4, t)).collect();
        want.sort();
        assert_eq!(images, want, "{bp:?}");
    }
}

#[test]
fn upsilon_rejects_osculations() {
    assert!(upsilon(&ex_s()).is_err());
}

#[test]
fn empty_and_trivial_tableaux() {
    let g = GenOscTableau::new(vec![1], OscillatingTableau::from_profile(&[0]).unwrap()).unwrap();
    assert_eq!(phi(0, 1, &TotalOrder::CanonicalQ(0), &g).unwrap().points, vec![(1, 1)]);
    assert!(GenOscTableau::new(vec![1, 2], OscillatingTableau::from_profile(&[0]).unwrap()).is_err());
}
