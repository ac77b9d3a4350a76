mod common;

use common::*;
use num_bigint::BigUint;
use oscu::orders::*;
use oscu::partitions::{partitions_in_box, Partition};
use oscu::tableaux::*;

#[test]
fn canonical_rankings() {
    assert_eq!(TotalOrder::CanonicalQ(2).ranking(-1, 5).unwrap(), vec![-1, 5, 0, 4, 1, 3, 2]);
    assert_eq!(TotalOrder::CanonicalQ(0).ranking(-3, 3).unwrap(), vec![-3, 3, -2, 2, -1, 1, 0]);
}

#[test]
fn canonical_order_matches_its_definition() {
    for q in -3..=3i64 {
        let o = TotalOrder::CanonicalQ(q);
        for z in -6..=6 {
            for w in -6..=6 {
                if z != w {
                    assert_eq!(o.precedes(z, w).unwrap(), oracle_canonical_precedes(q, z, w), "q={q} {z} {w}");
                }
            }
        }
        assert!(o.is_q_order(q, -6, 6));
        assert!(TotalOrder::upper_first_q_order(q, -6, 6).is_q_order(q, -6, 6));
    }
    assert!(!TotalOrder::NaturalAsc.is_q_order(0, -2, 2));
    assert!(TotalOrder::NaturalAsc.is_q_order(2, -2, 2));
    assert!(TotalOrder::NaturalDesc.is_q_order(-2, -2, 2));
}

#[test]
fn level_functions() {
    assert_eq!(LevelFunction::Lq(2).level(3, 4), 3);
    assert_eq!(LevelFunction::Lq(2).level(4, 2), 4);
    assert_eq!(LevelFunction::Lq(-1).level(1, 1), 1);
    assert_eq!(LevelFunction::Lex.level(3, 5), 3);
    assert_eq!(LevelFunction::AntiLex.level(3, 5), 5);
}

#[test]
fn g_q_inverts_level_and_content() {
    for q in -3..=3i64 {
        for i in 1..=6i64 {
            for j in 1..=6i64 {
                let u = LevelFunction::Lq(q).level(i as usize, j as usize);
                assert_eq!(g_q(q, u, j - i), (i, j), "q={q} ({i},{j})");
            }
        }
    }
}

#[test]
fn ordering_pair_validation() {
    assert!(OrderingPair::complete(2, 4, 6).is_ok());
    assert!(OrderingPair::new(LevelFunction::Lq(0), TotalOrder::NaturalAsc, 3, 3).is_err());
    assert!(validate_ordering_pair(LevelFunction::Lex, &TotalOrder::NaturalAsc, 3, 4));
    assert!(validate_ordering_pair(LevelFunction::AntiLex, &TotalOrder::NaturalDesc, 3, 4));
}

#[test]
fn order_specs_parse() {
    assert_eq!("q".parse::<OrderSpec>().unwrap().total_order(4, 6).unwrap(), TotalOrder::CanonicalQ(2));
    assert!("table:0,0".parse::<OrderSpec>().unwrap().total_order(2, 2).is_err());
    assert!("bogus".parse::<OrderSpec>().is_err());
}

#[test]
fn running_example_tableau() {
    let eps = OscillatingTableau::from_profile(&EX_PROFILE).unwrap();
    assert_eq!(eps.partitions(), ex_eps().as_slice());
    assert_eq!(eps.shape(), &part(&[3, 2, 2]));
    assert!(validate_got(4, &TotalOrder::CanonicalQ(2), &part(&[3, 2, 2]), 11, &ex_got()));
    assert!(!validate_got(3, &TotalOrder::CanonicalQ(2), &part(&[3, 2, 2]), 11, &ex_got()));
    assert!(OscillatingTableau::from_profile(&[1]).is_err());
}

#[test]
fn syt_example() {
    let sigma = Tableau { rows: vec![vec![1, 2, 3, 7], vec![4, 6], vec![5, 8]] };
    assert!(sigma.is_standard());
    assert_eq!(sigma.ascents(), vec![1, 2, 5, 6]);
    let eps = syt_ot(&sigma).unwrap();
    assert_eq!(eps.profile(), vec![0, 1, 2, -1, -2, 0, 3, -1]);
    assert_eq!(ot_syt(&eps).unwrap(), sigma);
    // SYT ascents are OT ascents under the natural order
    assert_eq!(eps.ascents(&TotalOrder::NaturalAsc).unwrap(), sigma.ascents());
}

#[test]
fn syt_counts_match_hooks_and_corner_recursion() {
    for l in partitions_in_box(4, 4) {
        let n = enumerate_syt(&l).len() as u64;
        assert_eq!(n, oracle_syt_count(l.parts()), "{l}");
        assert_eq!(f_lambda(&l), BigUint::from(n), "{l}");
    }
}

#[test]
fn oscillating_counts_match_enumeration_and_a_walk() {
    // independent count: walk over partitions, adding or removing one square per step
    fn walk(l: usize, target: &Partition) -> u64 {
        let mut cur: std::collections::BTreeMap<Partition, u64> = [(Partition::empty(), 1)].into();
        for _ in 0..l {
            let mut next = std::collections::BTreeMap::new();
            for (p, c) in cur {
                for d in p.change_diagonals() {
                    *next.entry(p.neighbor(d).unwrap()).or_insert(0) += c;
                }
            }
            cur = next;
        }
        cur.get(target).copied().unwrap_or(0)
    }
    for lambda in partitions_in_box(3, 3) {
        for l in 0..=9 {
            let e = enumerate_ot(&lambda, l).len() as u64;
            assert_eq!(e, walk(l, &lambda), "{lambda} {l}");
            assert_eq!(count_ot(&lambda, l), BigUint::from(e), "{lambda} {l}");
        }
    }
}

#[test]
fn ascent_table_for_length_six() {
    let e = Partition::empty();
    assert_eq!(count_ot(&e, 6), BigUint::from(15u32));
    let want: Vec<BigUint> = [1u32, 7, 6, 1, 0, 0].iter().map(|&x| BigUint::from(x)).collect();
    for o in [TotalOrder::CanonicalQ(0), TotalOrder::NaturalAsc, TotalOrder::NaturalDesc] {
        let got = ascent_distribution(&e, 6, &o).unwrap();
        assert_eq!(&got[..], &want[..], "{o:?}");
    }
    let eps = OscillatingTableau::from_profile(&[0, 1, 1, 0, 0, 0]).unwrap();
    assert_eq!(eps.ascents(&TotalOrder::CanonicalQ(0)).unwrap(), vec![3]);
    assert_eq!(eps.ascents(&TotalOrder::NaturalAsc).unwrap(), vec![1]);
    assert_eq!(eps.ascents(&TotalOrder::NaturalDesc).unwrap(), vec![3]);
}

#[test]
fn ascent_distribution_matches_listing() {
    for lambda in partitions_in_box(2, 3) {
        for l in 0..=7 {
            for o in [TotalOrder::CanonicalQ(1), TotalOrder::NaturalAsc, TotalOrder::upper_first_q_order(-1, -9, 9)] {
                let mut hist = vec![BigUint::from(0u32); l.max(1)];
                for eps in enumerate_ot(&lambda, l) {
                    hist[eps.ascents(&o).unwrap().len()] += 1u32;
                }
                assert_eq!(ascent_distribution(&lambda, l, &o).unwrap(), hist, "{lambda} {l} {o:?}");
            }
        }
    }
}

#[test]
fn semistandard_round_trip() {
    let tau = Tableau { rows: vec![vec![1, 1, 1, 3], vec![2, 3], vec![3, 4]] };
    assert!(tau.is_semistandard());
    assert!(is_sssyt(4, 6, &tau));
    let g = ssyt_got(&tau).unwrap();
    assert_eq!(g.t, vec![1, 1, 1, 2, 3, 3, 3, 4]);
    assert_eq!(got_ssyt(&g).unwrap(), tau);
}

#[test]
fn ssyt_enumeration_counts() {
    // number of SSYT of shape (2,1) with entries ≤ 3 is 8
    assert_eq!(enumerate_ssyt(3, &part(&[2, 1])).len(), 8);
    assert_eq!(enumerate_ssyt(2, &part(&[1, 1, 1])).len(), 0);
}

#[test]
fn got_enumeration_agrees_with_the_count() {
    for lambda in partitions_in_box(2, 2) {
        for l in 0..=5 {
            for n in 1..=3 {
                let o = TotalOrder::CanonicalQ(0);
                let listed = enumerate_got(n, &o, &lambda, l);
                assert!(listed.iter().all(|g| validate_got(n, &o, &lambda, l, g)));
                assert_eq!(BigUint::from(listed.len()), count_got(n, &o, &lambda, l).unwrap(), "{lambda} {l} {n}");
            }
        }
    }
}

#[test]
fn semistandard_counts_by_ascents_and_hook_content() {
    assert_eq!(count_ssyt(2, &part(&[2, 1])), BigUint::from(2u32));
    for n in 1..=4 {
        for lambda in partitions_in_box(3, 3) {
            // hook-content formula: Π (n + c) / h over cells
            let conj = lambda.conjugate();
            let (mut num, mut den) = (1i64, 1i64);
            for (i, j) in lambda.cells() {
                num *= n as i64 + j as i64 - i as i64;
                den *= ((lambda.part(i) - j) + (conj.part(j) - i) + 1) as i64;
            }
            let hc = (num / den) as usize;
            assert_eq!(enumerate_ssyt(n, &lambda).len(), hc, "n={n} λ={lambda}");
            assert_eq!(count_ssyt(n, &lambda), BigUint::from(hc), "n={n} λ={lambda}");
        }
    }
}

#[test]
fn profiles_cover_the_shape_contents() {
    for lambda in partitions_in_box(3, 3) {
        for l in 0..=7 {
            for eps in enumerate_ot(&lambda, l) {
                let p = eps.profile();
                assert_eq!(OscillatingTableau::from_profile(&p).unwrap(), eps);
                if !lambda.is_empty() {
                    for c in 1 - lambda.len() as i64..=lambda.first() as i64 - 1 {
                        assert!(p.contains(&c), "{lambda} {p:?} misses {c}");
                    }
                }
            }
        }
    }
}
