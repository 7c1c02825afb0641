use std::collections::{BTreeSet, HashMap};
use std::string::{String, ToString};
use std::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::combinatorics::{double_factorial_odd, factorial};

fn u(i: u8) -> Point {
    Point::Unprimed(i)
}
fn p(i: u8) -> Point {
    Point::Primed(i)
}

fn d(s: &str) -> BrauerDiagram {
    s.parse().unwrap()
}

/// Product computed on the glued three-layer point set with a union-find:
/// layer 0 = left pins of `a`, layer 1 = the glued middle, layer 2 = right
/// pins of `b`. Each component with two outer points becomes a block.
fn chain_oracle(a: &BrauerDiagram, b: &BrauerDiagram) -> (BrauerDiagram, usize) {
    let n = a.rank();
    let mut parent: Vec<usize> = (0..3 * n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut union = |x: usize, y: usize| {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent[rx] = ry;
    };
    // a lives on layers 0 (unprimed) and 1 (primed)
    for (x, y) in a.blocks() {
        let node = |q: Point| match q {
            Point::Unprimed(i) => i as usize - 1,
            Point::Primed(i) => n + i as usize - 1,
        };
        union(node(x), node(y));
    }
    // b lives on layers 1 (unprimed) and 2 (primed)
    for (x, y) in b.blocks() {
        let node = |q: Point| match q {
            Point::Unprimed(i) => n + i as usize - 1,
            Point::Primed(i) => 2 * n + i as usize - 1,
        };
        union(node(x), node(y));
    }
    let mut comps: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..3 * n {
        let r = find(&mut parent, x);
        comps.entry(r).or_default().push(x);
    }
    let mut blocks = Vec::new();
    let mut loops = 0;
    for members in comps.values() {
        let outer: Vec<Point> = members
            .iter()
            .filter_map(|&x| match x / n {
                0 => Some(u((x % n) as u8 + 1)),
                2 => Some(p((x % n) as u8 + 1)),
                _ => None,
            })
            .collect();
        match outer.len() {
            0 => loops += 1,
            2 => blocks.push((outer[0], outer[1])),
            k => panic!("component with {k} outer points"),
        }
    }
    (BrauerDiagram::new(n, &blocks).unwrap(), loops)
}

fn random_diagram(rng: &mut ChaCha8Rng, n: usize) -> BrauerDiagram {
    BrauerDiagram::unrank(n, rng.gen_range(0..double_factorial_odd(n))).unwrap()
}

#[test]
fn figure_one_element_is_valid() {
    let fig = BrauerDiagram::new(
        6,
        &[
            (u(1), u(5)),
            (u(4), u(6)),
            (p(2), p(4)),
            (p(3), p(5)),
            (u(2), p(1)),
            (u(3), p(6)),
        ],
    )
    .unwrap();
    assert_eq!(fig.corank(), 4);
    assert_eq!(fig.to_string(), "n=6;{1,5}{4,6}{2,1'}{3,6'}{2',4'}{3',5'}");
}

#[test]
fn identity_blocks() {
    assert_eq!(
        BrauerDiagram::identity(1).unwrap().to_string(),
        "n=1;{1,1'}"
    );
    let id3 = BrauerDiagram::identity(3).unwrap();
    assert_eq!(
        id3,
        BrauerDiagram::new(3, &[(u(1), p(1)), (u(2), p(2)), (u(3), p(3))]).unwrap()
    );
    assert_eq!(id3.corank(), 0);
    assert!(BrauerDiagram::identity(0).is_err());
}

#[test]
fn rejects_non_matchings() {
    assert_eq!(
        BrauerDiagram::new(2, &[(u(1), u(2)), (u(1), p(1))]),
        Err(Error::RepeatedPoint(u(1)))
    );
    assert!(matches!(
        BrauerDiagram::new(2, &[(u(1), u(2))]),
        Err(Error::BlockCount {
            expected: 2,
            found: 1
        })
    ));
    assert!(matches!(
        BrauerDiagram::new(2, &[(u(1), u(3)), (p(1), p(2))]),
        Err(Error::PointOutOfRange { .. })
    ));
    assert_eq!(
        BrauerDiagram::new(2, &[(u(1), u(1)), (p(1), p(2))]),
        Err(Error::DegenerateBlock(u(1)))
    );
    assert!(BrauerDiagram::new(2, &[(u(0), u(1)), (p(1), p(2))]).is_err());
}

#[test]
fn atoms() {
    let a = BrauerDiagram::atom(4, 1, 3).unwrap();
    assert_eq!(a, d("n=4;{1,3}{1',3'}{2,2'}{4,4'}"));
    assert_eq!(a, BrauerDiagram::atom(4, 3, 1).unwrap());
    assert_eq!(a * a, a);
    assert_eq!(a.corank(), 2);
    assert!(BrauerDiagram::atom(4, 2, 2).is_err());
    assert!(BrauerDiagram::atom(4, 1, 5).is_err());
}

#[test]
fn hand_traced_product_matches_chain_oracle() {
    let s12 = BrauerDiagram::atom(3, 1, 2).unwrap();
    let s13 = BrauerDiagram::atom(3, 1, 3).unwrap();
    let s23 = BrauerDiagram::atom(3, 2, 3).unwrap();
    let expected = d("n=3;{1,3}{1',2'}{2,3'}");
    assert_eq!(s13 * s12, expected);
    assert_eq!(chain_oracle(&s13, &s12).0, expected);
    assert_eq!(s12 * (s23 * s12), s12);
}

#[test]
fn product_agrees_with_chain_oracle_exhaustively_n3() {
    let all: Vec<_> = enumerate_all(3).unwrap().collect();
    for a in &all {
        for b in &all {
            let (prod, loops) = a.multiply_with_loops(b).unwrap();
            assert_eq!((prod, loops), chain_oracle(a, b), "{a} * {b}");
        }
    }
}

#[test]
fn product_agrees_with_chain_oracle_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5000 {
        let n = rng.gen_range(1..=9);
        let (a, b) = (random_diagram(&mut rng, n), random_diagram(&mut rng, n));
        assert_eq!(a.multiply_with_loops(&b).unwrap(), chain_oracle(&a, &b));
    }
    // the full rank uses every bit of the slot masks
    for _ in 0..200 {
        let (a, b) = (
            random_diagram(&mut rng, MAX_RANK),
            random_diagram(&mut rng, MAX_RANK),
        );
        assert_eq!(a.multiply_with_loops(&b).unwrap(), chain_oracle(&a, &b));
    }
}

#[test]
fn loop_count() {
    // σ₁₂·σ₁₂ closes exactly one middle loop
    let s = BrauerDiagram::atom(3, 1, 2).unwrap();
    assert_eq!(s.multiply_with_loops(&s).unwrap(), (s, 1));
    let id = BrauerDiagram::identity(3).unwrap();
    assert_eq!(id.multiply_with_loops(&s).unwrap().1, 0);
}

#[test]
fn rank_mismatch() {
    let a = BrauerDiagram::identity(2).unwrap();
    let b = BrauerDiagram::identity(3).unwrap();
    assert_eq!(
        a.multiply(&b),
        Err(Error::RankMismatch { left: 2, right: 3 })
    );
    assert!(a.green_related(&b, GreenRelation::D).is_err());
}

#[test]
fn associativity_exhaustive_n3() {
    let all: Vec<_> = enumerate_all(3).unwrap().collect();
    for a in &all {
        for b in &all {
            let ab = a * b;
            for c in &all {
                assert_eq!(ab * *c, *a * (b * c));
            }
        }
    }
}

#[test]
fn identity_law_exhaustive_n4() {
    let id = BrauerDiagram::identity(4).unwrap();
    for x in enumerate_all(4).unwrap() {
        assert_eq!(id * x, x);
        assert_eq!(x * id, x);
    }
}

#[test]
fn corank_never_decreases_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5000 {
        let n = rng.gen_range(1..=8);
        let (a, b) = (random_diagram(&mut rng, n), random_diagram(&mut rng, n));
        assert!((a * b).corank() >= a.corank().max(b.corank()));
    }
}

#[test]
fn enumeration_counts_and_uniqueness() {
    for n in 1..=6 {
        let all: BTreeSet<_> = enumerate_all(n).unwrap().collect();
        assert_eq!(all.len() as u64, double_factorial_odd(n));
    }
    assert_eq!(enumerate_all(3).unwrap().count(), 15);
    assert_eq!(enumerate_all(6).unwrap().len(), 10395);
    assert_eq!(
        enumerate_all(9).err(),
        Some(Error::LimitExceeded { n: 9, limit: 8 })
    );
    assert_eq!(enumerate_all_with_limit(9, 9).unwrap().len(), 34459425);
}

#[test]
fn enumeration_order_is_smallest_point_first() {
    let first3: Vec<String> = enumerate_all(2).unwrap().map(|x| x.to_string()).collect();
    // slot order 1 < 2 < 1' < 2': partner of 1 runs through 2, 1', 2'
    assert_eq!(
        first3,
        ["n=2;{1,2}{1',2'}", "n=2;{1,1'}{2,2'}", "n=2;{1,2'}{2,1'}"]
    );
}

#[test]
fn rank_round_trips() {
    for n in 1..=5 {
        for (r, x) in enumerate_all(n).unwrap().enumerate() {
            assert_eq!(x.rank_index(), r as u64);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = random_diagram(&mut rng, MAX_RANK);
    assert_eq!(BrauerDiagram::unrank(MAX_RANK, x.rank_index()).unwrap(), x);
    assert!(BrauerDiagram::unrank(3, 15).is_err());
}

#[test]
fn invertible_elements_are_permutations() {
    for n in 1..=6 {
        let units: Vec<_> = enumerate_all(n)
            .unwrap()
            .filter(|x| x.corank() == 0)
            .collect();
        assert_eq!(units.len() as u64, factorial(n));
        for x in &units {
            let perm = x.to_permutation().unwrap();
            assert_eq!(BrauerDiagram::from_permutation(&perm).unwrap(), *x);
        }
    }
}

#[test]
fn permutation_embedding() {
    assert_eq!(
        BrauerDiagram::from_permutation(&[1, 2, 3]).unwrap(),
        BrauerDiagram::identity(3).unwrap()
    );
    assert_eq!(
        BrauerDiagram::from_permutation(&[2, 1, 3]).unwrap(),
        d("n=3;{1,2'}{2,1'}{3,3'}")
    );
    assert_eq!(
        BrauerDiagram::from_permutation(&[1, 1, 3]),
        Err(Error::NotABijection)
    );
    assert_eq!(
        BrauerDiagram::from_permutation(&[1, 4, 3]),
        Err(Error::NotABijection)
    );
}

#[test]
fn permutation_embedding_reads_left_to_right() {
    // compose(p, q)[k] = q(p(k)); checked against the union-find oracle
    let perms: Vec<Vec<usize>> = enumerate_all(4)
        .unwrap()
        .filter_map(|x| x.to_permutation())
        .collect();
    let mut anti = 0;
    for pa in &perms {
        for qa in &perms {
            let (x, y) = (
                BrauerDiagram::from_permutation(pa).unwrap(),
                BrauerDiagram::from_permutation(qa).unwrap(),
            );
            let q_after_p: Vec<usize> = pa.iter().map(|&k| qa[k - 1]).collect();
            let p_after_q: Vec<usize> = qa.iter().map(|&k| pa[k - 1]).collect();
            let prod = chain_oracle(&x, &y).0;
            assert_eq!(prod, BrauerDiagram::from_permutation(&q_after_p).unwrap());
            if prod != BrauerDiagram::from_permutation(&p_after_q).unwrap() {
                anti += 1;
            }
        }
    }
    // the other order is wrong for every non-commuting pair
    assert!(anti > 0);
}

#[test]
fn green_relations() {
    let s12 = BrauerDiagram::atom(3, 1, 2).unwrap();
    let s13 = BrauerDiagram::atom(3, 1, 3).unwrap();
    for rel in [
        GreenRelation::R,
        GreenRelation::L,
        GreenRelation::H,
        GreenRelation::D,
    ] {
        assert!(s12.green_related(&s12, rel).unwrap());
    }
    assert!(s12.green_related(&s13, GreenRelation::D).unwrap());
    assert!(!s12.green_related(&s13, GreenRelation::R).unwrap());
    assert!(!s12.green_related(&s13, GreenRelation::L).unwrap());
    let x = s13 * s12;
    assert!(x.green_related(&s13, GreenRelation::R).unwrap());
    assert!(x.green_related(&s12, GreenRelation::L).unwrap());
    assert!(!x.green_related(&s12, GreenRelation::H).unwrap());
    assert_eq!("J".parse::<GreenRelation>().unwrap(), GreenRelation::D);
}

#[test]
fn h_classes_have_factorial_size() {
    for n in 1..=6 {
        type Brackets = Vec<(u8, u8)>;
        let mut classes: HashMap<(Brackets, Brackets), usize> = HashMap::new();
        for x in enumerate_all(n).unwrap() {
            let key = (x.left_brackets().collect(), x.right_brackets().collect());
            *classes.entry(key).or_default() += 1;
        }
        for ((left, _), size) in classes {
            assert_eq!(size as u64, factorial(n - 2 * left.len()), "n = {n}");
        }
    }
}

#[test]
fn transpose_is_an_anti_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=8);
        let (a, b) = (random_diagram(&mut rng, n), random_diagram(&mut rng, n));
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!((a * b).transpose(), b.transpose() * a.transpose());
    }
}

#[test]
fn text_format() {
    for x in enumerate_all(5).unwrap() {
        assert_eq!(d(&x.to_string()), x);
    }
    assert_eq!(
        d("n=3;{1,2}{1',2'}{3,3'}").to_string(),
        "n=3;{1,2}{3,3'}{1',2'}"
    );
    assert_eq!(d(" n = 2 ; { 2' , 1' } {2,1}"), d("n=2;{1,2}{1',2'}"));
    for bad in [
        "3;{1,2}",
        "n=2{1,2}{1',2'}",
        "n=2;{1,2}{1',2'",
        "n=2;{1}{2,1'}",
        "n=2;{1,x}{1',2'}",
    ] {
        assert!(bad.parse::<BrauerDiagram>().is_err(), "{bad}");
    }
}

#[test]
fn partner_lookup_and_slots() {
    let x = d("n=3;{1,3}{1',2'}{2,3'}");
    assert_eq!(x.partner(u(2)).unwrap(), p(3));
    assert_eq!(x.partner(p(1)).unwrap(), p(2));
    assert!(x.partner(u(4)).is_err());
    let slots: Vec<usize> = x.partner_slots().iter().map(|&s| s as usize).collect();
    assert_eq!(BrauerDiagram::from_partner_slots(3, &slots).unwrap(), x);
    assert!(BrauerDiagram::from_partner_slots(3, &[1, 0, 3, 2, 5, 5]).is_err());
}
