use std::collections::{BTreeMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use proptest::prelude::*;

use ppt_core::{
    box_from_triple, classify_families, family_fermat, family_plato, family_pythagoras, radii_of, Family, Forest,
    Letter, PathCode, PptTriple, TreeKind,
};

const BH: [[[i64; 3]; 3]; 3] =
    [[[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]], [[1, 2, 2], [2, 1, 2], [2, 2, 3]], [[1, -2, 2], [2, -1, 2], [2, -2, 3]]];

fn apply(m: &[[i64; 3]; 3], t: &PptTriple) -> [BigInt; 3] {
    let v = [t.a(), t.b(), t.c()].map(|x| BigInt::from(x.clone()));
    m.map(|row| row.iter().zip(&v).map(|(k, x)| x * *k).sum())
}

fn canonical(v: [BigInt; 3]) -> PptTriple {
    let [a, b, c] = v.map(|x| x.to_biguint().expect("positive component"));
    PptTriple::new(a, b, c).expect("matrix image is a PPT")
}

/// HAT successor maps on `q/p`, reduced: `2q/(p+q)`, `(p-q)/2p`, `(p+q)/2p`.
fn new_child_by_hat(t: &PptTriple, letter: Letter) -> PptTriple {
    let q = t.b().clone();
    let p = t.c() + t.a();
    let g = q.gcd(&p);
    let (q, p) = (q / &g, p / g);
    let (n, d) = match letter {
        Letter::A => (&q * 2u32, &p + &q),
        Letter::B => (&p - &q, &p * 2u32),
        Letter::C => (&p + &q, &p * 2u32),
    };
    let g = n.gcd(&d);
    let (q, p) = (n / &g, d / g);
    PptTriple::new(&p * &p - &q * &q, &p * &q * 2u32, &p * &p + &q * &q).unwrap()
}

fn all_paths(depth: usize) -> Vec<PathCode> {
    let mut level = vec![PathCode::root()];
    let mut out = level.clone();
    for _ in 0..depth {
        level = level.iter().flat_map(|p| Letter::ALL.map(|l| p.child(l))).collect();
        out.extend(level.iter().cloned());
    }
    out
}

#[test]
fn bh_children_match_literal_matrices_to_depth_6() {
    let forest = Forest::default();
    for path in all_paths(6) {
        let t = forest.navigate(TreeKind::BarningHall, &path).unwrap();
        let kids = forest.children(TreeKind::BarningHall, &t).unwrap();
        for (m, kid) in BH.iter().zip(&kids) {
            let image = apply(m, &t);
            assert_eq!(
                image.clone().map(|x| x.to_biguint().unwrap()),
                [kid.a().clone(), kid.b().clone(), kid.c().clone()]
            );
            assert_eq!(canonical(image), *kid);
        }
    }
}

#[test]
fn new_children_match_hat_maps_to_depth_6() {
    let forest = Forest::default();
    for path in all_paths(6) {
        let t = forest.navigate(TreeKind::New, &path).unwrap();
        let kids = forest.children(TreeKind::New, &t).unwrap();
        for (l, kid) in Letter::ALL.into_iter().zip(&kids) {
            assert_eq!(new_child_by_hat(&t, l), *kid, "{path}{l}");
        }
    }
}

#[test]
fn new_matrices_map_the_three_independent_triples() {
    let forest = Forest::default();
    let ms = forest.matrices(TreeKind::New);
    for (a, b, c) in [(3u32, 4u32, 5u32), (5, 12, 13), (15, 8, 17)] {
        let t = PptTriple::new(a, b, c).unwrap();
        for (m, l) in ms.iter().zip(Letter::ALL) {
            let image = canonical(apply(m.rows(), &t));
            assert_eq!(image, new_child_by_hat(&t, l));
        }
    }
}

#[test]
fn determinants() {
    let forest = Forest::default();
    let bh: Vec<i64> = forest.matrices(TreeKind::BarningHall).iter().map(|m| m.det()).collect();
    let new: Vec<i64> = forest.matrices(TreeKind::New).iter().map(|m| m.det()).collect();
    assert_eq!(bh, [1, -1, 1]);
    assert!(new.iter().all(|d| d.abs() == 8));
    assert_eq!(new, [8, -8, 8]);
}

#[test]
fn levels_hold_distinct_triples() {
    let forest = Forest::default();
    for kind in [TreeKind::BarningHall, TreeKind::New] {
        let mut seen = HashSet::new();
        for depth in 0..=8 {
            let level = forest.enumerate_level(kind, depth, 12).unwrap();
            assert_eq!(level.len(), 3usize.pow(depth as u32));
            for t in level {
                assert!(seen.insert(t), "{kind} repeats a triple by level {depth}");
            }
        }
    }
}

#[test]
fn enumeration_cap_is_enforced() {
    let forest = Forest::default();
    assert!(forest.enumerate_level(TreeKind::New, 13, 12).is_err());
    assert!(forest.enumerate_level(TreeKind::New, 2, 1).is_err());
}

#[test]
fn level_order_matches_paths() {
    let forest = Forest::default();
    for kind in [TreeKind::BarningHall, TreeKind::New] {
        let listed = forest.enumerate_level_with_paths(kind, 4, 12).unwrap();
        for (path, t) in &listed {
            assert_eq!(path.len(), 4);
            assert_eq!(forest.navigate(kind, path).unwrap(), *t);
        }
        let paths: Vec<String> = listed.iter().map(|(p, _)| p.to_string()).collect();
        let mut sorted = paths.clone();
        sorted.sort();
        assert_eq!(paths, sorted);
    }
}

#[test]
fn bh_children_promote_radii() {
    let forest = Forest::default();
    for path in all_paths(6) {
        let t = forest.navigate(TreeKind::BarningHall, &path).unwrap();
        let r = radii_of(&box_from_triple(&t)).unwrap();
        let kids = forest.children(TreeKind::BarningHall, &t).unwrap();
        let inner = kids.map(|k| radii_of(&box_from_triple(&k)).unwrap().r1);
        assert_eq!(inner, [r.r3.clone(), r.r4.clone(), r.r2.clone()], "at {path}");
    }
}

#[test]
fn bh_exclusive_paths_follow_families() {
    let forest = Forest::default();
    for n in 1..=20 {
        let word = |l: char| l.to_string().repeat(n).parse::<PathCode>().unwrap();
        let n64 = n as u64;
        assert_eq!(forest.navigate(TreeKind::BarningHall, &word('A')).unwrap(), family_plato(n64 + 1).unwrap());
        assert_eq!(forest.navigate(TreeKind::BarningHall, &word('B')).unwrap(), family_fermat(n64));
        assert_eq!(forest.navigate(TreeKind::BarningHall, &word('C')).unwrap(), family_pythagoras(n64 + 1).unwrap());
    }
}

fn binary_word(n: u64) -> PathCode {
    format!("{n:b}")[1..].chars().map(|d| if d == '0' { 'A' } else { 'C' }).collect::<String>().parse().unwrap()
}

#[test]
fn new_binary_subtree_is_pythagoras() {
    let forest = Forest::default();
    for n in 1..=1024 {
        let t = forest.navigate(TreeKind::New, &binary_word(n)).unwrap();
        assert_eq!(t, family_pythagoras(n).unwrap(), "n = {n}");
    }
}

#[test]
fn plato_follows_pythagoras() {
    let forest = Forest::default();
    for n in 1..=100 {
        let b = family_pythagoras(n).unwrap();
        assert_eq!(forest.child(TreeKind::New, &b, Letter::B).unwrap(), family_plato(n + 1).unwrap());
    }
    for path in all_paths(6) {
        let families = classify_families(&forest.navigate(TreeKind::New, &path).unwrap());
        if path.letters().iter().all(|&l| l != Letter::B) {
            assert!(families.contains(&Family::Pythagoras), "{path}");
        }
        if let Some((last, rest)) = path.letters().split_last() {
            if *last == Letter::B && rest.iter().all(|&l| l != Letter::B) {
                assert!(families.contains(&Family::Plato), "{path}");
            }
        }
    }
}

#[test]
fn parent_of_child_for_every_small_ppt() {
    let forest = Forest::default();
    let mut by_kind: BTreeMap<&str, usize> = BTreeMap::new();
    for p in 2u64..55 {
        for q in 1..p {
            if (p - q) % 2 == 0 || q.gcd(&p) != 1 || p * p + q * q > 3000 {
                continue;
            }
            let t = PptTriple::new(p * p - q * q, 2 * p * q, p * p + q * q).unwrap();
            for kind in [TreeKind::BarningHall, TreeKind::New] {
                for (l, kid) in Letter::ALL.into_iter().zip(forest.children(kind, &t).unwrap()) {
                    assert_eq!(forest.parent(kind, &kid).unwrap(), Some((t.clone(), l)));
                }
                *by_kind.entry(kind.short_name()).or_default() += 1;
            }
        }
    }
    assert_eq!(by_kind["bh"], 477);
    assert_eq!(by_kind["new"], 477);
}

#[test]
fn root_has_no_parent() {
    let forest = Forest::default();
    for kind in [TreeKind::BarningHall, TreeKind::New] {
        assert_eq!(forest.parent(kind, &PptTriple::root()).unwrap(), None);
        assert!(forest.locate(kind, &PptTriple::root()).unwrap().is_empty());
    }
}

fn deep_path() -> impl Strategy<Value = PathCode> {
    prop::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B), Just(Letter::C)], 20..80)
        .prop_map(PathCode::from)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn deep_nodes_agree_with_matrices_and_hat_maps(path in deep_path()) {
        let forest = Forest::default();
        let t = forest.navigate(TreeKind::BarningHall, &path).unwrap();
        for (m, kid) in BH.iter().zip(forest.children(TreeKind::BarningHall, &t).unwrap()) {
            prop_assert_eq!(canonical(apply(m, &t)), kid);
        }
        let t = forest.navigate(TreeKind::New, &path).unwrap();
        for (l, kid) in Letter::ALL.into_iter().zip(forest.children(TreeKind::New, &t).unwrap()) {
            prop_assert_eq!(new_child_by_hat(&t, l), kid);
        }
        prop_assert!(t.c() > &BigUint::from(5u32));
    }
}
