use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;

use ppt_core::circlegeom::check_tangency_structure;
use ppt_core::verify::{ppt_oracle, primitive_boxes};
use ppt_core::{
    box_from_triple, circle_layout, classify_non_primitive, descartes_check, family_fermat, inexradii_of_triangle,
    normalize_box, pell_shift, ppt_from_box, radii_of, tangency_points, triple_from_box, FibBox, PptTriple,
};

fn u(x: &BigUint) -> u128 {
    u128::try_from(x).unwrap()
}

#[test]
fn normalize_every_column_up_to_200() {
    let mut non_primitive = 0;
    for p in 2u64..200 {
        for q in 1..p.min(200 - p + 1) {
            let b = FibBox::from_column(q, p).unwrap();
            let (core, m) = normalize_box(&b);
            assert!(core.is_primitive(), "{b}");
            let (a, e, c) = (p * p - q * q, 2 * p * q, p * p + q * q);
            let g = a.gcd(&e);
            assert_eq!(m, BigUint::from(g), "{b}");
            let core_t = triple_from_box(&core);
            let mut legs = [u(&core_t.a) as u64, u(&core_t.b) as u64];
            legs.sort();
            let mut expected = [a / g, e / g];
            expected.sort();
            assert_eq!((legs, u(&core_t.c) as u64), (expected, c / g), "{b}");
            if g != 1 {
                non_primitive += 1;
            }
        }
    }
    assert!(non_primitive > 0);
}

#[test]
fn pell_chain_for_thirty_steps() {
    // (a, a + 1, c) -> (3a + 2c + 1, 3a + 2c + 2, 4a + 3c + 2).
    let (mut a, mut c) = (3u128, 5u128);
    let mut bx = box_from_triple(&PptTriple::root());
    for n in 1..=30 {
        (a, c) = (3 * a + 2 * c + 1, 4 * a + 3 * c + 2);
        let b = a + 1;
        bx = pell_shift(&bx).unwrap();
        assert!(bx.is_primitive());
        let t = ppt_from_box(&bx).unwrap();
        let (x, y) = (u(t.a()), u(t.b()));
        assert_eq!(x.abs_diff(y), 1, "step {n}");
        assert_eq!((x.min(y), x.max(y), u(t.c())), (a, b, c), "step {n}");
        assert_eq!(family_fermat(n), t);
    }
}

#[test]
fn boxes_cover_euclid_parameters() {
    let from_boxes: BTreeSet<(u128, u128, u128)> = primitive_boxes(300)
        .iter()
        .filter(|b| b.p() <= &BigUint::from(100u32))
        .map(|b| {
            let t = triple_from_box(b);
            (u(&t.a), u(&t.b), u(&t.c))
        })
        .collect();
    let mut euclid = BTreeSet::new();
    for p in 2u128..=100 {
        for q in 1..p {
            if (p - q) % 2 == 1 && q.gcd(&p) == 1 {
                euclid.insert((p * p - q * q, 2 * p * q, p * p + q * q));
            }
        }
    }
    assert_eq!(from_boxes, euclid);
}

#[test]
fn oracle_matches_naive_search() {
    let mut naive = BTreeSet::new();
    for c in 1u64..=400 {
        for a in 1..c {
            let b2 = c * c - a * a;
            let b = b2.isqrt();
            if b * b == b2 && a % 2 == 1 && a.gcd(&b) == 1 {
                naive.insert((a, b, c));
            }
        }
    }
    let oracle: BTreeSet<(u64, u64, u64)> =
        ppt_oracle(400).iter().map(|t| (u(t.a()) as u64, u(t.b()) as u64, u(t.c()) as u64)).collect();
    assert_eq!(oracle, naive);
}

#[test]
fn radius_products_characterize_right_triangles() {
    // For a triangle with semiperimeter s, the in/ex-radius tangent lengths are s-c, s-b, s-a, s.
    let (mut right, mut other) = (0, 0);
    for c in 2u64..120 {
        for b in 1..c {
            for a in 1..=b {
                if a + b <= c || (a + b + c) % 2 == 1 {
                    continue;
                }
                let s = (a + b + c) / 2;
                let (r1, r2, r3, r4) = (s - c, s - b, s - a, s);
                let products = r1 * r4 == r2 * r3 && 2 * r1 * r4 == a * b;
                assert_eq!(products, a * a + b * b == c * c, "({a}, {b}, {c})");
                if products {
                    right += 1;
                } else {
                    other += 1;
                }
            }
        }
    }
    assert!(right > 0 && other > 0);
}

#[test]
fn geometry_for_boxes_up_to_500() {
    let boxes = primitive_boxes(500);
    assert!(boxes.len() > 25_000);
    for b in &boxes {
        let layout = circle_layout(b).unwrap();
        assert!(layout.all_tangent(), "{b}");
        assert!(check_tangency_structure(&tangency_points(&layout)), "{b}");
        assert!(descartes_check(&layout.radii), "{b}");
        let mut r = radii_of(b).unwrap().to_array();
        r.sort();
        assert_eq!(inexradii_of_triangle(&ppt_from_box(b).unwrap()), r, "{b}");
    }
}

#[test]
fn non_primitive_triples_split_into_divisor_and_core() {
    for (k, (a, b, c)) in [(1u64, (3u64, 4u64, 5u64)), (2, (3, 4, 5)), (7, (20, 21, 29)), (12, (8, 15, 17))] {
        let r = classify_non_primitive(k * a, k * b, k * c).unwrap();
        assert_eq!(r.divisor, BigUint::from(k));
        assert_eq!(r.core, PptTriple::new(a, b, c).unwrap());
    }
    assert!(classify_non_primitive(2u32, 3u32, 4u32).is_err());
}
