//! Invariant suites behind the `verify` command.
//!
//! Each suite returns a one-line summary or the first counterexample it
//! meets. Suites run on scoped threads and are reported in a fixed order.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::thread;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::boxcore::{
    area_perimeter_of, box_from_triple, hats_of_triple, is_primitive_box, pell_shift, ppt_from_box, radii_of,
    triple_from_box, FibBox, PptTriple,
};
use crate::circlegeom::{
    check_tangency_structure, circle_layout, descartes_check, inexradii_of_triangle, tangency_points,
};
use crate::egypt::{ef_four_term, ef_three_term, ef_two_term_hypotenuse, rhind_two_term, unit_sum};
use crate::forest::{Forest, Letter, PathCode, TreeKind};
use crate::matrix::signed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest hypotenuse for the oracle round trip.
    pub max_c: u64,
    /// Largest `p'` for the box and Egyptian-fraction suites.
    pub max_p_prime: u64,
    /// Largest `p'` for the circle geometry suite.
    pub max_p_geometry: u64,
    /// Depth of the tree cross-check.
    pub depth: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_c: 3000, max_p_prime: 500, max_p_geometry: 200, depth: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub summary: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub suite: &'static str,
    pub counterexample: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: counterexample {}: {}", self.suite, self.counterexample, self.detail)
    }
}

type SuiteResult = Result<String, (String, String)>;

/// Every primitive triple with `c ≤ max_c`, from coprime opposite-parity
/// `(p, q)`, sorted by `(c, a)`.
pub fn ppt_oracle(max_c: u64) -> Vec<PptTriple> {
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p * p < max_c {
        for q in 1..p {
            if (p - q) % 2 == 1 && p.gcd(&q) == 1 && p * p + q * q <= max_c {
                out.push(PptTriple::new(p * p - q * q, 2 * p * q, p * p + q * q).expect("Euclid triple"));
            }
        }
        p += 1;
    }
    out.sort_by(|x, y| (x.c(), x.a()).cmp(&(y.c(), y.a())));
    out
}

/// Every primitive box with `p' ≤ max_p_prime`.
pub fn primitive_boxes(max_p_prime: u64) -> Vec<FibBox> {
    let mut out = Vec::new();
    for p in 2..max_p_prime {
        for q in 1..p {
            if p + q > max_p_prime {
                break;
            }
            if (p - q) % 2 == 1 && p.gcd(&q) == 1 {
                out.push(FibBox::from_column(q, p).expect("0 < q < p"));
            }
        }
    }
    out
}

type Suite<'a> = Box<dyn Fn() -> SuiteResult + Send + Sync + 'a>;

pub fn run(forest: &Forest, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>, Failure> {
    let suites: [(&'static str, Suite<'_>); 6] = [
        ("trees", Box::new(|| tree_suite(forest, cfg.depth))),
        ("oracle", Box::new(|| oracle_suite(forest, cfg.max_c))),
        ("boxes", Box::new(|| box_suite(cfg.max_p_prime))),
        ("egypt", Box::new(|| egypt_suite(cfg.max_p_prime))),
        ("rhind", Box::new(|| rhind_suite(101))),
        ("geometry", Box::new(|| geometry_suite(cfg.max_p_geometry))),
    ];
    let results: Vec<(&'static str, SuiteResult)> = thread::scope(|s| {
        let handles: Vec<_> = suites.iter().map(|(name, suite)| (*name, s.spawn(suite))).collect();
        handles.into_iter().map(|(name, h)| (name, h.join().expect("suite thread panicked"))).collect()
    });
    results
        .into_iter()
        .map(|(suite, r)| match r {
            Ok(summary) => Ok(SuiteReport { suite, summary }),
            Err((counterexample, detail)) => Err(Failure { suite, counterexample, detail }),
        })
        .collect()
}

fn fail<T>(at: impl fmt::Display, detail: impl Into<String>) -> Result<T, (String, String)> {
    Err((at.to_string(), detail.into()))
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn tree_suite(forest: &Forest, depth: usize) -> SuiteResult {
    let mut nodes = 0;
    for kind in [TreeKind::BarningHall, TreeKind::New] {
        let mut level = vec![PptTriple::root()];
        let mut seen = HashSet::new();
        for _ in 0..=depth {
            let mut next = Vec::with_capacity(level.len() * 3);
            for t in &level {
                nodes += 1;
                if !seen.insert(t.clone()) {
                    return fail(t, format!("appears twice on the {kind} tree"));
                }
                let kids = match forest.children(kind, t) {
                    Ok(k) => k,
                    Err(e) => return fail(t, e.to_string()),
                };
                for (letter, kid) in Letter::ALL.into_iter().zip(kids) {
                    match forest.parent(kind, &kid) {
                        Ok(Some((p, l))) if p == *t && l == letter => {}
                        other => return fail(&kid, format!("{kind} parent is {other:?}, expected {t} via {letter}")),
                    }
                    if kind == TreeKind::BarningHall {
                        let pr = radii_of(&box_from_triple(t)).expect("primitive");
                        let promoted = [&pr.r3, &pr.r4, &pr.r2][letter.index()];
                        let kr = radii_of(&box_from_triple(&kid)).expect("primitive");
                        if &kr.r1 != promoted {
                            return fail(&kid, "in-radius is not the promoted parent radius");
                        }
                    }
                    next.push(kid);
                }
            }
            level = next;
        }
    }
    let dets_ok = forest.matrices(TreeKind::BarningHall).iter().all(|m| m.det().abs() == 1)
        && forest.matrices(TreeKind::New).iter().all(|m| m.det().abs() == 8);
    if !dets_ok {
        return fail("generator matrices", "determinants are not ±1 (bh) and ±8 (new)");
    }
    Ok(format!("{} cross-checked to depth {depth} on both trees", plural(nodes, "node", "nodes")))
}

fn oracle_suite(forest: &Forest, max_c: u64) -> SuiteResult {
    let all = ppt_oracle(max_c);
    for kind in [TreeKind::BarningHall, TreeKind::New] {
        let mut paths: BTreeSet<PathCode> = BTreeSet::new();
        for t in &all {
            let path = forest.locate(kind, t).or_else(|e| fail(t, e.to_string()))?;
            let back = forest.navigate(kind, &path).or_else(|e| fail(t, e.to_string()))?;
            if back != *t {
                return fail(t, format!("{kind} path {path} navigates to {back}"));
            }
            if !paths.insert(path.clone()) {
                return fail(t, format!("{kind} path {path} is shared"));
            }
        }
    }
    Ok(format!("{} round-tripped on both trees", plural(all.len(), "PPT", "PPTs")))
}

fn box_suite(max_p_prime: u64) -> SuiteResult {
    let boxes = primitive_boxes(max_p_prime);
    let one = BigRational::one();
    for b in &boxes {
        let (q, qp, p, pp) = (b.q(), b.q_prime(), b.p(), b.p_prime());
        if &(p - q) != qp || &(p + q) != pp || !is_primitive_box(b) {
            return fail(b, "key equations or parity");
        }
        if q.is_even() == p.is_even() || qp.is_even() || pp.is_even() {
            return fail(b, "parity");
        }
        let x = BigRational::new(signed(q), signed(p));
        let y = BigRational::new(signed(qp), signed(pp));
        if &x * &y + &x + &y != one {
            return fail(b, "xy + x + y ≠ 1");
        }
        if x != BigRational::new(signed(pp) - signed(qp), signed(pp) + signed(qp)) {
            return fail(b, "q/p ≠ (p'-q')/(p'+q')");
        }
        let t = triple_from_box(b);
        let permanent = q * pp + qp * p;
        if permanent != p * pp - q * qp || permanent != p * p + q * q || t.c != permanent {
            return fail(b, "hypotenuse differs between permanent, row-product difference and p²+q²");
        }
        let r = radii_of(b).or_else(|e| fail(b, e.to_string()))?;
        let (area, perimeter) = area_perimeter_of(b).or_else(|e| fail(b, e.to_string()))?;
        let radius_ok = &r.r1 + &r.r2 + &r.r3 == r.r4
            && t.a == &r.r1 + &r.r2
            && t.b == &r.r1 + &r.r3
            && t.c == &r.r2 + &r.r3
            && t.c == &r.r4 - &r.r1
            && &r.r1 * &r.r4 == &r.r2 * &r.r3
            && &r.r1 * &r.r4 == area
            && &t.a * &t.b == &area * 2u32
            && perimeter == &t.a + &t.b + &t.c
            && perimeter == &r.r4 * 2u32;
        if !radius_ok {
            return fail(b, "radius identities");
        }
        let ppt = ppt_from_box(b).or_else(|e| fail(b, e.to_string()))?;
        if box_from_triple(&ppt) != *b {
            return fail(b, "box → triple → box round trip");
        }
        let (h1, h2) = hats_of_triple(&ppt);
        if h1 != b.primary_hat() || h2 != b.secondary_hat() {
            return fail(b, "half-angle tangents differ from the box columns");
        }
    }
    let mut pell = box_from_triple(&PptTriple::root());
    for _ in 0..30 {
        pell = pell_shift(&pell).or_else(|e| fail(&pell, e.to_string()))?;
        let t = triple_from_box(&pell);
        let diff = if t.a > t.b { &t.a - &t.b } else { &t.b - &t.a };
        if !pell.is_primitive() || !diff.is_one() {
            return fail(&pell, "Pell shift lost primitivity or |a-b| = 1");
        }
    }
    Ok(format!("{} with p' <= {max_p_prime}", plural(boxes.len(), "primitive box", "primitive boxes")))
}

fn egypt_suite(max_p_prime: u64) -> SuiteResult {
    let boxes = primitive_boxes(max_p_prime);
    for b in &boxes {
        let four = ef_four_term(b).or_else(|e| fail(b, e.to_string()))?;
        let three = ef_three_term(b).or_else(|e| fail(b, e.to_string()))?;
        let two = ef_two_term_hypotenuse(b).or_else(|e| fail(b, e.to_string()))?;
        let t = triple_from_box(b);
        if four.denominator_sum() != &t.a + &t.b + &t.c {
            return fail(b, "four-term denominators do not sum to the perimeter");
        }
        if three.denominators() != &four.denominators()[1..] {
            return fail(b, "three-term identity is not the four-term one minus its first term");
        }
        if two.denominators() != &four.denominators()[1..3] {
            return fail(b, "two-term identity is not the four-term one minus its ends");
        }
        if unit_sum(two.denominators()) != BigRational::new(signed(&t.c), signed(&(&t.a * &t.b / 2u32))) {
            return fail(b, "two-term sum is not c/area");
        }
    }
    Ok(format!("{} with p' <= {max_p_prime}", plural(boxes.len() * 3, "identity", "identities")))
}

fn rhind_suite(max_n: u64) -> SuiteResult {
    let mut total = 0;
    for n in (3..=max_n).step_by(2) {
        let got: BTreeSet<(BigUint, BigUint)> = rhind_two_term(n)
            .or_else(|e| fail(n, e.to_string()))?
            .iter()
            .map(|d| (d.denominators()[0].clone(), d.denominators()[1].clone()))
            .collect();
        let brute: BTreeSet<(BigUint, BigUint)> =
            two_term_brute_force(n).into_iter().map(|(x, y)| (x.into(), y.into())).collect();
        if got != brute {
            return fail(
                format!("2/{n}"),
                format!("construction gives {} pairs, brute force {}", got.len(), brute.len()),
            );
        }
        total += got.len();
    }
    Ok(format!(
        "{} of 2/n for odd n <= {max_n}, complete",
        plural(total, "two-term decomposition", "two-term decompositions")
    ))
}

/// All `x < y` with `2/n = 1/x + 1/y`.
pub fn two_term_brute_force(n: u64) -> Vec<(u64, u64)> {
    // 1/x < 2/n < 2/x, so n/2 < x < n.
    (n / 2 + 1..n)
        .filter_map(|x| {
            let den = 2 * x - n;
            (n * x).is_multiple_of(den).then(|| (x, n * x / den))
        })
        .filter(|(x, y)| x < y)
        .collect()
}

fn geometry_suite(max_p_prime: u64) -> SuiteResult {
    let boxes = primitive_boxes(max_p_prime);
    for b in &boxes {
        let layout = circle_layout(b).or_else(|e| fail(b, e.to_string()))?;
        if !layout.all_tangent() {
            return fail(b, "circles not mutually tangent");
        }
        if !check_tangency_structure(&tangency_points(&layout)) {
            return fail(b, "tangency points are not four collinear plus a reflected pair");
        }
        if !descartes_check(&layout.radii) {
            return fail(b, "Descartes circle equation");
        }
        let mut radii = layout.radii.to_array();
        radii.sort();
        let ppt = ppt_from_box(b).or_else(|e| fail(b, e.to_string()))?;
        if inexradii_of_triangle(&ppt) != radii {
            return fail(b, "in/ex-radii differ from the box products");
        }
    }
    Ok(format!("{} with p' <= {max_p_prime}", plural(boxes.len(), "circle configuration", "circle configurations")))
}
