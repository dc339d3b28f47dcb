//! Exact rational geometry of the four mutually tangent circles of a box.
//!
//! Centers sit at the corners of the `a × b` rectangle with `C1 = (0, 0)`,
//! `C2 = (a, 0)`, `C3 = (0, b)`, `C4 = (a, b)`, so `C1C4` and `C2C3` are the
//! diagonals. Circles 1–3 touch each other externally and circle 4 encloses
//! them. Every center distance is an integer, which keeps all six tangency
//! points rational.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::boxcore::{radii_of, triple_from_box, FibBox, PptTriple, Radii};
use crate::error::{Error, Result};
use crate::matrix::signed;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()) }
    }

    fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    fn scale(&self, k: &BigRational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn dist_sq(&self, o: &Point) -> BigRational {
        let d = self.sub(o);
        &d.x * &d.x + &d.y * &d.y
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleLayout {
    pub centers: [Point; 4],
    pub radii: Radii,
    pub width: BigUint,
    pub height: BigUint,
}

impl CircleLayout {
    pub fn radius(&self, i: usize) -> &BigUint {
        match i {
            0 => &self.radii.r1,
            1 => &self.radii.r2,
            2 => &self.radii.r3,
            _ => &self.radii.r4,
        }
    }

    /// The required center distance for the pair: sum of radii for the
    /// inner circles, difference against the enclosing circle.
    pub fn tangency_distance(&self, i: usize, j: usize) -> BigUint {
        let (i, j) = (i.min(j), i.max(j));
        if j == 3 {
            self.radius(3) - self.radius(i)
        } else {
            self.radius(i) + self.radius(j)
        }
    }

    /// All six pairs are tangent: squared center distances equal the
    /// squared tangency distances.
    pub fn all_tangent(&self) -> bool {
        PAIRS.iter().all(|&(i, j)| {
            let d = BigRational::from_integer(signed(&self.tangency_distance(i, j)));
            self.centers[i].dist_sq(&self.centers[j]) == &d * &d
        })
    }
}

/// Unordered circle pairs, zero-based: 12, 13, 14, 23, 24, 34.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The six tangency points, indexed like [`PAIRS`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencySet {
    pub points: [Point; 6],
}

/// A line `coef_x · x + coef_y · y = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub coef_x: BigRational,
    pub coef_y: BigRational,
    pub rhs: BigRational,
}

impl Line {
    pub fn through(p: &Point, q: &Point) -> Option<Line> {
        if p == q {
            return None;
        }
        let coef_x = &q.y - &p.y;
        let coef_y = &p.x - &q.x;
        let rhs = &coef_x * &p.x + &coef_y * &p.y;
        Some(Line { coef_x, coef_y, rhs })
    }

    pub fn contains(&self, p: &Point) -> bool {
        &self.coef_x * &p.x + &self.coef_y * &p.y == self.rhs
    }

    pub fn reflect(&self, p: &Point) -> Point {
        let norm = &self.coef_x * &self.coef_x + &self.coef_y * &self.coef_y;
        let excess = &self.coef_x * &p.x + &self.coef_y * &p.y - &self.rhs;
        let two = BigRational::from_integer(2.into());
        let t = two * excess / norm;
        Point::new(&p.x - &t * &self.coef_x, &p.y - &t * &self.coef_y)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x + {}·y = {}", self.coef_x, self.coef_y, self.rhs)
    }
}

/// Which four tangency points share a line, the line itself, and the other
/// two points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearSplit {
    pub on_line: [usize; 4],
    pub off_line: [usize; 2],
    pub line: Line,
}

pub fn circle_layout(b: &FibBox) -> Result<CircleLayout> {
    let radii = radii_of(b)?;
    let t = triple_from_box(b);
    let (w, h) = (signed(&t.a), signed(&t.b));
    let centers = [
        Point::from_ints(0, 0),
        Point::from_ints(w.clone(), 0),
        Point::from_ints(0, h.clone()),
        Point::from_ints(w, h),
    ];
    let layout = CircleLayout { centers, radii, width: t.a, height: t.b };
    if !layout.all_tangent() {
        return Err(Error::Invariant(format!("circle layout of {b} is not mutually tangent")));
    }
    Ok(layout)
}

pub fn tangency_points(layout: &CircleLayout) -> TangencySet {
    let point = |i: usize, j: usize| -> Point {
        let (ci, cj) = (&layout.centers[i], &layout.centers[j]);
        let (ri, rj) =
            (BigRational::from_integer(signed(layout.radius(i))), BigRational::from_integer(signed(layout.radius(j))));
        if j == 3 {
            // Internal: from C4 towards Ci, a distance r4 along the center line.
            let d = BigRational::from_integer(signed(&layout.tangency_distance(i, 3)));
            cj.add(&ci.sub(cj).scale(&(rj / d)))
        } else {
            ci.scale(&rj).add(&cj.scale(&ri)).scale(&(ri.clone() + rj).recip())
        }
    };
    TangencySet { points: PAIRS.map(|(i, j)| point(i, j)) }
}

/// Finds the unique 4-subset of tangency points that is collinear; `None`
/// when there is no such subset, more than one, or five or more collinear
/// points.
pub fn collinear_split(set: &TangencySet) -> Option<CollinearSplit> {
    let pts = &set.points;
    let mut found: Option<CollinearSplit> = None;
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                for d in c + 1..6 {
                    let line = Line::through(&pts[a], &pts[b])?;
                    if !(line.contains(&pts[c]) && line.contains(&pts[d])) {
                        continue;
                    }
                    if found.is_some() {
                        return None;
                    }
                    let off: Vec<usize> = (0..6).filter(|i| ![a, b, c, d].contains(i)).collect();
                    if off.iter().any(|&i| line.contains(&pts[i])) {
                        return None;
                    }
                    found = Some(CollinearSplit { on_line: [a, b, c, d], off_line: [off[0], off[1]], line });
                }
            }
        }
    }
    found
}

/// Exactly four tangency points are collinear, pairwise distinct, and
/// reflection in their line swaps the remaining two.
pub fn check_tangency_structure(set: &TangencySet) -> bool {
    let Some(split) = collinear_split(set) else {
        return false;
    };
    let on = split.on_line.map(|i| &set.points[i]);
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| on[i] != on[j]));
    let [u, v] = split.off_line.map(|i| &set.points[i]);
    distinct && split.line.reflect(u) == *v && split.line.reflect(v) == *u
}

/// Descartes' relation with the enclosing circle's curvature negated:
/// `(k1 + k2 + k3 - k4)² = 2(k1² + k2² + k3² + k4²)`.
pub fn descartes_check(r: &Radii) -> bool {
    if [&r.r1, &r.r2, &r.r3, &r.r4].iter().any(|x| x.is_zero()) {
        return false;
    }
    let k = |x: &BigUint| BigRational::new(BigInt::one(), signed(x));
    let (k1, k2, k3, k4) = (k(&r.r1), k(&r.r2), k(&r.r3), -k(&r.r4));
    let sum = &k1 + &k2 + &k3 + &k4;
    let squares = &k1 * &k1 + &k2 * &k2 + &k3 * &k3 + &k4 * &k4;
    &sum * &sum == squares * BigRational::from_integer(2.into())
}

/// In-radius and the three ex-radii, `area / (s - x)` for `x ∈ {0, a, b, c}`,
/// sorted ascending. For a right triangle these are `s-c, s-b, s-a, s`.
pub fn inexradii_of_triangle(t: &PptTriple) -> [BigUint; 4] {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let s = (a + b + c) / 2u32;
    let area = a * b / 2u32;
    let mut out = [&area / &s, &area / (&s - a), &area / (&s - b), &area / (&s - c)];
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boxcore::box_from_triple;

    fn layout_of(a: u64, b: u64, c: u64) -> CircleLayout {
        circle_layout(&box_from_triple(&PptTriple::new(a, b, c).unwrap())).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::new(q(x.0, x.1), q(y.0, y.1))
    }

    fn radii(r: [u64; 4]) -> Radii {
        let [r1, r2, r3, r4] = r.map(BigUint::from);
        Radii { r1, r2, r3, r4 }
    }

    #[test]
    fn layout_of_root() {
        let l = layout_of(3, 4, 5);
        assert_eq!(
            l.centers,
            [Point::from_ints(0, 0), Point::from_ints(3, 0), Point::from_ints(0, 4), Point::from_ints(3, 4)]
        );
        assert_eq!(l.radii, radii([1, 2, 3, 6]));
        let dists: Vec<u64> = PAIRS.iter().map(|&(i, j)| l.tangency_distance(i, j).try_into().unwrap()).collect();
        assert_eq!(dists, [3, 4, 5, 5, 4, 3]);
    }

    #[test]
    fn layouts() {
        let l = layout_of(5, 12, 13);
        assert_eq!((l.radii, l.width, l.height), (radii([2, 3, 10, 15]), 5u32.into(), 12u32.into()));
        let l = layout_of(21, 20, 29);
        assert_eq!((l.radii, l.width, l.height), (radii([6, 15, 14, 35]), 21u32.into(), 20u32.into()));
        assert!(circle_layout(&FibBox::new(2u32, 2u32, 4u32, 6u32).unwrap()).is_err());
    }

    #[test]
    fn tangency_points_of_root() {
        let set = tangency_points(&layout_of(3, 4, 5));
        let [t12, t13, t14, t23, t24, t34] = set.points.clone();
        assert_eq!(t12, Point::from_ints(1, 0));
        assert_eq!(t13, Point::from_ints(0, 1));
        assert_eq!(t24, Point::from_ints(3, -2));
        assert_eq!(t34, Point::from_ints(-3, 4));
        assert_eq!(t23, pt((9, 5), (8, 5)));
        assert_eq!(t14, pt((-3, 5), (-4, 5)));

        let split = collinear_split(&set).unwrap();
        assert_eq!(split.on_line, [0, 1, 4, 5]);
        assert_eq!(split.off_line, [2, 3]);
        for p in [&t12, &t13, &t24, &t34] {
            assert_eq!(&p.x + &p.y, q(1, 1));
        }
        // (x, y) ↦ (1 - y, 1 - x)
        assert_eq!(split.line.reflect(&t23), Point::new(q(1, 1) - &t23.y, q(1, 1) - &t23.x));
        assert_eq!(split.line.reflect(&t23), t14);
        assert!(check_tangency_structure(&set));
    }

    #[test]
    fn descartes() {
        assert!(descartes_check(&radii([1, 2, 3, 6])));
        assert!(descartes_check(&radii([2, 3, 10, 15])));
        assert!(!descartes_check(&radii([1, 2, 3, 7])));
        // (1 + 1/2 + 1/3 - 1/6)² = 25/9 = 2 · 50/36
        let s = q(1, 1) + q(1, 2) + q(1, 3) - q(1, 6);
        assert_eq!(&s * &s, q(25, 9));
        assert_eq!(q(25, 9), q(2, 1) * q(50, 36));
    }

    #[test]
    fn in_and_ex_radii() {
        let r = |a, b, c| inexradii_of_triangle(&PptTriple::new(a, b, c).unwrap()).map(|x| u64::try_from(x).unwrap());
        assert_eq!(r(3u64, 4u64, 5u64), [1, 2, 3, 6]);
        assert_eq!(r(5, 12, 13), [2, 3, 10, 15]);
        assert_eq!(r(7, 24, 25), [3, 4, 21, 28]);
    }
}
