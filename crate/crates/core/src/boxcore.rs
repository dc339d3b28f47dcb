//! Triples, Fibonacci boxes and half-angle tangents.
//!
//! A primitive triple `(a, b, c)` is housed in a 2×2 box
//!
//! ```text
//!   q   q'
//!   p   p'
//! ```
//!
//! whose first column is the reduced half-angle tangent `q/p = b/(c+a)` and
//! whose second column is `q'/p' = a/(c+b)`. The key equations `q' = p - q`
//! and `p' = p + q` make the uncoiled tuple `[q', q, p, p']` a Fibonacci-like
//! sequence. Row, column and diagonal products of the box recover the sides,
//! the area and the four in/ex-circle radii of the triangle.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A primitive Pythagorean triple in canonical order: odd leg, even leg,
/// hypotenuse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PptTriple {
    a: BigUint,
    b: BigUint,
    c: BigUint,
}

impl PptTriple {
    /// Validates and canonicalizes a primitive triple. The legs may be given
    /// in either order.
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>, c: impl Into<BigUint>) -> Result<Self> {
        let (mut a, mut b, c) = (a.into(), b.into(), c.into());
        if a.is_even() && b.is_odd() {
            std::mem::swap(&mut a, &mut b);
        }
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::InvalidTriple(format!("{a},{b},{c}: components must be positive")));
        }
        if &a * &a + &b * &b != &c * &c {
            return Err(Error::InvalidTriple(format!("{a},{b},{c}: a² + b² ≠ c²")));
        }
        if !a.gcd(&b).is_one() {
            return Err(Error::InvalidTriple(format!("{a},{b},{c}: not primitive")));
        }
        Ok(Self { a, b, c })
    }

    /// The root of both trees, `(3, 4, 5)`.
    pub fn root() -> Self {
        Self::new_unchecked(3u32.into(), 4u32.into(), 5u32.into())
    }

    pub(crate) fn new_unchecked(a: BigUint, b: BigUint, c: BigUint) -> Self {
        debug_assert!(a.is_odd() && b.is_even());
        debug_assert_eq!(&a * &a + &b * &b, &c * &c);
        Self { a, b, c }
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    pub fn is_root(&self) -> bool {
        *self == Self::root()
    }

    pub fn to_triple(&self) -> Triple {
        Triple { a: self.a.clone(), b: self.b.clone(), c: self.c.clone() }
    }
}

impl fmt::Display for PptTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// An arbitrary (not necessarily primitive, not necessarily Pythagorean)
/// triple of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
}

impl Triple {
    pub fn new(a: impl Into<BigUint>, b: impl Into<BigUint>, c: impl Into<BigUint>) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn is_pythagorean(&self) -> bool {
        &self.a * &self.a + &self.b * &self.b == &self.c * &self.c
    }

    pub fn scaled(&self, m: &BigUint) -> Triple {
        Triple { a: &self.a * m, b: &self.b * m, c: &self.c * m }
    }

    /// Equality with the legs treated as an unordered pair.
    pub fn eq_up_to_legs(&self, other: &Triple) -> bool {
        self.c == other.c && ((self.a == other.a && self.b == other.b) || (self.a == other.b && self.b == other.a))
    }

    pub fn to_primitive(&self) -> Result<PptTriple> {
        PptTriple::new(self.a.clone(), self.b.clone(), self.c.clone())
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

/// A positive fraction `num/den`, stored exactly as given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hat {
    pub num: BigUint,
    pub den: BigUint,
}

impl Hat {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() || den.is_zero() {
            return Err(Error::Domain(format!("{num}/{den}: terms must be positive")));
        }
        Ok(Self { num, den })
    }

    /// The fraction in lowest terms.
    pub fn reduced(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Self> {
        let h = Self::new(num, den)?;
        let g = h.num.gcd(&h.den);
        Ok(Self { num: h.num / &g, den: h.den / &g })
    }

    pub fn is_reduced(&self) -> bool {
        self.num.gcd(&self.den).is_one()
    }

    /// Reduced, proper, and with numerator and denominator of opposite parity:
    /// exactly the fractions that are primary half-angle tangents of a
    /// primitive triple.
    pub fn is_primitive(&self) -> bool {
        self.num < self.den && self.is_reduced() && (self.num.is_odd() != self.den.is_odd())
    }
}

impl fmt::Display for Hat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The 2×2 Fibonacci box `[q, q'] / [p, p']`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FibBox {
    q: BigUint,
    q_prime: BigUint,
    p: BigUint,
    p_prime: BigUint,
}

impl FibBox {
    /// Builds a box from all four entries, checking the key equations and
    /// `0 < q < p`.
    pub fn new(
        q: impl Into<BigUint>,
        q_prime: impl Into<BigUint>,
        p: impl Into<BigUint>,
        p_prime: impl Into<BigUint>,
    ) -> Result<Self> {
        let (q, q_prime, p, p_prime) = (q.into(), q_prime.into(), p.into(), p_prime.into());
        let b = Self::from_column(q.clone(), p.clone())?;
        if b.q_prime != q_prime || b.p_prime != p_prime {
            return Err(Error::Domain(format!("box {{{q},{q_prime},{p},{p_prime}}} violates q' = p - q, p' = p + q")));
        }
        Ok(b)
    }

    /// Completes a box from its first column.
    pub fn from_column(q: impl Into<BigUint>, p: impl Into<BigUint>) -> Result<Self> {
        let (q, p) = (q.into(), p.into());
        if q.is_zero() || q >= p {
            return Err(Error::Domain(format!("first column {q}/{p} must satisfy 0 < q < p")));
        }
        Ok(Self::from_column_unchecked(q, p))
    }

    /// Completes a box from its first row `(q, q')`.
    pub fn from_first_row(q: impl Into<BigUint>, q_prime: impl Into<BigUint>) -> Result<Self> {
        let (q, q_prime) = (q.into(), q_prime.into());
        let p = &q + &q_prime;
        Self::from_column(q, p)
    }

    /// Builds a box from the uncoiled sequence `[q', q, p, p']`.
    pub fn from_uncoiled(k: [BigUint; 4]) -> Result<Self> {
        let [q_prime, q, p, p_prime] = k;
        Self::new(q, q_prime, p, p_prime)
    }

    pub(crate) fn from_column_unchecked(q: BigUint, p: BigUint) -> Self {
        let q_prime = &p - &q;
        let p_prime = &p + &q;
        Self { q, q_prime, p, p_prime }
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn q_prime(&self) -> &BigUint {
        &self.q_prime
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn p_prime(&self) -> &BigUint {
        &self.p_prime
    }

    /// `[q', q, p, p']`.
    pub fn uncoiled(&self) -> [BigUint; 4] {
        [self.q_prime.clone(), self.q.clone(), self.p.clone(), self.p_prime.clone()]
    }

    /// The first column as a fraction.
    pub fn primary_hat(&self) -> Hat {
        Hat { num: self.q.clone(), den: self.p.clone() }
    }

    /// The second column as a fraction.
    pub fn secondary_hat(&self) -> Hat {
        Hat { num: self.q_prime.clone(), den: self.p_prime.clone() }
    }

    pub fn is_primitive(&self) -> bool {
        is_primitive_box(self)
    }

    fn require_primitive(&self) -> Result<()> {
        if self.is_primitive() {
            Ok(())
        } else {
            Err(Error::NotPrimitive(self.to_string()))
        }
    }
}

impl fmt::Display for FibBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{},{}}}", self.q, self.q_prime, self.p, self.p_prime)
    }
}

/// The four circle radii of a primitive box: first-row product (in-radius),
/// rising diagonal, descending diagonal, second-row product (largest
/// ex-radius).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Radii {
    pub r1: BigUint,
    pub r2: BigUint,
    pub r3: BigUint,
    pub r4: BigUint,
}

impl Radii {
    pub fn to_array(&self) -> [BigUint; 4] {
        [self.r1.clone(), self.r2.clone(), self.r3.clone(), self.r4.clone()]
    }
}

impl fmt::Display for Radii {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.r1, self.r2, self.r3, self.r4)
    }
}

/// An arbitrary Pythagorean triple written as `divisor · core`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPrimitiveReport {
    pub divisor: BigUint,
    pub core: PptTriple,
}

/// The primary (`q/p`) and secondary (`q'/p'`) half-angle tangents.
pub fn hats_of_triple(t: &PptTriple) -> (Hat, Hat) {
    let primary = Hat::reduced(t.b.clone(), &t.c + &t.a).expect("positive sides");
    let secondary = Hat::reduced(t.a.clone(), &t.c + &t.b).expect("positive sides");
    debug_assert!(primary.den < secondary.den);
    (primary, secondary)
}

pub fn box_from_hat(h: &Hat) -> Result<FibBox> {
    if !h.is_primitive() {
        return Err(Error::NotPrimitiveHat { num: h.num.clone(), den: h.den.clone() });
    }
    Ok(FibBox::from_column_unchecked(h.num.clone(), h.den.clone()))
}

pub fn box_from_triple(t: &PptTriple) -> FibBox {
    let (primary, _) = hats_of_triple(t);
    let b = FibBox::from_column_unchecked(primary.num, primary.den);
    // Euclid's form from the first column must reproduce the input.
    debug_assert_eq!(&b.p * &b.p - &b.q * &b.q, t.a);
    debug_assert_eq!(&b.p * &b.q * 2u32, t.b);
    b
}

/// The mixed solution `[q'p', 2pq, qp' + q'p]`. Non-primitive boxes give
/// non-primitive triples.
pub fn triple_from_box(b: &FibBox) -> Triple {
    let a = &b.q_prime * &b.p_prime;
    let even = &b.p * &b.q * 2u32;
    let c = &b.q * &b.p_prime + &b.q_prime * &b.p;
    debug_assert_eq!(a, &b.p * &b.p - &b.q * &b.q);
    debug_assert_eq!(c, &b.p * &b.p + &b.q * &b.q);
    debug_assert_eq!(c, &b.p * &b.p_prime - &b.q * &b.q_prime);
    Triple { a, b: even, c }
}

/// `triple_from_box` for a box known to be primitive.
pub fn ppt_from_box(b: &FibBox) -> Result<PptTriple> {
    b.require_primitive()?;
    let t = triple_from_box(b);
    Ok(PptTriple::new_unchecked(t.a, t.b, t.c))
}

/// Second column odd and no common factor in the first column.
pub fn is_primitive_box(b: &FibBox) -> bool {
    b.q_prime.is_odd() && b.p_prime.is_odd() && b.q.gcd(&b.p).is_one()
}

/// Reduces a box to its primitive form. Each common-factor step divides the
/// triple by `k²`; each even-second-column step (halve the second column and
/// exchange the columns) divides it by 2 and swaps the legs.
pub fn normalize_box(b: &FibBox) -> (FibBox, BigUint) {
    let mut cur = b.clone();
    let mut multiplier = BigUint::one();
    loop {
        let k = cur.q.gcd(&cur.p);
        if !k.is_one() {
            multiplier *= &k * &k;
            cur = FibBox::from_column_unchecked(&cur.q / &k, &cur.p / &k);
            continue;
        }
        if cur.q_prime.is_even() {
            multiplier *= 2u32;
            cur = FibBox::from_column_unchecked(&cur.q_prime / 2u32, &cur.p_prime / 2u32);
            continue;
        }
        return (cur, multiplier);
    }
}

pub fn radii_of(b: &FibBox) -> Result<Radii> {
    b.require_primitive()?;
    Ok(Radii { r1: &b.q * &b.q_prime, r2: &b.q_prime * &b.p, r3: &b.q * &b.p_prime, r4: &b.p * &b.p_prime })
}

/// `(area, perimeter)` of the triangle of a primitive box.
pub fn area_perimeter_of(b: &FibBox) -> Result<(BigUint, BigUint)> {
    let r = radii_of(b)?;
    let area = &r.r1 * &r.r4;
    let perimeter = &r.r1 + &r.r2 + &r.r3 + &r.r4;
    Ok((area, perimeter))
}

/// Moves the second row into the first: `[.., .., x, y] -> [y, x, .., ..]`.
pub fn pell_shift(b: &FibBox) -> Result<FibBox> {
    b.require_primitive()?;
    Ok(FibBox::from_first_row(b.p.clone(), b.p_prime.clone()).expect("second row is positive"))
}

/// Plato's family `A(n) = (4n² - 1, 4n, 4n² + 1)`, where `c - a = 2`.
pub fn family_plato(n: u64) -> Result<PptTriple> {
    if n < 1 {
        return Err(Error::Domain("Plato family index must be ≥ 1".into()));
    }
    let n = BigUint::from(n);
    let sq4 = &n * &n * 4u32;
    Ok(PptTriple::new_unchecked(&sq4 - 1u32, n * 4u32, sq4 + 1u32))
}

/// Pythagoras' family `B(n) = (2n + 1, 2n(n + 1), 2n(n + 1) + 1)`, where
/// `c - b = 1`.
pub fn family_pythagoras(n: u64) -> Result<PptTriple> {
    if n < 1 {
        return Err(Error::Domain("Pythagoras family index must be ≥ 1".into()));
    }
    let n = BigUint::from(n);
    let even = &n * (&n + 1u32) * 2u32;
    Ok(PptTriple::new_unchecked(n * 2u32 + 1u32, even.clone(), even + 1u32))
}

/// The `n`-th Fermat–Pell triple (`|a - b| = 1`): `n` Pell shifts from the
/// root box.
pub fn family_fermat(n: u64) -> PptTriple {
    let mut b = box_from_triple(&PptTriple::root());
    for _ in 0..n {
        b = pell_shift(&b).expect("pell shift preserves primitivity");
    }
    ppt_from_box(&b).expect("pell shift preserves primitivity")
}

/// Writes any Pythagorean triple as `d · (primitive core)`.
pub fn classify_non_primitive(
    a: impl Into<BigUint>,
    b: impl Into<BigUint>,
    c: impl Into<BigUint>,
) -> Result<NonPrimitiveReport> {
    let (a, b, c) = (a.into(), b.into(), c.into());
    if a.is_zero() || b.is_zero() || &a * &a + &b * &b != &c * &c {
        return Err(Error::NotPythagorean { a, b, c });
    }
    let d = a.gcd(&b);
    let core = PptTriple::new(&a / &d, &b / &d, &c / &d)?;
    Ok(NonPrimitiveReport { divisor: d, core })
}
