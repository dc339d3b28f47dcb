//! Egyptian-fraction identities carried by a Fibonacci box.
//!
//! The four radii of a primitive box give `2/r1 = 1/r1 + 1/r2 + 1/r3 + 1/r4`
//! (perimeter over area), and dropping terms yields a three-term identity and
//! the two-term hypotenuse/area identity. The second column alone gives
//! `2/(q'p') = 1/(q'p) + 1/(pp')`, which with its multiples covers the
//! two-term entries of the Rhind `2/n` table.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::boxcore::{radii_of, FibBox};
use crate::error::{Error, Result};
use crate::matrix::signed;

/// `target = Σ 1/dᵢ` with distinct, strictly increasing denominators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EgyptianDecomposition {
    target: BigRational,
    denominators: Vec<BigUint>,
}

impl EgyptianDecomposition {
    /// Sorts the denominators and checks distinctness and the exact sum.
    pub fn new(target: BigRational, mut denominators: Vec<BigUint>) -> Result<Self> {
        denominators.sort();
        if denominators.iter().any(Zero::is_zero) {
            return Err(Error::Domain("unit fraction with zero denominator".into()));
        }
        if denominators.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain("denominators must be distinct".into()));
        }
        let sum = unit_sum(&denominators);
        if sum != target {
            return Err(Error::Invariant(format!("unit fractions sum to {sum}, not {target}")));
        }
        Ok(Self { target, denominators })
    }

    pub fn target(&self) -> &BigRational {
        &self.target
    }

    pub fn denominators(&self) -> &[BigUint] {
        &self.denominators
    }

    pub fn denominator_sum(&self) -> BigUint {
        self.denominators.iter().sum()
    }
}

impl fmt::Display for EgyptianDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.denominators.iter().map(|d| format!("1/{d}")).collect();
        write!(f, "{}/{} = {}", self.target.numer(), self.target.denom(), terms.join(" + "))
    }
}

pub fn unit_sum(denominators: &[BigUint]) -> BigRational {
    denominators.iter().map(|d| BigRational::new(One::one(), signed(d))).fold(BigRational::zero(), |acc, x| acc + x)
}

fn ratio(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(signed(n), signed(d))
}

/// `2/(qq') = 1/(qq') + 1/(qp') + 1/(q'p) + 1/(pp')`; the denominators sum
/// to the perimeter.
pub fn ef_four_term(b: &FibBox) -> Result<EgyptianDecomposition> {
    let r = radii_of(b)?;
    EgyptianDecomposition::new(ratio(&2u32.into(), &r.r1), vec![r.r1, r.r2, r.r3, r.r4])
}

/// `1/(qq') = 1/(qp') + 1/(q'p) + 1/(pp')`.
pub fn ef_three_term(b: &FibBox) -> Result<EgyptianDecomposition> {
    let r = radii_of(b)?;
    EgyptianDecomposition::new(ratio(&1u32.into(), &r.r1), vec![r.r2, r.r3, r.r4])
}

/// `c / area = 1/(q'p) + 1/(qp')`.
pub fn ef_two_term_hypotenuse(b: &FibBox) -> Result<EgyptianDecomposition> {
    let r = radii_of(b)?;
    let c = &r.r2 + &r.r3;
    let area = &r.r1 * &r.r4;
    EgyptianDecomposition::new(ratio(&c, &area), vec![r.r2, r.r3])
}

/// Two-term decompositions `2/n = 1/x + 1/y` built from second columns.
///
/// For every divisor `k ≥ 3` of `n` and every split `k = q'·p'` with
/// `q' < p'`, take `p = (q' + p')/2`, use `2/k = 1/(q'p) + 1/(pp')` and scale
/// both denominators by `n/k`. Results are deduplicated and ordered by the
/// smaller denominator.
pub fn rhind_two_term(n: u64) -> Result<Vec<EgyptianDecomposition>> {
    if n < 3 || n.is_even() {
        return Err(Error::Domain(format!("rhind expects an odd n ≥ 3, got {n}")));
    }
    let mut pairs = BTreeSet::new();
    for k in divisors(n).into_iter().filter(|&k| k >= 3) {
        let m = n / k;
        for q_prime in divisors(k) {
            let p_prime = k / q_prime;
            if q_prime >= p_prime {
                break;
            }
            let p = (q_prime + p_prime) / 2;
            let x = BigUint::from(m) * q_prime * p;
            let y = BigUint::from(m) * p * p_prime;
            pairs.insert((x, y));
        }
    }
    let target = ratio(&2u32.into(), &n.into());
    pairs.into_iter().map(|(x, y)| EgyptianDecomposition::new(target.clone(), vec![x, y])).collect()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
