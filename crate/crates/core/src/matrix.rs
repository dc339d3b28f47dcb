use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};

use crate::boxcore::{PptTriple, Triple};

/// A constant 3×3 integer matrix acting on column vectors `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleMatrix(pub [[i64; 3]; 3]);

impl TripleMatrix {
    pub const fn new(rows: [[i64; 3]; 3]) -> Self {
        Self(rows)
    }

    pub fn rows(&self) -> &[[i64; 3]; 3] {
        &self.0
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Classical adjugate: `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        Self([
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Self(out)
    }

    pub fn apply(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        let row = |r: &[i64; 3]| -> BigInt { r.iter().zip(v).map(|(&m, x)| x * m).sum() };
        [row(&self.0[0]), row(&self.0[1]), row(&self.0[2])]
    }

    /// `M · (a, b, c)`, or `None` when some component is not positive.
    pub fn apply_triple(&self, t: &PptTriple) -> Option<Triple> {
        let v = [signed(t.a()), signed(t.b()), signed(t.c())];
        let [a, b, c] = self.apply(&v);
        Some(Triple { a: positive(a)?, b: positive(b)?, c: positive(c)? })
    }
}

impl fmt::Display for TripleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.0.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

pub(crate) fn signed(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}

pub(crate) fn positive(x: BigInt) -> Option<BigUint> {
    match x.sign() {
        Sign::Plus => x.to_biguint(),
        _ => None,
    }
}
