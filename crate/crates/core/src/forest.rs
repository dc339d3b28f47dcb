//! The two ternary trees of primitive Pythagorean triples.
//!
//! Both trees are rooted at `(3, 4, 5)` and every primitive triple occurs
//! exactly once in each. Children are computed twice, once by a box rule and
//! once by a constant generator matrix, and the two results must agree.
//!
//! * Barning–Hall: the child boxes keep one of the first rows `(q, p')`,
//!   `(p, p')`, `(p, q')` obtained by flipping the second, both, or the first
//!   column, and recompute the second row. Generator matrices have
//!   determinant ±1.
//! * New tree: the primary half-angle tangent `q/p` is sent to `2q/(p+q)`,
//!   `(p-q)/2p`, `(p+q)/2p`. Generator matrices have determinant ±8.
//!
//! Letters `A`, `B`, `C` name the first, second and third child.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::boxcore::{box_from_hat, box_from_triple, ppt_from_box, FibBox, Hat, PptTriple};
use crate::error::{Error, Result};
use crate::matrix::{signed, TripleMatrix};

/// Enumeration depth cap applied when none is given.
pub const DEFAULT_MAX_DEPTH: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeKind {
    BarningHall,
    New,
}

impl TreeKind {
    pub fn short_name(self) -> &'static str {
        match self {
            TreeKind::BarningHall => "bh",
            TreeKind::New => "new",
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bh" | "barning-hall" => Ok(TreeKind::BarningHall),
            "new" => Ok(TreeKind::New),
            _ => Err(Error::Domain(format!("unknown tree {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
        }
    }
}

impl TryFrom<char> for Letter {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Letter::A),
            'B' => Ok(Letter::B),
            'C' => Ok(Letter::C),
            _ => Err(Error::MalformedPath(c)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A word over `{A, B, C}` addressing a node; the empty word is the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCode(Vec<Letter>);

impl PathCode {
    pub fn root() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, letter: Letter) -> Self {
        let mut v = self.0.clone();
        v.push(letter);
        Self(v)
    }
}

impl From<Vec<Letter>> for PathCode {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

impl FromStr for PathCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Letter::try_from).collect::<Result<Vec<_>>>().map(Self)
    }
}

impl fmt::Display for PathCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Plato,
    Pythagoras,
    FermatPell,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Plato => "Plato",
            Family::Pythagoras => "Pythagoras",
            Family::FermatPell => "FermatPell",
        })
    }
}

pub const BH_MATRICES: [TripleMatrix; 3] = [
    TripleMatrix::new([[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]]),
    TripleMatrix::new([[1, 2, 2], [2, 1, 2], [2, 2, 3]]),
    TripleMatrix::new([[1, -2, 2], [2, -1, 2], [2, -2, 3]]),
];

/// Derived from the half-angle successor maps by substituting
/// `p² = (a+c)/2`, `q² = (c-a)/2`, `pq = b/2` into Euclid's form.
pub const NEW_MATRICES: [TripleMatrix; 3] = [
    TripleMatrix::new([[2, 1, -1], [-2, 2, 2], [-2, 1, 3]]),
    TripleMatrix::new([[2, 1, 1], [2, -2, 2], [2, -1, 3]]),
    TripleMatrix::new([[2, -1, 1], [2, 2, 2], [2, 1, 3]]),
];

pub fn bh_matrices() -> [TripleMatrix; 3] {
    BH_MATRICES
}

pub fn new_matrices() -> [TripleMatrix; 3] {
    NEW_MATRICES
}

/// Both trees with a particular choice of generator matrices.
///
/// [`Forest::default`] uses the standard matrices. Other choices exist so the
/// box/matrix cross-check can be exercised against a broken generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    bh: [TripleMatrix; 3],
    new: [TripleMatrix; 3],
}

impl Default for Forest {
    fn default() -> Self {
        Self { bh: BH_MATRICES, new: NEW_MATRICES }
    }
}

impl Forest {
    pub fn with_matrices(bh: [TripleMatrix; 3], new: [TripleMatrix; 3]) -> Self {
        Self { bh, new }
    }

    pub fn matrices(&self, kind: TreeKind) -> &[TripleMatrix; 3] {
        match kind {
            TreeKind::BarningHall => &self.bh,
            TreeKind::New => &self.new,
        }
    }

    /// One child, computed by the box rule and checked against the matrix.
    pub fn child(&self, kind: TreeKind, t: &PptTriple, letter: Letter) -> Result<PptTriple> {
        let by_rule = rule_child(kind, &box_from_triple(t), letter);
        let m = &self.matrices(kind)[letter.index()];
        let by_matrix = m.apply_triple(t);
        if by_matrix.as_ref() != Some(&by_rule.to_triple()) {
            let shown = by_matrix.map_or_else(|| "a non-positive vector".to_string(), |x| x.to_string());
            return Err(Error::Invariant(format!(
                "{kind} child {letter} of {t}: box rule gives {by_rule}, matrix {m} gives {shown}"
            )));
        }
        Ok(by_rule)
    }

    pub fn children(&self, kind: TreeKind, t: &PptTriple) -> Result<[PptTriple; 3]> {
        Ok([self.child(kind, t, Letter::A)?, self.child(kind, t, Letter::B)?, self.child(kind, t, Letter::C)?])
    }

    /// The parent and the letter by which `t` hangs off it; `None` at the
    /// root.
    pub fn parent(&self, kind: TreeKind, t: &PptTriple) -> Result<Option<(PptTriple, Letter)>> {
        let found = match kind {
            TreeKind::BarningHall => self.bh_parent_checked(t)?,
            TreeKind::New => self.new_parent_checked(t)?,
        };
        if let Some((parent, _)) = &found {
            if parent.c() >= t.c() {
                return Err(Error::Invariant(format!(
                    "{kind} parent {parent} of {t} does not have a smaller hypotenuse"
                )));
            }
        }
        Ok(found)
    }

    fn bh_parent_checked(&self, t: &PptTriple) -> Result<Option<(PptTriple, Letter)>> {
        let Some(parent) = bh_parent_by_rule(t) else {
            return Ok(None);
        };
        let children = self.children(TreeKind::BarningHall, &parent)?;
        let letter = Letter::ALL
            .into_iter()
            .find(|l| children[l.index()] == *t)
            .ok_or_else(|| Error::Invariant(format!("bh parent {parent} has no child {t}")))?;

        // Exactly one inverse generator must take t to a smaller positive
        // triple, and it must be the parent found above.
        let mut preimages = self.bh.iter().filter_map(|m| {
            let inverse = m.adjugate();
            let d = m.det();
            let image = inverse.apply(&[signed(t.a()), signed(t.b()), signed(t.c())]);
            let image = image.map(|x| x * d);
            let pre = crate::matrix::positive(image[0].clone())
                .zip(crate::matrix::positive(image[1].clone()))
                .zip(crate::matrix::positive(image[2].clone()))?;
            let ((a, b), c) = pre;
            PptTriple::new(a, b, c).ok().filter(|p| p.c() < t.c())
        });
        let first = preimages.next();
        if first.as_ref() != Some(&parent) || preimages.next().is_some() {
            return Err(Error::Invariant(format!(
                "bh parent of {t}: row-difference rule gives {parent}, inverse matrices disagree"
            )));
        }
        Ok(Some((parent, letter)))
    }

    fn new_parent_checked(&self, t: &PptTriple) -> Result<Option<(PptTriple, Letter)>> {
        let Some((parent_box, letter)) = new_parent_by_rule(&box_from_triple(t)) else {
            return Ok(None);
        };
        let parent = ppt_from_box(&parent_box).map_err(|e| Error::Invariant(format!("new parent of {t}: {e}")))?;

        // adj(M) · t = det(M) · parent
        let m = &self.new[letter.index()];
        let back = m.adjugate().apply(&[signed(t.a()), signed(t.b()), signed(t.c())]);
        let d = m.det();
        let expected = [signed(parent.a()), signed(parent.b()), signed(parent.c())].map(|x| x * d);
        if back != expected {
            return Err(Error::Invariant(format!(
                "new parent of {t}: half-angle rule gives {parent} via {letter}, matrix {m} disagrees"
            )));
        }
        Ok(Some((parent, letter)))
    }

    pub fn navigate(&self, kind: TreeKind, path: &PathCode) -> Result<PptTriple> {
        path.letters().iter().try_fold(PptTriple::root(), |t, &l| self.child(kind, &t, l))
    }

    /// Every node along `path`, starting with the root.
    pub fn trace(&self, kind: TreeKind, path: &PathCode) -> Result<Vec<PptTriple>> {
        let mut out = vec![PptTriple::root()];
        for &l in path.letters() {
            let next = self.child(kind, out.last().expect("non-empty"), l)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Walks parents up to the root; hypotenuses strictly decrease.
    pub fn locate(&self, kind: TreeKind, t: &PptTriple) -> Result<PathCode> {
        let mut letters = Vec::new();
        let mut cur = t.clone();
        while let Some((parent, letter)) = self.parent(kind, &cur)? {
            letters.push(letter);
            cur = parent;
        }
        letters.reverse();
        Ok(PathCode(letters))
    }

    /// All `3ⁿ` nodes of level `n`, in lexicographic path order.
    pub fn enumerate_level(&self, kind: TreeKind, depth: usize, cap: usize) -> Result<Vec<PptTriple>> {
        Ok(self.enumerate_level_with_paths(kind, depth, cap)?.into_iter().map(|(_, t)| t).collect())
    }

    pub fn enumerate_level_with_paths(
        &self,
        kind: TreeKind,
        depth: usize,
        cap: usize,
    ) -> Result<Vec<(PathCode, PptTriple)>> {
        if depth > cap {
            return Err(Error::DepthLimit { requested: depth, cap });
        }
        let mut level = vec![(PathCode::root(), PptTriple::root())];
        for _ in 0..depth {
            let mut next = Vec::with_capacity(level.len() * 3);
            for (path, t) in &level {
                let kids = self.children(kind, t)?;
                for (letter, kid) in Letter::ALL.into_iter().zip(kids) {
                    next.push((path.child(letter), kid));
                }
            }
            level = next;
        }
        Ok(level)
    }
}

fn rule_child(kind: TreeKind, b: &FibBox, letter: Letter) -> PptTriple {
    let child_box = match kind {
        TreeKind::BarningHall => {
            let (q, q_prime, p, p_prime) = (b.q(), b.q_prime(), b.p(), b.p_prime());
            let (top_left, top_right) = match letter {
                Letter::A => (q, p_prime),
                Letter::B => (p, p_prime),
                Letter::C => (p, q_prime),
            };
            FibBox::from_first_row(top_left.clone(), top_right.clone()).expect("positive first row")
        }
        TreeKind::New => {
            let hat = new_successor_hat(&b.primary_hat(), letter);
            box_from_hat(&hat).expect("successor half-angle tangents stay primitive")
        }
    };
    ppt_from_box(&child_box).expect("children of primitive boxes are primitive")
}

/// `q/p ↦ 2q/(p+q)`, `(p-q)/2p`, `(p+q)/2p`.
pub fn new_successor_hat(h: &Hat, letter: Letter) -> Hat {
    let (q, p) = (&h.num, &h.den);
    let (num, den) = match letter {
        Letter::A => (q * 2u32, p + q),
        Letter::B => (p - q, p * 2u32),
        Letter::C => (p + q, p * 2u32),
    };
    Hat { num, den }
}

/// Halve the even entry of the child tangent and replace the other by the
/// positive difference. The letter follows from which entry is even and,
/// when it is the denominator, on which side of the half the numerator lies.
fn new_parent_by_rule(b: &FibBox) -> Option<(FibBox, Letter)> {
    let (q, p) = (b.q(), b.p());
    let (parent_q, parent_p, letter) = if q.is_even() {
        let half = q / 2u32;
        (half.clone(), p - half, Letter::A)
    } else {
        let half = p / 2u32;
        match q.cmp(&half) {
            std::cmp::Ordering::Less => (&half - q, half, Letter::B),
            std::cmp::Ordering::Greater => (q - &half, half, Letter::C),
            std::cmp::Ordering::Equal => return None,
        }
    };
    Some((FibBox::from_column(parent_q, parent_p).ok()?, letter))
}

/// The row differences of the child box, smaller on top, completed to a box.
fn bh_parent_by_rule(t: &PptTriple) -> Option<PptTriple> {
    let b = box_from_triple(t);
    let top = abs_diff(b.q(), b.q_prime());
    let bottom = abs_diff(b.p(), b.p_prime());
    if top.is_zero() {
        return None;
    }
    let (q, p) = if top < bottom { (top, bottom) } else { (bottom, top) };
    let parent = FibBox::from_column(q, p).ok()?;
    ppt_from_box(&parent).ok()
}

fn abs_diff(x: &BigUint, y: &BigUint) -> BigUint {
    if x >= y {
        x - y
    } else {
        y - x
    }
}

pub fn bh_children(t: &PptTriple) -> Result<[PptTriple; 3]> {
    Forest::default().children(TreeKind::BarningHall, t)
}

pub fn new_children(t: &PptTriple) -> Result<[PptTriple; 3]> {
    Forest::default().children(TreeKind::New, t)
}

pub fn bh_parent(t: &PptTriple) -> Result<Option<(PptTriple, Letter)>> {
    Forest::default().parent(TreeKind::BarningHall, t)
}

pub fn new_parent(t: &PptTriple) -> Result<Option<(PptTriple, Letter)>> {
    Forest::default().parent(TreeKind::New, t)
}

pub fn navigate(kind: TreeKind, path: &PathCode) -> Result<PptTriple> {
    Forest::default().navigate(kind, path)
}

pub fn locate(kind: TreeKind, t: &PptTriple) -> Result<PathCode> {
    Forest::default().locate(kind, t)
}

pub fn enumerate_level(kind: TreeKind, depth: usize) -> Result<Vec<PptTriple>> {
    Forest::default().enumerate_level(kind, depth, DEFAULT_MAX_DEPTH)
}

pub fn classify_families(t: &PptTriple) -> BTreeSet<Family> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let mut out = BTreeSet::new();
    if c - a == BigUint::from(2u32) {
        out.insert(Family::Plato);
    }
    if c - b == BigUint::from(1u32) {
        out.insert(Family::Pythagoras);
    }
    if abs_diff(a, b) == BigUint::from(1u32) {
        out.insert(Family::FermatPell);
    }
    out
}
