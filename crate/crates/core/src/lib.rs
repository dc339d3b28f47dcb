//! Primitive Pythagorean triples in exact arithmetic.
//!
//! Every primitive triple is represented by its Fibonacci box, the 2×2 array
//! of half-angle-tangent numerators and denominators. From the box this crate
//! derives the triple, its radii, area and perimeter, Egyptian-fraction
//! identities and the exact tangent-circle configuration, and it builds the
//! Barning–Hall tree and the New tree of all primitive triples with
//! navigation in both directions.
//!
//! All integers are arbitrary precision and all fractions exact.
//!
//! ```
//! use ppt_core::{box_from_triple, Forest, PathCode, PptTriple, TreeKind};
//!
//! let forest = Forest::default();
//! let kids = forest.children(TreeKind::New, &PptTriple::root()).unwrap();
//! assert_eq!(kids[2].to_string(), "7,24,25");
//!
//! let t = PptTriple::new(20u32, 21u32, 29u32).unwrap();
//! assert_eq!(box_from_triple(&t).to_string(), "{2,3,5,7}");
//! let path = forest.locate(TreeKind::BarningHall, &t).unwrap();
//! assert_eq!(path, "B".parse::<PathCode>().unwrap());
//! ```

pub mod boxcore;
pub mod circlegeom;
pub mod cli;
pub mod egypt;
pub mod error;
pub mod forest;
pub mod matrix;
pub mod verify;

pub use boxcore::{
    area_perimeter_of, box_from_hat, box_from_triple, classify_non_primitive, family_fermat, family_plato,
    family_pythagoras, hats_of_triple, is_primitive_box, normalize_box, pell_shift, ppt_from_box, radii_of,
    triple_from_box, FibBox, Hat, NonPrimitiveReport, PptTriple, Radii, Triple,
};
pub use circlegeom::{
    circle_layout, collinear_split, descartes_check, inexradii_of_triangle, tangency_points, CircleLayout, Point,
    TangencySet,
};
pub use egypt::{ef_four_term, ef_three_term, ef_two_term_hypotenuse, rhind_two_term, EgyptianDecomposition};
pub use error::{Error, Result};
pub use forest::{
    bh_children, bh_matrices, bh_parent, classify_families, enumerate_level, locate, navigate, new_children,
    new_matrices, new_parent, Family, Forest, Letter, PathCode, TreeKind,
};
pub use matrix::TripleMatrix;
