//! Exact computation of vanishing ideals of finite sets of projective
//! points over finite fields.
//!
//! Given a homogeneous ideal `I` in `F_q[x1,...,xm]` whose projective
//! variety `X` is finite and nonempty, the vanishing ideal `I(X)` equals
//! the saturation `(I + I(P^{m-1})) : m^inf` with respect to the
//! homogeneous maximal ideal. This crate implements that computation on
//! top of its own Groebner engine, together with a brute-force oracle
//! (intersection of point ideals), Hilbert-series invariants, and the
//! parameters of projective Reed-Muller-type evaluation codes.
//!
//! ```
//! use zariski::{Field, Ring, projective};
//!
//! let f2 = Field::new(2)?;
//! let ring = Ring::new(f2.clone(), 3);
//! let ip2 = projective::projective_space_ideal(&ring);
//! let x = projective::enumerate_projective_space(&f2, 3)?;
//! assert_eq!(x.len(), 7);
//! assert!(projective::vanishing_ideal_oracle(&x, &ring)?.equals(&ip2)?);
//! # Ok::<(), zariski::Error>(())
//! ```

pub mod codes;
mod error;
pub mod gf;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod ideal_file;
pub mod poly;
pub mod projective;
pub mod stats;

pub use error::{Error, Result};
pub use gf::{Field, FieldElement};
pub use groebner::GroebnerBasis;
pub use ideal::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
pub use projective::{PointSet, ProjectivePoint};

/// Default cap on point enumerations (projective or affine).
pub const DEFAULT_POINT_LIMIT: usize = 1_000_000;

/// Default cap on the message-space size of the minimum-distance search.
pub const DEFAULT_MESSAGE_LIMIT: u128 = 1_000_000;

// The book chapters double as doctests so the guide cannot drift from the
// library. `cargo test --doc -p zariski` runs every snippet.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(fields, "../../../book/src/fields.md");
    chapter!(polynomials, "../../../book/src/polynomials.md");
    chapter!(groebner, "../../../book/src/groebner.md");
    chapter!(ideal_operations, "../../../book/src/ideal-operations.md");
    chapter!(hilbert, "../../../book/src/hilbert.md");
    chapter!(projective, "../../../book/src/projective.md");
    chapter!(codes, "../../../book/src/codes.md");
    chapter!(cli, "../../../book/src/cli.md");
}
