//! Exact scalar types: rationals, cyclotomic numbers, polynomials, linear forms and
//! truncated exponential generating series.

pub mod cyc;
pub mod egf;
pub mod linform;
pub mod poly;
pub mod ring;
pub mod surd;

pub use cyc::Cyc;
pub use egf::{chapuy_stump_series, egf_product_formula, TruncatedEGF};
pub use linform::LinearForm;
pub use poly::{Poly, PolyQ, PolyW, PolyZ};
pub use ring::{parse_rational, rat, rint, Field, QAlgebra, Rational, Ring};
