//! Exact parallel-coordinates duals of planar algebraic curves.
//!
//! A curve `f(x1, x2) = 0` is homogenized, intersected with its pencil of
//! tangent planes and the coordinates are eliminated with a Sylvester
//! resultant; the remaining form in the gradient directions `(eta, xi, psi)`
//! is mapped to the parallel-coordinates plane `(x, y)`.
//!
//! Modules, bottom up:
//! - [`polyring`]: sparse rational polynomials in a fixed variable registry
//! - [`polyparse`]: the text format
//! - [`elimination`]: binary forms, Sylvester matrices, determinants
//! - [`dualize`]: the dual-curve algorithm, conic closed form, numeric oracle
//! - [`plot`]: marching squares and SVG output
//!
//! ```
//! use pcdual::dualize::{dual_curve, ImplicitCurve};
//! use pcdual::{parse, print};
//!
//! let circle = ImplicitCurve::new(parse("x1^2 + x2^2 - 1").unwrap()).unwrap();
//! let dual = dual_curve(&circle).unwrap();
//! assert_eq!(print(&dual.g), "2*x^2 - y^2 - 2*x + 1");
//! assert_eq!(dual.psi_power, 2);
//! ```

pub mod dualize;
pub mod elimination;
pub mod plot;
pub mod polyparse;
pub mod polyring;
pub mod registry;

pub use polyparse::{parse, print};
pub use polyring::{Monomial, PolyError, Polynomial, Rational, VarId};
