//! Exact arithmetic for sparse multivariate Laurent polynomials.
//!
//! Coefficients are arbitrary-precision rationals; nothing here uses floating
//! point. Polynomials print in a canonical text form: terms in descending
//! graded-lex order joined by `" + "`, coefficients as `p/q`, and monomials as
//! `name^e` factors joined by `*` (positive exponents first), for example
//! `a_1_1 + a_1_2*a_1_1^-1`.

mod constant_term;
mod division;
mod error;
mod json;
mod laurent;
mod monomial;
mod newton;
mod parse;
mod rational_function;
mod vars;

pub use constant_term::{constant_term, constant_term_naive, constant_terms};
pub use error::{ArithError, Result};
pub use json::{LaurentJson, TermJson};
pub use laurent::{rat, ratio, LaurentPolynomial};
pub use monomial::Monomial;
pub use newton::{in_convex_hull, lp_feasible, newton_polytope, origin_in_interior, support, Polytope};
pub use parse::{identifiers, parse_laurent, parse_rational_function};
pub use rational_function::{bindings_from_pairs, Bindings, RationalFunction};
pub use vars::VariableSet;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
