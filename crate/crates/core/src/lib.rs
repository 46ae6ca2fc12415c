//! Lyndon and co-Lyndon factorization under arbitrary alphabet orderings,
//! and search for orderings that make the Lyndon factorization short (or
//! long).
//!
//! Symbols are bytes. An [`OrderedAlphabet`] ranks the symbols of a text;
//! exponent strings use [`ep::InvertedIntegerOrder`] instead. All routines
//! are pure functions of their inputs.
//!
//! ```
//! use lyndon_order::{duval_factorize, OrderedAlphabet};
//!
//! let text = b"abcabcdabcaba";
//! let order = OrderedAlphabet::from_ascending(b"bcad").unwrap();
//! let f = duval_factorize(text, &order).unwrap();
//! assert_eq!(f.factors(text), [&b"a"[..], &b"bcabcdabcaba"[..]]);
//! ```

pub mod alphabet;
pub mod ep;
pub mod error;
pub mod factor;
pub mod io;
pub mod search;
pub mod umff;

pub use alphabet::{OrderedAlphabet, SymbolOrder, Text};
pub use ep::{compute_ep, factorize_exponents, EpVector, InvertedIntegerOrder};
pub use error::{Error, Result};
pub use factor::{
    co_lyndon_factorize, duval_factorize, is_co_lyndon, is_lyndon, is_primitive,
    least_rotation_start, least_rotation_start_quadratic, lyndon_array, lyndon_factorization_array,
    Factorization,
};
pub use search::{
    exhaustive_search, greedy_order, greedy_order_maximize, ConstraintGraph, Objective,
    RankingReport,
};
