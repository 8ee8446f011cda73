//! Exact counts of mutually commuting m-tuples in the symmetric groups S_n and
//! the wreath products C_i Wr S_n, and the orbifold Euler characteristics
//! chi_m(M^n, S_n) of symmetric products.
//!
//! Every number is available along independent routes that are checked
//! against each other:
//!
//! * [`perm`] and [`wreath`]: exhaustive enumeration inside the explicitly
//!   listed group,
//! * [`formula`]: Euler-product generating functions (built on [`series`]) and
//!   a memoized recursion over centralizers of conjugacy classes,
//! * [`verify`]: sweeps comparing the routes, with JSON-serializable reports.

pub mod dsu;
pub mod error;
pub mod formula;
pub mod group;
pub mod guard;
pub mod perm;
pub mod series;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
pub use guard::Guards;
