//! Deciding k-colorability of undirected multigraphs through their edge
//! orientations.
//!
//! Orient every edge of a multigraph in all `2^m` possible ways and sort
//! the orientations into classes by their out-degree vectors modulo `k`;
//! split each class into the two subclasses that agree or disagree with a
//! fixed reference orientation in the parity of reversed edges. The graph
//! is k-colorable exactly when some class has subclasses of different
//! cardinalities; equivalently, when the product of `(x_u - x_v)` over
//! the edges, with exponents rewritten modulo `k`, keeps a nonzero integer
//! coefficient. This crate builds that census, computes the reduced
//! polynomial independently, replays the finite-field argument connecting
//! the two, and cross-validates everything against a brute-force coloring
//! oracle.
//!
//! # Modules
//!
//! - [`graph`]: multigraph model, edge-list and DIMACS parsing, the
//!   reference-orientation convention.
//! - [`census`]: exhaustive orientation enumeration into a [`ClassTable`].
//! - [`poly`]: exact sparse polynomial arithmetic and the reduced graph
//!   polynomial.
//! - [`field`]: GF(p^t) construction, color sets of roots of unity,
//!   identically-zero testing.
//! - [`criteria`]: verdicts, divisibility profiles, prime-power selection,
//!   and the backtracking oracle.
//! - [`cli`]: the `orichrome` command-line front end.
//!
//! # Quick start
//!
//! ```
//! use orichrome::{ClassTable, Multigraph};
//! use orichrome::criteria::{decide_colorable, find_coloring};
//!
//! let square = Multigraph::cycle(4);
//! let verdict = decide_colorable(&square, 2).unwrap();
//! assert!(verdict.colorable);
//!
//! // the certificate is an unbalanced orientation class ...
//! let witness = verdict.witness.unwrap();
//! assert_eq!(witness.coefficient.abs(), 2);
//!
//! // ... and the brute-force oracle concurs
//! assert!(find_coloring(&square, 2).is_some());
//!
//! // the census underneath: 16 orientations in 8 classes of 2
//! let table = ClassTable::build(&square, 2).unwrap();
//! assert_eq!(table.total_orientations(), 16);
//! assert_eq!(table.class_count(), 8);
//! ```
//!
//! # Runnable examples
//!
//! One example per capability, under `examples/`:
//!
//! ```bash
//! cargo run --example parse_formats
//! cargo run --example orientation_census
//! cargo run --example reduced_polynomial
//! cargo run --example colorability
//! cargo run --example finite_fields
//! cargo run --example certificate_replay
//! cargo run --example cross_validation
//! ```

pub mod census;
pub mod cli;
pub mod criteria;
pub mod field;
pub mod graph;
pub mod poly;

pub use census::{ClassTable, ResidueVector, SubclassSizes};
pub use criteria::{Caps, CrossCheckReport, Engine, LProfile, PrimePowerChoice, Verdict, Witness};
pub use field::{Field, FieldElement};
pub use graph::{Multigraph, Orientation, Parity};
pub use poly::{Polynomial, ReducedPolynomial};
