//! Fuzzy sets, soft sets and their relations, with the calculus needed for
//! parameterized multi-criteria decision making.
//!
//! ```
//! use fuzzysoft::{select_best, score_alternatives, Criterion, DecisionQuery, FuzzySoftSet, TNorm, Universe};
//!
//! let houses = Universe::new(["h1", "h2", "h3"])?;
//! let f = FuzzySoftSet::from_values("F", houses, &[
//!     ("cheap", &[0.3, 0.9, 0.6]),
//!     ("beautiful", &[0.8, 0.2, 0.7]),
//! ])?;
//! let query = DecisionQuery::new(
//!     vec![Criterion::new("F", "cheap"), Criterion::new("F", "beautiful")],
//!     TNorm::Min,
//! )?;
//! let scores = score_alternatives(&[f], &query)?;
//! assert_eq!(select_best(&scores)?.0, "h3");
//! # Ok::<(), fuzzysoft::Error>(())
//! ```

mod error;
mod grade;
mod matrix;
mod set;
mod tnorm;
mod universe;
mod util;

pub mod decision;
pub mod logic;
pub mod membership;
pub mod relation;
pub mod soft;
pub mod uncertainty;
pub mod workspace;

pub use decision::{
    expected_value, possibility_dominance, rank, regret_table, score_alternatives, select_best,
    validate_probability, Criterion, DecisionQuery, PayoffTable, Ranking,
};
pub use error::{Error, Result};
pub use grade::Grade;
pub use matrix::{GradeMatrix, Matrix};
pub use membership::{MembershipFunction, MembershipKind};
pub use relation::{
    extension_principle, nary_combine, pairwise_relation, soft_product, EquivalenceClass,
    FuzzyProperties, FuzzyRelationMatrix, FuzzySoftRelation, FuzzySoftSet, SoftConnective,
};
pub use set::{CrispSet, FuzzySet};
pub use soft::{
    tuple_label, BlockFamily, CrispProperties, CrispRelationMatrix, Partition, SoftRelation,
    SoftSet,
};
pub use tnorm::TNorm;
pub use universe::Universe;
pub use workspace::{
    load_workspace, parse_workspace, Workspace, WorkspaceDocument, WorkspaceError,
};
