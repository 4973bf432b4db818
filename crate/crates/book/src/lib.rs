//! The guide under `book/src`, one module per chapter, so that `cargo test`
//! runs every snippet as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fuzzy-sets.md")]
pub mod fuzzy_sets {}
#[doc = include_str!("../../../book/src/soft-sets.md")]
pub mod soft_sets {}
#[doc = include_str!("../../../book/src/fuzzy-soft-relations.md")]
pub mod fuzzy_soft_relations {}
#[doc = include_str!("../../../book/src/uncertainty.md")]
pub mod uncertainty {}
#[doc = include_str!("../../../book/src/logic.md")]
pub mod logic {}
#[doc = include_str!("../../../book/src/decisions.md")]
pub mod decisions {}
#[doc = include_str!("../../../book/src/workspaces.md")]
pub mod workspaces {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
