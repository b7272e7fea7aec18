//! Command-line front end for `hurwitz-core`: the ring-spec language,
//! report serialization and the `hurwitz` commands.

pub mod commands;
pub mod dsl;
pub mod output;
