//! The classification tables as data, and the verifier that replays them.

mod entry;
mod fixtures;
mod isotropy;
mod links;
mod template;
mod verify;

pub use entry::{Catalog, TableEntry, CATALOG_ENV, EMBEDDED_CATALOG, TABLES};
pub use fixtures::{negative_fixtures, witness_holds, NegativeFixture};
pub use isotropy::parse_isotropy;
pub use links::{link_criterion, simple_root, table_s_check, LinkCheck, TableSCheck};
pub use template::{instantiate, parameter_tuples, render_template, underlined_factors, Params};
pub use verify::{verify_all, verify_entry, CaseReport, EntryReport, Summary, TableSummary, VerifyOptions};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog format: {0}")]
    Format(String),
    #[error("expression `{expr}`: {message}")]
    Expr { expr: String, message: String },
    #[error("parameters {0}")]
    Params(String),
    #[error("constraint `{0}` does not hold")]
    Constraint(String),
    #[error("template `{src}`: {err}")]
    Dsl { src: String, err: mfsr_dsl::DslError },
    #[error("isotropy template `{0}`: {1}")]
    Isotropy(String, String),
    #[error(transparent)]
    Rep(#[from] mfsr_repspec::RepError),
    #[error(transparent)]
    Knop(#[from] mfsr_knop::KnopError),
    #[error("reading {0}: {1}")]
    Io(String, std::io::Error),
}
