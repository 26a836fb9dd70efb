//! The XML Schema subset: component model, reader, writer, reference
//! resolution and a resolved ("compiled") view used by the minifier, the
//! binding generator and the instance codec.

mod compiled;
mod model;
mod parse;
mod resolve;
mod write;

pub use compiled::{
    AnyDecl, AttributeDecl, CompiledSchema, ComplexTypeDef, ElementDecl, Particle, SimpleTypeDef,
    TypeId,
};
pub use model::{
    is_uri_reference, location_stem, ComponentKind, ComponentPath, MaxOccurs, Occurs, PathSegment,
    QualifiedName, ReferenceKind, SchemaComponent, SchemaDocument, SchemaReference, SegmentLabel,
    XSD_NS,
};
pub use parse::{assign_paths, parse_schema};
pub use resolve::{join_location, resolve_references, Loader};
pub use write::write_schema;

use thiserror::Error;

use crate::xml::MalformedXml;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemaError {
    #[error("{location}: {0}", location = .1)]
    MalformedXml(MalformedXml, String),
    #[error("{location}:{line}: unsupported construct '{construct}'")]
    UnsupportedConstruct {
        construct: String,
        line: usize,
        location: String,
    },
    #[error("{location}: duplicate {kind} name '{name}'")]
    DuplicateName {
        kind: String,
        name: String,
        location: String,
    },
    #[error("invalid name '{name}': {reason}")]
    InvalidName { name: String, reason: String },
    #[error("{location}:{line}: {message}")]
    InvalidSchema {
        message: String,
        line: usize,
        location: String,
    },
    #[error("circular schema reference: {}", .cycle.join(" -> "))]
    CircularReference { cycle: Vec<String> },
    #[error("cannot load schema '{location}': {cause}")]
    LoadFailure { location: String, cause: String },
    #[error("{location}: target namespace '{found}' does not match expected '{expected}'")]
    NamespaceMismatch {
        location: String,
        expected: String,
        found: String,
    },
    #[error("{location}: reference to undeclared {kind} '{name}'")]
    UnresolvedReference {
        kind: String,
        name: String,
        location: String,
    },
}
