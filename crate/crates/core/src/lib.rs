//! Schema-driven XML minification.
//!
//! An XSD is minified into short wire names plus a dictionary of original
//! component paths; a binding manifest pairs readable names with wire names;
//! the codec transcodes schema-valid instances between XML, minified XML,
//! JSON and minified JSON, optionally gzip-compressed.

pub mod bench;
pub mod binding;
pub mod cli;
pub mod codec;
pub mod compress;
pub mod corpus;
pub mod minify;
pub mod pipeline;
pub mod schema;
pub mod transport;
pub mod xml;
