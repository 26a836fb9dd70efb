//! Typed IDMEF messages in the minified JSON wire format.
//!
//! `generated.rs` is produced by `xsdminify emit` from the IDMEF binding
//! manifest and committed; a test in the `xsdminify` crate fails when it
//! drifts from what the current emitter would write. Regenerate with
//!
//! ```text
//! cargo run --example emit_bindings -p xsdminify -- crates/idmef-bindings/src
//! ```
//!
//! Fields carry the short wire names; accessors use the readable names.

#![allow(clippy::all)]

mod generated;

pub use generated::*;

/// Parses a minified JSON document.
pub fn from_min_json(bytes: &[u8]) -> serde_json::Result<Document> {
    serde_json::from_slice(bytes)
}

pub fn to_min_json(doc: &Document) -> Vec<u8> {
    serde_json::to_vec(doc).expect("bindings serialize")
}
