//! Emits Rust bindings for the bundled IDMEF schema.
//!
//! `cargo run --example emit_bindings -- OUT_DIR` writes `generated.rs` into
//! OUT_DIR (default: the current directory).

use std::path::PathBuf;

use xsdminify::binding::emit::{emit_source, TemplateSet};
use xsdminify::pipeline::Pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    let pipeline = Pipeline::idmef()?;
    for (name, bytes) in emit_source(pipeline.manifest(), &TemplateSet::rust())? {
        let path = out.join(name);
        std::fs::write(&path, bytes)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
