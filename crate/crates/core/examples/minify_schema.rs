//! Minifies a schema and prints the dictionary and minified root.
//!
//! `cargo run --example minify_schema -- [SCHEMA.xsd]`; the bundled IDMEF
//! schema when no path is given.

use std::path::Path;

use xsdminify::minify::{minify_set, write_dictionary, write_minified_schema};
use xsdminify::pipeline::load_schema_file;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let schema = match std::env::args().nth(1) {
        Some(path) => load_schema_file(Path::new(&path))?,
        None => xsdminify::corpus::idmef_schema()?,
    };
    let result = minify_set(schema.documents.clone())?;
    let dic = write_dictionary(&result.dictionary);
    print!("{}", String::from_utf8_lossy(&dic));
    for (location, bytes) in write_minified_schema(&result) {
        let original: usize = schema
            .documents
            .iter()
            .filter(|d| xsdminify::minify::minified_location(&d.location) == location)
            .map(|d| xsdminify::schema::write_schema(d, false).len())
            .sum();
        eprintln!("{location}: {original} -> {} bytes (compact form)", bytes.len());
    }
    eprintln!("{} dictionary entries", result.dictionary.len());
    Ok(())
}
