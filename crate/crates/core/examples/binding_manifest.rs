//! Prints the binding manifest for the bundled IDMEF schema, then the
//! readable/wire names of one type.

use xsdminify::pipeline::Pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pipeline = Pipeline::idmef()?;
    let manifest = pipeline.manifest();
    let wanted = std::env::args().nth(1).unwrap_or_else(|| "Heartbeat".into());
    match manifest.types.iter().find(|t| t.readable_name == wanted) {
        Some(t) => {
            println!("{} -> {}", t.readable_name, t.wire_name.as_deref().unwrap_or("(anonymous)"));
            for m in &t.members {
                println!("  {:<16} {}", m.readable_name, m.wire_name);
            }
        }
        None => {
            std::io::Write::write_all(&mut std::io::stdout(), &manifest.to_json())?;
        }
    }
    eprintln!(
        "{} types, {} globals, dictionary {}",
        manifest.types.len(),
        manifest.globals.len(),
        &manifest.dictionary_checksum[..12]
    );
    Ok(())
}
