//! Payload sizes with and without gzip for each encoding, over the corpus.
//!
//! `cargo run --example gzip_sizes -- [LEVEL]`, level 1..=9 (default 6).

use xsdminify::codec::{Compression, Encoding};
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let level: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let codec = Pipeline::idmef()?.codec.with_gzip_level(level)?;
    print!("{:<26}", "message");
    for e in Encoding::ALL {
        print!(" {:>9} {:>9}", e.as_str(), "+gzip");
    }
    println!();
    for m in &corpus::MESSAGES {
        let tree = codec.parse(m.xml)?;
        print!("{:<26}", m.title);
        for e in Encoding::ALL {
            let plain = codec.encode(&tree, e, Compression::None)?.payload.len();
            let gz = codec.encode(&tree, e, Compression::Gzip)?.payload.len();
            print!(" {plain:>9} {gz:>9}");
        }
        println!();
    }
    Ok(())
}
