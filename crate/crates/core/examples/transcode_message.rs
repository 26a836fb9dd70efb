//! Shows one corpus message in every encoding.
//!
//! `cargo run --example transcode_message -- [CORPUS_FILE]`, e.g.
//! `03-tear-drop`; the Heartbeat by default.

use xsdminify::codec::Encoding;
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let key = std::env::args().nth(1).unwrap_or_else(|| "14-heartbeat".into());
    let message = corpus::message(&key).ok_or_else(|| format!("no corpus message '{key}'"))?;
    let codec = Pipeline::idmef()?.codec;
    let tree = codec.parse(message.xml)?;
    for encoding in Encoding::ALL {
        let bytes = codec.serialize(&tree, encoding)?;
        println!("== {encoding} ({} bytes)", bytes.len());
        println!("{}", String::from_utf8_lossy(&bytes).trim_end());
        assert_eq!(codec.deserialize(&bytes, encoding)?, tree);
    }
    Ok(())
}
