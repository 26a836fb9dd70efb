//! Size, node count, attribute count and depth of every corpus message.

use xsdminify::codec::analyze_structure;
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Pipeline::idmef()?.codec;
    println!("{:<26} {:>6} {:>6} {:>6} {:>6}", "message", "bytes", "nodes", "attrs", "depth");
    for m in &corpus::MESSAGES {
        let tree = codec.parse(m.xml)?;
        let s = analyze_structure(&tree, &codec.to_xml(&tree));
        println!(
            "{:<26} {:>6} {:>6} {:>6} {:>6}",
            m.title, s.byte_size, s.node_count, s.attribute_count, s.depth
        );
    }
    Ok(())
}
