//! Starts a receiver on a free local port, sends the corpus to it in every
//! encoding and prints the receiver's counters.

use xsdminify::codec::{Compression, Encoding};
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;
use xsdminify::transport::{fetch_stats, send_burst, serve};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let codec = Pipeline::idmef()?.codec;
    let server = serve("127.0.0.1:0", codec.clone())?;
    let url = server.url();
    println!("receiver at {url}");
    let messages = corpus::named_messages();
    for encoding in Encoding::ALL {
        for compression in [Compression::None, Compression::Gzip] {
            let burst = send_burst(&url, &messages, &codec, encoding, compression, 5)?;
            println!(
                "{:<9} {:<5} sent {:>3}  failures {}  mean rtt {:>8.1} us",
                encoding.as_str(),
                compression.as_str(),
                burst.sent,
                burst.failures,
                burst.mean_round_trip_us()
            );
        }
    }
    let stats = fetch_stats(&url)?;
    println!("{}", serde_json::to_string_pretty(&stats)?);
    server.shutdown();
    Ok(())
}
