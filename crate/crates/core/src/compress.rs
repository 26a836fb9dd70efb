//! GZip (DEFLATE with a CRC-32 trailer) via flate2.

use std::io::{Read, Write};

use flate2::bufread::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression as Level;
use thiserror::Error;

pub const DEFAULT_LEVEL: u32 = 6;

#[derive(Debug, Error)]
pub enum CompressError {
    #[error("gzip level must be 1..=9, got {0}")]
    InvalidLevel(u32),
    #[error("corrupt gzip stream: {0}")]
    CorruptStream(String),
}

pub fn gzip_compress(payload: &[u8], level: u32) -> Result<Vec<u8>, CompressError> {
    if !(1..=9).contains(&level) {
        return Err(CompressError::InvalidLevel(level));
    }
    let mut enc = GzEncoder::new(Vec::with_capacity(payload.len() / 2 + 32), Level::new(level));
    enc.write_all(payload).expect("writing to a Vec cannot fail");
    Ok(enc.finish().expect("writing to a Vec cannot fail"))
}

/// Decompresses exactly one gzip member. Trailing bytes, a bad CRC or a
/// truncated stream are all `CorruptStream`.
pub fn gzip_decompress(bytes: &[u8]) -> Result<Vec<u8>, CompressError> {
    let mut dec = GzDecoder::new(bytes);
    let mut out = Vec::with_capacity(bytes.len() * 3);
    dec.read_to_end(&mut out)
        .map_err(|e| CompressError::CorruptStream(e.to_string()))?;
    let rest = dec.into_inner();
    if !rest.is_empty() {
        return Err(CompressError::CorruptStream(format!("{} trailing bytes", rest.len())));
    }
    Ok(out)
}

#[cfg(feature = "xmill")]
pub mod xmill {
    //! Optional shell-out to an external `xmill` binary. Nothing here is
    //! compiled without the `xmill` feature, and it is a no-op when the
    //! binary is not on PATH.

    use std::path::PathBuf;
    use std::process::Command;

    pub fn binary() -> Option<PathBuf> {
        let path = std::env::var_os("PATH")?;
        std::env::split_paths(&path)
            .map(|d| d.join("xmill"))
            .find(|p| p.is_file())
    }

    /// Compresses `xml` with `xmill <file>`, which writes `<file-stem>.xmi`.
    pub fn compress(xml: &[u8]) -> Option<Vec<u8>> {
        let bin = binary()?;
        let dir = std::env::temp_dir().join(format!("xsdminify-xmill-{}", std::process::id()));
        std::fs::create_dir_all(&dir).ok()?;
        let input = dir.join("message.xml");
        std::fs::write(&input, xml).ok()?;
        let status = Command::new(bin).arg("-f").arg(&input).current_dir(&dir).status().ok()?;
        let out = std::fs::read(dir.join("message.xmi")).ok();
        let _ = std::fs::remove_dir_all(&dir);
        status.success().then_some(out).flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_round_trip() {
        let z = gzip_compress(b"", DEFAULT_LEVEL).unwrap();
        assert_eq!(gzip_decompress(&z).unwrap(), b"");
    }

    #[test]
    fn header_and_crc_are_present() {
        let z = gzip_compress(b"hello hello hello", 9).unwrap();
        assert_eq!(&z[..2], &[0x1f, 0x8b]);
        let crc = u32::from_le_bytes(z[z.len() - 8..z.len() - 4].try_into().unwrap());
        let mut h = flate2::Crc::new();
        h.update(b"hello hello hello");
        assert_eq!(crc, h.sum());
    }

    #[test]
    fn level_is_validated() {
        assert!(matches!(gzip_compress(b"x", 0), Err(CompressError::InvalidLevel(0))));
        assert!(matches!(gzip_compress(b"x", 10), Err(CompressError::InvalidLevel(10))));
    }

    #[test]
    fn trailing_garbage_and_truncation_are_corrupt() {
        let mut z = gzip_compress(b"payload", 6).unwrap();
        assert!(gzip_decompress(&z[..z.len() - 3]).is_err());
        z.push(0);
        assert!(matches!(gzip_decompress(&z), Err(CompressError::CorruptStream(_))));
    }
}
