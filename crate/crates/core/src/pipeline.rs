//! Wiring of the whole chain: schema → minified schema and dictionary →
//! binding manifest → codec.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::binding::{build_manifest, BindingError, BindingManifest};
use crate::codec::{Codec, CodecError};
use crate::corpus;
use crate::minify::{
    dictionary_file_name, minified_namespace, minify_set, parse_dictionary, write_dictionary, write_minified_schema,
    DicSyntaxError, MinificationResult, MinifyError,
};
use crate::schema::{parse_schema, CompiledSchema, SchemaError};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Minify(#[from] MinifyError),
    #[error(transparent)]
    Binding(#[from] BindingError),
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error("{path}: {source}")]
    Dictionary {
        path: String,
        #[source]
        source: DicSyntaxError,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub minification: MinificationResult,
    pub codec: Codec,
}

impl Pipeline {
    pub fn from_schema(schema: CompiledSchema) -> Result<Self, PipelineError> {
        let minification = minify_set(schema.documents.clone())?;
        let manifest = build_manifest(&schema, &minification)?;
        let codec = Codec::new(schema, manifest)?;
        Ok(Self { minification, codec })
    }

    /// Loads a schema file and everything it references from disk.
    pub fn from_file(path: &Path) -> Result<Self, PipelineError> {
        Self::from_schema(load_schema_file(path)?)
    }

    /// The bundled IDMEF schema.
    pub fn idmef() -> Result<Self, PipelineError> {
        Self::from_schema(corpus::idmef_schema()?)
    }

    pub fn schema(&self) -> &CompiledSchema {
        self.codec.schema()
    }

    pub fn manifest(&self) -> &BindingManifest {
        self.codec.manifest()
    }
}

pub fn read_file(path: &Path) -> Result<Vec<u8>, PipelineError> {
    std::fs::read(path).map_err(|source| PipelineError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Reads, resolves and compiles the schema rooted at `path`. Referenced
/// locations are resolved relative to the referencing file.
pub fn load_schema_file(path: &Path) -> Result<CompiledSchema, PipelineError> {
    let location = path.to_string_lossy().replace('\\', "/");
    let root = parse_schema(&read_file(path)?, &location)?;
    let loader = |loc: &str| std::fs::read(loc).map_err(|e| e.to_string());
    Ok(CompiledSchema::load(root, &loader)?)
}

fn directory_of(location: &str) -> &str {
    location.rfind(['/', '\\']).map_or("", |i| &location[..=i])
}

/// Files a minification produces, relative to the root schema's directory:
/// each minified document followed by the dictionary.
pub fn minification_outputs(schema: &CompiledSchema, result: &MinificationResult) -> Vec<(PathBuf, Vec<u8>)> {
    let root = &schema.documents.last().expect("non-empty schema set").location;
    let base = directory_of(root);
    let mut out: Vec<(PathBuf, Vec<u8>)> = write_minified_schema(result)
        .into_iter()
        .map(|(loc, bytes)| (PathBuf::from(loc.strip_prefix(base).unwrap_or(&loc)), bytes))
        .collect();
    out.push((PathBuf::from(dictionary_file_name(root)), write_dictionary(&result.dictionary)));
    out
}

/// Reads a minification back from `dir`, where [`minification_outputs`]
/// were written. The result is unverified; `build_manifest` checks it.
pub fn read_minification(schema: &CompiledSchema, dir: &Path) -> Result<MinificationResult, PipelineError> {
    let expected = minification_outputs(schema, &minify_set(schema.documents.clone())?);
    let (dic_name, _) = expected.last().expect("dictionary entry");
    let dic_path = dir.join(dic_name);
    let dictionary = parse_dictionary(&read_file(&dic_path)?).map_err(|source| PipelineError::Dictionary {
        path: dic_path.display().to_string(),
        source,
    })?;
    let mut minified_schemas = Vec::new();
    for (rel, _) in &expected[..expected.len() - 1] {
        let path = dir.join(rel);
        let location = path.to_string_lossy().replace('\\', "/");
        minified_schemas.push(parse_schema(&read_file(&path)?, &location)?);
    }
    let namespace_map = schema
        .namespaces()
        .into_iter()
        .map(|ns| (ns.to_string(), minified_namespace(ns)))
        .collect();
    Ok(MinificationResult {
        minified_schemas,
        dictionary,
        namespace_map,
    })
}

pub fn idmef_codec() -> Result<Codec, PipelineError> {
    Ok(Pipeline::idmef()?.codec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_and_bundled_schemas_agree() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("idmef.xsd");
        std::fs::write(&path, corpus::IDMEF_XSD).unwrap();
        let from_file = Pipeline::from_file(&path).unwrap();
        let bundled = Pipeline::idmef().unwrap();
        assert_eq!(
            from_file.manifest().dictionary_checksum,
            bundled.manifest().dictionary_checksum
        );
    }

    #[test]
    fn outputs_read_back_into_the_same_manifest() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("idmef.xsd");
        std::fs::write(&path, corpus::IDMEF_XSD).unwrap();
        let p = Pipeline::from_file(&path).unwrap();
        let outputs = minification_outputs(p.schema(), &p.minification);
        let names: Vec<_> = outputs.iter().map(|(n, _)| n.display().to_string()).collect();
        assert_eq!(names, ["idmef.min.xsd", "idmef.dic"]);
        let out = dir.path().join("out");
        std::fs::create_dir(&out).unwrap();
        for (n, b) in &outputs {
            std::fs::write(out.join(n), b).unwrap();
        }
        let back = read_minification(p.schema(), &out).unwrap();
        assert_eq!(&build_manifest(p.schema(), &back).unwrap(), p.manifest());

        std::fs::write(out.join("idmef.dic"), b"a,xsd:schema/xsd:element[name=Other]\n").unwrap();
        let tampered = read_minification(p.schema(), &out).unwrap();
        assert!(matches!(
            build_manifest(p.schema(), &tampered),
            Err(BindingError::ChecksumMismatch { .. })
        ));
    }

    #[test]
    fn missing_file_is_an_io_error() {
        assert!(matches!(
            Pipeline::from_file(Path::new("/nonexistent/x.xsd")),
            Err(PipelineError::Io { .. })
        ));
    }
}
