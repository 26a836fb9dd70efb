use std::collections::{HashMap, HashSet};

use super::model::*;
use super::parse::{assign_paths, parse_schema};
use super::SchemaError;

/// Fetches the bytes of a schema by location.
pub type Loader<'a> = dyn Fn(&str) -> Result<Vec<u8>, String> + 'a;

/// Resolves `relative` against the location of the referencing document.
pub fn join_location(base: &str, relative: &str) -> String {
    if relative.starts_with('/') || relative.contains("://") {
        return relative.to_string();
    }
    let dir = match base.rfind(['/', '\\']) {
        Some(i) => &base[..=i],
        None => "",
    };
    let mut parts: Vec<&str> = Vec::new();
    let joined = format!("{dir}{relative}");
    let absolute = joined.starts_with('/');
    for p in joined.split('/') {
        match p {
            "" | "." => {}
            ".." if parts.last().is_some_and(|l| *l != "..") => {
                parts.pop();
            }
            _ => parts.push(p),
        }
    }
    let s = parts.join("/");
    if absolute {
        format!("/{s}")
    } else {
        s
    }
}

/// Loads every transitively referenced schema and returns the set in
/// dependency-first order: a document always comes after everything it
/// references, and the root comes last.
///
/// Documents whose target namespace differs from the root's get their
/// `xsd:schema` path segment qualified with the file stem so that paths stay
/// unique across the set.
pub fn resolve_references(
    root: SchemaDocument,
    loader: &Loader<'_>,
) -> Result<Vec<SchemaDocument>, SchemaError> {
    let root_ns = root.target_namespace.clone();
    let mut state = State {
        loader,
        done: HashSet::new(),
        in_progress: Vec::new(),
        order: Vec::new(),
    };
    state.visit(root)?;

    let mut out = state.order;
    let mut stems: HashMap<String, String> = HashMap::new();
    for doc in &mut out {
        if doc.target_namespace != root_ns {
            let stem = doc.stem().to_string();
            if let Some(other) = stems.insert(stem.clone(), doc.location.clone()) {
                return Err(SchemaError::DuplicateName {
                    kind: "schema document".into(),
                    name: stem,
                    location: other,
                });
            }
            assign_paths(doc, Some(&stem));
        }
    }
    check_global_names(&out)?;
    Ok(out)
}

struct State<'a, 'b> {
    loader: &'a Loader<'b>,
    done: HashSet<String>,
    in_progress: Vec<String>,
    order: Vec<SchemaDocument>,
}

impl State<'_, '_> {
    fn visit(&mut self, doc: SchemaDocument) -> Result<(), SchemaError> {
        self.in_progress.push(doc.location.clone());
        for r in &doc.references {
            let target = join_location(&doc.location, &r.schema_location);
            if let Some(pos) = self.in_progress.iter().position(|l| *l == target) {
                let mut cycle = self.in_progress[pos..].to_vec();
                cycle.push(target);
                return Err(SchemaError::CircularReference { cycle });
            }
            if self.done.contains(&target) {
                continue;
            }
            let bytes = (self.loader)(&target).map_err(|cause| SchemaError::LoadFailure {
                location: target.clone(),
                cause,
            })?;
            let child = parse_schema(&bytes, &target)?;
            let expected = match r.kind {
                ReferenceKind::Include => &doc.target_namespace,
                ReferenceKind::Import => r.namespace.as_ref().expect("import carries a namespace"),
            };
            if &child.target_namespace != expected {
                return Err(SchemaError::NamespaceMismatch {
                    location: target,
                    expected: expected.clone(),
                    found: child.target_namespace,
                });
            }
            self.visit(child)?;
        }
        self.in_progress.pop();
        self.done.insert(doc.location.clone());
        self.order.push(doc);
        Ok(())
    }
}

fn check_global_names(docs: &[SchemaDocument]) -> Result<(), SchemaError> {
    let mut seen = HashSet::new();
    for d in docs {
        for c in &d.components {
            let space = match c.kind {
                ComponentKind::SimpleType => ComponentKind::ComplexType,
                k => k,
            };
            if let Some(n) = c.name() {
                if !seen.insert((d.target_namespace.as_str(), space, n)) {
                    return Err(SchemaError::DuplicateName {
                        kind: super::parse::kind_label(c.kind).into(),
                        name: n.to_string(),
                        location: d.location.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xsd(ns: &str, refs: &str) -> Vec<u8> {
        format!(
            r#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" targetNamespace="{ns}">{refs}</xsd:schema>"#
        )
        .into_bytes()
    }

    fn loader(files: Vec<(&'static str, Vec<u8>)>) -> impl Fn(&str) -> Result<Vec<u8>, String> {
        move |loc: &str| {
            files
                .iter()
                .find(|(n, _)| *n == loc)
                .map(|(_, b)| b.clone())
                .ok_or_else(|| format!("no such schema: {loc}"))
        }
    }

    fn locations(docs: &[SchemaDocument]) -> Vec<&str> {
        docs.iter().map(|d| d.location.as_str()).collect()
    }

    #[test]
    fn no_references_yields_root_only() {
        let root = parse_schema(&xsd("urn:a", ""), "a.xsd").unwrap();
        let docs = resolve_references(root, &loader(vec![])).unwrap();
        assert_eq!(locations(&docs), ["a.xsd"]);
    }

    #[test]
    fn include_then_import_is_dependency_first() {
        let root = parse_schema(&xsd("urn:a", r#"<xsd:include schemaLocation="b.xsd"/>"#), "a.xsd").unwrap();
        let l = loader(vec![
            ("b.xsd", xsd("urn:a", r#"<xsd:import namespace="urn:c" schemaLocation="c.xsd"/>"#)),
            ("c.xsd", xsd("urn:c", "")),
        ]);
        let docs = resolve_references(root, &l).unwrap();
        assert_eq!(locations(&docs), ["c.xsd", "b.xsd", "a.xsd"]);
    }

    #[test]
    fn include_cycle_is_reported() {
        let root = parse_schema(&xsd("urn:a", r#"<xsd:include schemaLocation="b.xsd"/>"#), "a.xsd").unwrap();
        let l = loader(vec![
            ("b.xsd", xsd("urn:a", r#"<xsd:include schemaLocation="a.xsd"/>"#)),
            ("a.xsd", xsd("urn:a", r#"<xsd:include schemaLocation="b.xsd"/>"#)),
        ]);
        match resolve_references(root, &l) {
            Err(SchemaError::CircularReference { cycle }) => assert_eq!(cycle, ["a.xsd", "b.xsd", "a.xsd"]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn load_failure_and_namespace_mismatch() {
        let root = parse_schema(&xsd("urn:a", r#"<xsd:include schemaLocation="b.xsd"/>"#), "a.xsd").unwrap();
        assert!(matches!(
            resolve_references(root.clone(), &loader(vec![])),
            Err(SchemaError::LoadFailure { .. })
        ));
        let l = loader(vec![("b.xsd", xsd("urn:other", ""))]);
        assert!(matches!(
            resolve_references(root, &l),
            Err(SchemaError::NamespaceMismatch { .. })
        ));
    }

    #[test]
    fn diamond_loads_shared_dependency_once() {
        let root = parse_schema(
            &xsd(
                "urn:a",
                r#"<xsd:import namespace="urn:b" schemaLocation="b.xsd"/><xsd:import namespace="urn:c" schemaLocation="c.xsd"/>"#,
            ),
            "a.xsd",
        )
        .unwrap();
        let l = loader(vec![
            ("b.xsd", xsd("urn:b", r#"<xsd:import namespace="urn:d" schemaLocation="d.xsd"/>"#)),
            ("c.xsd", xsd("urn:c", r#"<xsd:import namespace="urn:d" schemaLocation="d.xsd"/>"#)),
            ("d.xsd", xsd("urn:d", "")),
        ]);
        let docs = resolve_references(root, &l).unwrap();
        assert_eq!(locations(&docs), ["d.xsd", "b.xsd", "c.xsd", "a.xsd"]);
    }

    #[test]
    fn locations_join_relative_to_referencing_document() {
        assert_eq!(join_location("schemas/a.xsd", "b.xsd"), "schemas/b.xsd");
        assert_eq!(join_location("schemas/a.xsd", "../c/b.xsd"), "c/b.xsd");
        assert_eq!(join_location("a.xsd", "./b.xsd"), "b.xsd");
        assert_eq!(join_location("/x/a.xsd", "b.xsd"), "/x/b.xsd");
        assert_eq!(join_location("x/a.xsd", "/abs/b.xsd"), "/abs/b.xsd");
    }
}
