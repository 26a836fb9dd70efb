use std::collections::{HashMap, HashSet};

use super::model::*;
use super::parse::kind_label;
use super::resolve::{resolve_references, Loader};
use super::SchemaError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeId {
    /// A type from the XSD namespace; values are carried as strings.
    Builtin(String),
    Simple(usize),
    Complex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleTypeDef {
    pub name: Option<QualifiedName>,
    pub path: ComponentPath,
    pub base: QualifiedName,
    /// Allowed values in declaration order, when the type is an enumeration.
    pub values: Option<Vec<String>>,
    /// Values come from the base type rather than the type's own facets.
    pub values_inherited: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeDecl {
    pub name: String,
    pub type_id: TypeId,
    pub type_name: Option<QualifiedName>,
    pub required: bool,
    pub fixed: Option<String>,
    pub default: Option<String>,
    pub path: ComponentPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementDecl {
    pub name: QualifiedName,
    pub type_id: TypeId,
    pub type_name: Option<QualifiedName>,
    /// Occurrence bounds after folding in enclosing groups.
    pub occurs: Occurs,
    pub fixed: Option<String>,
    pub default: Option<String>,
    pub path: ComponentPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnyDecl {
    pub namespace: String,
    pub process_contents: String,
    pub occurs: Occurs,
    pub path: ComponentPath,
}

impl AnyDecl {
    /// Whether an element in namespace `ns` may appear under this wildcard of
    /// a schema with target namespace `target`.
    pub fn admits(&self, ns: &str, target: &str) -> bool {
        self.namespace.split_whitespace().any(|token| match token {
            "##any" => true,
            "##other" => !ns.is_empty() && ns != target,
            "##targetNamespace" => ns == target,
            "##local" => ns.is_empty(),
            uri => ns == uri,
        })
    }
}

/// Content model over member indices. `Element(i)` refers to
/// `ComplexTypeDef::elements[i]`; `Any` to the type's wildcard slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Particle {
    Element(usize, Occurs),
    Any(Occurs),
    Sequence(Vec<Particle>, Occurs),
    Choice(Vec<Particle>, Occurs),
}

impl Particle {
    pub fn occurs(&self) -> Occurs {
        match self {
            Particle::Element(_, o) | Particle::Any(o) | Particle::Sequence(_, o) | Particle::Choice(_, o) => *o,
        }
    }

    fn leaf_count(&self) -> usize {
        match self {
            Particle::Element(..) | Particle::Any(_) => 1,
            Particle::Sequence(items, _) | Particle::Choice(items, _) => items.iter().map(Particle::leaf_count).sum(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTypeDef {
    pub name: Option<QualifiedName>,
    pub namespace: String,
    pub path: ComponentPath,
    pub attributes: Vec<AttributeDecl>,
    /// Type of the character content, for simple-content types.
    pub text: Option<TypeId>,
    pub text_type_name: Option<QualifiedName>,
    pub text_path: Option<ComponentPath>,
    pub elements: Vec<ElementDecl>,
    pub any: Option<AnyDecl>,
    pub content: Option<Particle>,
}

impl ComplexTypeDef {
    /// Member index of the wildcard slot in canonical child order.
    pub fn any_index(&self) -> usize {
        self.elements.len()
    }

    pub fn element_index(&self, ns: &str, local: &str) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| e.name.local == local && e.name.namespace == ns)
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a.name == name)
    }
}

/// A resolved schema set: every type reference bound, content models
/// flattened into per-type member tables.
#[derive(Debug, Clone)]
pub struct CompiledSchema {
    pub documents: Vec<SchemaDocument>,
    pub target_namespace: String,
    pub simple_types: Vec<SimpleTypeDef>,
    pub complex_types: Vec<ComplexTypeDef>,
    pub global_elements: Vec<ElementDecl>,
    pub global_attributes: Vec<AttributeDecl>,
    named: HashMap<QualifiedName, TypeId>,
}

impl CompiledSchema {
    /// Resolves the references of `root` through `loader` and compiles the set.
    pub fn load(root: SchemaDocument, loader: &Loader<'_>) -> Result<Self, SchemaError> {
        Self::compile(resolve_references(root, loader)?)
    }

    /// Compiles documents in dependency-first order (root last).
    pub fn compile(documents: Vec<SchemaDocument>) -> Result<Self, SchemaError> {
        let target_namespace = documents
            .last()
            .map(|d| d.target_namespace.clone())
            .unwrap_or_default();
        check_unique_paths(&documents)?;

        // Pass 1: allocate type ids.
        let mut named = HashMap::new();
        let mut anon: HashMap<ComponentPath, TypeId> = HashMap::new();
        let mut n_simple = 0;
        let mut n_complex = 0;
        for d in &documents {
            d.walk(&mut |c| {
                let id = match c.kind {
                    ComponentKind::SimpleType => {
                        n_simple += 1;
                        TypeId::Simple(n_simple - 1)
                    }
                    ComponentKind::ComplexType => {
                        n_complex += 1;
                        TypeId::Complex(n_complex - 1)
                    }
                    _ => return,
                };
                match c.name() {
                    Some(n) => {
                        named.insert(QualifiedName::new(&d.target_namespace, n).expect("validated name"), id);
                    }
                    None => {
                        anon.insert(c.path.clone(), id);
                    }
                }
            });
        }

        let mut b = Builder {
            named: &named,
            anon: &anon,
            simple: Vec::with_capacity(n_simple),
            complex: Vec::with_capacity(n_complex),
            simple_bases: Vec::new(),
        };
        let mut global_elements = Vec::new();
        let mut global_attributes = Vec::new();
        for d in &documents {
            for c in &d.components {
                match c.kind {
                    ComponentKind::Element => {
                        global_elements.push(b.element(d, c, Occurs::ONE)?);
                    }
                    ComponentKind::Attribute => global_attributes.push(b.attribute(d, c)?),
                    _ => {}
                }
            }
            // Types are defined in pre-order so ids line up with pass 1.
            let mut types = Vec::new();
            d.walk(&mut |c| {
                if matches!(c.kind, ComponentKind::SimpleType | ComponentKind::ComplexType) {
                    types.push(c);
                }
            });
            for c in types {
                match c.kind {
                    ComponentKind::SimpleType => b.simple_type(d, c)?,
                    _ => b.complex_type(d, c)?,
                }
            }
        }
        b.inherit_enumerations()?;

        Ok(Self {
            documents,
            target_namespace,
            simple_types: b.simple,
            complex_types: b.complex,
            global_elements,
            global_attributes,
            named,
        })
    }

    pub fn named_type(&self, name: &QualifiedName) -> Option<&TypeId> {
        self.named.get(name)
    }

    pub fn global_element(&self, ns: &str, local: &str) -> Option<&ElementDecl> {
        self.global_elements
            .iter()
            .find(|e| e.name.local == local && e.name.namespace == ns)
    }

    pub fn complex(&self, i: usize) -> &ComplexTypeDef {
        &self.complex_types[i]
    }

    pub fn simple(&self, i: usize) -> &SimpleTypeDef {
        &self.simple_types[i]
    }

    /// Allowed values when `t` is an enumeration type.
    pub fn enum_values(&self, t: &TypeId) -> Option<&[String]> {
        match t {
            TypeId::Simple(i) => self.simple_types[*i].values.as_deref(),
            _ => None,
        }
    }

    /// All namespaces declared by the set, root namespace first.
    pub fn namespaces(&self) -> Vec<&str> {
        let mut out = vec![self.target_namespace.as_str()];
        for d in self.documents.iter().rev() {
            if !out.contains(&d.target_namespace.as_str()) {
                out.push(&d.target_namespace);
            }
        }
        out
    }
}

fn check_unique_paths(docs: &[SchemaDocument]) -> Result<(), SchemaError> {
    let mut seen = HashSet::new();
    for d in docs {
        let mut dup = None;
        d.walk(&mut |c| {
            if dup.is_none() && !seen.insert(c.path.clone()) {
                dup = Some(c);
            }
        });
        if let Some(c) = dup {
            return Err(SchemaError::DuplicateName {
                kind: kind_label(c.kind).into(),
                name: c.path.to_string(),
                location: d.location.clone(),
            });
        }
    }
    Ok(())
}

struct Builder<'a> {
    named: &'a HashMap<QualifiedName, TypeId>,
    anon: &'a HashMap<ComponentPath, TypeId>,
    simple: Vec<SimpleTypeDef>,
    complex: Vec<ComplexTypeDef>,
    /// Simple-type base references to resolve once all types are known.
    simple_bases: Vec<(usize, TypeId)>,
}

fn invalid(d: &SchemaDocument, c: &SchemaComponent, message: String) -> SchemaError {
    SchemaError::InvalidSchema {
        message,
        line: c.line,
        location: d.location.clone(),
    }
}

impl Builder<'_> {
    fn resolve(&self, d: &SchemaDocument, c: &SchemaComponent, q: &QualifiedName) -> Result<TypeId, SchemaError> {
        if q.is_builtin() {
            if matches!(q.local.as_str(), "anyType" | "anySimpleType") {
                return Err(SchemaError::UnsupportedConstruct {
                    construct: format!("xsd:{}", q.local),
                    line: c.line,
                    location: d.location.clone(),
                });
            }
            return Ok(TypeId::Builtin(q.local.clone()));
        }
        self.named.get(q).cloned().ok_or_else(|| SchemaError::UnresolvedReference {
            kind: "type".into(),
            name: q.to_string(),
            location: d.location.clone(),
        })
    }

    /// Type of an element or attribute: named reference or inline anonymous type.
    fn declared_type(&self, d: &SchemaDocument, c: &SchemaComponent) -> Result<TypeId, SchemaError> {
        match &c.type_ref {
            Some(q) => self.resolve(d, c, q),
            None => {
                let inline = c
                    .children
                    .iter()
                    .find(|k| matches!(k.kind, ComponentKind::ComplexType | ComponentKind::SimpleType))
                    .ok_or_else(|| invalid(d, c, "declaration without a type".into()))?;
                Ok(self.anon[&inline.path].clone())
            }
        }
    }

    fn element(&self, d: &SchemaDocument, c: &SchemaComponent, occurs: Occurs) -> Result<ElementDecl, SchemaError> {
        Ok(ElementDecl {
            name: QualifiedName::new(&d.target_namespace, c.name().unwrap_or_default())?,
            type_id: self.declared_type(d, c)?,
            type_name: c.type_ref.clone(),
            occurs,
            fixed: c.fixed.clone(),
            default: c.default.clone(),
            path: c.path.clone(),
        })
    }

    fn attribute(&self, d: &SchemaDocument, c: &SchemaComponent) -> Result<AttributeDecl, SchemaError> {
        let type_id = self.declared_type(d, c)?;
        if matches!(type_id, TypeId::Complex(_)) {
            return Err(invalid(d, c, "attribute type must be simple".into()));
        }
        Ok(AttributeDecl {
            name: c.name().unwrap_or_default().to_string(),
            type_id,
            type_name: c.type_ref.clone(),
            required: c.occurs.min >= 1,
            fixed: c.fixed.clone(),
            default: c.default.clone(),
            path: c.path.clone(),
        })
    }

    fn simple_type(&mut self, d: &SchemaDocument, c: &SchemaComponent) -> Result<(), SchemaError> {
        let restriction = &c.children[0];
        let base = restriction.type_ref.clone().expect("restriction has a base");
        let base_id = self.resolve(d, restriction, &base)?;
        if matches!(base_id, TypeId::Complex(_)) {
            return Err(invalid(d, restriction, "simple type restricts a complex type".into()));
        }
        let facets: Vec<String> = restriction
            .children
            .iter()
            .filter_map(|f| f.name_or_value.clone())
            .collect();
        let mut seen = HashSet::new();
        for v in &facets {
            if !seen.insert(v) {
                return Err(SchemaError::DuplicateName {
                    kind: "enumeration".into(),
                    name: v.clone(),
                    location: d.location.clone(),
                });
            }
        }
        let index = self.simple.len();
        if facets.is_empty() {
            self.simple_bases.push((index, base_id));
        }
        self.simple.push(SimpleTypeDef {
            name: c.name().map(|n| QualifiedName::new(&d.target_namespace, n)).transpose()?,
            path: c.path.clone(),
            base,
            values: (!facets.is_empty()).then_some(facets),
            values_inherited: false,
        });
        Ok(())
    }

    /// A facet-free restriction of an enumeration keeps the base's values.
    fn inherit_enumerations(&mut self) -> Result<(), SchemaError> {
        for _ in 0..=self.simple.len() {
            let mut changed = false;
            for (i, base) in &self.simple_bases {
                if let TypeId::Simple(b) = base {
                    if self.simple[*i].values.is_none() && self.simple[*b].values.is_some() {
                        self.simple[*i].values = self.simple[*b].values.clone();
                        self.simple[*i].values_inherited = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
        Ok(())
    }

    fn complex_type(&mut self, d: &SchemaDocument, c: &SchemaComponent) -> Result<(), SchemaError> {
        let mut def = ComplexTypeDef {
            name: c.name().map(|n| QualifiedName::new(&d.target_namespace, n)).transpose()?,
            namespace: d.target_namespace.clone(),
            path: c.path.clone(),
            attributes: Vec::new(),
            text: None,
            text_type_name: None,
            text_path: None,
            elements: Vec::new(),
            any: None,
            content: None,
        };
        for child in &c.children {
            match child.kind {
                ComponentKind::Attribute => def.attributes.push(self.attribute(d, child)?),
                ComponentKind::SimpleContent => {
                    let ext = &child.children[0];
                    let base = ext.type_ref.as_ref().expect("extension has a base");
                    let base_id = self.resolve(d, ext, base)?;
                    if matches!(base_id, TypeId::Complex(_)) {
                        return Err(SchemaError::UnsupportedConstruct {
                            construct: "simpleContent extension of a complex type".into(),
                            line: ext.line,
                            location: d.location.clone(),
                        });
                    }
                    def.text = Some(base_id);
                    def.text_type_name = Some(base.clone());
                    def.text_path = Some(child.path.clone());
                    for a in &ext.children {
                        def.attributes.push(self.attribute(d, a)?);
                    }
                }
                ComponentKind::Sequence | ComponentKind::Choice => {
                    let p = self.particle(d, child, &mut def, Occurs::ONE, false)?;
                    check_orderable(d, child, &p)?;
                    def.content = Some(p);
                }
                _ => {}
            }
        }
        check_member_names(d, &def)?;
        self.complex.push(def);
        Ok(())
    }

    /// Builds the particle tree, appending element declarations with their
    /// effective occurrence bounds (`outer` folded in) to `def.elements`.
    fn particle(
        &self,
        d: &SchemaDocument,
        c: &SchemaComponent,
        def: &mut ComplexTypeDef,
        outer: Occurs,
        in_choice: bool,
    ) -> Result<Particle, SchemaError> {
        let effective = Occurs {
            min: if in_choice { 0 } else { outer.min.saturating_mul(c.occurs.min) },
            max: match (outer.max, c.occurs.max) {
                (MaxOccurs::Bounded(a), MaxOccurs::Bounded(b)) => MaxOccurs::Bounded(a.saturating_mul(b)),
                (MaxOccurs::Bounded(0), _) | (_, MaxOccurs::Bounded(0)) => MaxOccurs::Bounded(0),
                _ => MaxOccurs::Unbounded,
            },
        };
        match c.kind {
            ComponentKind::Element => {
                let decl = self.element(d, c, effective)?;
                def.elements.push(decl);
                Ok(Particle::Element(def.elements.len() - 1, c.occurs))
            }
            ComponentKind::Any => {
                if def.any.is_some() {
                    return Err(SchemaError::UnsupportedConstruct {
                        construct: "more than one xsd:any in a type".into(),
                        line: c.line,
                        location: d.location.clone(),
                    });
                }
                def.any = Some(AnyDecl {
                    namespace: c.any_namespace.clone().unwrap_or_else(|| "##any".into()),
                    process_contents: c.process_contents.clone().unwrap_or_else(|| "strict".into()),
                    occurs: effective,
                    path: c.path.clone(),
                });
                Ok(Particle::Any(c.occurs))
            }
            ComponentKind::Sequence | ComponentKind::Choice => {
                let is_choice = c.kind == ComponentKind::Choice && c.children.len() > 1;
                let mut items = Vec::new();
                for k in &c.children {
                    items.push(self.particle(d, k, def, effective, is_choice)?);
                }
                Ok(if c.kind == ComponentKind::Sequence {
                    Particle::Sequence(items, c.occurs)
                } else {
                    Particle::Choice(items, c.occurs)
                })
            }
            _ => Err(invalid(d, c, "unexpected component in content model".into())),
        }
    }
}

/// Instances are stored with children grouped by member, so a repeated
/// group must not carry an ordering between different members.
fn check_orderable(d: &SchemaDocument, c: &SchemaComponent, p: &Particle) -> Result<(), SchemaError> {
    let repeated = p.occurs().is_repeated();
    match p {
        Particle::Sequence(items, _) => {
            if repeated && p.leaf_count() > 1 {
                return Err(SchemaError::UnsupportedConstruct {
                    construct: "repeated sequence with more than one member".into(),
                    line: c.line,
                    location: d.location.clone(),
                });
            }
            items.iter().try_for_each(|i| check_orderable(d, c, i))
        }
        Particle::Choice(items, _) => {
            if repeated && items.iter().any(|i| i.leaf_count() > 1) {
                return Err(SchemaError::UnsupportedConstruct {
                    construct: "repeated choice with a multi-member alternative".into(),
                    line: c.line,
                    location: d.location.clone(),
                });
            }
            items.iter().try_for_each(|i| check_orderable(d, c, i))
        }
        _ => Ok(()),
    }
}

/// Attributes, the text slot ("value"), child elements and the wildcard
/// ("any") share one member namespace in JSON.
fn check_member_names(d: &SchemaDocument, def: &ComplexTypeDef) -> Result<(), SchemaError> {
    let mut seen = HashSet::new();
    let names = def
        .attributes
        .iter()
        .map(|a| ("attribute", a.name.as_str()))
        .chain(def.text.iter().map(|_| ("text content", "value")))
        .chain(def.elements.iter().map(|e| ("element", e.name.local.as_str())))
        .chain(def.any.iter().map(|_| ("wildcard", "any")));
    for (kind, name) in names {
        if !seen.insert(name) {
            return Err(SchemaError::DuplicateName {
                kind: kind.into(),
                name: format!("{name} in {}", def.path),
                location: d.location.clone(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::parse_schema;
    use super::*;

    fn compile(body: &str) -> Result<CompiledSchema, SchemaError> {
        let xsd = format!(
            r#"<xsd:schema xmlns:xsd="http://www.w3.org/2001/XMLSchema" xmlns:t="urn:t" targetNamespace="urn:t" elementFormDefault="qualified">{body}</xsd:schema>"#
        );
        CompiledSchema::compile(vec![parse_schema(xsd.as_bytes(), "t.xsd")?])
    }

    #[test]
    fn idmef_compiles() {
        let s = crate::corpus::idmef_schema().unwrap();
        let msg = s.global_element("http://iana.org/idmef", "IDMEF-Message").unwrap();
        let TypeId::Complex(i) = msg.type_id else { panic!() };
        let t = s.complex(i);
        assert_eq!(t.attributes[0].name, "version");
        assert_eq!(t.elements.len(), 2);
        // members of a repeated choice inherit its bounds
        assert_eq!(t.elements[1].occurs, Occurs { min: 0, max: MaxOccurs::Unbounded });
    }

    #[test]
    fn effective_occurs_fold_through_groups() {
        let s = compile(
            r#"<xsd:complexType name="T"><xsd:sequence>
                 <xsd:element name="a" type="xsd:string"/>
                 <xsd:choice><xsd:element name="b" type="xsd:string"/><xsd:element name="c" type="xsd:string"/></xsd:choice>
                 <xsd:sequence minOccurs="0" maxOccurs="3"><xsd:element name="d" type="xsd:string" maxOccurs="2"/></xsd:sequence>
               </xsd:sequence></xsd:complexType>"#,
        )
        .unwrap();
        let t = &s.complex_types[0];
        let occ: Vec<_> = t.elements.iter().map(|e| e.occurs).collect();
        assert_eq!(occ[0], Occurs::ONE);
        assert_eq!(occ[1], Occurs::OPTIONAL);
        assert_eq!(occ[2], Occurs::OPTIONAL);
        assert_eq!(occ[3], Occurs { min: 0, max: MaxOccurs::Bounded(6) });
    }

    #[test]
    fn unresolved_type_is_reported() {
        assert!(matches!(
            compile(r#"<xsd:element name="a" type="t:Missing"/>"#),
            Err(SchemaError::UnresolvedReference { .. })
        ));
    }

    #[test]
    fn member_name_clash_is_rejected() {
        let r = compile(
            r#"<xsd:complexType name="T"><xsd:sequence><xsd:element name="x" type="xsd:string"/></xsd:sequence><xsd:attribute name="x"/></xsd:complexType>"#,
        );
        assert!(matches!(r, Err(SchemaError::DuplicateName { .. })), "{r:?}");
    }

    #[test]
    fn order_dependent_repetition_is_rejected() {
        let r = compile(
            r#"<xsd:complexType name="T"><xsd:sequence maxOccurs="unbounded"><xsd:element name="x" type="xsd:string"/><xsd:element name="y" type="xsd:string"/></xsd:sequence></xsd:complexType>"#,
        );
        assert!(matches!(r, Err(SchemaError::UnsupportedConstruct { .. })), "{r:?}");
    }

    #[test]
    fn wildcard_namespace_tokens() {
        let any = |ns: &str| AnyDecl {
            namespace: ns.into(),
            process_contents: "skip".into(),
            occurs: Occurs::ONE,
            path: ComponentPath::default(),
        };
        assert!(any("##other").admits("urn:x", "urn:t"));
        assert!(!any("##other").admits("urn:t", "urn:t"));
        assert!(!any("##other").admits("", "urn:t"));
        assert!(any("##local urn:y").admits("urn:y", "urn:t"));
        assert!(any("##any").admits("", "urn:t"));
    }

    #[test]
    fn facet_free_restriction_inherits_values() {
        let s = compile(
            r#"<xsd:simpleType name="B"><xsd:restriction base="t:A"/></xsd:simpleType>
               <xsd:simpleType name="A"><xsd:restriction base="xsd:string"><xsd:enumeration value="x"/><xsd:enumeration value="y"/></xsd:restriction></xsd:simpleType>"#,
        )
        .unwrap();
        assert_eq!(s.simple_types[0].values.as_deref(), Some(&["x".to_string(), "y".to_string()][..]));
    }
}
