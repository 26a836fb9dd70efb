//! The committed IDMEF bindings load codec output and reproduce it exactly.

use xsdminify::binding::emit::{emit_source, TemplateSet, OUTPUT_FILE};
use xsdminify::corpus;
use xsdminify::pipeline::Pipeline;

#[test]
fn committed_bindings_match_the_emitter() {
    let p = Pipeline::idmef().unwrap();
    let files = emit_source(p.manifest(), &TemplateSet::rust()).unwrap();
    assert_eq!(files.len(), 1);
    assert_eq!(files[0].0, OUTPUT_FILE);
    let committed = include_str!("../../idmef-bindings/src/generated.rs");
    assert!(
        files[0].1 == committed.as_bytes(),
        "crates/idmef-bindings/src/generated.rs is stale; regenerate it with the emit_bindings example"
    );
    assert_eq!(idmef_bindings::DICTIONARY_CHECKSUM, p.manifest().dictionary_checksum);
}

#[test]
fn heartbeat_round_trips_through_generated_types() {
    let codec = Pipeline::idmef().unwrap().codec;
    let tree = codec.parse(corpus::heartbeat().xml).unwrap();
    let wire = codec.to_min_json(&tree).unwrap();
    let doc = idmef_bindings::from_min_json(&wire).unwrap();
    let idmef_bindings::Document::IdmefMessage(msg) = &doc else {
        panic!("expected an IDMEF-Message root");
    };
    let hb = &msg.heartbeat()[0];
    assert_eq!(hb.messageid().as_deref(), Some("abc123456789"));
    assert_eq!(hb.analyzer().node().as_ref().unwrap().location().as_deref(), Some("Headquarters DMZ Network"));
    let again = idmef_bindings::to_min_json(&doc);
    assert_eq!(String::from_utf8(again.clone()).unwrap(), String::from_utf8(wire).unwrap());
    assert_eq!(codec.from_min_json(&again).unwrap(), tree);
}

#[test]
fn every_corpus_message_reserializes_byte_identically() {
    let codec = Pipeline::idmef().unwrap().codec;
    for m in corpus::MESSAGES.iter() {
        let wire = codec.to_min_json(&codec.parse(m.xml).unwrap()).unwrap();
        let doc = idmef_bindings::from_min_json(&wire).unwrap_or_else(|e| panic!("{}: {e}", m.title));
        assert_eq!(idmef_bindings::to_min_json(&doc), wire, "{}", m.title);
    }
}

#[test]
fn enum_constants_follow_declaration_order() {
    use idmef_bindings::Usercategory;
    assert_eq!(Usercategory::Unknown as u32, 0);
    assert_eq!(Usercategory::Application as u32, 1);
    assert_eq!(Usercategory::OsDevice as u32, 2);
    assert_eq!(Usercategory::OsDevice.readable(), "os-device");
    assert_eq!(serde_json::to_string(&Usercategory::OsDevice).unwrap(), "\"2\"");
}
