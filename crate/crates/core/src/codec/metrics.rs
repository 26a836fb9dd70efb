use serde::{Deserialize, Serialize};

use super::instance::InstanceTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureMetrics {
    pub byte_size: usize,
    /// Elements, root included.
    pub node_count: usize,
    /// Attributes over all elements; namespace declarations are not attributes.
    pub attribute_count: usize,
    /// Nesting levels; a lone root element has depth 1.
    pub depth: usize,
}

/// Structure of `tree`; `serialized` is the rendering whose size is reported.
pub fn analyze_structure(tree: &InstanceTree, serialized: &[u8]) -> StructureMetrics {
    let mut m = StructureMetrics {
        byte_size: serialized.len(),
        node_count: 0,
        attribute_count: 0,
        depth: 0,
    };
    // Explicit stack so deep foreign content cannot overflow.
    let mut stack = vec![(tree, 1usize)];
    while let Some((t, level)) = stack.pop() {
        m.node_count += 1;
        m.attribute_count += t.attributes.len();
        m.depth = m.depth.max(level);
        stack.extend(t.children.iter().map(|c| (c, level + 1)));
    }
    m
}
