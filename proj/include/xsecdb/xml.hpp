#pragma once

#include <string>
#include <string_view>

#include "xsecdb/document.hpp"
#include "xsecdb/label_tree.hpp"

namespace xsecdb {

/// Parses the simplified element/text markup into a label tree. No
/// attributes, processing instructions, comments or namespaces; whitespace-
/// only text runs are dropped, other runs are trimmed and become one leaf
/// per run.
LabelTree parse_xml_tree(std::string_view text);

/// parse_xml_tree followed by static numbering.
Document ingest_xml(std::string_view text);

/// Depth-first emission with siblings ordered by local code. A childless
/// node is emitted as text content when its label is not a legal element
/// name or when it is an only child; otherwise as an empty element. The
/// root element is always emitted as an element. Re-ingesting the output
/// reproduces the same geometry and labels (identifiers are reassigned by
/// static numbering).
std::string serialize_xml(const Document& doc);

/// The document's shape with identifiers stripped; children in code order.
LabelTree to_label_tree(const Document& doc);

}  // namespace xsecdb
