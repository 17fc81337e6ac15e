#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "xsecdb/node_id.hpp"

namespace xsecdb {

struct NodeFact {
  NodeId id;
  std::string label;

  friend bool operator==(const NodeFact& a, const NodeFact& b) {
    return a.id == b.id && a.label == b.label;
  }
};

enum class DocRole { Source, View };

/// One XML tree held as a set of (identifier, label) facts. Documents are
/// immutable values: every update operation builds a new Document, so
/// concurrent readers never need synchronization.
///
/// Construction validates the structural invariants: exactly one document
/// anchor labeled "/", at most one level-0 fact, local codes unique per
/// level, and a resolvable parent fact for every non-document fact.
class Document {
public:
  Document(std::vector<NodeFact> facts, DocRole role);

  DocRole role() const noexcept { return role_; }
  std::size_t size() const noexcept { return facts_.size(); }

  bool contains(const NodeId& id) const;
  const std::string* find_label(const NodeId& id) const;
  const std::string& label_of(const NodeId& id) const;  // Error if absent

  /// Children ordered by ascending local code; empty for leaves and for
  /// identifiers not present.
  const std::vector<NodeId>& children(const NodeId& id) const;

  /// The document node has no parent; the root element's parent is the
  /// document node.
  std::optional<NodeId> parent_of(const NodeId& id) const;

  /// All nodes of one level ordered by ascending local code, which is also
  /// their left-to-right document order.
  const std::vector<NodeId>& level_nodes(std::uint32_t level) const;
  std::uint32_t level_count() const noexcept;

  /// Depth-first preorder: document node first, siblings by local code.
  std::vector<NodeFact> document_order() const;

  const std::map<NodeId, std::string>& facts() const noexcept { return facts_; }

private:
  DocRole role_;
  std::map<NodeId, std::string> facts_;
  std::map<NodeId, std::vector<NodeId>> children_;
  std::vector<std::vector<NodeId>> levels_;
};

// Value helpers shared by the update machinery. Each returns a fresh
// document and re-runs the invariant checks.
Document with_relabeled(const Document& doc, const std::set<NodeId>& nodes,
                        const std::string& label);
Document with_added(const Document& doc, const std::vector<NodeFact>& added);
Document with_subtrees_removed(const Document& doc, const std::set<NodeId>& roots);

/// Dump format: one "NodeId<TAB>label" line per fact in document order; the
/// first line is always "/<TAB>/".
std::string to_dump(const Document& doc);
Document parse_dump(std::string_view text, DocRole role = DocRole::Source);

}  // namespace xsecdb
