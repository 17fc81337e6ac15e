#pragma once

#include "xsecdb/document.hpp"

namespace xsecdb {

/// Tree-geometry relations decided from identifiers alone, given that both
/// nodes exist in the document. The child and preceding-sibling relations
/// read the level/parent-code/local-code components directly; descendant is
/// the transitive closure of child and descendant-or-self its reflexive
/// closure.
class Geometry {
public:
  explicit Geometry(const Document& doc) : doc_(&doc) {}

  bool is_child(const NodeId& x, const NodeId& y) const;
  bool is_preceding_sibling(const NodeId& x, const NodeId& y) const;
  bool is_immediate_preceding_sibling(const NodeId& x, const NodeId& y) const;
  bool is_descendant(const NodeId& x, const NodeId& y) const;
  bool is_descendant_or_self(const NodeId& x, const NodeId& y) const;

private:
  void require(const NodeId& id) const;
  static bool same_parent(const NodeId& a, const NodeId& b);

  const Document* doc_;
};

}  // namespace xsecdb
