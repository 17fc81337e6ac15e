#include "xsecdb/geometry.hpp"

#include "xsecdb/error.hpp"

namespace xsecdb {

void Geometry::require(const NodeId& id) const {
  if (!doc_->contains(id)) throw Error("identifier not present: " + id.str());
}

bool Geometry::same_parent(const NodeId& a, const NodeId& b) {
  if (a.parent_is_document() || b.parent_is_document())
    return a.parent_is_document() && b.parent_is_document();
  return a.parent_code() == b.parent_code();
}

bool Geometry::is_child(const NodeId& x, const NodeId& y) const {
  require(x);
  require(y);
  if (x.is_document()) return false;
  if (x.is_root()) return y.is_document();
  if (y.is_document()) return false;
  return x.level() == y.level() + 1 && x.parent_code() == y.local_code();
}

bool Geometry::is_preceding_sibling(const NodeId& x, const NodeId& y) const {
  require(x);
  require(y);
  if (x.is_document() || y.is_document()) return false;
  if (x.level() != y.level()) return false;
  if (!same_parent(x, y)) return false;
  return x.local_code() < y.local_code();
}

bool Geometry::is_immediate_preceding_sibling(const NodeId& x, const NodeId& y) const {
  if (!is_preceding_sibling(x, y)) return false;
  for (const NodeId& z : doc_->level_nodes(x.level())) {
    if (!same_parent(z, x)) continue;
    if (x.local_code() < z.local_code() && z.local_code() < y.local_code())
      return false;
  }
  return true;
}

bool Geometry::is_descendant(const NodeId& x, const NodeId& y) const {
  require(x);
  require(y);
  if (x.is_document()) return false;
  if (y.is_document()) return true;  // every other node hangs below "/"
  if (x.level() <= y.level()) return false;
  NodeId current = x;
  while (!current.is_document()) {
    auto parent = doc_->parent_of(current);
    if (!parent) break;
    if (*parent == y) return true;
    current = *parent;
  }
  return false;
}

bool Geometry::is_descendant_or_self(const NodeId& x, const NodeId& y) const {
  if (x == y) {
    require(x);
    return true;
  }
  return is_descendant(x, y);
}

}  // namespace xsecdb
