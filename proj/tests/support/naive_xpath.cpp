#include "naive_xpath.hpp"

using xsecdb::Axis;
using xsecdb::NodeId;
using xsecdb::NodeTest;
using xsecdb::PathExpr;
using xsecdb::Qualifier;

namespace testsupport {

FlatDoc::FlatDoc(const xsecdb::Document& doc) {
  for (const auto& [id, label] : doc.facts()) labels.emplace(id, label);
}

std::optional<NodeId> FlatDoc::parent(const NodeId& id) const {
  if (id.is_document()) return std::nullopt;
  if (id.is_root()) return NodeId::document();
  for (const auto& [candidate, label] : labels) {
    if (candidate.is_document()) continue;
    if (candidate.level() + 1 != id.level()) continue;
    if (candidate.local_code() == id.parent_code()) return candidate;
  }
  return std::nullopt;
}

bool FlatDoc::is_strict_ancestor(const NodeId& above, const NodeId& below) const {
  std::optional<NodeId> walk = parent(below);
  while (walk) {
    if (*walk == above) return true;
    walk = parent(*walk);
  }
  return false;
}

bool FlatDoc::precedes_as_sibling(const NodeId& a, const NodeId& b) const {
  if (a.is_document() || b.is_document()) return false;
  if (a.level() != b.level()) return false;
  if (a.parent_is_document() != b.parent_is_document()) return false;
  if (!a.parent_is_document() && !(a.parent_code() == b.parent_code())) return false;
  // cross multiplication on the raw components
  return a.local_code().num() * b.local_code().den() <
         b.local_code().num() * a.local_code().den();
}

namespace {

bool matches(const FlatDoc& doc, const NodeId& id, const NodeTest& test) {
  if (id.is_document()) return false;
  return test.any || doc.labels.at(id) == test.label;
}

bool axis_holds(const FlatDoc& doc, const std::set<NodeId>& from,
                const NodeId& candidate, Axis axis) {
  switch (axis) {
    case Axis::Child: {
      auto p = doc.parent(candidate);
      return p && from.count(*p) != 0;
    }
    case Axis::Descendant:
      for (const NodeId& source : from)
        if (doc.is_strict_ancestor(source, candidate)) return true;
      return false;
    case Axis::DescendantOrSelf:
      if (from.count(candidate)) return true;
      for (const NodeId& source : from)
        if (doc.is_strict_ancestor(source, candidate)) return true;
      return false;
  }
  return false;
}

std::set<NodeId> step_over(const FlatDoc& doc, const std::set<NodeId>& from,
                           Axis axis, const NodeTest& test) {
  std::set<NodeId> out;
  for (const auto& [candidate, label] : doc.labels)
    if (matches(doc, candidate, test) && axis_holds(doc, from, candidate, axis))
      out.insert(candidate);
  return out;
}

bool comparable(const FlatDoc& doc, const NodeId& a, const NodeId& b) {
  return a == b || doc.is_strict_ancestor(a, b) || doc.is_strict_ancestor(b, a);
}

}  // namespace

std::set<NodeId> naive_eval(const PathExpr& path, const FlatDoc& doc) {
  std::set<NodeId> current{NodeId::document()};
  for (const auto& step : path.steps) {
    std::set<NodeId> selected = step_over(doc, current, step.axis, step.test);
    for (const Qualifier& q : step.qualifiers) {
      std::set<NodeId> kept;
      if (q.kind == Qualifier::Kind::Position) {
        for (const NodeId& n : selected) {
          std::uint64_t rank = 1;
          for (const NodeId& m : selected)
            if (doc.precedes_as_sibling(m, n)) ++rank;
          if (rank == q.position) kept.insert(n);
        }
      } else {
        std::set<NodeId> witnesses = selected;
        for (const auto& rel : q.rel)
          witnesses = step_over(doc, witnesses, rel.axis, rel.test);
        for (const NodeId& n : selected)
          for (const NodeId& w : witnesses)
            if (comparable(doc, n, w)) {
              kept.insert(n);
              break;
            }
      }
      selected = kept;
    }
    current = selected;
  }
  return current;
}

}  // namespace testsupport
