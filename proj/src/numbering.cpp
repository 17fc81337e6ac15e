#include "xsecdb/numbering.hpp"

#include <map>
#include <utility>

#include "xsecdb/error.hpp"
#include "xsecdb/geometry.hpp"

namespace xsecdb {

CodeAllocation allocate_codes(std::uint32_t level,
                              const std::optional<Rational>& lower,
                              const std::optional<Rational>& upper,
                              std::size_t count) {
  if (count == 0) throw Error("code allocation requires at least one slot");
  if (lower && upper && !(*lower < *upper))
    throw Error("allocation bounds out of order: " + lower->str() +
                " !< " + upper->str());

  CodeAllocation out{level, {}};
  out.codes.reserve(count);
  if (!lower && !upper) {
    for (std::size_t k = 1; k <= count; ++k)
      out.codes.push_back(Rational::integer(k));
  } else if (!lower) {
    for (std::size_t k = 0; k < count; ++k)
      out.codes.push_back(*upper - Rational::integer(count - k));
  } else if (!upper) {
    for (std::size_t k = 1; k <= count; ++k)
      out.codes.push_back(*lower + Rational::integer(k));
  } else {
    // Evenly spaced interior points; the Rational constructor's reduction is
    // the midpoint rule's highest-common-factor division.
    Rational gap = *upper - *lower;
    for (std::size_t k = 1; k <= count; ++k)
      out.codes.push_back(*lower + gap * Rational(BigInt(k), BigInt(count + 1)));
  }
  return out;
}

Document static_number(const LabelTree& root) {
  std::vector<NodeFact> facts;
  facts.push_back({NodeId::document(), "/"});

  std::vector<std::uint64_t> counters;
  struct Frame {
    const LabelTree* node;
    std::uint32_t level;
    Rational parent_code;  // ignored at level 0
  };
  std::vector<Frame> stack{{&root, 0, Rational()}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (counters.size() <= f.level) counters.resize(f.level + 1, 0);
    std::uint64_t position = ++counters[f.level];
    NodeId id = f.level == 0
                    ? NodeId::root()
                    : NodeId(f.level, f.parent_code, Rational::integer(position));
    facts.push_back({id, f.node->label});
    for (auto it = f.node->children.rbegin(); it != f.node->children.rend(); ++it)
      stack.push_back({&*it, f.level + 1, id.local_code()});
  }
  return Document(std::move(facts), DocRole::Source);
}

Document static_number(std::span<const LabelTree> roots) {
  if (roots.empty()) throw Error("empty document: no root element");
  if (roots.size() > 1) throw Error("more than one root element");
  return static_number(roots.front());
}

std::vector<NodeId> create_number(const Document& doc, const InsertPoint& point,
                                  const LabelTree& subtree) {
  const NodeId& target = point.target;
  if (!doc.contains(target))
    throw Error("insert target not present: " + target.str());
  const bool sibling = point.placement != Placement::Append;
  if (sibling && target.is_document())
    throw Error("the document node admits no siblings");
  if (sibling && target.is_root())
    throw Error("the root element admits no siblings");
  if (!sibling && target.is_document() &&
      !doc.children(NodeId::document()).empty())
    throw Error("appending under the document node requires a document "
                "without a root element");

  const std::uint32_t base_level =
      sibling ? target.level() : (target.is_document() ? 0u : target.level() + 1);
  std::vector<PreorderEntry> incoming = preorder_entries(subtree);

  // The insertion cut in the existing depth-first order: the whole incoming
  // subtree lands at one position, so at every level its nodes form one
  // contiguous run between the nearest existing codes on each side.
  std::vector<NodeFact> order = doc.document_order();
  std::size_t target_pos = 0;
  while (order[target_pos].id != target) ++target_pos;
  std::size_t cut;
  if (point.placement == Placement::InsertBefore) {
    cut = target_pos;
  } else {
    Geometry geometry(doc);
    cut = target_pos + 1;
    while (cut < order.size() && geometry.is_descendant(order[cut].id, target))
      ++cut;
  }

  std::map<std::uint32_t, std::vector<std::size_t>> runs;  // level -> preorder indices
  for (std::size_t i = 0; i < incoming.size(); ++i)
    runs[base_level + incoming[i].depth].push_back(i);

  std::vector<Rational> codes(incoming.size());
  for (const auto& [level, indices] : runs) {
    std::optional<Rational> lower, upper;
    for (std::size_t i = cut; i-- > 0;) {
      const NodeId& id = order[i].id;
      if (!id.is_document() && id.level() == level) {
        lower = id.local_code();
        break;
      }
    }
    for (std::size_t i = cut; i < order.size(); ++i) {
      const NodeId& id = order[i].id;
      if (!id.is_document() && id.level() == level) {
        upper = id.local_code();
        break;
      }
    }
    CodeAllocation alloc = allocate_codes(level, lower, upper, indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k)
      codes[indices[k]] = alloc.codes[k];
  }

  std::vector<NodeId> ids;
  ids.reserve(incoming.size());
  for (std::size_t i = 0; i < incoming.size(); ++i) {
    const std::uint32_t level = base_level + incoming[i].depth;
    if (level == 0) {
      if (codes[i] != Rational::integer(1))
        throw Error("level-0 allocation must yield (1,1)");
      ids.push_back(NodeId::root());
      continue;
    }
    Rational parent_code;
    if (incoming[i].parent != PreorderEntry::npos) {
      parent_code = ids[incoming[i].parent].local_code();
    } else if (!sibling) {
      // target is the parent; a document-node target was handled by the
      // level-0 branch above.
      parent_code = target.local_code();
    } else {
      parent_code = target.parent_code();
    }
    ids.push_back(NodeId(level, std::move(parent_code), codes[i]));
  }
  return ids;
}

}  // namespace xsecdb
