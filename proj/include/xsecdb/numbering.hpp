#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xsecdb/document.hpp"
#include "xsecdb/label_tree.hpp"
#include "xsecdb/rational.hpp"

namespace xsecdb {

enum class Placement { Append, InsertBefore, InsertAfter };

struct InsertPoint {
  NodeId target;
  Placement placement;
};

struct CodeAllocation {
  std::uint32_t level;
  std::vector<Rational> codes;  // strictly increasing, lowest terms
};

/// New local codes for `count` nodes entering one level between the existing
/// adjacent codes `lower` and `upper` (either may be absent at an edge):
///   - level empty: 1, 2, ..., count
///   - only upper u: u-count, ..., u-1
///   - only lower l: l+1, ..., l+count
///   - both: evenly spaced interior points l + k*(u-l)/(count+1); for a
///     single node this is the plain midpoint.
CodeAllocation allocate_codes(std::uint32_t level,
                              const std::optional<Rational>& lower,
                              const std::optional<Rational>& upper,
                              std::size_t count);

/// Assigns identifiers to a fresh tree: the document node gets "/", the root
/// element (0, /, (1,1)), and every other node at level l the local code
/// (i, 1) where i is its 1-based left-to-right position among all nodes of
/// level l.
Document static_number(const LabelTree& root);
Document static_number(std::span<const LabelTree> roots);  // exactly one root

/// Identifiers for every node of `subtree` placed at `point`, in preorder.
/// Existing identifiers are never touched; new codes come from
/// allocate_codes against the level neighbors in document order.
std::vector<NodeId> create_number(const Document& doc, const InsertPoint& point,
                                  const LabelTree& subtree);

}  // namespace xsecdb
