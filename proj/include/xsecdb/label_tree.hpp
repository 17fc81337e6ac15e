#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace xsecdb {

/// Ordered tree of labels with no identifiers yet: the shape handed to the
/// numbering routines by document ingestion and by the insert operations.
struct LabelTree {
  std::string label;
  std::vector<LabelTree> children;

  friend bool operator==(const LabelTree&, const LabelTree&) = default;
};

inline std::size_t tree_size(const LabelTree& tree) {
  std::size_t n = 1;
  for (const LabelTree& child : tree.children) n += tree_size(child);
  return n;
}

/// Preorder walk, flattened. parent is an index into the returned vector,
/// or npos for the tree root. depth is relative to the root.
struct PreorderEntry {
  const LabelTree* node;
  std::size_t parent;
  std::uint32_t depth;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline std::vector<PreorderEntry> preorder_entries(const LabelTree& tree) {
  std::vector<PreorderEntry> out;
  struct Frame {
    const LabelTree* node;
    std::size_t parent;
    std::uint32_t depth;
  };
  std::vector<Frame> stack{{&tree, PreorderEntry::npos, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    std::size_t index = out.size();
    out.push_back({f.node, f.parent, f.depth});
    for (auto it = f.node->children.rbegin(); it != f.node->children.rend(); ++it)
      stack.push_back({&*it, index, f.depth + 1});
  }
  return out;
}

}  // namespace xsecdb
