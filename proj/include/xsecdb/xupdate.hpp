#pragma once

#include <string>

#include "xsecdb/document.hpp"
#include "xsecdb/label_tree.hpp"
#include "xsecdb/numbering.hpp"
#include "xsecdb/xpath.hpp"

namespace xsecdb {

enum class UpdateKind { Rename, Update, Append, InsertBefore, InsertAfter, Remove };

/// A structured modification command. new_label is meaningful for
/// rename/update, tree for the insert kinds.
struct UpdateOp {
  UpdateKind kind;
  PathExpr path;
  std::string new_label;
  LabelTree tree;
};

/// Relabels the addressed nodes; identifiers and geometry are untouched.
Document apply_rename(const Document& doc, const PathExpr& path,
                      const std::string& new_label);

/// Relabels every child of every addressed node.
Document apply_update(const Document& doc, const PathExpr& path,
                      const std::string& new_label);

/// Materializes one copy of `tree` per addressed node, as its last child
/// (append) or as its immediate preceding/following sibling subtree. Copies
/// are placed in document order of the addressed nodes; all existing
/// identifiers are preserved.
Document apply_insert(const Document& doc, Placement placement,
                      const PathExpr& path, const LabelTree& tree);

/// A fact survives iff it is not a descendant-or-self of any addressed node.
Document apply_remove(const Document& doc, const PathExpr& path);

Document apply_op(const Document& doc, const UpdateOp& op);

}  // namespace xsecdb
