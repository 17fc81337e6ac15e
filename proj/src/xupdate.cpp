#include "xsecdb/xupdate.hpp"

#include <set>

#include "xsecdb/error.hpp"

namespace xsecdb {

namespace {

std::set<NodeId> addressed_ids(const PathExpr& path, const Document& doc) {
  std::set<NodeId> ids;
  for (const NodeFact& fact : eval_xpath(path, doc)) ids.insert(fact.id);
  return ids;
}

}  // namespace

Document apply_rename(const Document& doc, const PathExpr& path,
                      const std::string& new_label) {
  std::set<NodeId> targets = addressed_ids(path, doc);
  if (targets.count(NodeId::document()))
    throw Error("cannot rename the document node: its label '/' is structural");
  return with_relabeled(doc, targets, new_label);
}

Document apply_update(const Document& doc, const PathExpr& path,
                      const std::string& new_label) {
  std::set<NodeId> children;
  for (const NodeFact& fact : eval_xpath(path, doc))
    for (const NodeId& child : doc.children(fact.id)) children.insert(child);
  return with_relabeled(doc, children, new_label);
}

Document apply_insert(const Document& doc, Placement placement,
                      const PathExpr& path, const LabelTree& tree) {
  NodeSet addressed = eval_xpath(path, doc);
  const bool sibling = placement != Placement::Append;
  for (const NodeFact& fact : addressed) {
    if (sibling && fact.id.is_document())
      throw Error("the document node admits no siblings");
    if (sibling && fact.id.is_root())
      throw Error("the root element admits no siblings");
  }

  std::vector<PreorderEntry> shape = preorder_entries(tree);
  Document current = doc;
  for (const NodeFact& fact : addressed) {  // document order
    std::vector<NodeId> ids =
        create_number(current, {fact.id, placement}, tree);
    std::vector<NodeFact> fresh;
    fresh.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      fresh.push_back({ids[i], shape[i].node->label});
    current = with_added(current, fresh);
  }
  return current;
}

Document apply_remove(const Document& doc, const PathExpr& path) {
  std::set<NodeId> targets = addressed_ids(path, doc);
  if (targets.count(NodeId::document()))
    throw Error("cannot remove the document node");
  return with_subtrees_removed(doc, targets);
}

Document apply_op(const Document& doc, const UpdateOp& op) {
  switch (op.kind) {
    case UpdateKind::Rename:
      return apply_rename(doc, op.path, op.new_label);
    case UpdateKind::Update:
      return apply_update(doc, op.path, op.new_label);
    case UpdateKind::Append:
      return apply_insert(doc, Placement::Append, op.path, op.tree);
    case UpdateKind::InsertBefore:
      return apply_insert(doc, Placement::InsertBefore, op.path, op.tree);
    case UpdateKind::InsertAfter:
      return apply_insert(doc, Placement::InsertAfter, op.path, op.tree);
    case UpdateKind::Remove:
      return apply_remove(doc, op.path);
  }
  throw Error("unknown update kind");
}

}  // namespace xsecdb
