#include "xsecdb/secure.hpp"

#include <set>

#include "xsecdb/error.hpp"

namespace xsecdb {

namespace {

void check_session(const View& view, const PermSet& perms, const Session& session) {
  if (view.owner != session.user || perms.subject() != session.user)
    throw Error("view/permission set does not belong to the session user");
}

NodeSet addressed_on_view(const PathExpr& path, const View& view) {
  NodeSet addressed = eval_xpath(path, view.doc);
  for (const NodeFact& fact : addressed)
    if (fact.id.is_document())
      throw Error("the path addresses the document node");
  return addressed;
}

}  // namespace

View derive_view(const Document& source, const PermSet& perms,
                 const Session& session) {
  if (perms.subject() != session.user)
    throw Error("permission set does not belong to the session user");

  std::vector<NodeFact> facts{{NodeId::document(), "/"}};
  std::vector<NodeId> stack(source.children(NodeId::document()));
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (perms.has(Privilege::Read, id)) {
      facts.push_back({id, source.label_of(id)});
    } else if (perms.has(Privilege::Position, id)) {
      facts.push_back({id, std::string(kRestrictedLabel)});
    } else {
      continue;  // prune the whole subtree
    }
    for (const NodeId& child : source.children(id)) stack.push_back(child);
  }
  return View{Document(std::move(facts), DocRole::View), session.user};
}

std::size_t WriteReport::applied_count() const {
  std::size_t n = 0;
  for (const WriteEntry& e : entries)
    if (e.outcome == WriteOutcome::Applied) ++n;
  return n;
}

std::size_t WriteReport::denied_count() const {
  return entries.size() - applied_count();
}

std::string render(const WriteReport& report) {
  std::string out;
  for (const WriteEntry& e : report.entries) {
    out += e.outcome == WriteOutcome::Applied ? "APPLIED " : "DENIED ";
    out += e.node.str();
    out += ' ';
    out += e.reason;
    out += '\n';
  }
  out += "RESULT: " + std::to_string(report.applied_count()) + " applied, " +
         std::to_string(report.denied_count()) + " denied\n";
  return out;
}

WriteReport secure_rename(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          const PathExpr& path, const std::string& new_label) {
  check_session(view, perms, session);
  NodeSet addressed = addressed_on_view(path, view);

  std::vector<WriteEntry> entries;
  std::set<NodeId> apply;
  for (const NodeFact& fact : addressed) {
    if (!perms.has(Privilege::Update, fact.id)) {
      entries.push_back({fact.id, WriteOutcome::Denied, "update privilege missing"});
    } else if (!perms.has(Privilege::Read, fact.id)) {
      // The view shows this node as RESTRICTED; renaming would overwrite a
      // label the user may not see.
      entries.push_back({fact.id, WriteOutcome::Denied,
                         "read privilege missing (label is RESTRICTED)"});
    } else {
      entries.push_back({fact.id, WriteOutcome::Applied, "renamed"});
      apply.insert(fact.id);
    }
  }
  return WriteReport{std::move(entries), with_relabeled(source, apply, new_label)};
}

WriteReport secure_update(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          const PathExpr& path, const std::string& new_label) {
  check_session(view, perms, session);
  NodeSet addressed = addressed_on_view(path, view);

  std::vector<WriteEntry> entries;
  std::set<NodeId> apply;
  for (const NodeFact& fact : addressed) {
    // children through the view: invisible children are not addressed
    for (const NodeId& child : view.doc.children(fact.id)) {
      if (!perms.has(Privilege::Update, child)) {
        entries.push_back({child, WriteOutcome::Denied, "update privilege missing"});
      } else if (!perms.has(Privilege::Read, child)) {
        entries.push_back({child, WriteOutcome::Denied, "read privilege missing"});
      } else {
        entries.push_back({child, WriteOutcome::Applied, "updated"});
        apply.insert(child);
      }
    }
  }
  return WriteReport{std::move(entries), with_relabeled(source, apply, new_label)};
}

WriteReport secure_insert(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          Placement placement, const PathExpr& path,
                          const LabelTree& tree) {
  check_session(view, perms, session);
  NodeSet addressed = addressed_on_view(path, view);
  const bool sibling = placement != Placement::Append;
  for (const NodeFact& fact : addressed)
    if (sibling && fact.id.is_root())
      throw Error("the root element admits no siblings");

  std::vector<PreorderEntry> shape = preorder_entries(tree);
  std::vector<WriteEntry> entries;
  Document current = source;
  for (const NodeFact& fact : addressed) {
    bool permitted;
    if (!sibling) {
      permitted = perms.has(Privilege::Insert, fact.id);
    } else {
      auto parent = view.doc.parent_of(fact.id);
      permitted = parent && perms.has(Privilege::Insert, *parent);
    }
    if (!permitted) {
      entries.push_back({fact.id, WriteOutcome::Denied,
                         sibling ? "insert privilege missing on the parent"
                                 : "insert privilege missing"});
      continue;
    }
    std::vector<NodeId> ids = create_number(current, {fact.id, placement}, tree);
    std::vector<NodeFact> fresh;
    fresh.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      fresh.push_back({ids[i], shape[i].node->label});
    current = with_added(current, fresh);
    entries.push_back({fact.id, WriteOutcome::Applied, "inserted"});
  }
  return WriteReport{std::move(entries), std::move(current)};
}

WriteReport secure_remove(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          const PathExpr& path) {
  check_session(view, perms, session);
  NodeSet addressed = addressed_on_view(path, view);

  std::vector<WriteEntry> entries;
  std::set<NodeId> roots;
  for (const NodeFact& fact : addressed) {
    if (!perms.has(Privilege::Delete, fact.id)) {
      entries.push_back({fact.id, WriteOutcome::Denied, "delete privilege missing"});
      continue;
    }
    // the whole source subtree goes, including nodes invisible in the view
    entries.push_back({fact.id, WriteOutcome::Applied, "removed"});
    roots.insert(fact.id);
  }
  return WriteReport{std::move(entries), with_subtrees_removed(source, roots)};
}

}  // namespace xsecdb
