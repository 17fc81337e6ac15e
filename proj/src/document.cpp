#include "xsecdb/document.hpp"

#include <algorithm>
#include <utility>

#include "xsecdb/error.hpp"

namespace xsecdb {

namespace {

const std::vector<NodeId>& empty_id_list() {
  static const std::vector<NodeId> empty;
  return empty;
}

// Binary search within one level's code-ordered node list.
const NodeId* find_by_code(const std::vector<NodeId>& level, const Rational& code) {
  auto it = std::lower_bound(level.begin(), level.end(), code,
                             [](const NodeId& id, const Rational& c) {
                               return id.local_code().compare(c) < 0;
                             });
  if (it != level.end() && it->local_code() == code) return &*it;
  return nullptr;
}

}  // namespace

Document::Document(std::vector<NodeFact> facts, DocRole role) : role_(role) {
  bool saw_document = false;
  std::uint32_t max_level = 0;
  bool any_levels = false;

  for (NodeFact& fact : facts) {
    if (fact.label.empty()) throw Error("node label must not be empty");
    if (fact.label.find('\n') != std::string::npos ||
        fact.label.find('\r') != std::string::npos)
      throw Error("node label must not contain line breaks");
    if (fact.id.is_document()) {
      if (fact.label != "/") throw Error("the document node must carry label '/'");
      saw_document = true;
    } else {
      max_level = std::max(max_level, fact.id.level());
      any_levels = true;
    }
    auto [it, inserted] = facts_.emplace(fact.id, std::move(fact.label));
    (void)it;
    if (!inserted) throw Error("duplicate identifier " + fact.id.str());
  }
  if (!saw_document) throw Error("no document node fact");

  levels_.resize(any_levels ? max_level + 1 : 0);
  for (const auto& [id, label] : facts_) {
    if (!id.is_document()) levels_[id.level()].push_back(id);
  }
  for (std::uint32_t level = 0; level < levels_.size(); ++level) {
    auto& nodes = levels_[level];
    std::sort(nodes.begin(), nodes.end(), [](const NodeId& a, const NodeId& b) {
      return a.local_code().compare(b.local_code()) < 0;
    });
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      if (nodes[i - 1].local_code() == nodes[i].local_code())
        throw Error("duplicate local code " + nodes[i].local_code().str() +
                    " at level " + std::to_string(level));
    }
  }
  if (!levels_.empty() && levels_[0].size() > 1)
    throw Error("more than one root element");

  // Parent closure; builds the child lists as a side effect.
  for (const auto& [id, label] : facts_) {
    if (id.is_document()) continue;
    if (id.is_root()) {
      children_[NodeId::document()].push_back(id);
      continue;
    }
    const std::uint32_t parent_level = id.level() - 1;
    const NodeId* parent = find_by_code(levels_[parent_level], id.parent_code());
    if (parent == nullptr)
      throw Error("dangling fact " + id.str() + ": no parent with code " +
                  id.parent_code().str() + " at level " +
                  std::to_string(parent_level));
    children_[*parent].push_back(id);
  }
  for (auto& [parent, kids] : children_) {
    std::sort(kids.begin(), kids.end(), [](const NodeId& a, const NodeId& b) {
      return a.local_code().compare(b.local_code()) < 0;
    });
  }
}

bool Document::contains(const NodeId& id) const { return facts_.count(id) != 0; }

const std::string* Document::find_label(const NodeId& id) const {
  auto it = facts_.find(id);
  return it == facts_.end() ? nullptr : &it->second;
}

const std::string& Document::label_of(const NodeId& id) const {
  const std::string* label = find_label(id);
  if (label == nullptr) throw Error("identifier not present: " + id.str());
  return *label;
}

const std::vector<NodeId>& Document::children(const NodeId& id) const {
  auto it = children_.find(id);
  return it == children_.end() ? empty_id_list() : it->second;
}

std::optional<NodeId> Document::parent_of(const NodeId& id) const {
  if (!contains(id)) throw Error("identifier not present: " + id.str());
  if (id.is_document()) return std::nullopt;
  if (id.is_root()) return NodeId::document();
  const NodeId* parent = find_by_code(levels_[id.level() - 1], id.parent_code());
  if (parent == nullptr) throw Error("dangling fact " + id.str());
  return *parent;
}

const std::vector<NodeId>& Document::level_nodes(std::uint32_t level) const {
  if (level >= levels_.size()) return empty_id_list();
  return levels_[level];
}

std::uint32_t Document::level_count() const noexcept {
  return static_cast<std::uint32_t>(levels_.size());
}

std::vector<NodeFact> Document::document_order() const {
  std::vector<NodeFact> out;
  out.reserve(facts_.size());
  std::vector<NodeId> stack{NodeId::document()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    out.push_back({id, facts_.at(id)});
    const auto& kids = children(id);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

Document with_relabeled(const Document& doc, const std::set<NodeId>& nodes,
                        const std::string& label) {
  std::vector<NodeFact> facts;
  facts.reserve(doc.size());
  for (const auto& [id, old_label] : doc.facts())
    facts.push_back({id, nodes.count(id) ? label : old_label});
  return Document(std::move(facts), doc.role());
}

Document with_added(const Document& doc, const std::vector<NodeFact>& added) {
  std::vector<NodeFact> facts;
  facts.reserve(doc.size() + added.size());
  for (const auto& [id, label] : doc.facts()) facts.push_back({id, label});
  facts.insert(facts.end(), added.begin(), added.end());
  return Document(std::move(facts), doc.role());
}

Document with_subtrees_removed(const Document& doc, const std::set<NodeId>& roots) {
  std::set<NodeId> dead;
  std::vector<NodeId> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (!dead.insert(id).second) continue;
    for (const NodeId& child : doc.children(id)) stack.push_back(child);
  }
  std::vector<NodeFact> facts;
  facts.reserve(doc.size());
  for (const auto& [id, label] : doc.facts())
    if (!dead.count(id)) facts.push_back({id, label});
  return Document(std::move(facts), doc.role());
}

std::string to_dump(const Document& doc) {
  std::string out;
  for (const NodeFact& fact : doc.document_order()) {
    out += fact.id.str();
    out += '\t';
    out += fact.label;
    out += '\n';
  }
  return out;
}

Document parse_dump(std::string_view text, DocRole role) {
  std::vector<NodeFact> facts;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw Error("dump line " + std::to_string(line_no) +
                  ": expected NodeId<TAB>label");
    facts.push_back({NodeId::parse(line.substr(0, tab)),
                     std::string(line.substr(tab + 1))});
  }
  return Document(std::move(facts), role);
}

}  // namespace xsecdb
