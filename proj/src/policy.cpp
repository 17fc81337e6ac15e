#include "xsecdb/policy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "xsecdb/error.hpp"
#include "xsecdb/xpath.hpp"

namespace xsecdb {

std::string_view to_string(Privilege p) {
  switch (p) {
    case Privilege::Position: return "position";
    case Privilege::Read: return "read";
    case Privilege::Insert: return "insert";
    case Privilege::Update: return "update";
    case Privilege::Delete: return "delete";
  }
  return "?";
}

std::optional<Privilege> privilege_from_string(std::string_view name) {
  if (name == "position") return Privilege::Position;
  if (name == "read") return Privilege::Read;
  if (name == "insert") return Privilege::Insert;
  if (name == "update") return Privilege::Update;
  if (name == "delete") return Privilege::Delete;
  return std::nullopt;
}

void SubjectGraph::add_subject(const std::string& name) {
  if (name.empty()) throw Error("subject name must not be empty");
  subjects_.insert(name);
}

void SubjectGraph::add_edge(const std::string& child, const std::string& parent) {
  if (!declared(child)) throw Error("undeclared subject '" + child + "'");
  if (!declared(parent)) throw Error("undeclared subject '" + parent + "'");
  if (child == parent) throw Error("subject '" + child + "' cannot be its own parent");
  auto edge = std::make_pair(child, parent);
  if (std::find(edges_.begin(), edges_.end(), edge) == edges_.end())
    edges_.push_back(std::move(edge));
}

bool SubjectGraph::declared(const std::string& name) const {
  return subjects_.count(name) != 0;
}

bool SubjectGraph::is_leaf(const std::string& name) const {
  for (const auto& [child, parent] : edges_)
    if (parent == name) return false;
  return true;
}

std::vector<std::string> SubjectGraph::parents_of(const std::string& name) const {
  std::vector<std::string> out;
  for (const auto& [child, parent] : edges_)
    if (child == name) out.push_back(parent);
  return out;
}

namespace {

// Three-color depth-first search over the declared edges.
void check_acyclic(const SubjectGraph& graph) {
  std::map<std::string, int> color;  // 0 fresh, 1 on stack, 2 done
  for (const std::string& start : graph.subjects()) {
    if (color[start] != 0) continue;
    std::vector<std::pair<std::string, bool>> stack{{start, false}};
    while (!stack.empty()) {
      auto [name, leaving] = stack.back();
      stack.pop_back();
      if (leaving) {
        color[name] = 2;
        continue;
      }
      if (color[name] == 2) continue;
      if (color[name] == 1)
        throw Error("cycle in the subject hierarchy involving '" + name + "'");
      color[name] = 1;
      stack.push_back({name, true});
      for (const std::string& parent : graph.parents_of(name)) {
        if (color[parent] == 1)
          throw Error("cycle in the subject hierarchy involving '" + parent + "'");
        if (color[parent] == 0) stack.push_back({parent, false});
      }
    }
  }
}

}  // namespace

std::set<std::pair<std::string, std::string>> isa_closure(const SubjectGraph& graph) {
  check_acyclic(graph);
  std::set<std::pair<std::string, std::string>> closure;
  for (const std::string& subject : graph.subjects())
    for (const std::string& ancestor : ancestors_of(graph, subject))
      closure.insert({subject, ancestor});
  return closure;
}

std::set<std::string> ancestors_of(const SubjectGraph& graph,
                                   const std::string& subject) {
  if (!graph.declared(subject)) throw Error("undeclared subject '" + subject + "'");
  check_acyclic(graph);
  std::set<std::string> out;
  std::vector<std::string> stack{subject};
  while (!stack.empty()) {
    std::string name = stack.back();
    stack.pop_back();
    if (!out.insert(name).second) continue;
    for (const std::string& parent : graph.parents_of(name)) stack.push_back(parent);
  }
  return out;
}

Session open_session(const SubjectGraph& graph, const std::string& user) {
  if (!graph.declared(user)) throw Error("unknown subject '" + user + "'");
  if (!graph.is_leaf(user))
    throw Error("'" + user + "' is a role; sessions are opened by users only");
  return Session{user};
}

void PermSet::add(Privilege privilege, const NodeId& node) {
  granted_.insert({static_cast<int>(privilege), node});
}

bool PermSet::has(Privilege privilege, const NodeId& node) const {
  return granted_.count({static_cast<int>(privilege), node}) != 0;
}

std::vector<Perm> PermSet::all() const {
  std::vector<Perm> out;
  out.reserve(granted_.size());
  for (const auto& [privilege, node] : granted_)
    out.push_back({subject_, static_cast<Privilege>(privilege), node});
  return out;
}

PermSet derive_perms(const SubjectGraph& graph, const std::vector<Rule>& rules,
                     const Document& doc, const Session& session) {
  std::set<std::string> reachable = ancestors_of(graph, session.user);

  struct Mark {
    std::uint64_t timestamp;
    bool accept;
  };
  std::map<std::pair<int, NodeId>, std::vector<Mark>> marks;
  for (const Rule& rule : rules) {
    if (!reachable.count(rule.subject)) continue;
    PathExpr path;
    try {
      path = parse_xpath(rule.path, session.user);
    } catch (const Error& e) {
      throw Error("rule " + std::to_string(rule.timestamp) + ": " + e.what());
    }
    for (const NodeFact& fact : eval_xpath(path, doc))
      marks[{static_cast<int>(rule.privilege), fact.id}].push_back(
          {rule.timestamp, rule.sign == RuleSign::Accept});
  }

  PermSet perms(session.user);
  for (const auto& [key, entries] : marks) {
    // An accept survives iff no applicable deny is strictly later.
    for (const Mark& accept : entries) {
      if (!accept.accept) continue;
      bool blocked = false;
      for (const Mark& deny : entries) {
        if (!deny.accept && deny.timestamp > accept.timestamp) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        perms.add(static_cast<Privilege>(key.first), key.second);
        break;
      }
    }
  }
  return perms;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

// Strips comments and yields (line number, tokens) for non-empty lines.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tokens = split_ws(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == text.size()) break;
  }
}

[[noreturn]] void line_error(std::size_t line_no, const std::string& message) {
  throw Error("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

SubjectGraph load_subjects(std::string_view text) {
  SubjectGraph graph;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string>& t) {
    if (t[0] == "subject") {
      if (t.size() != 2) line_error(line_no, "expected 'subject NAME'");
      graph.add_subject(t[1]);
    } else if (t[0] == "isa") {
      if (t.size() != 3) line_error(line_no, "expected 'isa CHILD PARENT'");
      try {
        graph.add_edge(t[1], t[2]);
      } catch (const Error& e) {
        line_error(line_no, e.what());
      }
    } else {
      line_error(line_no, "unknown directive '" + t[0] + "'");
    }
  });
  isa_closure(graph);  // rejects cyclic declarations up front
  return graph;
}

std::vector<Rule> load_policy(std::string_view text, const SubjectGraph& graph) {
  std::vector<Rule> rules;
  std::set<std::uint64_t> seen;
  for_each_line(text, [&](std::size_t line_no, const std::vector<std::string>& t) {
    if (t.size() != 5)
      line_error(line_no, "expected 'TIMESTAMP accept|deny PRIVILEGE PATH SUBJECT'");
    Rule rule;
    try {
      std::size_t used = 0;
      unsigned long long ts = std::stoull(t[0], &used);
      if (used != t[0].size() || ts == 0) throw std::invalid_argument(t[0]);
      rule.timestamp = ts;
    } catch (const std::exception&) {
      line_error(line_no, "timestamp must be a positive integer, got '" + t[0] + "'");
    }
    if (!seen.insert(rule.timestamp).second)
      line_error(line_no, "duplicate timestamp " + t[0]);
    if (t[1] == "accept") rule.sign = RuleSign::Accept;
    else if (t[1] == "deny") rule.sign = RuleSign::Deny;
    else line_error(line_no, "expected accept or deny, got '" + t[1] + "'");
    auto privilege = privilege_from_string(t[2]);
    if (!privilege) line_error(line_no, "unknown privilege '" + t[2] + "'");
    rule.privilege = *privilege;
    rule.path = t[3];
    try {
      parse_xpath(rule.path, "_user_");  // syntax check with $USER bound
    } catch (const Error& e) {
      line_error(line_no, e.what());
    }
    if (!graph.declared(t[4])) line_error(line_no, "undeclared subject '" + t[4] + "'");
    rule.subject = t[4];
    rules.push_back(std::move(rule));
  });
  return rules;
}

}  // namespace xsecdb
