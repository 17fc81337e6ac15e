#include "xsecdb/xpath.hpp"

#include <cctype>
#include <set>

#include "xsecdb/error.hpp"
#include "xsecdb/geometry.hpp"

namespace xsecdb {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '-';
}

struct Cursor {
  std::string_view src;
  std::size_t pos = 0;
  const std::optional<std::string>* user;

  bool done() const { return pos >= src.size(); }
  char peek() const { return pos < src.size() ? src[pos] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
};

std::string read_name(Cursor& c) {
  if (!is_name_start(c.peek())) throw ParseError("expected a node test", c.pos);
  std::size_t start = c.pos;
  while (is_name_char(c.peek())) ++c.pos;
  return std::string(c.src.substr(start, c.pos - start));
}

// Test := NAME | "*" | "$USER" | "descendant-or-self::*" (top level only).
// Sets dos_axis when the descendant-or-self form was consumed.
NodeTest read_test(Cursor& c, bool allow_axis_form, bool* dos_axis) {
  if (dos_axis) *dos_axis = false;
  if (c.eat('*')) return {true, {}};
  if (c.peek() == '$') {
    if (c.src.substr(c.pos, 5) != "$USER")
      throw ParseError("unknown variable, only $USER is supported", c.pos);
    if (!c.user->has_value())
      throw ParseError("$USER requires a session user", c.pos);
    c.pos += 5;
    return {false, **c.user};
  }
  std::size_t name_pos = c.pos;
  std::string name = read_name(c);
  if (c.peek() == ':' && c.pos + 1 < c.src.size() && c.src[c.pos + 1] == ':') {
    if (!allow_axis_form)
      throw ParseError("axis steps are not allowed inside predicates", name_pos);
    if (name != "descendant-or-self")
      throw ParseError("unsupported axis '" + name + "'", name_pos);
    c.pos += 2;
    if (!c.eat('*'))
      throw ParseError("expected '*' after 'descendant-or-self::'", c.pos);
    if (dos_axis) *dos_axis = true;
    return {true, {}};
  }
  return {false, std::move(name)};
}

Qualifier read_qualifier(Cursor& c) {
  Qualifier q;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    std::size_t start = c.pos;
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(c.peek() - '0');
      ++c.pos;
    }
    if (value < 1)
      throw ParseError("positional predicate must be at least 1", start);
    q.kind = Qualifier::Kind::Position;
    q.position = value;
  } else {
    q.kind = Qualifier::Kind::Path;
    q.rel.push_back({Axis::Child, read_test(c, false, nullptr)});
    while (c.peek() == '/') {
      ++c.pos;
      Axis axis = Axis::Child;
      if (c.eat('/')) axis = Axis::Descendant;
      q.rel.push_back({axis, read_test(c, false, nullptr)});
    }
  }
  if (!c.eat(']')) throw ParseError("expected ']'", c.pos);
  return q;
}

}  // namespace

PathExpr parse_xpath(std::string_view src, const std::optional<std::string>& user) {
  if (src.empty()) throw ParseError("empty path", 0);
  if (src == "/") return {};

  Cursor c{src, 0, &user};
  PathExpr out;
  while (!c.done()) {
    if (!c.eat('/')) throw ParseError("expected '/'", c.pos);
    bool descendant = c.eat('/');
    if (c.done()) throw ParseError("trailing '/'", c.pos);

    Step step;
    bool dos_axis = false;
    step.test = read_test(c, true, &dos_axis);
    step.axis = dos_axis ? Axis::DescendantOrSelf
                         : (descendant ? Axis::Descendant : Axis::Child);
    while (c.eat('[')) step.qualifiers.push_back(read_qualifier(c));
    out.steps.push_back(std::move(step));
  }
  return out;
}

namespace {

using IdSet = std::set<NodeId>;

void collect_descendants(const Document& doc, const NodeId& from, IdSet& out) {
  std::vector<NodeId> stack(doc.children(from));
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (!out.insert(id).second) continue;
    for (const NodeId& child : doc.children(id)) stack.push_back(child);
  }
}

IdSet axis_from(const Document& doc, const IdSet& from, Axis axis) {
  IdSet out;
  switch (axis) {
    case Axis::Child:
      for (const NodeId& n : from)
        for (const NodeId& child : doc.children(n)) out.insert(child);
      break;
    case Axis::Descendant:
      for (const NodeId& n : from) collect_descendants(doc, n, out);
      break;
    case Axis::DescendantOrSelf:
      out = from;
      for (const NodeId& n : from) collect_descendants(doc, n, out);
      break;
  }
  return out;
}

// Only the bare "/" ever addresses the document node, so every node test
// rejects it.
bool test_matches(const Document& doc, const NodeId& id, const NodeTest& test) {
  if (id.is_document()) return false;
  return test.any || doc.label_of(id) == test.label;
}

IdSet apply_test(const Document& doc, const IdSet& candidates, const NodeTest& test) {
  IdSet out;
  for (const NodeId& id : candidates)
    if (test_matches(doc, id, test)) out.insert(id);
  return out;
}

IdSet eval_rel(const Document& doc, const IdSet& from,
               const std::vector<RelStep>& rel) {
  IdSet current = from;
  for (const RelStep& step : rel)
    current = apply_test(doc, axis_from(doc, current, step.axis), step.test);
  return current;
}

std::uint64_t sibling_rank(const Geometry& geometry, const NodeId& node,
                           const IdSet& addressed) {
  std::uint64_t preceding = 0;
  for (const NodeId& other : addressed)
    if (geometry.is_preceding_sibling(other, node)) ++preceding;
  return preceding + 1;
}

IdSet eval_ids(const PathExpr& path, const Document& doc) {
  Geometry geometry(doc);
  IdSet current{NodeId::document()};
  for (const Step& step : path.steps) {
    IdSet next = apply_test(doc, axis_from(doc, current, step.axis), step.test);
    for (const Qualifier& q : step.qualifiers) {
      if (q.kind == Qualifier::Kind::Position) {
        IdSet kept;
        for (const NodeId& n : next)
          if (sibling_rank(geometry, n, next) == q.position) kept.insert(n);
        next = kept;
      } else {
        // A node survives the predicate when it shares a root path with
        // some node addressed by the extended path: either the witness lies
        // in its subtree or the node lies in the witness's subtree.
        IdSet witnesses = eval_rel(doc, next, q.rel);
        IdSet kept;
        for (const NodeId& n : next) {
          for (const NodeId& w : witnesses) {
            if (geometry.is_descendant_or_self(w, n) ||
                geometry.is_descendant_or_self(n, w)) {
              kept.insert(n);
              break;
            }
          }
        }
        next = kept;
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

NodeSet eval_xpath(const PathExpr& path, const Document& doc) {
  IdSet ids = eval_ids(path, doc);
  NodeSet out;
  out.reserve(ids.size());
  for (const NodeFact& fact : doc.document_order())
    if (ids.count(fact.id)) out.push_back(fact);
  return out;
}

std::uint64_t position(const PathExpr& path, const NodeId& node,
                       const Document& doc) {
  IdSet ids = eval_ids(path, doc);
  if (!ids.count(node))
    throw Error("node " + node.str() + " is not addressed by the path");
  return sibling_rank(Geometry(doc), node, ids);
}

}  // namespace xsecdb
