#include "xsecdb/xml.hpp"

#include <cctype>

#include "xsecdb/error.hpp"
#include "xsecdb/numbering.hpp"

namespace xsecdb {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
         c == '-';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool valid_element_name(std::string_view name) {
  if (name.empty() || !is_name_start(name.front())) return false;
  for (char c : name)
    if (!is_name_char(c)) return false;
  return true;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char peek_at(std::size_t offset) const {
    return pos + offset < text.size() ? text[pos + offset] : '\0';
  }
  void skip_space() {
    while (!done() && is_space(peek())) ++pos;
  }
};

std::string read_name(Cursor& c) {
  if (c.done() || !is_name_start(c.peek()))
    throw ParseError("expected a name", c.pos);
  std::size_t start = c.pos;
  while (!c.done() && is_name_char(c.peek())) ++c.pos;
  return std::string(c.text.substr(start, c.pos - start));
}

// Trims outer whitespace and flattens line breaks so labels stay one-line.
std::string normalize_text(std::string_view run) {
  std::size_t begin = 0, end = run.size();
  while (begin < end && is_space(run[begin])) ++begin;
  while (end > begin && is_space(run[end - 1])) --end;
  std::string out(run.substr(begin, end - begin));
  for (char& c : out)
    if (c == '\n' || c == '\r') c = ' ';
  return out;
}

LabelTree parse_element(Cursor& c) {
  // caller guarantees we sit on '<' followed by a name character
  ++c.pos;
  LabelTree element{read_name(c), {}};
  c.skip_space();
  if (c.done()) throw ParseError("unterminated start tag", c.pos);
  if (is_name_start(c.peek()))
    throw ParseError("attributes are not supported", c.pos);
  if (c.peek() == '/') {
    ++c.pos;
    if (c.done() || c.peek() != '>')
      throw ParseError("expected '>' after '/'", c.pos);
    ++c.pos;
    return element;
  }
  if (c.peek() != '>') throw ParseError("malformed start tag", c.pos);
  ++c.pos;

  for (;;) {
    std::size_t text_start = c.pos;
    while (!c.done() && c.peek() != '<') ++c.pos;
    std::string run =
        normalize_text(c.text.substr(text_start, c.pos - text_start));
    if (!run.empty()) element.children.push_back({run, {}});
    if (c.done())
      throw ParseError("missing closing tag for <" + element.label + ">", c.pos);

    if (c.peek_at(1) == '/') {
      c.pos += 2;
      std::string closing = read_name(c);
      if (closing != element.label)
        throw ParseError("closing tag </" + closing + "> does not match <" +
                             element.label + ">",
                         c.pos);
      c.skip_space();
      if (c.done() || c.peek() != '>')
        throw ParseError("malformed closing tag", c.pos);
      ++c.pos;
      return element;
    }
    if (c.peek_at(1) == '?')
      throw ParseError("processing instructions are not supported", c.pos);
    if (c.peek_at(1) == '!')
      throw ParseError("comments and declarations are not supported", c.pos);
    if (!is_name_start(c.peek_at(1)))
      throw ParseError("malformed markup", c.pos);
    element.children.push_back(parse_element(c));
  }
}

}  // namespace

LabelTree parse_xml_tree(std::string_view text) {
  Cursor c{text};
  c.skip_space();
  if (c.done()) throw ParseError("empty document", c.pos);
  if (c.peek() != '<') throw ParseError("expected '<'", c.pos);
  if (c.peek_at(1) == '?')
    throw ParseError("processing instructions are not supported", c.pos);
  if (c.peek_at(1) == '!')
    throw ParseError("comments and declarations are not supported", c.pos);

  LabelTree root = parse_element(c);
  c.skip_space();
  if (!c.done()) {
    if (c.peek() == '<')
      throw ParseError("more than one root element", c.pos);
    throw ParseError("stray content after the root element", c.pos);
  }
  return root;
}

Document ingest_xml(std::string_view text) {
  return static_number(parse_xml_tree(text));
}

namespace {

void emit_node(const Document& doc, const NodeId& id, bool only_child,
               int depth, std::string& out) {
  const std::string& label = doc.label_of(id);
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  const auto& kids = doc.children(id);

  if (kids.empty() && !id.is_root()) {
    if (!valid_element_name(label) || only_child) {
      if (label.find('<') != std::string::npos)
        throw Error("label cannot be emitted as text: " + label);
      out += indent;
      out += label;
      out += '\n';
      return;
    }
    out += indent + "<" + label + "/>\n";
    return;
  }

  if (!valid_element_name(label))
    throw Error("label is not a legal element name: " + label);
  if (kids.empty()) {
    out += indent + "<" + label + "/>\n";
    return;
  }
  // single text-form leaf child goes inline
  if (kids.size() == 1 && doc.children(kids[0]).empty()) {
    const std::string& inner = doc.label_of(kids[0]);
    if (inner.find('<') != std::string::npos)
      throw Error("label cannot be emitted as text: " + inner);
    out += indent + "<" + label + ">" + inner + "</" + label + ">\n";
    return;
  }
  out += indent + "<" + label + ">\n";
  for (const NodeId& child : kids)
    emit_node(doc, child, kids.size() == 1, depth + 1, out);
  out += indent + "</" + label + ">\n";
}

}  // namespace

std::string serialize_xml(const Document& doc) {
  const auto& roots = doc.children(NodeId::document());
  if (roots.empty()) return "";
  std::string out;
  emit_node(doc, roots.front(), false, 0, out);
  return out;
}

namespace {

LabelTree subtree_of(const Document& doc, const NodeId& id) {
  LabelTree out{doc.label_of(id), {}};
  for (const NodeId& child : doc.children(id))
    out.children.push_back(subtree_of(doc, child));
  return out;
}

}  // namespace

LabelTree to_label_tree(const Document& doc) {
  const auto& roots = doc.children(NodeId::document());
  if (roots.empty()) throw Error("document has no root element");
  return subtree_of(doc, roots.front());
}

}  // namespace xsecdb
