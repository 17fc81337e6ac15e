#include "xsecdb/node_id.hpp"

#include <utility>
#include <vector>

#include "xsecdb/error.hpp"

namespace xsecdb {

NodeId NodeId::document() { return NodeId(); }

NodeId NodeId::root() {
  NodeId id;
  id.document_ = false;
  id.level_ = 0;
  id.local_code_ = Rational::integer(1);
  return id;
}

NodeId::NodeId(std::uint32_t level, Rational parent_code, Rational local_code)
    : document_(false),
      level_(level),
      parent_code_(std::move(parent_code)),
      local_code_(std::move(local_code)) {
  if (level == 0)
    throw Error("level 0 is reserved for the root element; use NodeId::root()");
}

std::uint32_t NodeId::level() const {
  if (document_) throw Error("the document node has no level");
  return level_;
}

bool NodeId::parent_is_document() const {
  if (document_) throw Error("the document node has no parent");
  return level_ == 0;
}

const Rational& NodeId::parent_code() const {
  if (document_ || level_ == 0)
    throw Error("identifier " + str() + " has no parent code");
  return *parent_code_;
}

const Rational& NodeId::local_code() const {
  if (document_) throw Error("the document node has no local code");
  return local_code_;
}

std::string NodeId::str() const {
  if (document_) return "/";
  std::string out = std::to_string(level_);
  out += ':';
  out += level_ == 0 ? "/" : parent_code_->str();
  out += ':';
  out += local_code_.str();
  return out;
}

NodeId NodeId::parse(std::string_view text) {
  if (text == "/") return document();

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 3)
    throw Error("malformed identifier '" + std::string(text) +
                "', expected LEVEL:PARENT:LOCAL");

  std::uint32_t level = 0;
  {
    std::string_view digits = parts[0];
    if (digits.empty()) throw Error("malformed identifier level in '" + std::string(text) + "'");
    std::uint64_t value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9')
        throw Error("malformed identifier level in '" + std::string(text) + "'");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value > 0xffffffffULL)
        throw Error("identifier level out of range in '" + std::string(text) + "'");
    }
    level = static_cast<std::uint32_t>(value);
  }

  if (level == 0) {
    if (parts[1] != "/" || parts[2] != "1/1")
      throw Error("the level-0 identifier must be '0:/:1/1', got '" +
                  std::string(text) + "'");
    return root();
  }
  if (parts[1] == "/")
    throw Error("parent marker '/' is only legal at level 0: '" + std::string(text) + "'");
  return NodeId(level, Rational::parse(parts[1]), Rational::parse(parts[2]));
}

bool operator==(const NodeId& a, const NodeId& b) {
  if (a.document_ != b.document_) return false;
  if (a.document_) return true;
  if (a.level_ != b.level_) return false;
  if (a.local_code_ != b.local_code_) return false;
  if (a.level_ == 0) return true;
  return *a.parent_code_ == *b.parent_code_;
}

bool operator<(const NodeId& a, const NodeId& b) {
  if (a.document_ != b.document_) return a.document_;
  if (a.document_) return false;
  if (a.level_ != b.level_) return a.level_ < b.level_;
  int c = a.local_code_.compare(b.local_code_);
  if (c != 0) return c < 0;
  if (a.level_ == 0) return false;
  return a.parent_code_->compare(*b.parent_code_) < 0;
}

}  // namespace xsecdb
