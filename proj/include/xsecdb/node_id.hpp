#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "xsecdb/rational.hpp"

namespace xsecdb {

/// Persistent node identifier: either the distinguished document node "/",
/// or (level, parent local code, own local code). The root element is the
/// single level-0 identifier (0, /, (1,1)); its parent marker "/" stands for
/// the document node. Identifiers never change once assigned, whatever later
/// updates do to the tree.
///
/// Textual form: "/" for the document node, "0:/:1/1" for the root element,
/// otherwise "level:np/dp:n/d" with decimal integers, e.g. "1:1/1:3/2".
class NodeId {
public:
  static NodeId document();
  static NodeId root();

  /// Constructs an ordinary identifier; level must be >= 1 (use root() for
  /// the level-0 slot).
  NodeId(std::uint32_t level, Rational parent_code, Rational local_code);

  bool is_document() const noexcept { return document_; }
  bool is_root() const noexcept { return !document_ && level_ == 0; }

  std::uint32_t level() const;          // Error on the document node
  bool parent_is_document() const;      // true exactly at level 0
  const Rational& parent_code() const;  // Error at level 0 and on the document node
  const Rational& local_code() const;   // Error on the document node

  std::string str() const;
  static NodeId parse(std::string_view text);

  friend bool operator==(const NodeId& a, const NodeId& b);
  friend bool operator!=(const NodeId& a, const NodeId& b) { return !(a == b); }
  friend bool operator<(const NodeId& a, const NodeId& b);

private:
  NodeId() = default;

  bool document_ = true;
  std::uint32_t level_ = 0;
  std::optional<Rational> parent_code_;  // empty at level 0 (the "/" marker)
  Rational local_code_;
};

}  // namespace xsecdb
