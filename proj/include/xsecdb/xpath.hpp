#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xsecdb/document.hpp"

namespace xsecdb {

enum class Axis { Child, Descendant, DescendantOrSelf };

struct NodeTest {
  bool any = false;
  std::string label;  // meaningful when !any
};

/// One step of a relative predicate path. Only child and descendant axes
/// are legal inside predicates.
struct RelStep {
  Axis axis = Axis::Child;
  NodeTest test;
};

struct Qualifier {
  enum class Kind { Path, Position };
  Kind kind = Kind::Path;
  std::vector<RelStep> rel;    // Kind::Path
  std::uint64_t position = 0;  // Kind::Position, 1-based
};

struct Step {
  Axis axis = Axis::Child;
  NodeTest test;
  std::vector<Qualifier> qualifiers;
};

/// Absolute path. An empty step list is the bare "/", which addresses the
/// document node and nothing else.
struct PathExpr {
  std::vector<Step> steps;
  bool root_only() const noexcept { return steps.empty(); }
};

/// Grammar: Path := "/" | ( "/" Step | "//" Step )+
///          Step := Test Qualifier*
///          Test := NAME | "*" | "descendant-or-self::*" | "$USER"
///          Qualifier := "[" RelPath "]" | "[" INTEGER "]"
///          RelPath := Test ( ("/" | "//") Test )*
/// "//" before a step selects the descendant axis; the test
/// "descendant-or-self::*" overrides the step axis to descendant-or-self.
/// "$USER" is replaced by the session user's name at parse time.
PathExpr parse_xpath(std::string_view src,
                     const std::optional<std::string>& user = std::nullopt);

/// Addressed nodes in document order, each id at most once.
using NodeSet = std::vector<NodeFact>;

NodeSet eval_xpath(const PathExpr& path, const Document& doc);

/// 1 + the number of preceding siblings of `node` that are addressed by
/// `path`. Error when `node` itself is not addressed.
std::uint64_t position(const PathExpr& path, const NodeId& node,
                       const Document& doc);

}  // namespace xsecdb
