#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "xsecdb/document.hpp"
#include "xsecdb/label_tree.hpp"
#include "xsecdb/numbering.hpp"
#include "xsecdb/policy.hpp"
#include "xsecdb/xpath.hpp"

namespace xsecdb {

/// Reserved view label: the node exists but its label may not be seen.
inline constexpr std::string_view kRestrictedLabel = "RESTRICTED";

/// The pruned, possibly relabeled copy of the source document one session
/// user may see. Identifiers equal the source identifiers; a node appears
/// only if its parent appears.
struct View {
  Document doc;
  std::string owner;
};

/// Top-down selection: the document node is always present; a node whose
/// parent is present is kept with its source label under the read privilege,
/// kept as RESTRICTED under position-without-read, and pruned together with
/// its whole subtree otherwise.
View derive_view(const Document& source, const PermSet& perms,
                 const Session& session);

enum class WriteOutcome { Applied, Denied };

struct WriteEntry {
  NodeId node;
  WriteOutcome outcome;
  std::string reason;
};

/// Per-node outcome of one secured write plus the resulting source document.
/// Nodes invisible in the view are never addressed and never mentioned.
struct WriteReport {
  std::vector<WriteEntry> entries;
  Document result;

  std::size_t applied_count() const;
  std::size_t denied_count() const;
};

/// "APPLIED|DENIED <NodeId> <reason>" per entry, then a summary line.
std::string render(const WriteReport& report);

// Every secured operation evaluates its path on the view and applies the
// change to the source; identifiers shared between the two make the
// correspondence. Addressing the document node is an error for all of them.

WriteReport secure_rename(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          const PathExpr& path, const std::string& new_label);

WriteReport secure_update(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          const PathExpr& path, const std::string& new_label);

WriteReport secure_insert(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          Placement placement, const PathExpr& path,
                          const LabelTree& tree);

WriteReport secure_remove(const Document& source, const View& view,
                          const PermSet& perms, const Session& session,
                          const PathExpr& path);

}  // namespace xsecdb
