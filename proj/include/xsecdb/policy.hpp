#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xsecdb/document.hpp"

namespace xsecdb {

enum class Privilege { Position, Read, Insert, Update, Delete };

std::string_view to_string(Privilege p);
std::optional<Privilege> privilege_from_string(std::string_view name);

enum class RuleSign { Accept, Deny };

/// One policy rule. The path is stored unparsed because it may contain the
/// $USER token, which binds to the session user at derivation time. The
/// timestamp is the rule's priority: later rules beat earlier ones.
struct Rule {
  RuleSign sign;
  Privilege privilege;
  std::string path;
  std::string subject;
  std::uint64_t timestamp;
};

/// Subject names plus declared isa edges (child subject, parent subject).
/// Declared edges must form a DAG; users are the leaves.
class SubjectGraph {
public:
  void add_subject(const std::string& name);
  void add_edge(const std::string& child, const std::string& parent);

  bool declared(const std::string& name) const;
  bool is_leaf(const std::string& name) const;  // never a parent of anything

  const std::set<std::string>& subjects() const noexcept { return subjects_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const noexcept {
    return edges_;
  }
  /// Direct parents of one subject.
  std::vector<std::string> parents_of(const std::string& name) const;

private:
  std::set<std::string> subjects_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

/// Reflexive-transitive closure of the declared isa edges. Error when the
/// declared edges contain a cycle.
std::set<std::pair<std::string, std::string>> isa_closure(const SubjectGraph& graph);

/// All s' with isa(subject, s'), including subject itself.
std::set<std::string> ancestors_of(const SubjectGraph& graph,
                                   const std::string& subject);

struct Session {
  std::string user;
};

/// Validates that `user` is declared and is a leaf (sessions are for users,
/// not roles).
Session open_session(const SubjectGraph& graph, const std::string& user);

struct Perm {
  std::string subject;
  Privilege privilege;
  NodeId node;
};

/// The concrete privileges one session user holds, indexed for lookup.
class PermSet {
public:
  explicit PermSet(std::string subject) : subject_(std::move(subject)) {}

  void add(Privilege privilege, const NodeId& node);
  bool has(Privilege privilege, const NodeId& node) const;

  const std::string& subject() const noexcept { return subject_; }
  std::vector<Perm> all() const;  // sorted by privilege, then identifier

private:
  std::string subject_;
  std::set<std::pair<int, NodeId>> granted_;
};

/// Closed-world permission derivation for the session user over the source
/// document: an accept rule yields Perm(user, r, n) unless some applicable
/// deny rule with a strictly greater timestamp also covers (r, n).
PermSet derive_perms(const SubjectGraph& graph, const std::vector<Rule>& rules,
                     const Document& doc, const Session& session);

/// Subjects file: lines "subject NAME" and "isa CHILD PARENT".
/// '#' starts a comment.
SubjectGraph load_subjects(std::string_view text);

/// Policy file: lines "TIMESTAMP accept|deny PRIVILEGE PATH SUBJECT";
/// '#' starts a comment. Timestamps must be positive and unique, subjects
/// declared, and paths syntactically valid.
std::vector<Rule> load_policy(std::string_view text, const SubjectGraph& graph);

}  // namespace xsecdb
