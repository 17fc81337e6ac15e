#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xsecdb/document.hpp"
#include "xsecdb/policy.hpp"
#include "xsecdb/secure.hpp"

namespace xsecdb {

/// Command processor shared by the single-shot CLI and the REPL. Holds the
/// source document, the subject hierarchy, the rule store and at most one
/// open session. Writes run one at a time through this object.
///
/// Exit statuses: 0 full success, 1 usage/parse/state error, 2 a secured
/// write applied to some addressed nodes but not all, 3 a secured write
/// applied to none.
class Engine {
public:
  struct Result {
    int status = 0;
    std::string out;
    std::string err;
  };

  Result execute(const std::vector<std::string>& args);

  bool has_source() const noexcept { return source_.has_value(); }
  const Document& source() const;
  bool has_session() const noexcept { return session_.has_value(); }
  const std::string& session_user() const;

  static std::vector<std::string> tokenize(const std::string& line);

private:
  Result run(const std::vector<std::string>& args);

  Result cmd_load(const std::vector<std::string>& args);
  Result cmd_subjects(const std::vector<std::string>& args);
  Result cmd_policy(const std::vector<std::string>& args);
  Result cmd_login(const std::vector<std::string>& args);
  Result cmd_query(const std::vector<std::string>& args);
  Result cmd_view();
  Result cmd_perms(const std::vector<std::string>& args);
  Result cmd_secure_write(const std::vector<std::string>& args);
  Result cmd_save(const std::vector<std::string>& args);
  Result cmd_unsecured(const std::vector<std::string>& args);

  const Document& need_source() const;
  const Session& need_session() const;
  PermSet derive_session_perms() const;

  std::optional<Document> source_;
  std::optional<SubjectGraph> subjects_;
  std::vector<Rule> rules_;
  std::optional<Session> session_;
};

}  // namespace xsecdb
