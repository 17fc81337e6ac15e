#include "xsecdb/engine.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "xsecdb/error.hpp"
#include "xsecdb/xml.hpp"
#include "xsecdb/xupdate.hpp"

namespace xsecdb {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

// Splits "cmd --flag value positional" argument lists; every token starting
// with "--" takes the following token as its value.
struct Args {
  std::map<std::string, std::string> flags;
  std::vector<std::string> positional;
};

Args split_args(const std::vector<std::string>& args, std::size_t from) {
  Args out;
  for (std::size_t i = from; i < args.size(); ++i) {
    if (args[i].rfind("--", 0) == 0) {
      if (i + 1 >= args.size()) throw Error("flag " + args[i] + " needs a value");
      out.flags[args[i]] = args[i + 1];
      ++i;
    } else {
      out.positional.push_back(args[i]);
    }
  }
  return out;
}

int write_status(const WriteReport& report) {
  std::size_t applied = report.applied_count();
  std::size_t denied = report.denied_count();
  if (applied > 0 && denied == 0) return 0;
  if (applied > 0) return 2;
  return 3;
}

}  // namespace

std::vector<std::string> Engine::tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  bool quoted = false;
  bool have = false;
  for (char c : line) {
    if (quoted) {
      if (c == '"') quoted = false;
      else current += c;
      continue;
    }
    if (c == '"') {
      quoted = true;
      have = true;
    } else if (c == ' ' || c == '\t') {
      if (have) {
        out.push_back(current);
        current.clear();
        have = false;
      }
    } else {
      current += c;
      have = true;
    }
  }
  if (quoted) throw Error("unterminated quote");
  if (have) out.push_back(current);
  return out;
}

const Document& Engine::source() const { return need_source(); }

const std::string& Engine::session_user() const { return need_session().user; }

const Document& Engine::need_source() const {
  if (!source_) throw Error("no database loaded");
  return *source_;
}

const Session& Engine::need_session() const {
  if (!session_) throw Error("no session");
  return *session_;
}

PermSet Engine::derive_session_perms() const {
  const Session& session = need_session();
  return derive_perms(*subjects_, rules_, need_source(), session);
}

Engine::Result Engine::execute(const std::vector<std::string>& args) {
  try {
    return run(args);
  } catch (const Error& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

Engine::Result Engine::run(const std::vector<std::string>& args) {
  if (args.empty()) throw Error("no command given");
  const std::string& cmd = args[0];
  if (cmd == "load") return cmd_load(args);
  if (cmd == "subjects") return cmd_subjects(args);
  if (cmd == "policy") return cmd_policy(args);
  if (cmd == "login") return cmd_login(args);
  if (cmd == "query") return cmd_query(args);
  if (cmd == "view") return cmd_view();
  if (cmd == "perms") return cmd_perms(args);
  if (cmd == "rename" || cmd == "update" || cmd == "append" ||
      cmd == "insert-before" || cmd == "insert-after" || cmd == "remove")
    return cmd_secure_write(args);
  if (cmd == "save") return cmd_save(args);
  if (cmd == "unsecured") return cmd_unsecured(args);
  throw Error("unknown command '" + cmd + "'");
}

Engine::Result Engine::cmd_load(const std::vector<std::string>& args) {
  Args a = split_args(args, 1);
  auto xml = a.flags.find("--xml");
  auto db = a.flags.find("--db");
  if (!a.positional.empty() || (xml == a.flags.end()) == (db == a.flags.end()))
    throw Error("usage: load --xml FILE | --db FILE");
  if (xml != a.flags.end())
    source_ = ingest_xml(read_file(xml->second));
  else
    source_ = parse_dump(read_file(db->second));
  return {0, "loaded " + std::to_string(source_->size()) + " facts\n", ""};
}

Engine::Result Engine::cmd_subjects(const std::vector<std::string>& args) {
  Args a = split_args(args, 1);
  auto file = a.flags.find("--file");
  if (!a.positional.empty() || file == a.flags.end())
    throw Error("usage: subjects --file FILE");
  subjects_ = load_subjects(read_file(file->second));
  return {0,
          "loaded " + std::to_string(subjects_->subjects().size()) +
              " subjects, " + std::to_string(subjects_->edges().size()) +
              " isa edges\n",
          ""};
}

Engine::Result Engine::cmd_policy(const std::vector<std::string>& args) {
  Args a = split_args(args, 1);
  auto file = a.flags.find("--file");
  if (!a.positional.empty() || file == a.flags.end())
    throw Error("usage: policy --file FILE");
  if (!subjects_) throw Error("load subjects before the policy");
  rules_ = load_policy(read_file(file->second), *subjects_);
  return {0, "loaded " + std::to_string(rules_.size()) + " rules\n", ""};
}

Engine::Result Engine::cmd_login(const std::vector<std::string>& args) {
  if (args.size() != 2) throw Error("usage: login USER");
  if (!subjects_) throw Error("load subjects before opening a session");
  session_ = open_session(*subjects_, args[1]);
  return {0, "session user: " + session_->user + "\n", ""};
}

Engine::Result Engine::cmd_query(const std::vector<std::string>& args) {
  if (args.size() != 2) throw Error("usage: query PATH");
  const Session& session = need_session();
  PathExpr path = parse_xpath(args[1], session.user);
  View view = derive_view(need_source(), derive_session_perms(), session);
  std::string out;
  for (const NodeFact& fact : eval_xpath(path, view.doc))
    out += fact.id.str() + "\t" + fact.label + "\n";
  return {0, out, ""};
}

Engine::Result Engine::cmd_view() {
  const Session& session = need_session();
  View view = derive_view(need_source(), derive_session_perms(), session);
  return {0, to_dump(view.doc), ""};
}

Engine::Result Engine::cmd_perms(const std::vector<std::string>& args) {
  Args a = split_args(args, 1);
  if (!a.positional.empty()) throw Error("usage: perms [--node ID]");
  need_session();
  std::optional<NodeId> filter;
  auto node = a.flags.find("--node");
  if (node != a.flags.end()) filter = NodeId::parse(node->second);

  PermSet perms = derive_session_perms();
  std::string out;
  for (const Perm& perm : perms.all()) {
    if (filter && !(perm.node == *filter)) continue;
    out += std::string(to_string(perm.privilege)) + "\t" + perm.node.str() + "\n";
  }
  return {0, out, ""};
}

Engine::Result Engine::cmd_secure_write(const std::vector<std::string>& args) {
  const std::string& kind = args[0];
  Args a = split_args(args, 1);
  const Session& session = need_session();
  const Document& source = need_source();

  if (a.positional.empty()) throw Error("usage: " + kind + " PATH ...");
  PathExpr path = parse_xpath(a.positional[0], session.user);

  PermSet perms = derive_session_perms();
  View view = derive_view(source, perms, session);

  WriteReport report = [&] {
    if (kind == "rename" || kind == "update") {
      if (a.positional.size() != 2) throw Error("usage: " + kind + " PATH LABEL");
      if (kind == "rename")
        return secure_rename(source, view, perms, session, path, a.positional[1]);
      return secure_update(source, view, perms, session, path, a.positional[1]);
    }
    if (kind == "remove") {
      if (a.positional.size() != 1) throw Error("usage: remove PATH");
      return secure_remove(source, view, perms, session, path);
    }
    auto fragment = a.flags.find("--xml-fragment");
    if (a.positional.size() != 1 || fragment == a.flags.end())
      throw Error("usage: " + kind + " PATH --xml-fragment FILE");
    LabelTree tree = parse_xml_tree(read_file(fragment->second));
    Placement placement = kind == "append" ? Placement::Append
                          : kind == "insert-before" ? Placement::InsertBefore
                                                    : Placement::InsertAfter;
    return secure_insert(source, view, perms, session, placement, path, tree);
  }();

  source_ = report.result;
  return {write_status(report), render(report), ""};
}

Engine::Result Engine::cmd_save(const std::vector<std::string>& args) {
  Args a = split_args(args, 1);
  auto out = a.flags.find("--out");
  if (!a.positional.empty() || out == a.flags.end())
    throw Error("usage: save --out FILE");
  write_file(out->second, to_dump(need_source()));
  return {0, "saved " + out->second + "\n", ""};
}

Engine::Result Engine::cmd_unsecured(const std::vector<std::string>& args) {
  if (args.size() < 3 || args[1] != "--as-admin")
    throw Error("usage: unsecured --as-admin KIND PATH ...");
  const std::string& kind = args[2];
  Args a = split_args(args, 3);
  const Document& source = need_source();
  if (a.positional.empty()) throw Error("usage: unsecured --as-admin " + kind + " PATH ...");
  // $USER stays usable when a session happens to be open
  PathExpr path = parse_xpath(
      a.positional[0],
      session_ ? std::optional<std::string>(session_->user) : std::nullopt);

  Document result = [&] {
    if (kind == "rename" || kind == "update") {
      if (a.positional.size() != 2)
        throw Error("usage: unsecured --as-admin " + kind + " PATH LABEL");
      return kind == "rename" ? apply_rename(source, path, a.positional[1])
                              : apply_update(source, path, a.positional[1]);
    }
    if (kind == "remove") {
      if (a.positional.size() != 1)
        throw Error("usage: unsecured --as-admin remove PATH");
      return apply_remove(source, path);
    }
    if (kind == "append" || kind == "insert-before" || kind == "insert-after") {
      auto fragment = a.flags.find("--xml-fragment");
      if (a.positional.size() != 1 || fragment == a.flags.end())
        throw Error("usage: unsecured --as-admin " + kind + " PATH --xml-fragment FILE");
      LabelTree tree = parse_xml_tree(read_file(fragment->second));
      Placement placement = kind == "append" ? Placement::Append
                            : kind == "insert-before" ? Placement::InsertBefore
                                                      : Placement::InsertAfter;
      return apply_insert(source, placement, path, tree);
    }
    throw Error("unknown operation '" + kind + "'");
  }();

  std::size_t affected = 0;
  for (const auto& [id, label] : source.facts()) {
    const std::string* now = result.find_label(id);
    if (now == nullptr || *now != label) ++affected;
  }
  for (const auto& [id, label] : result.facts())
    if (!source.contains(id)) ++affected;
  source_ = std::move(result);
  return {0, "applied " + kind + ", " + std::to_string(affected) + " fact(s) affected\n", ""};
}

}  // namespace xsecdb
