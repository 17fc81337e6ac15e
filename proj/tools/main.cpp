#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xsecdb/engine.hpp"
#include "xsecdb/error.hpp"

namespace {

int repl(xsecdb::Engine& engine) {
  const bool interactive = isatty(fileno(stdin)) != 0;
  std::string line;
  for (;;) {
    if (interactive) std::cout << "xsecdb> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    std::vector<std::string> tokens;
    try {
      tokens = xsecdb::Engine::tokenize(line);
    } catch (const xsecdb::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      continue;
    }
    if (tokens.empty()) continue;
    if (tokens[0] == "quit" || tokens[0] == "exit") break;
    if (tokens[0] == "help") {
      std::cout << "commands: load subjects policy login query view perms "
                   "rename update append insert-before insert-after remove "
                   "save unsecured quit\n";
      continue;
    }
    xsecdb::Engine::Result result = engine.execute(tokens);
    std::cout << result.out;
    std::cerr << result.err;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "xsecdb - secure XML database with persistent rational node labels,\n"
      "path queries, structured updates and per-user enforced views"};
  app.allow_extras();

  std::string db_file, xml_file, subjects_file, policy_file, user, save_file;
  app.add_option("--db", db_file, "load the database from a dump file");
  app.add_option("--xml", xml_file, "load the database from XML markup");
  app.add_option("--subjects", subjects_file, "load the subject hierarchy");
  app.add_option("--policy", policy_file, "load the rule policy");
  app.add_option("--user", user, "open a session as this user (or $XSECDB_USER)");
  app.add_option("--save", save_file, "write the database dump after the command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (user.empty()) {
    if (const char* env = std::getenv("XSECDB_USER")) user = env;
  }

  xsecdb::Engine engine;
  auto setup = [&](std::vector<std::string> args) -> bool {
    xsecdb::Engine::Result r = engine.execute(args);
    if (r.status != 0) std::cerr << r.err;
    return r.status == 0;
  };
  if (!subjects_file.empty() && !setup({"subjects", "--file", subjects_file})) return 1;
  if (!policy_file.empty() && !setup({"policy", "--file", policy_file})) return 1;
  if (!db_file.empty() && !setup({"load", "--db", db_file})) return 1;
  if (!xml_file.empty() && !setup({"load", "--xml", xml_file})) return 1;
  if (!user.empty() && !setup({"login", user})) return 1;

  std::vector<std::string> command = app.remaining();

  int status = 0;
  if (!command.empty() && command[0] == "repl") {
    status = repl(engine);
  } else if (!command.empty()) {
    xsecdb::Engine::Result result = engine.execute(command);
    std::cout << result.out;
    std::cerr << result.err;
    status = result.status;
  } else if (save_file.empty()) {
    std::cerr << "error: no command given (try --help)\n";
    return 1;
  }

  if (!save_file.empty() && engine.has_source()) {
    xsecdb::Engine::Result r = engine.execute({"save", "--out", save_file});
    if (r.status != 0) {
      std::cerr << r.err;
      return 1;
    }
  }
  return status;
}
