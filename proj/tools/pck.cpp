#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pck/dsl.hpp"

namespace {

using namespace pck;

bool read_file(const std::string& path, std::string& text) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  text = ss.str();
  return true;
}

/// Statement is complete once braces balance and it ends in ';' or '}'.
bool complete(const std::vector<dsl::Token>& toks) {
  int depth = 0;
  dsl::Tok last = dsl::Tok::end;
  for (const auto& t : toks) {
    if (t.kind == dsl::Tok::lbrace) ++depth;
    if (t.kind == dsl::Tok::rbrace) --depth;
    if (t.kind != dsl::Tok::end) last = t.kind;
  }
  return depth <= 0 && (last == dsl::Tok::semicolon || last == dsl::Tok::rbrace);
}

int repl(const dsl::Options& options) {
  const bool interactive = isatty(STDIN_FILENO);
  dsl::Session session(options, std::cout);
  std::string buffer, line;
  int status = dsl::exit_ok;
  if (interactive) std::cout << "pck> " << std::flush;
  while (std::getline(std::cin, line)) {
    buffer += line + "\n";
    bool ready = false;
    try {
      ready = complete(dsl::lex(buffer));
    } catch (const ParseError& e) {
      if (e.bare_message() != "unterminated string") {
        std::cerr << "error: " << e.what() << "\n";
        buffer.clear();
        status = dsl::exit_parse;
      }
    }
    if (ready) {
      try {
        for (const auto& st : dsl::parse(buffer).statements) session.execute(st);
      } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        status = dsl::exit_parse;
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        status = dsl::exit_math;
      }
      buffer.clear();
    }
    if (interactive) std::cout << (buffer.empty() ? "pck> " : "...> ") << std::flush;
  }
  if (!buffer.empty() && buffer.find_first_not_of(" \t\r\n") != std::string::npos) {
    std::cerr << "error: incomplete statement at end of input\n";
    status = dsl::exit_parse;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pck: Poisson rings as polynomial quotients"};
  app.require_subcommand(1);

  dsl::Options options;
  if (const char* env = std::getenv("PCK_OUT_DIR")) options.out_dir = env;
  std::string script;
  std::string out_dir;

  auto* run = app.add_subcommand("run", "Run a script");
  run->add_option("script", script, "Script file (.pck)")->required();
  run->add_option("--out-dir", out_dir, "Directory for emitted files (default: $PCK_OUT_DIR or .)");
  run->add_option("--tol", options.tolerance, "Default sampling tolerance")->check(CLI::NonNegativeNumber);
  run->add_option("--seed", options.seed, "Seed for selftest commands");

  auto* check = app.add_subcommand("check", "Parse and resolve a script without running it");
  check->add_option("script", script, "Script file (.pck)")->required();

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session reading statements from stdin");
  repl_cmd->add_option("--out-dir", out_dir, "Directory for emitted files");
  repl_cmd->add_option("--tol", options.tolerance, "Default sampling tolerance")->check(CLI::NonNegativeNumber);
  repl_cmd->add_option("--seed", options.seed, "Seed for selftest commands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : dsl::exit_parse;
  }
  if (!out_dir.empty()) options.out_dir = out_dir;

  if (*repl_cmd) return repl(options);
  std::string text;
  if (!read_file(script, text)) return dsl::exit_parse;
  if (*check) return dsl::check_script(text, std::cout, std::cerr);
  return dsl::run_script(text, options, std::cout, std::cerr);
}
