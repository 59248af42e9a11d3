#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cisupport/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "cisupport: cannot open '%s'\n", path.c_str());
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void env_overrides(cisupport::RunConfig& cfg) {
  if (const char* cap = std::getenv("CISUPPORT_BUDGET_TERMS"))
    cfg.budget_terms = std::strtoull(cap, nullptr, 10);
}

// Minimal verdict coloring for table output, gated on CISUPPORT_COLOR.
std::string colorize(const std::string& text) {
  if (!std::getenv("CISUPPORT_COLOR")) return text;
  std::string out = text;
  auto paint = [&](const std::string& word, const char* code) {
    size_t pos = 0;
    std::string repl = std::string("\033[") + code + "m" + word + "\033[0m";
    while ((pos = out.find(word, pos)) != std::string::npos) {
      out.replace(pos, word.size(), repl);
      pos += repl.size();
    }
  };
  paint("FAIL", "31");
  paint("PASS", "32");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"support-variety toolkit for complete intersections"};
  app.require_subcommand(1);

  cisupport::RunConfig cfg;
  uint32_t p_flag = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", p_flag, "field characteristic override (prime)");
    sub->add_option("--window", cfg.window, "resolution window (default 2c+10)");
    sub->add_option("--seed", cfg.seed, "seed for randomized steps");
    sub->add_option("--format", cfg.format, "output format: json | table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  std::string script_path;
  CLI::App* run = app.add_subcommand("run", "execute a session script");
  run->add_option("script", script_path, "script file")->required();
  add_common(run);

  CLI::App* audit = app.add_subcommand("audit-all", "run the fixture audit suite");
  add_common(audit);
  audit->add_option("--sweep", cfg.sweep, "random modules per fixture ring");
  audit->add_flag("--inject-fault", cfg.inject_fault,
                  "harness self-test: force one FAIL report");

  bool check_only = false;
  std::string check_path;
  CLI::App* parse = app.add_subcommand("parse", "parse a script");
  parse->add_flag("--check", check_only, "syntax/name check only");
  parse->add_option("script", check_path, "script file")->required();

  CLI11_PARSE(app, argc, argv);
  if (p_flag) cfg.p_override = p_flag;
  env_overrides(cfg);

  if (run->parsed()) {
    cisupport::RunResult res = cisupport::run_script(read_file(script_path), cfg);
    std::fputs(cfg.format == "table" ? colorize(res.output).c_str()
                                     : res.output.c_str(),
               stdout);
    return res.exit_code;
  }
  if (audit->parsed()) {
    cisupport::RunResult res = cisupport::audit_all(cfg);
    std::fputs(cfg.format == "table" ? colorize(res.output).c_str()
                                     : res.output.c_str(),
               stdout);
    return res.exit_code;
  }
  if (parse->parsed()) {
    try {
      cisupport::parse_script(read_file(check_path), cfg.p_override);
      std::puts("ok");
      return 0;
    } catch (const cisupport::Error& e) {
      std::fprintf(stderr, "%s\n", e.what());
      return 2;
    }
  }
  return 2;
}
