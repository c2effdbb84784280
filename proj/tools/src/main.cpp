#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "colax/cli/project.hpp"
#include "colax/cli/run.hpp"

namespace {

std::optional<colax::cli::Project> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  auto r = colax::cli::parse_project(ss.str());
  for (const auto& e : r.errors) std::cerr << path << ':' << e.line << ':' << e.column << ": " << e.message << '\n';
  return r.project;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colax: colax Reedy diagrams over finite bases"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "Parse and resolve a project file");
  check->add_option("file", file, "project file")->required();

  unsigned seed = 1;
  bool parallel = false;
  std::string out;
  auto* run = app.add_subcommand("run", "Run the tasks of a project file");
  run->add_option("file", file, "project file")->required();
  run->add_option("--seed", seed, "seed for randomized instances");
  run->add_flag("--parallel", parallel, "per-cell parallelism");
  run->add_option("--out", out, "directory for report.json and report.txt");

  std::string kind;
  auto* explain = app.add_subcommand("explain", "Describe a task kind");
  explain->add_option("task", kind, "task kind")->required();

  CLI11_PARSE(app, argc, argv);

  if (*explain) {
    auto d = colax::cli::explain(kind);
    if (!d) {
      std::cerr << "unknown task kind '" << kind << "'; known:";
      for (const auto& k : colax::cli::task_kinds()) std::cerr << ' ' << k;
      std::cerr << '\n';
      return 2;
    }
    std::cout << *d << '\n';
    return 0;
  }

  auto p = load(file);
  if (!p) return 2;
  if (*check) {
    std::cout << file << ": ok, " << p->tasks.size() << " tasks\n";
    for (const auto& t : p->tasks) std::cout << "  " << t.id << " (" << t.kind << ")\n";
    return 0;
  }

  colax::cli::RunOptions opt;
  opt.seed = seed;
  opt.parallel = parallel;
  const auto res = colax::cli::run(*p, opt);
  std::cout << res.text;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    std::ofstream(std::filesystem::path(out) / "report.json") << res.json;
    std::ofstream(std::filesystem::path(out) / "report.txt") << res.text;
  }
  return res.exit_code;
}
