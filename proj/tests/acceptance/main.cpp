#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<acceptance::Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "direct divisibility", 40, acceptance::criterion1},
      {2, "canonical maps", 30, acceptance::criterion2},
      {3, "classical agreement", 60, acceptance::criterion3},
      {4, "colax limits and colimits", 300, acceptance::criterion4},
      {5, "factorization and lifting", 300, acceptance::criterion5},
      {6, "model axioms", 600, acceptance::criterion6},
      {7, "Segal comparison", 120, acceptance::criterion7},
      {8, "mutation sensitivity", 60, acceptance::criterion8},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && only.count(c.id) == 0) continue;
    const auto t0 = std::chrono::steady_clock::now();
    acceptance::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = out.pass;
    if (secs > c.limit_s) {
      pass = false;
      out.detail += " [time limit exceeded]";
    }
    if (!pass) ++failed;
    std::printf("criterion %d %s: %s (%.2f s, limit %.0f s) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                c.limit_s, out.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
