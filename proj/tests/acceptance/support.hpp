#pragma once

#include <memory>
#include <string>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/diagram/colax_diagram.hpp"
#include "colax/reedy2/groupement.hpp"
#include "colax/segal/segal.hpp"

namespace acceptance {

using colax::base::Base;
using colax::diagram::ColaxDiagram;
using colax::reedy2::Groupement;

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what);
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] long checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const;

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> first_;
};

std::shared_ptr<const Groupement> delta_plus(int m);
std::shared_ptr<const Groupement> px(const std::vector<std::string>& x, int m);
int cell(const Groupement& g, const std::string& name);
int two_cell(const Groupement& g, const std::string& name);

/// Basis monoid, -1 in the table is an absorbing zero (FinVect only).
struct BasisMonoid {
  int size = 1;
  int e = 0;
  std::vector<std::vector<int>> mult;
};
BasisMonoid cyclic(int n);
BasisMonoid dual_numbers();
/// n ↦ M^n on Δ⁺ with strict colaxity.
ColaxDiagram power_diagram(const std::shared_ptr<const Groupement>& g, const Base& b, const BasisMonoid& m, int level);

/// Nerve of the category on X with every hom-set Z/n, composition by addition.
colax::segal::UnitalPresheaf nerve(const std::shared_ptr<const colax::segal::DeltaX>& d, int n);

Outcome criterion1();
Outcome criterion2();
Outcome criterion3();
Outcome criterion4();
Outcome criterion5();
Outcome criterion6();
Outcome criterion7();
Outcome criterion8();

}  // namespace acceptance
