#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace colax::base {

/// Dense matrix over the prime field F_p, row-major. Entries are kept reduced in [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, int p);
  Matrix(int rows, int cols, int p, std::vector<int> entries);

  static Matrix identity(int n, int p);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] int at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, int v);
  [[nodiscard]] const std::vector<int>& entries() const { return data_; }

  /// this * rhs
  [[nodiscard]] Matrix operator*(const Matrix& rhs) const;
  [[nodiscard]] Matrix kronecker(const Matrix& rhs) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<int> data_;
};

int mod_inverse(int a, int p);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;            // same shape as the input
  std::vector<int> pivots;   // pivot column per nonzero row, ascending
  [[nodiscard]] int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(const Matrix& a);
int rank(const Matrix& a);

/// Canonical kernel basis: one vector per free column (ascending), free entry 1, other free entries 0.
/// Returned as the columns of an (a.cols() x nullity) matrix.
Matrix kernel_basis(const Matrix& a);

/// Solves a x = b; among all solutions returns the one with every free variable 0.
std::optional<std::vector<int>> solve(const Matrix& a, std::span<const int> b);

}  // namespace colax::base
