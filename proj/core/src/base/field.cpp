#include "colax/base/field.hpp"

#include "colax/error.hpp"

namespace colax::base {

namespace {

int reduce(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

Matrix::Matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows * cols), 0) {}

Matrix::Matrix(int rows, int cols, int p, std::vector<int> entries)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(rows * cols)) {
    throw DomainError("matrix entry count does not match its shape");
  }
  for (auto& e : data_) e = reduce(e, p_);
}

Matrix Matrix::identity(int n, int p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(int r, int c, int v) { data_[static_cast<std::size_t>(r * cols_ + c)] = reduce(v, p_); }

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw EndpointError("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_, p_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const int a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        auto& slot = out.data_[static_cast<std::size_t>(i * rhs.cols_ + j)];
        slot = (slot + a * rhs.at(k, j)) % p_;
      }
    }
  }
  return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
  Matrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, p_);
  for (int i1 = 0; i1 < rows_; ++i1)
    for (int j1 = 0; j1 < cols_; ++j1) {
      const int a = at(i1, j1);
      if (a == 0) continue;
      for (int i2 = 0; i2 < rhs.rows_; ++i2)
        for (int j2 = 0; j2 < rhs.cols_; ++j2)
          out.set(i1 * rhs.rows_ + i2, j1 * rhs.cols_ + j2, a * rhs.at(i2, j2));
    }
  return out;
}

int mod_inverse(int a, int p) {
  // p is prime: a^(p-2)
  long long result = 1;
  long long base = reduce(a, p);
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

Echelon rref(const Matrix& a) {
  Echelon out{a, {}};
  Matrix& m = out.reduced;
  const int p = m.prime();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) {
        const int t = m.at(row, c);
        m.set(row, c, m.at(pivot, c));
        m.set(pivot, c, t);
      }
    }
    const int inv = mod_inverse(m.at(row, col), p);
    for (int c = 0; c < m.cols(); ++c) m.set(row, c, m.at(row, c) * inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const int factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < m.cols(); ++c) m.set(r, c, m.at(r, c) - factor * m.at(row, c));
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

int rank(const Matrix& a) { return rref(a).rank(); }

Matrix kernel_basis(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  Matrix basis(a.cols(), static_cast<int>(free.size()), a.prime());
  for (std::size_t j = 0; j < free.size(); ++j) {
    const int f = free[j];
    basis.set(f, static_cast<int>(j), 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      basis.set(e.pivots[r], static_cast<int>(j), -e.reduced.at(static_cast<int>(r), f));
    }
  }
  return basis;
}

std::optional<std::vector<int>> solve(const Matrix& a, std::span<const int> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DomainError("solve: right-hand side size mismatch");
  // Augmented matrix [a | b].
  Matrix aug(a.rows(), a.cols() + 1, a.prime());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
    aug.set(r, a.cols(), b[static_cast<std::size_t>(r)]);
  }
  const Echelon e = rref(aug);
  std::vector<int> x(static_cast<std::size_t>(a.cols()), 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const int c = e.pivots[r];
    if (c == a.cols()) return std::nullopt;  // 0 = 1
    x[static_cast<std::size_t>(c)] = e.reduced.at(static_cast<int>(r), a.cols());
  }
  return x;
}

}  // namespace colax::base
