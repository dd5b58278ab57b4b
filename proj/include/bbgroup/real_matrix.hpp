#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bbgroup {

/// Dense square matrix of doubles, row-major. Sized for the small dimensions
/// the polar module works at; nothing here is blocked or vectorised.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static RealMatrix identity(std::size_t n);
  static RealMatrix diagonal(const std::vector<double>& d);
  /// Throws Error(InvalidSpec) unless rows form a square matrix of finite values.
  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<std::vector<double>> rows() const;

  RealMatrix transpose() const;
  /// Gauss-Jordan with partial pivoting; Error(Numerical) if singular.
  RealMatrix inverse() const;
  double determinant() const;
  double frobenius() const;
  /// 1-norm condition estimate ||A||_1 ||A^-1||_1 (exact, not estimated).
  double condition() const;

  bool is_symmetric(double tol) const;
  /// Symmetric and Cholesky-factorizable with positive pivots.
  bool is_spd(double tol) const;
  bool is_orthogonal(double tol) const;
  /// ||A^T A - I||_F
  double orthogonality_residual() const;

  RealMatrix& operator+=(const RealMatrix& o);
  RealMatrix& operator-=(const RealMatrix& o);
  RealMatrix& operator*=(double s);

  friend RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
  friend RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
  friend RealMatrix operator*(RealMatrix a, double s) { return a *= s; }
  friend RealMatrix operator*(double s, RealMatrix a) { return a *= s; }
  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Symmetrised copy (A + A^T) / 2.
RealMatrix symmetric_part(const RealMatrix& a);

}  // namespace bbgroup
