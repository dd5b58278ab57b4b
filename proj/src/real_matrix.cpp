#include "bbgroup/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bbgroup/error.hpp"

namespace bbgroup {

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()), a_() {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorKind::InvalidSpec, "matrix must be square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::diagonal(const std::vector<double>& d) {
  RealMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "empty matrix");
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::InvalidSpec, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(rows[i][j]))
        throw Error(ErrorKind::InvalidSpec, "matrix entries must be finite");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<std::vector<double>> RealMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  const std::size_t n = a.dim();
  RealMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& o) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (auto& v : a_) v *= s;
  return *this;
}

RealMatrix RealMatrix::inverse() const {
  const std::size_t n = n_;
  RealMatrix m = *this, inv = identity(n);
  double scale = 0.0;
  for (double v : a_) scale = std::max(scale, std::abs(v));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) <= scale * 1e-300 || m(piv, col) == 0.0)
      throw Error(ErrorKind::Numerical, "singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(col, j), m(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    const double d = 1.0 / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

double RealMatrix::determinant() const {
  const std::size_t n = n_;
  RealMatrix m = *this;
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (m(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

double RealMatrix::frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double RealMatrix::condition() const {
  auto norm1 = [](const RealMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m.dim(); ++i) s += std::abs(m(i, j));
      best = std::max(best, s);
    }
    return best;
  };
  return norm1(*this) * norm1(inverse());
}

bool RealMatrix::is_symmetric(double tol) const {
  return (*this - transpose()).frobenius() <= tol;
}

bool RealMatrix::is_spd(double tol) const {
  if (!is_symmetric(tol * std::max(1.0, frobenius()))) return false;
  // Cholesky on the symmetric part
  const RealMatrix s = symmetric_part(*this);
  const std::size_t n = n_;
  RealMatrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = s(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) return false;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return true;
}

double RealMatrix::orthogonality_residual() const {
  return (transpose() * *this - identity(n_)).frobenius();
}

bool RealMatrix::is_orthogonal(double tol) const { return orthogonality_residual() <= tol; }

RealMatrix symmetric_part(const RealMatrix& a) { return 0.5 * (a + a.transpose()); }

}  // namespace bbgroup
