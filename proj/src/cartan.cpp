#include "bbgroup/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "bbgroup/error.hpp"

namespace bbgroup {

IsolationCertificate strongly_isolated_check(const FiniteGroup& group, const Element& t) {
  const auto ti = group.index(t);
  if (!group.is_involution(ti))
    throw Error(ErrorKind::Precondition, group.oracle().format(t) + " is not an involution");
  const auto sylow = group.sylow2_containing({ti});
  const auto cls = group.conjugacy_class(ti);

  FiniteGroup::Subset meet;
  std::set_intersection(sylow.begin(), sylow.end(), cls.begin(), cls.end(),
                        std::back_inserter(meet));

  IsolationCertificate cert;
  cert.involution = t;
  cert.sylow_members = group.elements_of(sylow);
  cert.conjugates_in_sylow = group.elements_of(meet);
  cert.isolated = meet.size() == 1 && meet.front() == ti;
  return cert;
}

Element isolated_zeta(const GroupOracle& oracle, const Element& t, const Element& x,
                      const ExponentData& exp) {
  const Element w = oracle.mul(oracle.inv(x), oracle.conjugate(x, t));
  if (!has_odd_order(oracle, w, exp))
    throw Error(ErrorKind::Precondition,
                "x^-1 x^t has even order; " + oracle.format(t) +
                    " is not strongly isolated");
  Element z = oracle.mul(x, power(oracle, w, (exp.r + 1) / 2));
  if (!oracle.commute(z, t))
    throw Error(ErrorKind::Verification, "isolated zeta value left C(t)");
  return z;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxIterations = 100;

void require_invertible(const RealMatrix& x) {
  double cond;
  try {
    cond = x.condition();
  } catch (const Error&) {
    throw Error(ErrorKind::Numerical, "matrix is singular");
  }
  if (!(cond < kMaxCondition))
    throw Error(ErrorKind::Numerical, "matrix is singular or ill-conditioned");
}

// Orthogonal polar factor by the Frobenius-scaled Newton iteration
// z <- (g z + z^-T / g) / 2. Every iterate keeps the polar factor of the input,
// so unlike x * sqrt(x^T x)^-1 the error does not grow with cond(x)^2.
RealMatrix newton_polar(RealMatrix z) {
  const double stop = 1e-14 * std::sqrt(static_cast<double>(z.dim()));
  bool scaled = true;
  for (int it = 0; it < kMaxIterations; ++it) {
    const RealMatrix zit = z.inverse().transpose();
    const double g = scaled ? std::sqrt(zit.frobenius() / z.frobenius()) : 1.0;
    RealMatrix next = 0.5 * (g * z + (1.0 / g) * zit);
    const double delta = (next - z).frobenius();
    z = std::move(next);
    if (delta <= 1e-2) scaled = false;
    if (delta <= stop) return z;
  }
  throw Error(ErrorKind::Numerical, "polar iteration did not converge");
}

}  // namespace

RealMatrix spd_sqrt(const RealMatrix& a, double tol) {
  const std::size_t n = a.dim();
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "empty matrix");
  if (!a.is_spd(std::max(tol, 1e-12)))
    throw Error(ErrorKind::Precondition, "spd_sqrt: input is not symmetric positive definite");

  const RealMatrix id = RealMatrix::identity(n);
  RealMatrix m = a, y = a;
  const double dn = static_cast<double>(n);
  for (int it = 0; it < kMaxIterations; ++it) {
    const double mu = std::pow(std::abs(m.determinant()), -1.0 / (2.0 * dn));
    const RealMatrix minv = m.inverse();
    y = (0.5 * mu) * (y * (id + (1.0 / (mu * mu)) * minv));
    m = 0.5 * (id + 0.5 * ((mu * mu) * m + (1.0 / (mu * mu)) * minv));
    if ((m - id).frobenius() <= 0.1 * tol) break;
    if (it + 1 == kMaxIterations)
      throw Error(ErrorKind::Numerical, "spd_sqrt did not converge");
  }
  RealMatrix b = symmetric_part(y);
  const double anorm = a.frobenius();
  if ((b * b - a).frobenius() > tol * anorm) {
    // one Newton correction from the converged iterate
    b = symmetric_part(0.5 * (b + b.inverse() * a));
    if ((b * b - a).frobenius() > tol * anorm)
      throw Error(ErrorKind::Numerical, "spd_sqrt residual above tolerance");
  }
  return b;
}

PolarDecomposition polar_decompose(const RealMatrix& x, double tol) {
  require_invertible(x);
  PolarDecomposition out;
  out.z = newton_polar(x);
  out.p = symmetric_part(out.z.transpose() * x);
  out.orthogonality_residual = out.z.orthogonality_residual();
  out.reconstruction_residual = (out.z * out.p - x).frobenius() / x.frobenius();
  if (out.orthogonality_residual > tol)
    throw Error(ErrorKind::Numerical, "polar factor not orthogonal within tolerance");
  return out;
}

RealMatrix cartan_zeta(const RealMatrix& x, double tol) {
  require_invertible(x);
  const RealMatrix xi = x.inverse();
  // x^-1 x^tau with tau(x) = (x^-1)^T
  const RealMatrix w = symmetric_part(xi * xi.transpose());
  RealMatrix z = x * spd_sqrt(w, std::max(kSqrtTolerance, 1e-14 * w.condition()));
  // forming x^-1 x^-T squares the condition number; remove the rounding
  // error with z orthogonal and x = z (z^T x), so polar(x) = z polar(z^T x)
  z = newton_polar(std::move(z));
  z = z * newton_polar(z.transpose() * x);
  if (z.orthogonality_residual() > tol)
    throw Error(ErrorKind::Numerical, "cartan_zeta value not orthogonal within tolerance");
  return z;
}

std::vector<RealMatrix> connectedness_path(const RealMatrix& x, std::size_t steps,
                                           double tol) {
  const std::size_t n = x.dim();
  if (steps == 0) throw Error(ErrorKind::Precondition, "steps must be positive");
  if (!x.is_orthogonal(tol))
    throw Error(ErrorKind::Precondition, "connectedness_path needs an orthogonal matrix");
  if (x.determinant() < 0)
    throw Error(ErrorKind::Precondition, "wrong component: det(x) = -1");

  const RealMatrix id = RealMatrix::identity(n);
  const double max_step = 2.0 * std::numbers::pi * static_cast<double>(n) /
                          static_cast<double>(steps);
  const std::size_t probes = 16 * steps;

  std::mt19937_64 rng(0x5eedULL);
  for (int attempt = 0; attempt < 8; ++attempt) {
    RealMatrix bend(n);
    if (attempt > 0) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const double v =
              (static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0) * attempt;
          bend(i, j) = v;
          bend(j, i) = -v;
        }
    }
    auto gamma = [&](double s) { return (1.0 - s) * id + s * x + (s * (1.0 - s)) * bend; };

    bool ok = true;
    for (std::size_t k = 0; k <= probes && ok; ++k) {
      const RealMatrix g = gamma(static_cast<double>(k) / static_cast<double>(probes));
      if (!(g.determinant() > 0.0)) ok = false;
    }
    if (!ok) continue;

    std::vector<RealMatrix> path;
    path.reserve(steps + 1);
    try {
      for (std::size_t k = 0; k <= steps; ++k)
        path.push_back(
            cartan_zeta(gamma(static_cast<double>(k) / static_cast<double>(steps)), tol));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Numerical) throw;
      continue;
    }
    for (std::size_t k = 0; k + 1 < path.size() && ok; ++k)
      if ((path[k + 1] - path[k]).frobenius() > max_step) ok = false;
    if (ok) return path;
  }
  throw Error(ErrorKind::Numerical, "could not find a nonsingular path from I to x");
}

}  // namespace bbgroup
