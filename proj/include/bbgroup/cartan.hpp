#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bbgroup/groundtruth.hpp"
#include "bbgroup/oracle.hpp"
#include "bbgroup/powertools.hpp"
#include "bbgroup/real_matrix.hpp"

namespace bbgroup {

// ---------------------------------------------------------------------------
// finite groups: strongly isolated involutions

struct IsolationCertificate {
  Element involution;
  std::vector<Element> sylow_members;
  /// t^G intersected with the Sylow subgroup
  std::vector<Element> conjugates_in_sylow;
  /// conjugates_in_sylow == {t}
  bool isolated = false;
};

/// Brute force: a Sylow 2-subgroup S containing t and the G-conjugates of t
/// inside S.
IsolationCertificate strongly_isolated_check(const FiniteGroup& group, const Element& t);

/// x * sqrt(x^-1 x^t), an element of C(t). Defined for every x when t is
/// strongly isolated; otherwise Error(Precondition) on an even-order
/// x^-1 x^t.
Element isolated_zeta(const GroupOracle& oracle, const Element& t, const Element& x,
                      const ExponentData& exp);

// ---------------------------------------------------------------------------
// real matrices: polar / Cartan decomposition

inline constexpr double kSqrtTolerance = 1e-12;
inline constexpr double kOrthogonalityTolerance = 1e-10;
inline constexpr double kMaxCondition = 1e12;

/// The SPD square root of an SPD matrix, via the scaled product-form
/// Denman-Beavers iteration (at most 100 iterations). The result is
/// symmetric and satisfies ||B B - A||_F <= tol ||A||_F.
RealMatrix spd_sqrt(const RealMatrix& a, double tol = kSqrtTolerance);

struct PolarDecomposition {
  RealMatrix z;  // orthogonal factor
  RealMatrix p;  // SPD factor, p = sqrt(x^T x)
  double orthogonality_residual = 0.0;   // ||z^T z - I||_F
  double reconstruction_residual = 0.0;  // ||z p - x||_F / ||x||_F
};

/// x = z p with z orthogonal and p = sqrt(x^T x) SPD. z comes from the scaled
/// Newton iteration on x and p = sym(z^T x). Error(Numerical) when x is
/// singular or its condition number exceeds kMaxCondition.
PolarDecomposition polar_decompose(const RealMatrix& x,
                                   double tol = kOrthogonalityTolerance);

/// x * sqrt(x^-1 (x^-1)^T): the orthogonal factor of x, computed through the
/// inverse-transpose involution and then corrected by the polar factor of
/// z^T x. Equivariant: zeta(s x) = s zeta(x) for
/// orthogonal s.
RealMatrix cartan_zeta(const RealMatrix& x, double tol = kOrthogonalityTolerance);

/// steps+1 rotations from I to x (det x = +1), obtained by applying
/// cartan_zeta along a path in GL+ from I to x. Straight line first; if it
/// meets a singular matrix, bent paths (1-s)I + s x + s(1-s)K with pinned
/// skew K are tried. Error(Precondition) if x is not a rotation.
std::vector<RealMatrix> connectedness_path(const RealMatrix& x, std::size_t steps,
                                           double tol = kOrthogonalityTolerance);

}  // namespace bbgroup
