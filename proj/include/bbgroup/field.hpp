#pragma once

#include <cstdint>
#include <vector>

namespace bbgroup {

/// Description of GF(p^k). `poly` holds the coefficients of a monic
/// irreducible polynomial of degree k, lowest degree first; it may be left
/// empty for k = 1 and for the shipped defaults (see default_poly).
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> poly;
};

/// Default irreducible (and primitive) polynomials for small fields, e.g.
/// x^2+x+1, x^3+x+1, x^4+x+1 in characteristic 2. For other (p, k) the
/// lexicographically first primitive polynomial is searched for.
std::vector<std::uint32_t> default_poly(std::uint32_t p, std::uint32_t k);

/// True iff `poly` (lowest degree first, monic) has no factor of degree
/// 1..deg/2 over GF(p). Trial division by every monic candidate.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Arithmetic in GF(p^k) for p^k <= 2^16.
///
/// Elements are indices 0..q-1: the coefficient vector (c_0, ..., c_{k-1}) of
/// the residue class mod poly packed base p, index = c_0 + c_1 p + ... .
/// Index 0 is zero and index 1 is one. Multiplication and inversion go
/// through discrete-log tables built over a primitive element.
class GaloisField {
 public:
  using Value = std::uint16_t;

  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t characteristic() const noexcept { return spec_.p; }
  std::uint32_t degree() const noexcept { return spec_.k; }
  std::uint32_t order() const noexcept { return q_; }

  Value zero() const noexcept { return 0; }
  Value one() const noexcept { return 1; }

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  /// Throws Error(Precondition) on zero.
  Value inv(Value a) const;
  Value pow(Value a, std::uint64_t e) const;

  /// The primitive element whose powers index the log tables.
  Value primitive() const noexcept { return exp_[1]; }
  /// primitive()^e, e taken mod q-1.
  Value exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }
  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Value a) const;

  bool contains(std::uint64_t index) const noexcept { return index < q_; }

 private:
  // multiplication by explicit polynomial reduction, only used to build tables
  Value slow_mul(Value a, Value b) const;

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<Value> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace bbgroup
