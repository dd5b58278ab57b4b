#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bbgroup/element.hpp"
#include "bbgroup/field.hpp"

namespace bbgroup {

using Payload = std::vector<std::uint16_t>;
using PayloadView = std::span<const std::uint16_t>;

inline constexpr std::size_t kDefaultCap = 100000;

/// Concrete arithmetic behind a black box. Payloads handed in are assumed
/// canonical; implementations must return canonical payloads.
class Backend {
 public:
  virtual ~Backend() = default;

  /// "perm", "matrix" or "moebius".
  virtual std::string_view kind() const noexcept = 0;
  virtual Payload identity() const = 0;
  /// out = a*b, where for permutations a is applied first.
  virtual void multiply(PayloadView a, PayloadView b, Payload& out) const = 0;
  virtual Payload invert(PayloadView a) const = 0;
  /// Cycle notation "(1 2)(3 4)" for permutations, "[[1,0],[0,1]]" for
  /// matrices.
  virtual std::string format(PayloadView a) const = 0;
  /// Inverse of format(); also accepts the JSON generator notation of the
  /// group-specification file. Throws Error(InvalidSpec).
  virtual Payload parse(std::string_view text) const = 0;
};

class PermutationBackend : public Backend {
 public:
  explicit PermutationBackend(std::uint32_t degree);

  std::string_view kind() const noexcept override { return "perm"; }
  std::uint32_t degree() const noexcept { return degree_; }

  Payload identity() const override;
  void multiply(PayloadView a, PayloadView b, Payload& out) const override;
  Payload invert(PayloadView a) const override;
  std::string format(PayloadView a) const override;
  Payload parse(std::string_view text) const override;

  /// Permutation from 1-based cycles; rejects repeated or out-of-range points.
  Payload from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles) const;

 private:
  std::uint32_t degree_;
};

/// Burnside's realisation of SL2(2^n): the Moebius maps z -> (az+b)/(cz+d)
/// over GF(2^n) acting on the 2^n+1 points of the projective line. Point 1 is
/// infinity, point 2 is 0, and point 2+j is lambda^j for j = 1..2^n-1 where
/// lambda is the primitive element of the field.
class MoebiusBackend : public PermutationBackend {
 public:
  explicit MoebiusBackend(std::uint32_t n, std::vector<std::uint32_t> poly = {});

  std::string_view kind() const noexcept override { return "moebius"; }
  std::uint32_t n() const noexcept { return n_; }
  const GaloisField& field() const noexcept { return field_; }

  /// Permutation effected by z -> (a z + b)/(c z + d); ad - bc must be nonzero.
  Payload moebius_map(GaloisField::Value a, GaloisField::Value b,
                      GaloisField::Value c, GaloisField::Value d) const;
  /// The three maps z -> z+1, z -> lambda z, z -> 1/z, which generate the group.
  std::vector<Payload> standard_generators() const;
  /// Human-readable point names: "inf", "0", "l^1", ..., "l^(2^n-1)".
  std::vector<std::string> point_labels() const;

 private:
  static constexpr std::uint32_t kInfinity = 0xFFFFFFFFu;
  std::uint32_t point_index(std::uint32_t value) const;  // 0-based
  std::uint32_t point_value(std::uint32_t index) const;

  std::uint32_t n_;
  GaloisField field_;
};

class MatrixBackend : public Backend {
 public:
  MatrixBackend(GaloisField field, std::uint32_t dim);

  std::string_view kind() const noexcept override { return "matrix"; }
  const GaloisField& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }

  Payload identity() const override;
  void multiply(PayloadView a, PayloadView b, Payload& out) const override;
  Payload invert(PayloadView a) const override;
  std::string format(PayloadView a) const override;
  Payload parse(std::string_view text) const override;

  /// Row-major field indices; checks range and size.
  Payload from_entries(const std::vector<std::uint32_t>& entries) const;
  GaloisField::Value determinant(PayloadView a) const;

 private:
  GaloisField field_;
  std::uint32_t dim_;
};

/// A black-box group: generators, multiplication / inversion / identity-test
/// oracles and a known multiple E of the exponent.
///
/// Immutable after construction except for the multiplication counter, which
/// counts mul() invocations only.
class GroupOracle {
 public:
  /// If `exponent` is empty the exact exponent is computed by enumerating the
  /// group (at most `cap` elements). Every generator is checked against E.
  GroupOracle(std::shared_ptr<const Backend> backend,
              std::vector<Payload> generators,
              std::optional<std::uint64_t> exponent,
              std::size_t cap = kDefaultCap);

  GroupOracle(const GroupOracle&) = delete;
  GroupOracle& operator=(const GroupOracle&) = delete;

  std::uint32_t id() const noexcept { return id_; }
  const Backend& backend() const noexcept { return *backend_; }
  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::uint64_t exponent_bound() const noexcept { return exponent_; }

  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  bool is_identity(const Element& a) const;
  Element identity() const { return identity_; }
  /// x^g = g^-1 x g (two multiplications).
  Element conjugate(const Element& x, const Element& g) const;
  bool commute(const Element& a, const Element& b) const;

  std::uint64_t mult_count() const noexcept {
    return mult_count_.load(std::memory_order_relaxed);
  }
  void reset_mult_count() noexcept { mult_count_.store(0); }

  /// Wraps a canonical payload from this oracle's backend.
  Element make(Payload payload) const;
  Element parse(std::string_view text) const;
  std::string format(const Element& a) const;

 private:
  void check(const Element& a) const;

  std::shared_ptr<const Backend> backend_;
  std::uint32_t id_;
  std::vector<Element> generators_;
  Element identity_;
  std::uint64_t exponent_ = 1;
  mutable std::atomic<std::uint64_t> mult_count_{0};
};

/// Input to build_backend. Permutation generators are lists of 1-based
/// cycles; matrix generators are row-major lists of field indices.
struct BackendSpec {
  enum class Kind { Perm, Matrix, Moebius };

  Kind kind = Kind::Perm;
  std::uint32_t degree = 0;
  FieldSpec field;
  std::uint32_t dim = 0;
  std::uint32_t n = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> perm_generators;
  std::vector<std::vector<std::uint32_t>> matrix_generators;
  std::optional<std::uint64_t> exponent;
};

std::shared_ptr<GroupOracle> build_backend(const BackendSpec& spec,
                                           std::size_t cap = kDefaultCap);

/// Convenience constructors for the usual small test groups.
std::shared_ptr<GroupOracle> make_perm_group(
    std::uint32_t degree,
    const std::vector<std::vector<std::vector<std::uint32_t>>>& generators,
    std::optional<std::uint64_t> exponent = std::nullopt);
std::shared_ptr<GroupOracle> make_moebius_group(std::uint32_t n);

/// Full element list of the generated group, sorted by payload.
class Enumeration {
 public:
  explicit Enumeration(std::vector<Element> sorted_elements);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }

 private:
  std::vector<Element> elements_;
};

/// Breadth-first closure of the generators. Throws Error(CapExceeded) once
/// more than `cap` elements have been found.
Enumeration enumerate(const GroupOracle& oracle, std::size_t cap = kDefaultCap);

/// Closure of an arbitrary element list (the subgroup it generates).
Enumeration subgroup_closure(const GroupOracle& oracle,
                             std::span<const Element> generators,
                             std::size_t cap = kDefaultCap);

}  // namespace bbgroup
