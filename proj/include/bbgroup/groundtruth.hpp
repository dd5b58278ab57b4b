#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bbgroup/oracle.hpp"

namespace bbgroup {

/// Exhaustive model of a desk-scale group: the sorted element list plus a
/// full Cayley table. Every brute-force answer in the library (centralizers,
/// normalizers, classes, Sylow subgroups) comes from here, never from the
/// black-box algorithms it is used to check.
///
/// Subsets are sorted index vectors.
class FiniteGroup {
 public:
  using Index = std::uint32_t;
  using Subset = std::vector<Index>;

  static constexpr std::size_t kTableCap = 5000;

  explicit FiniteGroup(const GroupOracle& oracle, std::size_t cap = kTableCap);

  const GroupOracle& oracle() const noexcept { return oracle_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Enumeration& enumeration() const noexcept { return elements_; }
  const Element& element(Index i) const { return elements_[i]; }
  std::optional<Index> find(const Element& e) const;
  /// Throws Error(Precondition) if e is not in the group.
  Index index(const Element& e) const;

  Index identity() const noexcept { return identity_; }
  Index mul(Index a, Index b) const noexcept { return table_[a * order() + b]; }
  Index inv(Index a) const noexcept { return inverse_[a]; }
  /// x^g = g^-1 x g
  Index conj(Index x, Index g) const noexcept { return mul(mul(inv(g), x), g); }
  Index power(Index x, std::uint64_t k) const;

  std::uint64_t element_order(Index x) const;
  bool is_involution(Index x) const noexcept {
    return x != identity_ && mul(x, x) == identity_;
  }
  Subset involutions() const;
  Subset all() const;

  Subset centralizer(Index x) const;
  Subset closure(std::span<const Index> generators) const;
  Subset normalizer(const Subset& s) const;
  Subset conjugate(const Subset& s, Index g) const;
  Subset conjugacy_class(Index x) const;
  /// Classes of the whole group, ordered by smallest member.
  std::vector<Subset> conjugacy_classes() const;
  /// Orbits of `within` (a subgroup) acting by conjugation on `on`.
  std::vector<Subset> conjugation_orbits(const Subset& on, const Subset& within) const;

  bool is_abelian(const Subset& s) const;
  /// Abelian and every non-identity member is an involution.
  bool is_elementary_abelian_2(const Subset& s) const;
  bool is_normal(const Subset& s) const;

  /// A Sylow 2-subgroup containing the given 2-subgroup (grown through
  /// normalizers). Pass {identity} for an arbitrary one.
  Subset sylow2_containing(const Subset& two_subgroup) const;
  /// All Sylow 2-subgroups, as the conjugates of one of them.
  std::vector<Subset> sylow2_subgroups() const;

  /// Largest power of two dividing the order.
  std::size_t sylow2_order() const;

  Subset indices_of(std::span<const Element> elements) const;
  std::vector<Element> elements_of(const Subset& s) const;

 private:
  std::vector<char> mask(const Subset& s) const;

  const GroupOracle& oracle_;
  Enumeration elements_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
};

}  // namespace bbgroup
