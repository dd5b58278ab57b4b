#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbgroup/groundtruth.hpp"
#include "bbgroup/oracle.hpp"
#include "bbgroup/powertools.hpp"

namespace bbgroup {

/// y = sqrt(i j), so that i^y = j and y lies in <ij>. Requires o(ij) odd;
/// when it is even the pair lives in an even dihedral group and both
/// centralize the involution of <ij> instead (Error(Precondition)).
Element conjugate_by_sqrt(const GroupOracle& oracle, const Element& i, const Element& j,
                          const ExponentData& exp);

/// b = sqrt(t r) * sqrt(r s), with t^b = s. Requires o(tr), o(rs) odd.
Element double_conjugation(const GroupOracle& oracle, const Element& t, const Element& r,
                           const Element& s, const ExponentData& exp);

/// First involution r in `candidates` (in order) with o(t r) and o(r s) both
/// odd, excluding members of `exclude`.
std::optional<Element> find_double_conjugation_pivot(
    const GroupOracle& oracle, const Element& t, const Element& s,
    std::span<const Element> candidates, const ExponentData& exp,
    std::span<const Element> exclude = {});

/// Elementary abelian 2-subgroup U that is TI in the ambient group and whose
/// normalizer acts transitively on U^#. All three properties are verified
/// exhaustively once, at construction.
class TISubgroup {
 public:
  /// `generators` may be any generating set of U. Throws Error(Precondition)
  /// when U fails one of the hypotheses.
  TISubgroup(const FiniteGroup& ambient, std::span<const Element> generators);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::vector<Element> nonidentity() const;
  bool contains(const Element& e) const;
  std::uint32_t backend_id() const noexcept { return backend_id_; }
  /// Brute-force N(U) (index set in the ambient group).
  const FiniteGroup::Subset& normalizer() const noexcept { return normalizer_; }

 private:
  Element identity_;
  std::vector<Element> members_;  // sorted
  std::uint32_t backend_id_;
  FiniteGroup::Subset normalizer_;
};

/// x * sqrt(u^x v) when u^x v has odd order, otherwise nullopt. The value
/// lies in N(U). Throws Error(Precondition) unless u, v are in U^#.
std::optional<Element> nu(const GroupOracle& oracle, const Element& v, const Element& u,
                          const Element& x, const TISubgroup& U, const ExponentData& exp);

/// T together with double-conjugation elements b for all pairs t, s in T^#
/// (pivot r scanned over the involutions outside T). Every returned element is
/// checked to normalize T. Requires C(t) = T for every t in T^#.
std::vector<Element> sylow2_normalizer_generators(const FiniteGroup& group,
                                                  std::span<const Element> T,
                                                  const ExponentData& exp);

enum class BurnsideBranch { NormalSylow, SingleClass, Fail };

const char* to_string(BurnsideBranch b) noexcept;

struct BurnsideReport {
  bool hypothesis_holds = false;
  BurnsideBranch branch = BurnsideBranch::Fail;
  std::size_t group_order = 0;
  std::size_t involution_count = 0;
  std::size_t involution_class_count = 0;
  bool centralizer_elementary_abelian = false;
  std::size_t sylow_order = 0;
  std::size_t sylow_count = 0;
  std::uint32_t n = 0;  // log2 of the Sylow order
  std::optional<std::uint32_t> n_hint;
  bool n_hint_mismatch = false;
  bool sylow_normal = false;
  bool sylow_TI = false;
  bool fusion_controlled = false;
  std::size_t normalizer_order = 0;
  std::size_t mu = 0;
  bool normalizer_order_holds = false;  // |N(H)| = 2^n (2^n - 1)
  bool order_formula_holds = false;     // |G| = (2^n+1) 2^n (2^n-1)
  std::size_t coset_count = 0;
  std::optional<bool> three_transitive;
  /// every check of the taken branch passed
  bool all_checks_pass = false;
};

/// Exhaustive structural audit of a group in which involution centralizers
/// are supposed to be elementary abelian 2-groups.
BurnsideReport burnside_audit(const FiniteGroup& group,
                              std::optional<std::uint32_t> n_hint = std::nullopt);

}  // namespace bbgroup
