#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bbgroup/groundtruth.hpp"
#include "bbgroup/oracle.hpp"
#include "bbgroup/powertools.hpp"
#include "bbgroup/sampler.hpp"

namespace bbgroup {

enum class ZetaBranch { Odd, Even };

const char* to_string(ZetaBranch b) noexcept;

/// Result of the centralizer map for an involution i and an element x.
/// `value` always commutes with i; on the even branch it is an involution.
struct ZetaOutcome {
  ZetaBranch branch = ZetaBranch::Odd;
  Element value;
  /// Parity of o(i * i^x): true when odd (same information as `branch`).
  bool witness_order_odd = true;
};

/// With z = i * i^x:
///   odd o(z):  z^((r+1)/2) * x^-1
///   even o(z): the involution of <z>
/// The commutation of the result with i is checked before returning; a failure
/// throws Error(Verification) since it can only come from a wrong E or a bug.
ZetaOutcome zeta(const GroupOracle& oracle, const Element& i, const Element& x,
                 const ExponentData& exp);

/// m images zeta(i, draw()).value.
std::vector<Element> centralizer_sample(const Element& i, ReplacementCell& cell,
                                        std::size_t m, const ExponentData& exp);

struct ClosureReport {
  std::size_t generated_order = 0;
  std::size_t true_order = 0;
  bool equal = false;
};

/// Compares <samples> with the brute-force centralizer of i.
ClosureReport centralizer_closure_check(const FiniteGroup& group, const Element& i,
                                        std::span<const Element> samples);

struct ZetaDistributionReport {
  std::size_t group_order = 0;
  std::size_t centralizer_order = 0;
  std::size_t odd_domain_size = 0;
  std::size_t even_domain_size = 0;
  /// element index -> number of x in the odd domain with zeta_1(x) = it
  std::map<FiniteGroup::Index, std::size_t> odd_counts;
  /// element index -> number of x in the even domain with zeta_0(x) = it
  std::map<FiniteGroup::Index, std::size_t> even_counts;
  /// involution classes of C(i) under conjugation by C(i)
  std::vector<FiniteGroup::Subset> centralizer_involution_classes;
  /// odd_counts covers all of C(i) with a single value
  bool odd_constant = false;
  /// even_counts is constant on each class above
  bool even_class_constant = false;
  /// odd domain closed under C(i) x, even domain under x C(i)
  bool domains_closed = false;
  /// every zeta value commuted with i
  bool membership = false;
};

/// Runs zeta over every element of the group and checks the exact
/// distribution statements: zeta_1 hits each element of C(i) equally often,
/// zeta_0 is constant on C(i)-classes of involutions.
ZetaDistributionReport zeta_distribution_audit(const FiniteGroup& group, const Element& i,
                                               const ExponentData& exp);

}  // namespace bbgroup
