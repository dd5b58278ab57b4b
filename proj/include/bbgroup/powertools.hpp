#pragma once

#include <cstddef>
#include <cstdint>

#include "bbgroup/oracle.hpp"

namespace bbgroup {

/// E = 2^t * r with r odd.
struct ExponentData {
  std::uint64_t E = 1;
  std::uint32_t t = 0;
  std::uint64_t r = 1;
};

ExponentData split_exponent(std::uint64_t E);
ExponentData split_exponent(const GroupOracle& oracle);

/// x^k by left-to-right square and multiply: at most 2*floor(log2 k)
/// multiplications for k >= 1, none for k = 0 or 1.
Element power(const GroupOracle& oracle, const Element& x, std::uint64_t k);

/// x^r == 1, i.e. x has odd order (given x^E = 1).
bool has_odd_order(const GroupOracle& oracle, const Element& x, const ExponentData& exp);

/// y = x^((r+1)/2), the square root of an odd-order x inside <x>.
/// Throws Error(Precondition) if x has even order.
Element sqrt_odd(const GroupOracle& oracle, const Element& x, const ExponentData& exp);

/// The unique involution of <x>: last non-identity term of the squaring chain
/// x^r, x^2r, x^4r, ... . Throws Error(Precondition) for odd-order x and
/// Error(ExponentContract) if the chain outlives t squarings.
Element extract_involution(const GroupOracle& oracle, const Element& x,
                           const ExponentData& exp);

/// Least n >= 1 with x^n = 1, by repeated multiplication. Ground truth only.
std::uint64_t element_order(const GroupOracle& oracle, const Element& x,
                            std::uint64_t cap = kDefaultCap);

}  // namespace bbgroup
