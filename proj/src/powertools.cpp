#include "bbgroup/powertools.hpp"

#include <bit>
#include <string>

#include "bbgroup/error.hpp"

namespace bbgroup {

ExponentData split_exponent(std::uint64_t E) {
  if (E == 0) throw Error(ErrorKind::Precondition, "exponent must be positive");
  ExponentData d;
  d.E = E;
  d.t = static_cast<std::uint32_t>(std::countr_zero(E));
  d.r = E >> d.t;
  return d;
}

ExponentData split_exponent(const GroupOracle& oracle) {
  return split_exponent(oracle.exponent_bound());
}

Element power(const GroupOracle& oracle, const Element& x, std::uint64_t k) {
  if (k == 0) return oracle.identity();
  Element acc = x;
  for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
    acc = oracle.mul(acc, acc);
    if ((k >> bit) & 1) acc = oracle.mul(acc, x);
  }
  return acc;
}

bool has_odd_order(const GroupOracle& oracle, const Element& x, const ExponentData& exp) {
  return oracle.is_identity(power(oracle, x, exp.r));
}

Element sqrt_odd(const GroupOracle& oracle, const Element& x, const ExponentData& exp) {
  if (!has_odd_order(oracle, x, exp))
    throw Error(ErrorKind::Precondition,
                "sqrt_odd: " + oracle.format(x) + " has even order");
  return power(oracle, x, (exp.r + 1) / 2);
}

Element extract_involution(const GroupOracle& oracle, const Element& x,
                           const ExponentData& exp) {
  Element y = power(oracle, x, exp.r);
  if (oracle.is_identity(y))
    throw Error(ErrorKind::Precondition,
                "no involution in <x>: " + oracle.format(x) + " has odd order");
  for (std::uint32_t step = 0; step < exp.t; ++step) {
    Element sq = oracle.mul(y, y);
    if (oracle.is_identity(sq)) return y;
    y = std::move(sq);
  }
  throw Error(ErrorKind::ExponentContract,
              "squaring chain of " + oracle.format(x) + " exceeds t = " +
                  std::to_string(exp.t) + " steps; E = " + std::to_string(exp.E) +
                  " is not a multiple of the exponent");
}

std::uint64_t element_order(const GroupOracle& oracle, const Element& x,
                            std::uint64_t cap) {
  std::uint64_t n = 1;
  for (Element y = x; !oracle.is_identity(y); y = oracle.mul(y, x)) {
    if (++n > cap)
      throw Error(ErrorKind::CapExceeded,
                  "element order exceeds cap " + std::to_string(cap));
  }
  return n;
}

}  // namespace bbgroup
