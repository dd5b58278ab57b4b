#include "bbgroup/bray.hpp"

#include <algorithm>
#include <set>

#include "bbgroup/error.hpp"

namespace bbgroup {

const char* to_string(ZetaBranch b) noexcept {
  return b == ZetaBranch::Odd ? "odd" : "even";
}

namespace {

void require_involution(const GroupOracle& oracle, const Element& i) {
  if (oracle.is_identity(i) || !oracle.is_identity(oracle.mul(i, i)))
    throw Error(ErrorKind::Precondition, oracle.format(i) + " is not an involution");
}

}  // namespace

ZetaOutcome zeta(const GroupOracle& oracle, const Element& i, const Element& x,
                 const ExponentData& exp) {
  require_involution(oracle, i);
  const Element z = oracle.mul(i, oracle.conjugate(i, x));
  const Element zr = power(oracle, z, exp.r);

  ZetaOutcome out;
  if (oracle.is_identity(zr)) {
    out.branch = ZetaBranch::Odd;
    out.witness_order_odd = true;
    out.value = oracle.mul(power(oracle, z, (exp.r + 1) / 2), oracle.inv(x));
  } else {
    out.branch = ZetaBranch::Even;
    out.witness_order_odd = false;
    // continue the squaring chain from z^r rather than recomputing it
    Element y = zr;
    bool found = false;
    for (std::uint32_t step = 0; step < exp.t; ++step) {
      Element sq = oracle.mul(y, y);
      if (oracle.is_identity(sq)) {
        found = true;
        break;
      }
      y = std::move(sq);
    }
    if (!found)
      throw Error(ErrorKind::ExponentContract,
                  "squaring chain exceeds t steps; E is not a multiple of the exponent");
    out.value = std::move(y);
  }
  if (!oracle.commute(out.value, i))
    throw Error(ErrorKind::Verification,
                "zeta value " + oracle.format(out.value) + " does not commute with " +
                    oracle.format(i));
  return out;
}

std::vector<Element> centralizer_sample(const Element& i, ReplacementCell& cell,
                                        std::size_t m, const ExponentData& exp) {
  std::vector<Element> out;
  out.reserve(m);
  for (std::size_t k = 0; k < m; ++k)
    out.push_back(zeta(cell.oracle(), i, cell.draw(), exp).value);
  return out;
}

ClosureReport centralizer_closure_check(const FiniteGroup& group, const Element& i,
                                        std::span<const Element> samples) {
  const auto gens = group.indices_of(samples);
  const auto generated = group.closure(gens);
  const auto central = group.centralizer(group.index(i));
  ClosureReport r;
  r.generated_order = generated.size();
  r.true_order = central.size();
  r.equal = generated == central;
  return r;
}

ZetaDistributionReport zeta_distribution_audit(const FiniteGroup& group, const Element& i,
                                               const ExponentData& exp) {
  const GroupOracle& oracle = group.oracle();
  const auto ii = group.index(i);
  const auto central = group.centralizer(ii);

  ZetaDistributionReport rep;
  rep.group_order = group.order();
  rep.centralizer_order = central.size();
  rep.membership = true;

  std::vector<char> in_odd(group.order(), 0);
  for (FiniteGroup::Index x = 0; x < group.order(); ++x) {
    const auto out = zeta(oracle, i, group.element(x), exp);
    const auto v = group.index(out.value);
    if (group.mul(v, ii) != group.mul(ii, v)) rep.membership = false;
    if (out.branch == ZetaBranch::Odd) {
      in_odd[x] = 1;
      ++rep.odd_domain_size;
      ++rep.odd_counts[v];
    } else {
      ++rep.even_domain_size;
      ++rep.even_counts[v];
    }
  }

  rep.domains_closed = true;
  for (FiniteGroup::Index x = 0; x < group.order(); ++x)
    for (auto c : central) {
      if (in_odd[x] && !in_odd[group.mul(c, x)]) rep.domains_closed = false;
      if (!in_odd[x] && in_odd[group.mul(x, c)]) rep.domains_closed = false;
    }

  // zeta_1 must hit every element of C(i) the same number of times
  rep.odd_constant = true;
  if (rep.odd_domain_size > 0) {
    const std::size_t expected = rep.odd_domain_size / central.size();
    if (expected * central.size() != rep.odd_domain_size) rep.odd_constant = false;
    for (auto c : central) {
      const auto it = rep.odd_counts.find(c);
      if (it == rep.odd_counts.end() || it->second != expected) rep.odd_constant = false;
    }
    if (rep.odd_counts.size() != central.size()) rep.odd_constant = false;
  }

  FiniteGroup::Subset invols;
  for (auto c : central)
    if (group.is_involution(c)) invols.push_back(c);
  rep.centralizer_involution_classes = group.conjugation_orbits(invols, central);
  rep.even_class_constant = true;
  for (const auto& cls : rep.centralizer_involution_classes) {
    auto count = [&](FiniteGroup::Index c) {
      const auto it = rep.even_counts.find(c);
      return it == rep.even_counts.end() ? std::size_t{0} : it->second;
    };
    const std::size_t first = count(cls.front());
    for (auto c : cls)
      if (count(c) != first) rep.even_class_constant = false;
  }
  for (const auto& [v, n] : rep.even_counts)
    if (!group.is_involution(v)) rep.even_class_constant = false;
  return rep;
}

}  // namespace bbgroup
