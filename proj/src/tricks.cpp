#include "bbgroup/tricks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "bbgroup/error.hpp"

namespace bbgroup {

namespace {

bool is_involution(const GroupOracle& oracle, const Element& i) {
  return !oracle.is_identity(i) && oracle.is_identity(oracle.mul(i, i));
}

void require_involution(const GroupOracle& oracle, const Element& i, const char* name) {
  if (!is_involution(oracle, i))
    throw Error(ErrorKind::Precondition,
                std::string(name) + " = " + oracle.format(i) + " is not an involution");
}

}  // namespace

Element conjugate_by_sqrt(const GroupOracle& oracle, const Element& i, const Element& j,
                          const ExponentData& exp) {
  require_involution(oracle, i, "i");
  require_involution(oracle, j, "j");
  const Element ij = oracle.mul(i, j);
  if (!has_odd_order(oracle, ij, exp))
    throw Error(ErrorKind::Precondition,
                "even-order dihedral case: i and j centralize i(ij) instead");
  Element y = power(oracle, ij, (exp.r + 1) / 2);
  if (oracle.conjugate(i, y) != j)
    throw Error(ErrorKind::Verification, "i^sqrt(ij) != j");
  return y;
}

Element double_conjugation(const GroupOracle& oracle, const Element& t, const Element& r,
                           const Element& s, const ExponentData& exp) {
  require_involution(oracle, t, "t");
  require_involution(oracle, r, "r");
  require_involution(oracle, s, "s");
  const Element tr = oracle.mul(t, r);
  const Element rs = oracle.mul(r, s);
  if (!has_odd_order(oracle, tr, exp) || !has_odd_order(oracle, rs, exp))
    throw Error(ErrorKind::Precondition,
                "double conjugation needs o(tr) and o(rs) odd");
  Element b = oracle.mul(sqrt_odd(oracle, tr, exp), sqrt_odd(oracle, rs, exp));
  if (oracle.conjugate(t, b) != s)
    throw Error(ErrorKind::Verification, "t^b != s");
  return b;
}

std::optional<Element> find_double_conjugation_pivot(
    const GroupOracle& oracle, const Element& t, const Element& s,
    std::span<const Element> candidates, const ExponentData& exp,
    std::span<const Element> exclude) {
  for (const auto& r : candidates) {
    if (std::find(exclude.begin(), exclude.end(), r) != exclude.end()) continue;
    if (!is_involution(oracle, r)) continue;
    if (has_odd_order(oracle, oracle.mul(t, r), exp) &&
        has_odd_order(oracle, oracle.mul(r, s), exp))
      return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

TISubgroup::TISubgroup(const FiniteGroup& ambient, std::span<const Element> generators)
    : identity_(ambient.oracle().identity()), backend_id_(ambient.oracle().id()) {
  const auto u = ambient.closure(ambient.indices_of(generators));
  if (!ambient.is_elementary_abelian_2(u))
    throw Error(ErrorKind::Precondition, "U is not an elementary abelian 2-group");
  if (u.size() < 2) throw Error(ErrorKind::Precondition, "U is trivial");

  for (FiniteGroup::Index g = 0; g < ambient.order(); ++g) {
    const auto ug = ambient.conjugate(u, g);
    if (ug == u) continue;
    FiniteGroup::Subset meet;
    std::set_intersection(u.begin(), u.end(), ug.begin(), ug.end(),
                          std::back_inserter(meet));
    if (meet.size() != 1)
      throw Error(ErrorKind::Precondition, "U is not a TI subgroup");
  }

  normalizer_ = ambient.normalizer(u);
  FiniteGroup::Subset nonid;
  for (auto x : u)
    if (x != ambient.identity()) nonid.push_back(x);
  if (ambient.conjugation_orbits(nonid, normalizer_).size() != 1)
    throw Error(ErrorKind::Precondition, "N(U) is not transitive on U^#");

  members_ = ambient.elements_of(u);
}

std::vector<Element> TISubgroup::nonidentity() const {
  std::vector<Element> out;
  for (const auto& m : members_)
    if (m != identity_) out.push_back(m);
  return out;
}

bool TISubgroup::contains(const Element& e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

std::optional<Element> nu(const GroupOracle& oracle, const Element& v, const Element& u,
                          const Element& x, const TISubgroup& U, const ExponentData& exp) {
  if (U.backend_id() != oracle.id())
    throw Error(ErrorKind::BackendMismatch, "U belongs to another backend");
  if (!U.contains(u) || oracle.is_identity(u) || !U.contains(v) || oracle.is_identity(v))
    throw Error(ErrorKind::Precondition, "nu needs u, v in U^#");
  const Element w = oracle.mul(oracle.conjugate(u, x), v);
  if (!has_odd_order(oracle, w, exp)) return std::nullopt;
  return oracle.mul(x, power(oracle, w, (exp.r + 1) / 2));
}

// ---------------------------------------------------------------------------

std::vector<Element> sylow2_normalizer_generators(const FiniteGroup& group,
                                                  std::span<const Element> T,
                                                  const ExponentData& exp) {
  const GroupOracle& oracle = group.oracle();
  const auto t_idx = group.indices_of(T);
  std::vector<Element> tsharp;
  for (auto t : t_idx) {
    if (t == group.identity()) continue;
    if (group.centralizer(t) != t_idx)
      throw Error(ErrorKind::Precondition,
                  "hypothesis violated: C(" + oracle.format(group.element(t)) + ") != T");
    tsharp.push_back(group.element(t));
  }

  std::vector<char> in_t(group.order(), 0);
  for (auto t : t_idx) in_t[t] = 1;
  std::vector<Element> outside;
  for (auto r : group.involutions())
    if (!in_t[r]) outside.push_back(group.element(r));

  std::vector<Element> out = group.elements_of(t_idx);
  for (const auto& t : tsharp)
    for (const auto& s : tsharp) {
      const auto r = find_double_conjugation_pivot(oracle, t, s, outside, exp);
      if (!r) continue;
      Element b = double_conjugation(oracle, t, *r, s, exp);
      for (const auto& m : T)
        if (!in_t[group.index(oracle.conjugate(m, b))])
          throw Error(ErrorKind::Verification, "double conjugation left N(T)");
      out.push_back(std::move(b));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(BurnsideBranch b) noexcept {
  switch (b) {
    case BurnsideBranch::NormalSylow: return "NormalSylow";
    case BurnsideBranch::SingleClass: return "SingleClass";
    case BurnsideBranch::Fail: return "Fail";
  }
  return "Fail";
}

namespace {

bool triply_transitive(const FiniteGroup& group,
                       const std::vector<FiniteGroup::Subset>& points) {
  // action of G by conjugation on its Sylow subgroups, one image table per g
  const std::size_t m = points.size();
  if (m < 3) return false;
  std::vector<std::vector<std::uint32_t>> act(group.order(), std::vector<std::uint32_t>(m));
  for (FiniteGroup::Index g = 0; g < group.order(); ++g)
    for (std::size_t p = 0; p < m; ++p) {
      const auto img = group.conjugate(points[p], g);
      act[g][p] = static_cast<std::uint32_t>(
          std::lower_bound(points.begin(), points.end(), img) - points.begin());
    }
  // orbit of the triple (0, 1, 2) among ordered triples of distinct points
  std::set<std::array<std::uint32_t, 3>> orbit;
  for (const auto& a : act) orbit.insert({a[0], a[1], a[2]});
  return orbit.size() == m * (m - 1) * (m - 2);
}

}  // namespace

BurnsideReport burnside_audit(const FiniteGroup& group, std::optional<std::uint32_t> n_hint) {
  BurnsideReport rep;
  rep.group_order = group.order();
  rep.n_hint = n_hint;

  const auto invols = group.involutions();
  rep.involution_count = invols.size();

  rep.centralizer_elementary_abelian = true;
  for (auto t : invols) {
    const auto c = group.centralizer(t);
    const bool two_power = std::has_single_bit(c.size());
    if (!two_power || !group.is_elementary_abelian_2(c)) {
      rep.centralizer_elementary_abelian = false;
      break;
    }
  }
  rep.hypothesis_holds = rep.centralizer_elementary_abelian && !invols.empty();

  rep.involution_class_count = group.conjugation_orbits(invols, group.all()).size();

  const auto sylows = group.sylow2_subgroups();
  const auto& h = sylows.front();
  rep.sylow_order = h.size();
  rep.sylow_count = sylows.size();
  rep.n = static_cast<std::uint32_t>(std::countr_zero(h.size()));
  rep.n_hint_mismatch = n_hint.has_value() && *n_hint != rep.n;
  rep.sylow_normal = sylows.size() == 1;

  const auto k = group.normalizer(h);
  rep.normalizer_order = k.size();
  rep.mu = k.size() / h.size();

  rep.sylow_TI = true;
  for (std::size_t a = 0; a < sylows.size() && rep.sylow_TI; ++a)
    for (std::size_t b = a + 1; b < sylows.size(); ++b) {
      FiniteGroup::Subset meet;
      std::set_intersection(sylows[a].begin(), sylows[a].end(), sylows[b].begin(),
                            sylows[b].end(), std::back_inserter(meet));
      if (meet.size() != 1) {
        rep.sylow_TI = false;
        break;
      }
    }

  // control of fusion: K-orbits on H refine the G-classes met by H, so they
  // coincide iff there are equally many
  {
    std::vector<std::size_t> class_id(group.order(), 0);
    const auto classes = group.conjugacy_classes();
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (auto x : classes[c]) class_id[x] = c;
    std::set<std::size_t> met;
    for (auto x : h) met.insert(class_id[x]);
    rep.fusion_controlled = group.conjugation_orbits(h, k).size() == met.size();
  }

  const std::size_t q = std::size_t{1} << rep.n;
  rep.normalizer_order_holds = rep.normalizer_order == q * (q - 1);
  rep.order_formula_holds = rep.group_order == (q + 1) * q * (q - 1);
  rep.coset_count = group.order() / rep.normalizer_order;
  if (rep.order_formula_holds && rep.coset_count == q + 1)
    rep.three_transitive = triply_transitive(group, sylows);

  if (!rep.hypothesis_holds) {
    rep.branch = BurnsideBranch::Fail;
  } else if (rep.sylow_normal) {
    rep.branch = BurnsideBranch::NormalSylow;
  } else if (rep.involution_class_count == 1) {
    rep.branch = BurnsideBranch::SingleClass;
  } else {
    rep.branch = BurnsideBranch::Fail;
  }

  switch (rep.branch) {
    case BurnsideBranch::NormalSylow:
      rep.all_checks_pass = true;
      break;
    case BurnsideBranch::SingleClass:
      rep.all_checks_pass = rep.sylow_TI && rep.fusion_controlled &&
                            rep.normalizer_order_holds && rep.order_formula_holds &&
                            rep.three_transitive.value_or(false);
      break;
    case BurnsideBranch::Fail:
      rep.all_checks_pass = false;
      break;
  }
  return rep;
}

}  // namespace bbgroup
