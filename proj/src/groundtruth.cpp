#include "bbgroup/groundtruth.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

#include "bbgroup/error.hpp"

namespace bbgroup {

FiniteGroup::FiniteGroup(const GroupOracle& oracle, std::size_t cap)
    : oracle_(oracle), elements_(enumerate(oracle, cap)) {
  const std::size_t n = elements_.size();
  std::unordered_map<Element, Index, ElementHash> lookup;
  lookup.reserve(n);
  for (Index i = 0; i < n; ++i) lookup.emplace(elements_[i], i);

  identity_ = lookup.at(oracle.identity());
  table_.resize(n * n);
  inverse_.resize(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b)
      table_[a * n + b] = lookup.at(oracle.mul(elements_[a], elements_[b]));
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (table_[a * n + b] == identity_) {
        inverse_[a] = b;
        break;
      }
}

std::optional<FiniteGroup::Index> FiniteGroup::find(const Element& e) const {
  auto i = elements_.index_of(e);
  if (!i) return std::nullopt;
  return static_cast<Index>(*i);
}

FiniteGroup::Index FiniteGroup::index(const Element& e) const {
  auto i = find(e);
  if (!i) throw Error(ErrorKind::Precondition, "element is not in the group");
  return *i;
}

FiniteGroup::Index FiniteGroup::power(Index x, std::uint64_t k) const {
  Index acc = identity_, base = x;
  for (; k; k >>= 1) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
  }
  return acc;
}

std::uint64_t FiniteGroup::element_order(Index x) const {
  std::uint64_t n = 1;
  for (Index y = x; y != identity_; y = mul(y, x)) ++n;
  return n;
}

FiniteGroup::Subset FiniteGroup::involutions() const {
  Subset out;
  for (Index i = 0; i < order(); ++i)
    if (is_involution(i)) out.push_back(i);
  return out;
}

FiniteGroup::Subset FiniteGroup::all() const {
  Subset out(order());
  for (Index i = 0; i < order(); ++i) out[i] = i;
  return out;
}

std::vector<char> FiniteGroup::mask(const Subset& s) const {
  std::vector<char> m(order(), 0);
  for (Index i : s) m[i] = 1;
  return m;
}

FiniteGroup::Subset FiniteGroup::centralizer(Index x) const {
  Subset out;
  for (Index g = 0; g < order(); ++g)
    if (mul(g, x) == mul(x, g)) out.push_back(g);
  return out;
}

FiniteGroup::Subset FiniteGroup::closure(std::span<const Index> generators) const {
  std::vector<char> seen(order(), 0);
  std::deque<Index> frontier{identity_};
  seen[identity_] = 1;
  while (!frontier.empty()) {
    const Index x = frontier.front();
    frontier.pop_front();
    for (Index g : generators) {
      const Index y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  Subset out;
  for (Index i = 0; i < order(); ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

FiniteGroup::Subset FiniteGroup::normalizer(const Subset& s) const {
  const auto in_s = mask(s);
  Subset out;
  for (Index g = 0; g < order(); ++g) {
    bool normalizes = true;
    for (Index x : s)
      if (!in_s[conj(x, g)]) {
        normalizes = false;
        break;
      }
    if (normalizes) out.push_back(g);
  }
  return out;
}

FiniteGroup::Subset FiniteGroup::conjugate(const Subset& s, Index g) const {
  Subset out;
  out.reserve(s.size());
  for (Index x : s) out.push_back(conj(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup::Subset FiniteGroup::conjugacy_class(Index x) const {
  std::set<Index> cls;
  for (Index g = 0; g < order(); ++g) cls.insert(conj(x, g));
  return Subset(cls.begin(), cls.end());
}

std::vector<FiniteGroup::Subset> FiniteGroup::conjugacy_classes() const {
  return conjugation_orbits(all(), all());
}

std::vector<FiniteGroup::Subset> FiniteGroup::conjugation_orbits(
    const Subset& on, const Subset& within) const {
  std::vector<char> done(order(), 0);
  std::vector<Subset> out;
  for (Index x : on) {
    if (done[x]) continue;
    std::set<Index> orbit;
    for (Index g : within) orbit.insert(conj(x, g));
    for (Index y : orbit) done[y] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

bool FiniteGroup::is_abelian(const Subset& s) const {
  for (Index a : s)
    for (Index b : s)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_elementary_abelian_2(const Subset& s) const {
  for (Index a : s)
    if (a != identity_ && !is_involution(a)) return false;
  return is_abelian(s);
}

bool FiniteGroup::is_normal(const Subset& s) const {
  return normalizer(s).size() == order();
}

std::size_t FiniteGroup::sylow2_order() const {
  std::size_t n = order(), p = 1;
  while (n % 2 == 0) {
    n /= 2;
    p *= 2;
  }
  return p;
}

FiniteGroup::Subset FiniteGroup::sylow2_containing(const Subset& two_subgroup) const {
  Subset p = closure(two_subgroup);
  if ((p.size() & (p.size() - 1)) != 0)
    throw Error(ErrorKind::Precondition, "seed does not generate a 2-group");
  const std::size_t target = sylow2_order();
  while (p.size() < target) {
    // some g in N(P) \ P has g^2 in P because 2 divides |N(P) : P|
    const auto in_p = mask(p);
    std::optional<Index> step;
    for (Index g : normalizer(p))
      if (!in_p[g] && in_p[mul(g, g)]) {
        step = g;
        break;
      }
    if (!step) throw Error(ErrorKind::Verification, "Sylow growth stalled");
    Subset gens = p;
    gens.push_back(*step);
    p = closure(gens);
  }
  return p;
}

std::vector<FiniteGroup::Subset> FiniteGroup::sylow2_subgroups() const {
  const Subset h = sylow2_containing({identity_});
  std::set<Subset> all_conjugates;
  for (Index g = 0; g < order(); ++g) all_conjugates.insert(conjugate(h, g));
  return std::vector<Subset>(all_conjugates.begin(), all_conjugates.end());
}

FiniteGroup::Subset FiniteGroup::indices_of(std::span<const Element> elements) const {
  Subset out;
  for (const auto& e : elements) out.push_back(index(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> FiniteGroup::elements_of(const Subset& s) const {
  std::vector<Element> out;
  out.reserve(s.size());
  for (Index i : s) out.push_back(elements_[i]);
  return out;
}

}  // namespace bbgroup
