#include <doctest.h>

#include <algorithm>
#include <string>

#include "bbgroup/bray.hpp"
#include "bbgroup/error.hpp"
#include "bbgroup/tricks.hpp"
#include "test_groups.hpp"

using namespace bbgroup;
using namespace bbgroup::testing;

namespace {

bool in_subset(const FiniteGroup::Subset& s, FiniteGroup::Index x) {
  return std::binary_search(s.begin(), s.end(), x);
}

// Upper unitriangular matrices [[1,a],[0,1]] of SL2(8).
std::vector<Element> unitriangular(const GroupOracle& g) {
  std::vector<Element> out;
  for (int a = 0; a < 8; ++a)
    out.push_back(g.parse("[[1," + std::to_string(a) + "],[0,1]]"));
  return out;
}

}  // namespace

TEST_CASE("conjugate_by_sqrt on S3") {
  auto g = s3();
  const auto exp = split_exponent(*g);
  const auto i = g->parse("(1 2)");
  const auto j = g->parse("(2 3)");
  CHECK(g->format(g->mul(i, j)) == "(1 3 2)");
  const auto y = conjugate_by_sqrt(*g, i, j, exp);
  CHECK(g->format(y) == "(1 2 3)");
  CHECK(g->conjugate(i, y) == j);
  CHECK(g->is_identity(conjugate_by_sqrt(*g, i, i, exp)));
}

TEST_CASE("conjugate_by_sqrt refuses the even dihedral case") {
  auto g = d8();
  const auto exp = split_exponent(*g);
  const auto i = g->parse("(1 3)");
  const auto j = g->parse("(1 2)(3 4)");
  CHECK(element_order(*g, g->mul(i, j)) == 4);
  try {
    (void)conjugate_by_sqrt(*g, i, j, exp);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("even-order dihedral case") != std::string::npos);
  }
}

TEST_CASE("double_conjugation on S3 and the s = t case") {
  auto g = s3();
  const auto exp = split_exponent(*g);
  const auto t = g->parse("(1 2)");
  const auto r = g->parse("(2 3)");
  const auto s = g->parse("(1 3)");
  const auto b = double_conjugation(*g, t, r, s, exp);
  CHECK(g->format(b) == "(1 3 2)");
  CHECK(g->conjugate(t, b) == s);
  const auto c = double_conjugation(*g, t, r, t, exp);
  CHECK(g->commute(c, t));
}

TEST_CASE("double_conjugation in A5 normalizes the Klein four group") {
  auto g = a5();
  FiniteGroup grp(*g);
  const auto exp = split_exponent(*g);
  const auto t = g->parse("(1 2)(3 4)");
  const auto s = g->parse("(1 3)(2 4)");
  const auto invs = grp.elements_of(grp.involutions());
  REQUIRE(invs.size() == 15);
  const auto r = find_double_conjugation_pivot(*g, t, s, invs, exp);
  REQUIRE(r.has_value());
  const auto b = double_conjugation(*g, t, *r, s, exp);
  CHECK(g->conjugate(t, b) == s);
  const auto v = grp.centralizer(grp.index(t));
  CHECK(v == grp.centralizer(grp.index(s)));
  CHECK(v.size() == 4);
  CHECK(grp.conjugate(v, grp.index(b)) == v);
}

TEST_CASE("exhaustive conjugation tricks on the test groups") {
  for (auto oracle : {s3(), s4(), d8(), sl2_3(), a5(), moebius(2), moebius(3)}) {
    FiniteGroup grp(*oracle);
    CAPTURE(grp.order());
    const auto exp = split_exponent(*oracle);
    const auto invs = grp.involutions();
    std::vector<char> odd(grp.order() * grp.order(), 0);
    for (auto i : invs)
      for (auto j : invs) {
        const auto ij = grp.mul(i, j);
        const auto yi = oracle->mul(grp.element(i), grp.element(j));
        if (grp.element_order(ij) % 2 == 1) {
          odd[i * grp.order() + j] = 1;
          const auto y = conjugate_by_sqrt(*oracle, grp.element(i), grp.element(j), exp);
          const auto yx = grp.index(y);
          REQUIRE(grp.conj(i, yx) == j);
          // y lies in <ij>
          bool cyclic = false;
          for (std::uint64_t k = 0; k < grp.element_order(ij); ++k)
            cyclic = cyclic || grp.power(ij, k) == yx;
          REQUIRE(cyclic);
        } else {
          CHECK_THROWS_AS(conjugate_by_sqrt(*oracle, grp.element(i), grp.element(j), exp),
                          Error);
          // both centralize the involution of <ij>
          const auto c = grp.index(extract_involution(*oracle, yi, exp));
          REQUIRE(grp.mul(c, i) == grp.mul(i, c));
          REQUIRE(grp.mul(c, j) == grp.mul(j, c));
        }
      }
    for (auto t : invs)
      for (auto r : invs) {
        if (!odd[t * grp.order() + r]) continue;
        for (auto s : invs) {
          if (!odd[r * grp.order() + s]) continue;
          const auto b =
              double_conjugation(*oracle, grp.element(t), grp.element(r), grp.element(s), exp);
          REQUIRE(grp.conj(t, grp.index(b)) == s);
        }
      }
  }
}

TEST_CASE("Sylow 2-normalizer generation") {
  SUBCASE("A5: closure is A4 of order 12") {
    auto g = a5();
    FiniteGroup grp(*g);
    const auto t = grp.index(g->parse("(1 2)(3 4)"));
    const auto T = grp.elements_of(grp.centralizer(t));
    const auto gens = sylow2_normalizer_generators(grp, T, split_exponent(*g));
    const auto closure = grp.closure(grp.indices_of(gens));
    CHECK(closure.size() == 12);
    CHECK(closure == grp.normalizer(grp.indices_of(T)));
  }
  SUBCASE("moebius(3): closure is the Borel subgroup of order 56") {
    auto g = moebius(3);
    FiniteGroup grp(*g);
    const auto sylow = grp.sylow2_containing({grp.identity()});
    REQUIRE(sylow.size() == 8);
    const auto gens = sylow2_normalizer_generators(grp, grp.elements_of(sylow), split_exponent(*g));
    const auto closure = grp.closure(grp.indices_of(gens));
    CHECK(closure.size() == 56);
    CHECK(closure == grp.normalizer(sylow));
  }
  SUBCASE("a 2-group has nothing outside T") {
    auto g = make_perm_group(4, {{{1, 2}}, {{3, 4}}});
    FiniteGroup grp(*g);
    const auto T = grp.elements_of(grp.all());
    const auto gens = sylow2_normalizer_generators(grp, T, split_exponent(*g));
    CHECK(gens == T);
  }
  SUBCASE("hypothesis violation") {
    auto g = s4();
    FiniteGroup grp(*g);
    const auto sylow = grp.sylow2_containing({grp.identity()});
    CHECK_THROWS_AS(
        sylow2_normalizer_generators(grp, grp.elements_of(sylow), split_exponent(*g)), Error);
  }
}

TEST_CASE("TISubgroup validation") {
  auto g = sl2_8();
  FiniteGroup grp(*g);
  const auto U = unitriangular(*g);
  TISubgroup ti(grp, U);
  CHECK(ti.members().size() == 8);
  CHECK(ti.nonidentity().size() == 7);
  CHECK(ti.normalizer().size() == 56);

  // a Sylow 2-subgroup of S4 is not elementary abelian
  auto s = s4();
  FiniteGroup sg(*s);
  const std::vector<Element> d8_gens{s->parse("(1 2 3 4)"), s->parse("(1 3)")};
  CHECK_THROWS_AS(TISubgroup(sg, d8_gens), Error);
  // <(1 2), (3 4)> is TI, but its normalizer fixes (1 2)(3 4)
  const std::vector<Element> v_gens{s->parse("(1 2)"), s->parse("(3 4)")};
  CHECK_THROWS_AS(TISubgroup(sg, v_gens), Error);
}

TEST_CASE("nu on SL2(8) with U unitriangular") {
  auto g = sl2_8();
  FiniteGroup grp(*g);
  const auto exp = split_exponent(*g);
  TISubgroup U(grp, unitriangular(*g));
  const auto usharp = grp.indices_of(U.nonidentity());
  const auto& borel = U.normalizer();
  REQUIRE(borel.size() == 56);

  const std::size_t order = grp.order();
  constexpr FiniteGroup::Index kUndefined = ~FiniteGroup::Index{0};
  // value[v][u][x]
  std::vector<FiniteGroup::Index> value(order * order * usharp.size(), kUndefined);
  auto at = [&](std::size_t vk, FiniteGroup::Index u, FiniteGroup::Index x) -> auto& {
    return value[(vk * order + u) * order + x];
  };

  std::size_t defined = 0;
  std::size_t undefined = 0;
  for (std::size_t vk = 0; vk < usharp.size(); ++vk)
    for (auto u : usharp)
      for (FiniteGroup::Index x = 0; x < order; ++x) {
        const auto out = nu(*g, grp.element(usharp[vk]), grp.element(u), grp.element(x), U, exp);
        const auto w = grp.mul(grp.conj(u, x), usharp[vk]);
        REQUIRE(out.has_value() == (grp.element_order(w) % 2 == 1));
        if (!out) {
          ++undefined;
          continue;
        }
        ++defined;
        at(vk, u, x) = grp.index(*out);
        REQUIRE(in_subset(borel, at(vk, u, x)));
      }
  CHECK(defined > 0);
  CHECK(undefined > 0);

  // left equivariance: nu_v(n u n^-1, n x) = n nu_v(u, x)
  std::size_t checked = 0;
  std::size_t literal_failures = 0;
  for (std::size_t vk = 0; vk < usharp.size(); ++vk)
    for (auto n : borel)
      for (auto u : usharp)
        for (FiniteGroup::Index x = 0; x < order; ++x) {
          const auto lhs_u = grp.mul(grp.mul(n, u), grp.inv(n));
          const auto lhs = at(vk, lhs_u, grp.mul(n, x));
          const auto rhs = at(vk, u, x);
          REQUIRE((lhs == kUndefined) == (rhs == kUndefined));
          if (rhs == kUndefined) continue;
          REQUIRE(lhs == grp.mul(n, rhs));
          ++checked;
          // the n^-1 u^-1 n reading of the identity
          const auto alt = at(vk, grp.conj(grp.inv(u), n), grp.mul(n, x));
          if (alt == kUndefined || alt != grp.mul(n, rhs)) ++literal_failures;
        }
  CHECK(checked == defined * borel.size());
  // the n^-1 u n reading only agrees when n^2 centralizes u
  CHECK(literal_failures > 0);

  CHECK_THROWS_AS(nu(*g, grp.element(grp.identity()), grp.element(usharp[0]),
                     grp.element(grp.identity()), U, exp),
                  Error);
}

TEST_CASE("nu at |U| = 2 inverts the odd branch of zeta") {
  auto g = s4();
  FiniteGroup grp(*g);
  const auto exp = split_exponent(*g);
  for (auto ui : grp.involutions()) {
    const Element& u = grp.element(ui);
    const std::vector<Element> gens{u};
    TISubgroup U(grp, gens);
    for (FiniteGroup::Index x = 0; x < grp.order(); ++x) {
      const auto v = nu(*g, u, u, grp.element(x), U, exp);
      const auto z = zeta(*g, u, grp.element(x), exp);
      REQUIRE(v.has_value() == (z.branch == ZetaBranch::Odd));
      if (!v) continue;
      REQUIRE(g->commute(*v, u));
      REQUIRE(g->inv(*v) == z.value);
    }
  }
}

TEST_CASE("burnside_audit") {
  for (std::uint32_t n : {2u, 3u}) {
    CAPTURE(n);
    auto g = moebius(n);
    FiniteGroup grp(*g);
    const auto rep = burnside_audit(grp, n);
    const std::size_t q = std::size_t{1} << n;
    CHECK(rep.hypothesis_holds);
    CHECK(rep.branch == BurnsideBranch::SingleClass);
    CHECK(rep.involution_class_count == 1);
    CHECK(rep.involution_count == q * q - 1);
    CHECK(rep.centralizer_elementary_abelian);
    CHECK(rep.n == n);
    CHECK_FALSE(rep.n_hint_mismatch);
    CHECK(rep.sylow_TI);
    CHECK(rep.fusion_controlled);
    CHECK(rep.normalizer_order == q * (q - 1));
    CHECK(rep.mu == q - 1);
    CHECK(rep.order_formula_holds);
    CHECK(rep.coset_count == q + 1);
    CHECK(rep.three_transitive == std::optional<bool>(true));
    CHECK(rep.all_checks_pass);
  }
  {
    auto g = moebius(2);
    FiniteGroup grp(*g);
    const auto rep = burnside_audit(grp, 3);
    CHECK(rep.n == 2);
    CHECK(rep.n_hint_mismatch);
    CHECK(rep.all_checks_pass);
  }
  {
    auto g = s4();
    FiniteGroup grp(*g);
    const auto rep = burnside_audit(grp);
    CHECK_FALSE(rep.hypothesis_holds);
    CHECK(rep.branch == BurnsideBranch::Fail);
    CHECK_FALSE(rep.all_checks_pass);
  }
  {
    auto g = cyclic_group(2);
    FiniteGroup grp(*g);
    const auto rep = burnside_audit(grp);
    CHECK(rep.hypothesis_holds);
    CHECK(rep.branch == BurnsideBranch::NormalSylow);
    CHECK(rep.sylow_normal);
    CHECK(rep.all_checks_pass);
  }
  {
    // an involution of V4 x C3 is centralized by an element of order 3
    auto g = make_perm_group(7, {{{1, 2}}, {{3, 4}}, {{5, 6, 7}}});
    FiniteGroup grp(*g);
    CHECK_FALSE(burnside_audit(grp).hypothesis_holds);
  }
  {
    // V4: every involution is its own class
    auto g = make_perm_group(4, {{{1, 2}}, {{3, 4}}});
    FiniteGroup grp(*g);
    const auto rep = burnside_audit(grp);
    CHECK(rep.hypothesis_holds);
    CHECK(rep.branch == BurnsideBranch::NormalSylow);
    CHECK(rep.involution_class_count == 3);
  }
}
