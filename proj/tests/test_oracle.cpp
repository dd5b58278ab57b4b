#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bbgroup/error.hpp"
#include "bbgroup/group_spec.hpp"
#include "bbgroup/groundtruth.hpp"
#include "bbgroup/oracle.hpp"
#include "test_groups.hpp"

using namespace bbgroup;
using namespace bbgroup::testing;

namespace {

// Composition of 1-based point maps, applying `first` then `second`.
std::map<int, int> compose(const std::map<int, int>& first, const std::map<int, int>& second,
                           int degree) {
  std::map<int, int> out;
  auto at = [](const std::map<int, int>& m, int p) {
    auto it = m.find(p);
    return it == m.end() ? p : it->second;
  };
  for (int p = 1; p <= degree; ++p) out[p] = at(second, at(first, p));
  return out;
}

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Verification;
}

}  // namespace

TEST_CASE("permutation product applies the left factor first") {
  auto g = s3();
  const auto a = g->parse("(1 2)");
  const auto b = g->parse("(2 3)");
  // independent composition: 1->2->3, 2->1->1, 3->3->2
  const auto expected = compose({{1, 2}, {2, 1}}, {{2, 3}, {3, 2}}, 3);
  CHECK(expected.at(1) == 3);
  CHECK(expected.at(3) == 2);
  CHECK(expected.at(2) == 1);
  CHECK(g->format(g->mul(a, b)) == "(1 3 2)");
  CHECK(g->mul(g->identity(), a) == a);
}

TEST_CASE("matrix product and inverse over GF(3)") {
  auto g = sl2_3();
  const auto u = g->parse("[[1,1],[0,1]]");
  CHECK(g->format(g->mul(u, u)) == "[[1,2],[0,1]]");
  CHECK(g->format(g->inv(u)) == "[[1,2],[0,1]]");
  CHECK(g->is_identity(g->mul(g->inv(u), u)));
}

TEST_CASE("inverse and identity test") {
  auto g = s3();
  CHECK(g->format(g->inv(g->parse("(1 2 3)"))) == "(1 3 2)");
  CHECK(g->inv(g->identity()) == g->identity());
  CHECK(g->is_identity(g->identity()));
  CHECK_FALSE(g->is_identity(g->parse("(1 2)")));

  BackendSpec spec;
  spec.kind = BackendSpec::Kind::Matrix;
  spec.field = FieldSpec{2, 3, {}};
  spec.dim = 3;
  spec.matrix_generators = {{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  auto gl = build_backend(spec);
  CHECK(gl->is_identity(gl->parse("[[1,0,0],[0,1,0],[0,0,1]]")));
}

TEST_CASE("mult_counter counts mul only") {
  auto g = s3();
  const auto a = g->parse("(1 2)");
  g->reset_mult_count();
  (void)g->inv(a);
  (void)g->is_identity(a);
  CHECK(g->mult_count() == 0);
  (void)g->mul(a, a);
  CHECK(g->mult_count() == 1);
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate(*s3(), 100).size() == 6);
  CHECK(enumerate(*s4()).size() == 24);
  CHECK(enumerate(*a5()).size() == 60);
  CHECK(enumerate(*d8()).size() == 8);
  CHECK(enumerate(*sl2_3()).size() == 24);
  CHECK(enumerate(*sl2_8()).size() == 504);
  CHECK(enumerate(*trivial_group()).size() == 1);
  CHECK(error_kind([] { (void)enumerate(*s3(), 4); }) == ErrorKind::CapExceeded);
}

TEST_CASE("enumeration is sorted by payload") {
  const auto e = enumerate(*s4());
  CHECK(std::is_sorted(e.elements().begin(), e.elements().end()));
  CHECK(std::adjacent_find(e.elements().begin(), e.elements().end()) == e.elements().end());
}

TEST_CASE("moebius backends realise SL2(2^n) of order (q+1) q (q-1)") {
  for (std::uint32_t n : {2u, 3u}) {
    CAPTURE(n);
    auto g = moebius(n);
    const std::size_t q = std::size_t{1} << n;
    const auto all = enumerate(*g);
    CHECK(all.size() == (q + 1) * q * (q - 1));

    // 3-transitivity: the orbit of the ordered triple (1, 2, 3)
    const std::size_t m = q + 1;
    std::set<std::array<int, 3>> orbit;
    for (const auto& x : all.elements())
      orbit.insert({x.payload[0], x.payload[1], x.payload[2]});
    CHECK(orbit.size() == m * (m - 1) * (m - 2));
  }
}

TEST_CASE("moebius(2) point labels and generators") {
  MoebiusBackend b(2);
  CHECK(b.degree() == 5);
  CHECK(b.point_labels() == std::vector<std::string>{"inf", "0", "l^1", "l^2", "l^3"});
  const auto gens = b.standard_generators();
  // z -> 1/z swaps inf and 0 and fixes 1 = l^3
  CHECK(b.format(gens[2]) == "(1 2)(3 4)");
  // z -> l z fixes inf and 0 and cycles l -> l^2 -> 1 -> l
  CHECK(b.format(gens[1]) == "(3 4 5)");
}

TEST_CASE("exponent contract") {
  auto g = s3();
  CHECK(g->exponent_bound() == 6);
  CHECK(moebius(2)->exponent_bound() == 30);
  CHECK(moebius(3)->exponent_bound() == 126);
  CHECK(sl2_3()->exponent_bound() == 12);
  // every element, not just the generators
  for (auto oracle : {s4(), a5(), sl2_3()}) {
    FiniteGroup grp(*oracle);
    for (FiniteGroup::Index x = 0; x < grp.order(); ++x)
      CHECK(grp.power(x, oracle->exponent_bound()) == grp.identity());
  }
  // a supplied multiple is accepted, a non-multiple is not
  CHECK(make_perm_group(3, {{{1, 2}}, {{1, 2, 3}}}, 60)->exponent_bound() == 60);
  CHECK(error_kind([] { (void)make_perm_group(3, {{{1, 2}}, {{1, 2, 3}}}, 4); }) ==
        ErrorKind::ExponentContract);
}

TEST_CASE("canonical form soundness") {
  // equal payloads <=> equal actions: enumerate and compare pairwise via
  // the action on points
  auto g = s4();
  const auto all = enumerate(*g);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b) {
      bool same_action = true;
      for (int p = 0; p < 4; ++p)
        if (all[a].payload[p] != all[b].payload[p]) same_action = false;
      CHECK((a == b) == same_action);
    }
}

TEST_CASE("group axioms spot check") {
  for (auto oracle : {s4(), sl2_3(), moebius(2)}) {
    const auto all = enumerate(*oracle);
    for (std::size_t a = 0; a < all.size(); a += 3)
      for (std::size_t b = 0; b < all.size(); b += 5)
        for (std::size_t c = 0; c < all.size(); c += 7) {
          const auto& x = all[a];
          const auto& y = all[b];
          const auto& z = all[c];
          REQUIRE(oracle->mul(oracle->mul(x, y), z) == oracle->mul(x, oracle->mul(y, z)));
        }
    for (const auto& x : all.elements()) {
      REQUIRE(oracle->is_identity(oracle->mul(oracle->inv(x), x)));
      REQUIRE(oracle->mul(oracle->identity(), x) == x);
      REQUIRE(oracle->mul(x, oracle->identity()) == x);
    }
  }
}

TEST_CASE("Sylow 2-subgroups of moebius(n) are TI") {
  for (std::uint32_t n : {2u, 3u}) {
    CAPTURE(n);
    auto oracle = moebius(n);
    FiniteGroup g(*oracle);
    const auto sylows = g.sylow2_subgroups();
    const std::size_t q = std::size_t{1} << n;
    CHECK(sylows.size() == q + 1);
    for (std::size_t a = 0; a < sylows.size(); ++a) {
      CHECK(sylows[a].size() == q);
      for (std::size_t b = a + 1; b < sylows.size(); ++b) {
        std::vector<FiniteGroup::Index> meet;
        std::set_intersection(sylows[a].begin(), sylows[a].end(), sylows[b].begin(),
                              sylows[b].end(), std::back_inserter(meet));
        CHECK(meet.size() == 1);
      }
    }
  }
}

TEST_CASE("backend mismatch and malformed input") {
  auto g = s3();
  auto h = s3();
  CHECK(error_kind([&] { (void)g->mul(g->identity(), h->identity()); }) ==
        ErrorKind::BackendMismatch);
  CHECK(error_kind([&] { (void)g->parse("(1 4)"); }) == ErrorKind::InvalidSpec);
  CHECK(error_kind([&] { (void)g->parse("(1 1)"); }) == ErrorKind::InvalidSpec);
  CHECK(error_kind([&] { (void)g->parse("1 2"); }) == ErrorKind::InvalidSpec);

  BackendSpec spec;
  spec.kind = BackendSpec::Kind::Matrix;
  spec.field = FieldSpec{3, 1, {}};
  spec.dim = 2;
  spec.matrix_generators = {{1, 1, 1, 1}};
  CHECK(error_kind([&] { (void)build_backend(spec); }) == ErrorKind::InvalidSpec);
  spec.field = FieldSpec{2, 2, {1, 0, 1}};
  spec.matrix_generators = {{1, 0, 0, 1}};
  CHECK(error_kind([&] { (void)build_backend(spec); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("group specification files") {
  const auto perm = parse_group_spec(
      R"({"backend": "perm", "degree": 3, "generators": [[[1,2]], [[1,2,3]]]})");
  CHECK(enumerate(*build_backend(perm)).size() == 6);

  const auto mat = parse_group_spec(R"({"backend": "matrix", "dim": 2,
      "field": {"p": 3, "k": 1},
      "generators": [[[1,1],[0,1]], [1,0,1,1]]})");
  CHECK(enumerate(*build_backend(mat)).size() == 24);

  const auto mob = parse_group_spec(R"({"backend": "moebius", "n": 2, "exponent": 60})");
  auto m = build_backend(mob);
  CHECK(m->exponent_bound() == 60);
  CHECK(m->backend().kind() == "moebius");

  CHECK_THROWS_AS(parse_group_spec(R"({"backend": "lie"})"), Error);
  CHECK_THROWS_AS(parse_group_spec(R"({"backend": "perm", "generators": []})"), Error);
  CHECK_THROWS_AS(parse_group_spec("not json"), Error);
  CHECK_THROWS_AS(parse_group_spec(R"({"backend": "moebius", "n": 2, "exponent": 0})"), Error);
  CHECK_THROWS_AS(build_backend(parse_group_spec(R"({"backend": "perm", "degree": 2})")),
                  Error);
}
