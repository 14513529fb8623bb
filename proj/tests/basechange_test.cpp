#include <doctest.h>

#include <map>

#include "support.hpp"
#include "zelcalc/basechange.hpp"
#include "zelcalc/errors.hpp"
#include "zelcalc/testkit.hpp"

using namespace zelcalc;
using testing::ms;

namespace {

// Class of a multisegment on the single self line of u, from the segment list alone.
BcTag reference_class(const MultiSegment& m, int eta0, int deg) {
  std::map<std::pair<long, long>, int> count;  // (b + e, e - b), doubled
  long n = 0;
  for (const Segment& s : m) {
    const long b = s.b().doubled(), e = s.e().doubled();
    ++count[{b + e, e - b}];
    n += deg * ((e - b) / 2 + 1);
  }
  for (const auto& [key, c] : count) {
    if (count[{-key.first, key.second}] != c) return BcTag::NotConjSelfDual;
  }
  std::set<int> parities;
  for (const auto& [key, c] : count) {
    if (key.first == 0 && c % 2 == 1) {
      const long sp = key.second / 2 + 1;
      parities.insert(sp % 2 == 1 ? eta0 : -eta0);
    }
  }
  if (parities.empty()) return BcTag::Both;
  if (parities.size() == 2) return BcTag::ConjSelfDualNoParity;
  const int stable_sign = n % 2 == 1 ? 1 : -1;
  return *parities.begin() == stable_sign ? BcTag::StableOnly : BcTag::UnstableOnly;
}

}  // namespace

TEST_CASE("parameter factors") {
  const Universe u = testing::one_line();
  const Universe s = testing::sigma_line();
  const LineId one = u.at("one");

  CHECK(param_factors(ms(u, "[-1/2,1/2]@one")) == std::vector<ParamFactor>{{one, 0_h, 2, 1}});
  CHECK(param_factors(ms(u, "[0]@one + [0]@one")) == std::vector<ParamFactor>{{one, 0_h, 1, 2}});

  const auto theta = param_factors(ms(s, testing::kTheta));
  const std::vector<std::pair<int, int>> table = {{2, 2}, {3, 5}, {-2, 2}, {0, 6}, {-3, 5}};
  REQUIRE(theta.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(theta[i].center == half(table[i].first));
    CHECK(theta[i].sp == table[i].second);
    CHECK(theta[i].mult == 1);
  }
}

TEST_CASE("total degree") {
  const Universe u = testing::mixed();
  CHECK(total_degree(ms(u, "[-1/2,1/2]@one"), u) == 2);
  CHECK(total_degree(ms(u, "[0]@one + [0]@rho2"), u) == 3);
  const Universe s = testing::sigma_line();
  CHECK(total_degree(ms(s, testing::kTheta), s) == 40);
  CHECK_THROWS_AS(total_degree(MultiSegment{}, u), Error);
}

TEST_CASE("factor parity") {
  const Universe u = testing::mixed();
  CHECK(factor_parity(u.spec(u.at("one")), 2) == -1);
  CHECK(factor_parity(u.spec(u.at("one")), 1) == 1);
  CHECK(factor_parity(u.spec(u.at("rho2")), 6) == -1);
  CHECK(factor_parity(u.spec(u.at("one!chi")), 1) == -1);
  CHECK_THROWS_AS(factor_parity(u.spec(u.at("pi3")), 1), Error);
}

TEST_CASE("classification examples") {
  const Universe u = testing::one_line();
  const Universe s = testing::sigma_line();

  const BaseChangeClass points = bc_class(ms(u, "[-1/2]@one + [1/2]@one"), u);
  CHECK(points.tag == BcTag::Both);
  CHECK(points.s == 0);

  const BaseChangeClass st = bc_class(ms(u, "[-1/2,1/2]@one"), u);
  CHECK(st.tag == BcTag::StableOnly);
  CHECK(st.n == 2);
  CHECK(st.parity_set == std::set<int>{-1});

  CHECK(bc_class(ms(s, "[-1,0]@sigma + [0,1]@sigma"), s).tag == BcTag::Both);

  const BaseChangeClass theta = bc_class(ms(s, testing::kTheta), s);
  CHECK(theta.tag == BcTag::StableOnly);
  CHECK(theta.s == 1);
  CHECK(theta.n == 40);
  CHECK(theta.parity_set == std::set<int>{-1});

  CHECK(bc_class(ms(u, "[0,1]@one"), u).tag == BcTag::NotConjSelfDual);

  const Universe m = testing::mixed();
  CHECK(bc_class(ms(m, "[0]@one + [0]@rho2!chi"), m).tag == BcTag::ConjSelfDualNoParity);
  CHECK(bc_class(ms(m, "[0]@pi3 + [0]@pi3b"), m).tag == BcTag::Both);
  CHECK_THROWS_AS(bc_class(MultiSegment{}, m), Error);
}

TEST_CASE("image membership") {
  BaseChangeClass c;
  c.tag = BcTag::Both;
  CHECK(in_image_of(c, BcTag::StableOnly));
  CHECK(in_image_of(c, BcTag::UnstableOnly));
  c.tag = BcTag::StableOnly;
  CHECK(in_image_of(c, BcTag::StableOnly));
  CHECK_FALSE(in_image_of(c, BcTag::UnstableOnly));
}

TEST_CASE("dual of the Steinberg-shaped case stays in the stable image") {
  const Universe u = testing::one_line();
  const MultiSegment m = ms(u, "[-1/2,1/2]@one");
  const BaseChangeClass c = bc_class(m, u);
  const BaseChangeClass d = bc_class(zelevinsky_dual(m), u);
  CHECK(c.tag == BcTag::StableOnly);
  CHECK(d.tag == BcTag::Both);
  CHECK(in_image_of(d, c.tag));
}

TEST_CASE("agrees with the reference classification") {
  for (int eta0 : {1, -1}) {
    for (int deg : {1, 2}) {
      const Universe u({LineSpec{"one", deg, SelfDual{eta0, 0}}});
      EnumSpec spec{{u.at("one")}, HalfInt::from_int(-2), HalfInt::from_int(2), 4, LatticeMode::Both};
      MultisegmentEnumerator en(spec);
      MultiSegment m;
      while (en.next(m)) {
        if (m.empty() || !is_rigid(m)) continue;
        REQUIRE_MESSAGE(bc_class(m, u).tag == reference_class(m, eta0, deg), format_multisegment(m, u));
      }
    }
  }
}

TEST_CASE("relabeling lines does not change the class") {
  const Universe a = testing::one_line();
  const Universe b({LineSpec{"zz", 1, SelfDual{1, 0}}, LineSpec{"aa", 3, SelfDual{-1, 1}}});
  EnumSpec spec{{a.at("one")}, HalfInt::from_int(-2), HalfInt::from_int(2), 3, LatticeMode::Both};
  for (const MultiSegment& m : enumerate_multisegments(spec)) {
    if (m.empty()) continue;
    std::vector<Segment> moved;
    for (const Segment& s : m) moved.emplace_back(b.at("zz"), s.b(), s.e());
    CHECK(bc_class(MultiSegment(moved), b) == bc_class(m, a));
  }
}
