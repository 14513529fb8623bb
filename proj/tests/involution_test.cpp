#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "zelcalc/involution.hpp"
#include "zelcalc/testkit.hpp"

using namespace zelcalc;
using testing::ms;

namespace {

// Reference dual on a single effective line, written against plain (b, e) pairs of
// doubled exponents. Each round takes the longest chain of segments with ends
// e, e-1, ... whose beginnings strictly decrease, choosing the latest-starting
// candidate each time, and emits [e - r + 1, e].
using Pairs = std::vector<std::pair<long, long>>;

Pairs reference_dual(Pairs m) {
  Pairs out;
  while (!m.empty()) {
    std::sort(m.begin(), m.end(), [](auto x, auto y) { return x.second != y.second ? x.second > y.second : x.first > y.first; });
    std::vector<std::size_t> chain{0};
    for (std::size_t i = 1; i < m.size(); ++i) {
      const auto& last = m[chain.back()];
      // sorted by e desc then b desc: the first hit at e-1 with smaller b is the maximal b
      if (m[i].second == last.second - 2 && m[i].first < last.first) chain.push_back(i);
    }
    const long e = m[0].second;
    out.emplace_back(e - 2 * static_cast<long>(chain.size() - 1), e);
    for (std::size_t i : chain) m[i].second -= 2;
    std::erase_if(m, [](auto p) { return p.first > p.second; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pairs pairs_of(const MultiSegment& m) {
  Pairs out;
  for (const Segment& s : m) out.emplace_back(s.b().doubled(), s.e().doubled());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hand-traced duals") {
  const Universe u = testing::one_line();
  CHECK(zelevinsky_dual(ms(u, "[0,2]@one")) == ms(u, "[0]@one + [1]@one + [2]@one"));
  CHECK(zelevinsky_dual(ms(u, "[0,1]@one + [1,2]@one")) == ms(u, "[0,1]@one + [1,2]@one"));
  CHECK(zelevinsky_dual(ms(u, "[0,2]@one + [1,1]@one")) == ms(u, "[0]@one + [1]@one + [1]@one + [2]@one"));
  CHECK(zelevinsky_dual(ms(u, "[0]@one + [1]@one + [1]@one + [2]@one")) == ms(u, "[0,2]@one + [1,1]@one"));
  CHECK(zelevinsky_dual(MultiSegment{}).empty());
}

TEST_CASE("trace of [0,1] + [1,2]") {
  const Universe u = testing::one_line();
  const MwResult r = mw_dual(ms(u, "[0,1]@one + [1,2]@one"));
  REQUIRE(r.trace.rounds.size() == 2);
  const MwRound& first = r.trace.rounds[0];
  REQUIRE(first.chain.size() == 2);
  CHECK(first.chain[0] == make_segment(u, "one", 1_h, 2_h));
  CHECK(first.chain[1] == make_segment(u, "one", 0_h, 1_h));
  CHECK(first.produced == make_segment(u, "one", 1_h, 2_h));
  CHECK(first.residue == ms(u, "[0]@one + [1]@one"));
  CHECK(r.trace.rounds[1].produced == make_segment(u, "one", 0_h, 1_h));
  CHECK(r.trace.rounds[1].residue.empty());

  MultiSegment joined;
  for (const MwRound& round : r.trace.rounds) joined = joined + MultiSegment{round.produced};
  CHECK(joined == r.dual);
}

TEST_CASE("equal beginnings do not chain") {
  // [0,1] then [0]: a non-strict rule chains them and both inputs below collapse to one output
  const Universe u = testing::one_line();
  const MultiSegment a = ms(u, "[0,1]@one + [0]@one");
  const MultiSegment b = ms(u, "[1]@one + [0]@one + [0]@one");
  CHECK(zelevinsky_dual(a) == b);
  CHECK(zelevinsky_dual(b) == a);
  CHECK(zelevinsky_dual(a, MwRule::ShortestNonStrict) == a);
  CHECK(zelevinsky_dual(b, MwRule::ShortestNonStrict) == a);
}

TEST_CASE("lines are processed independently") {
  const Universe u = testing::mixed();
  const MultiSegment m = ms(u, "[0,1]@one + [1/2]@one + [0,2]@rho2 + [3]@pi3");
  CHECK(zelevinsky_dual(m) ==
        ms(u, "[0]@one + [1]@one + [1/2]@one + [0]@rho2 + [1]@rho2 + [2]@rho2 + [3]@pi3"));
  CHECK(mw_dual(m).trace.rounds.size() == 7);
}

TEST_CASE("agrees with the reference dual") {
  const Universe u = testing::one_line();
  for (LatticeMode lattice : {LatticeMode::Int, LatticeMode::Half}) {
    EnumSpec spec{{u.at("one")}, HalfInt::from_int(-2), HalfInt::from_int(2), 4, lattice};
    MultisegmentEnumerator en(spec);
    MultiSegment m;
    while (en.next(m)) {
      const MultiSegment d = zelevinsky_dual(m);
      REQUIRE_MESSAGE(pairs_of(d) == reference_dual(pairs_of(m)), format_multisegment(m, u));
    }
  }
}

TEST_CASE("single segments and point runs") {
  const Universe u = testing::one_line();
  for (int b = -4; b <= 4; ++b) {
    for (int e = b; e <= 4; ++e) {
      const MultiSegment seg{Segment(u.at("one"), HalfInt::from_int(b), HalfInt::from_int(e))};
      std::vector<Segment> points;
      for (int x = b; x <= e; ++x) points.emplace_back(u.at("one"), HalfInt::from_int(x), HalfInt::from_int(x));
      CHECK(zelevinsky_dual(seg) == MultiSegment(points));
      CHECK(zelevinsky_dual(MultiSegment(points)) == seg);
    }
  }
}

TEST_CASE("wrong rules break the involution") {
  const Universe u = testing::one_line();
  const MultiSegment m = ms(u, "[1]@one + [0]@one + [0]@one");
  CHECK(zelevinsky_dual(zelevinsky_dual(m, MwRule::ShortestNonStrict), MwRule::ShortestNonStrict) != m);
  bool longest_broken = false;
  EnumSpec spec{{u.at("one")}, HalfInt::from_int(-1), HalfInt::from_int(1), 3, LatticeMode::Int};
  for (const MultiSegment& x : enumerate_multisegments(spec)) {
    longest_broken |= zelevinsky_dual(zelevinsky_dual(x, MwRule::Longest), MwRule::Longest) != x;
  }
  CHECK(longest_broken);
}
