#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "zelcalc/half_int.hpp"
#include "zelcalc/universe.hpp"

namespace zelcalc {

enum class Lattice { Integral, Half };

// Effective cuspidal line: a line id together with its exponent lattice.
// sigma^Z and (nu^{1/2} sigma)^Z are distinct lines.
struct LineKey {
  LineId line;
  Lattice lattice = Lattice::Integral;

  auto operator<=>(const LineKey&) const = default;
};

// The segment [nu^b sigma, ..., nu^e sigma] on a line, b <= e, e - b integral.
class Segment {
 public:
  // Throws Error(EmptySegment) if b > e, Error(LatticeMismatch) if e - b is not integral.
  Segment(LineId line, HalfInt b, HalfInt e);

  LineId line() const { return line_; }
  HalfInt b() const { return b_; }
  HalfInt e() const { return e_; }
  std::int64_t length() const { return (e_ - b_).doubled() / 2 + 1; }
  Lattice lattice() const { return b_.is_integral() ? Lattice::Integral : Lattice::Half; }
  LineKey key() const { return {line_, lattice()}; }

  bool contains(HalfInt x) const { return b_ <= x && x <= e_ && (x - b_).is_integral(); }
  bool contains(const Segment& o) const {
    return line_ == o.line_ && lattice() == o.lattice() && b_ <= o.b_ && o.e_ <= e_;
  }

  bool operator==(const Segment&) const = default;

 private:
  LineId line_;
  HalfInt b_;
  HalfInt e_;
};

// Canonical multiset order: line id ascending, then b descending, then e descending.
bool canonical_less(const Segment& x, const Segment& y);

// Finite multiset of segments, kept in canonical order.
class MultiSegment {
 public:
  MultiSegment() = default;
  explicit MultiSegment(std::vector<Segment> segments);
  MultiSegment(std::initializer_list<Segment> segments)
      : MultiSegment(std::vector<Segment>(segments)) {}

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  auto begin() const { return segments_.begin(); }
  auto end() const { return segments_.end(); }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }

  // Multiset sum.
  MultiSegment operator+(const MultiSegment& other) const;

  bool operator==(const MultiSegment&) const = default;
  // Total order used for grouping and deterministic output.
  bool operator<(const MultiSegment& other) const;

 private:
  std::vector<Segment> segments_;
};

// pi_1 x ... x pi_k as an ordered list of nonempty factors.
class RepSpec {
 public:
  RepSpec() = default;
  // Throws Error(EmptyInput) on an empty factor.
  explicit RepSpec(std::vector<MultiSegment> factors);

  const std::vector<MultiSegment>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const MultiSegment& operator[](std::size_t i) const { return factors_[i]; }

  // Sum of all factors.
  MultiSegment concatenated() const;

  bool operator==(const RepSpec&) const = default;

 private:
  std::vector<MultiSegment> factors_;
};

// A cuspidal point nu^x sigma on a line.
struct Point {
  LineId line;
  HalfInt x;

  auto operator<=>(const Point&) const = default;
};

Segment make_segment(const Universe& u, std::string_view line, HalfInt b, HalfInt e);

bool is_linked(const Segment& d1, const Segment& d2);
// d1 precedes d2: linked and the union starts where d1 starts.
bool precedes(const Segment& d1, const Segment& d2);

// An order in which no segment precedes a later one.
std::vector<Segment> standard_order(const MultiSegment& m);

std::set<Point> supp(const MultiSegment& m);
// How many segments cover each point.
std::map<Point, int> support_multiplicities(const MultiSegment& m);
bool is_rigid(const MultiSegment& m);

// Segmentwise [b,e]@L -> [-e,-b]@dual(L).
MultiSegment conj_dual(const MultiSegment& m, const Universe& u);
bool is_conj_self_dual(const MultiSegment& m, const Universe& u);
// Defined for Self lines only, where both fix the line; throw Error(NotSelfDualLine) otherwise.
MultiSegment contragredient(const MultiSegment& m, const Universe& u);
MultiSegment tau_conj(const MultiSegment& m, const Universe& u);

LineId chi_twist_line(const Universe& u, LineId line);
MultiSegment chi_twist(const MultiSegment& m, const Universe& u);

}  // namespace zelcalc
