#include "zelcalc/segment.hpp"

#include <algorithm>
#include <string>

#include "zelcalc/errors.hpp"

namespace zelcalc {

Segment::Segment(LineId line, HalfInt b, HalfInt e) : line_(line), b_(b), e_(e) {
  if (b > e) {
    throw Error(ErrorCode::EmptySegment, "segment [" + b.str() + "," + e.str() + "] is empty");
  }
  if (!(e - b).is_integral()) {
    throw Error(ErrorCode::LatticeMismatch,
                "segment [" + b.str() + "," + e.str() + "] mixes integral and half-integral exponents");
  }
}

bool canonical_less(const Segment& x, const Segment& y) {
  if (x.line() != y.line()) return x.line() < y.line();
  if (x.b() != y.b()) return x.b() > y.b();
  return x.e() > y.e();
}

MultiSegment::MultiSegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end(), canonical_less);
}

MultiSegment MultiSegment::operator+(const MultiSegment& other) const {
  std::vector<Segment> all = segments_;
  all.insert(all.end(), other.segments_.begin(), other.segments_.end());
  return MultiSegment(std::move(all));
}

bool MultiSegment::operator<(const MultiSegment& other) const {
  return std::lexicographical_compare(segments_.begin(), segments_.end(), other.segments_.begin(),
                                      other.segments_.end(), canonical_less);
}

RepSpec::RepSpec(std::vector<MultiSegment> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].empty()) {
      throw Error(ErrorCode::EmptyInput, "factor " + std::to_string(i + 1) + " is empty");
    }
  }
}

MultiSegment RepSpec::concatenated() const {
  std::vector<Segment> all;
  for (const MultiSegment& f : factors_) all.insert(all.end(), f.begin(), f.end());
  return MultiSegment(std::move(all));
}

Segment make_segment(const Universe& u, std::string_view line, HalfInt b, HalfInt e) {
  return Segment(u.at(line), b, e);
}

bool is_linked(const Segment& d1, const Segment& d2) {
  if (d1.key() != d2.key()) return false;
  if (d1.contains(d2) || d2.contains(d1)) return false;
  return d2.b() <= d1.e() + 1 && d1.b() <= d2.e() + 1;
}

bool precedes(const Segment& d1, const Segment& d2) {
  return is_linked(d1, d2) && d1.b() < d2.b();
}

std::vector<Segment> standard_order(const MultiSegment& m) {
  std::vector<Segment> order = m.segments();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (precedes(order[i], order[j])) {
        throw Error(ErrorCode::ConsistencyViolation, "canonical order is not a standard order");
      }
    }
  }
  return order;
}

std::set<Point> supp(const MultiSegment& m) {
  std::set<Point> out;
  for (const auto& [p, count] : support_multiplicities(m)) out.insert(p);
  return out;
}

std::map<Point, int> support_multiplicities(const MultiSegment& m) {
  std::map<Point, int> out;
  for (const Segment& s : m) {
    for (HalfInt x = s.b(); x <= s.e(); x = x + 1) ++out[Point{s.line(), x}];
  }
  return out;
}

bool is_rigid(const MultiSegment& m) {
  return std::all_of(m.begin(), m.end(), [&](const Segment& s) { return s.key() == m[0].key(); });
}

MultiSegment conj_dual(const MultiSegment& m, const Universe& u) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const Segment& s : m) out.emplace_back(u.dual_line(s.line()), -s.e(), -s.b());
  return MultiSegment(std::move(out));
}

bool is_conj_self_dual(const MultiSegment& m, const Universe& u) {
  return conj_dual(m, u) == m;
}

namespace {

void require_self_lines(const MultiSegment& m, const Universe& u) {
  for (const Segment& s : m) {
    if (!u.spec(s.line()).is_self()) {
      throw Error(ErrorCode::NotSelfDualLine,
                  "line '" + u.name(s.line()) + "' has no separate contragredient or Galois action");
    }
  }
}

}  // namespace

MultiSegment contragredient(const MultiSegment& m, const Universe& u) {
  require_self_lines(m, u);
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const Segment& s : m) out.emplace_back(s.line(), -s.e(), -s.b());
  return MultiSegment(std::move(out));
}

MultiSegment tau_conj(const MultiSegment& m, const Universe& u) {
  require_self_lines(m, u);
  return m;
}

LineId chi_twist_line(const Universe& u, LineId line) { return u.chi_line(line); }

MultiSegment chi_twist(const MultiSegment& m, const Universe& u) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const Segment& s : m) out.emplace_back(u.chi_line(s.line()), s.b(), s.e());
  return MultiSegment(std::move(out));
}

}  // namespace zelcalc
