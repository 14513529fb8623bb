#include "zelcalc/basechange.hpp"

#include "zelcalc/errors.hpp"

namespace zelcalc {

std::string_view to_string(BcTag tag) {
  switch (tag) {
    case BcTag::NotConjSelfDual: return "NotConjSelfDual";
    case BcTag::StableOnly: return "StableOnly";
    case BcTag::UnstableOnly: return "UnstableOnly";
    case BcTag::Both: return "Both";
    case BcTag::ConjSelfDualNoParity: return "ConjSelfDualNoParity";
  }
  return "Unknown";
}

std::vector<ParamFactor> param_factors(const MultiSegment& m) {
  // (line, center, sp) determines (line, b, e), and equal segments are adjacent in canonical order.
  std::vector<ParamFactor> out;
  const Segment* prev = nullptr;
  for (const Segment& s : m) {
    if (prev && *prev == s) {
      ++out.back().mult;
    } else {
      HalfInt center = HalfInt::from_doubled((s.b().doubled() + s.e().doubled()) / 2);
      out.push_back(ParamFactor{s.line(), center, static_cast<int>(s.length()), 1});
    }
    prev = &s;
  }
  return out;
}

std::int64_t total_degree(const MultiSegment& m, const Universe& u) {
  if (m.empty()) throw Error(ErrorCode::EmptyInput, "total degree of the empty multisegment");
  std::int64_t n = 0;
  for (const Segment& s : m) n += u.spec(s.line()).deg * s.length();
  return n;
}

int factor_parity(const LineSpec& line, int sp) {
  if (!line.is_self()) {
    throw Error(ErrorCode::NotSelfDualLine, "line '" + line.id + "' has no conjugate self-dual point");
  }
  return (sp - 1) % 2 == 0 ? line.self().eta0 : -line.self().eta0;
}

BaseChangeClass bc_class(const MultiSegment& m, const Universe& u) {
  BaseChangeClass c;
  c.n = total_degree(m, u);
  if (!is_conj_self_dual(m, u)) {
    c.tag = BcTag::NotConjSelfDual;
    return c;
  }
  for (const ParamFactor& f : param_factors(m)) {
    const LineSpec& spec = u.spec(f.line);
    if (!spec.is_self() || f.center != HalfInt{} || f.mult % 2 == 0) continue;
    ++c.s;
    c.parity_set.insert(factor_parity(spec, f.sp));
  }
  if (c.parity_set.empty()) {
    c.tag = BcTag::Both;
  } else if (c.parity_set.size() == 2) {
    c.tag = BcTag::ConjSelfDualNoParity;
  } else {
    const int eta = *c.parity_set.begin();
    const int stable = c.n % 2 == 1 ? 1 : -1;  // (-1)^(n-1)
    c.tag = eta == stable ? BcTag::StableOnly : BcTag::UnstableOnly;
  }
  return c;
}

bool in_image_of(const BaseChangeClass& c, BcTag single_image) {
  return c.tag == single_image || c.tag == BcTag::Both;
}

}  // namespace zelcalc
