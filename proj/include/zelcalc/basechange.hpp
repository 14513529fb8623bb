#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "zelcalc/segment.hpp"
#include "zelcalc/universe.hpp"

namespace zelcalc {

// One summand rec(nu^center sigma) (x) Sp(sp) of the Weil-Deligne parameter, with multiplicity.
struct ParamFactor {
  LineId line;
  HalfInt center;
  int sp = 1;
  int mult = 1;

  bool operator==(const ParamFactor&) const = default;
};

enum class BcTag { NotConjSelfDual, StableOnly, UnstableOnly, Both, ConjSelfDualNoParity };

std::string_view to_string(BcTag tag);

struct BaseChangeClass {
  BcTag tag = BcTag::NotConjSelfDual;
  std::int64_t n = 0;         // GL_n(E) size
  std::set<int> parity_set;   // parities of the odd-multiplicity conjugate self-dual factors
  int s = 0;                  // number of such factor types

  bool operator==(const BaseChangeClass&) const = default;
};

// One factor per segment: center (b+e)/2, Sp(e-b+1); equal factors merged.
// Listed in the canonical order of the segments they come from.
std::vector<ParamFactor> param_factors(const MultiSegment& m);

// n = sum of deg(line) * length. Throws Error(EmptyInput) on an empty multisegment.
std::int64_t total_degree(const MultiSegment& m, const Universe& u);

// eta0 * (-1)^(sp-1). Throws Error(NotSelfDualLine) for a paired line.
int factor_parity(const LineSpec& line, int sp);

// Which of the stable / unstable base change images contain L(m).
BaseChangeClass bc_class(const MultiSegment& m, const Universe& u);

// True when the image of the given single-image class contains L(m) (class equal or Both).
bool in_image_of(const BaseChangeClass& c, BcTag single_image);

}  // namespace zelcalc
