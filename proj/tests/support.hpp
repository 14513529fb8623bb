#pragma once

#include <string_view>

#include "zelcalc/dsl.hpp"
#include "zelcalc/universe.hpp"

namespace testing {

using namespace zelcalc;

inline Universe one_line(int eta0 = 1, int dist_a = 0) {
  return Universe({LineSpec{"one", 1, SelfDual{eta0, dist_a}}});
}

inline Universe sigma_line(int eta0 = 1, int dist_a = 0) {
  return Universe({LineSpec{"sigma", 2, SelfDual{eta0, dist_a}}});
}

// one, rho2 (deg 2) and a partner pair pi3 / pi3b.
inline Universe mixed() {
  return Universe({LineSpec{"one", 1, SelfDual{1, 0}}, LineSpec{"rho2", 2, SelfDual{1, 0}},
                   LineSpec{"pi3", 3, PartnerOf{"pi3b"}}, LineSpec{"pi3b", 3, PartnerOf{"pi3"}}});
}

inline MultiSegment ms(const Universe& u, std::string_view text) { return parse_multisegment(text, u); }
inline RepSpec rep(const Universe& u, std::string_view text) { return parse_rep(text, u); }

inline constexpr std::string_view kTheta =
    "[1/2,3/2]@sigma + [-1/2,7/2]@sigma + [-3/2,-1/2]@sigma + [-5/2,5/2]@sigma + [-7/2,1/2]@sigma";

}  // namespace testing
