#include "zelcalc/half_int.hpp"

namespace zelcalc {

std::string HalfInt::str() const {
  if (is_integral()) return std::to_string(doubled_ / 2);
  return std::to_string(doubled_) + "/2";
}

}  // namespace zelcalc
