#include "xta/random.hpp"

#include <cmath>

namespace xta {

std::uint64_t one_in_threshold(double p) {
  const long double t = std::floor(std::ldexp(1.0L, 64) / static_cast<long double>(p));
  if (t >= std::ldexp(1.0L, 64)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(t);
}

bool one_in(std::uint64_t draw, double p) {
  if (p <= 1.0) return true;
  return draw < one_in_threshold(p);
}

}  // namespace xta
