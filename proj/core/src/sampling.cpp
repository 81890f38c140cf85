#include "cevian/sampling.hpp"

#include "cevian/error.hpp"

namespace cevian {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = Rng::max() - Rng::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational random_nonzero_rational(Rng& rng) {
  std::int64_t num = 0;
  while (num == 0) num = uniform_int(rng, -9, 9);
  return make_rational(num, uniform_int(rng, 1, 6));
}

Rational random_rescale_factor(Rng& rng) {
  Rational factor = 1;
  while (factor == 1) factor = random_nonzero_rational(rng);
  return factor;
}

}  // namespace cevian
