#pragma once

#include "genera/rational.hpp"

namespace genera {

// B_{2n} for even positive input 2n, from x/(e^x - 1) by exact series
// inversion. bernoulli(2) = 1/6, bernoulli(4) = -1/30.
Rational bernoulli(int two_n);

} // namespace genera
