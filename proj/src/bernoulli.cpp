#include "genera/bernoulli.hpp"

#include <stdexcept>

#include "genera/formal_series.hpp"

namespace genera {

Rational bernoulli(int two_n) {
    if (two_n <= 0 || two_n % 2 != 0)
        throw std::domain_error("bernoulli expects an even positive index");
    // (e^x - 1)/x = sum_k x^k/(k+1)!; its reciprocal has coefficients B_k/k!.
    Series<Rational> den(two_n);
    for (int k = 0; k <= two_n; ++k)
        den[k] = Rational(1) / Rational(factorial(static_cast<unsigned long>(k + 1)));
    Series<Rational> inv = Series<Rational>::one(two_n).divided_by(den);
    return inv[two_n] * Rational(factorial(static_cast<unsigned long>(two_n)));
}

} // namespace genera
