#pragma once

#include <stdexcept>
#include <vector>

#include "genera/rational.hpp"

namespace genera {

// Truncated formal power series sum c_k x^k, k = 0..order, over a
// commutative ring R. R must be constructible from int, support + - * with
// itself, and support * by Rational (exact scalar action). Everything here
// is the plain O(order^2) recurrence arithmetic; no analysis.
template <class R>
class Series {
public:
    explicit Series(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1, R(0)) {}

    static Series one(int order) {
        Series s(order);
        s[0] = R(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    R& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const R& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

    Series operator+(const Series& o) const {
        Series r = matched(o);
        for (int k = 0; k <= order(); ++k) r[k] = c_[static_cast<std::size_t>(k)] + o[k];
        return r;
    }

    Series operator-(const Series& o) const {
        Series r = matched(o);
        for (int k = 0; k <= order(); ++k) r[k] = c_[static_cast<std::size_t>(k)] - o[k];
        return r;
    }

    Series operator*(const Series& o) const {
        Series r = matched(o);
        for (int i = 0; i <= order(); ++i) {
            if (c_[static_cast<std::size_t>(i)] == R(0)) continue;
            for (int j = 0; i + j <= order(); ++j)
                r[i + j] = r[i + j] + c_[static_cast<std::size_t>(i)] * o[j];
        }
        return r;
    }

    // this / den where den has constant term 1: q_n = a_n - sum b_k q_{n-k}.
    Series divided_by(const Series& den) const {
        matched(den);
        if (!(den[0] == R(1))) throw std::domain_error("series division needs constant term 1");
        Series q(order());
        for (int n = 0; n <= order(); ++n) {
            R v = c_[static_cast<std::size_t>(n)];
            for (int k = 1; k <= n; ++k) v = v - den[k] * q[n - k];
            q[n] = v;
        }
        return q;
    }

    // log of a series with constant term 1:
    // n L_n = n S_n - sum_{k=1}^{n-1} (n-k) S_k L_{n-k}.
    Series log() const {
        if (!(c_[0] == R(1))) throw std::domain_error("series log needs constant term 1");
        Series l(order());
        for (int n = 1; n <= order(); ++n) {
            R v = c_[static_cast<std::size_t>(n)] * Rational(n);
            for (int k = 1; k < n; ++k) v = v - c_[static_cast<std::size_t>(k)] * l[n - k] * Rational(n - k);
            l[n] = v * rat(1, n);
        }
        return l;
    }

    // exp of a series with constant term 0: n E_n = sum_{k=1}^{n} k S_k E_{n-k}.
    Series exp() const {
        if (!(c_[0] == R(0))) throw std::domain_error("series exp needs constant term 0");
        Series e(order());
        e[0] = R(1);
        for (int n = 1; n <= order(); ++n) {
            R v(0);
            for (int k = 1; k <= n; ++k) v = v + c_[static_cast<std::size_t>(k)] * e[n - k] * Rational(k);
            e[n] = v * rat(1, n);
        }
        return e;
    }

    // Square root with constant term +1 (principal branch), via the binomial
    // series sum_k C(1/2, k) (S - 1)^k; exact since (S - 1)^k starts at x^k.
    Series sqrt() const {
        if (!(c_[0] == R(1))) throw std::domain_error("series sqrt needs constant term 1");
        Series t = *this;
        t[0] = R(0);
        Series acc = one(order());
        Series power = one(order());
        Rational binom(1);
        for (int k = 1; k <= order(); ++k) {
            binom *= (rat(1, 2) - Rational(k - 1)) / Rational(k);
            power = power * t;
            acc = acc + power * binom;
        }
        return acc;
    }

    // d/dx, exact through order() - 1; the top coefficient is unknowable at
    // this truncation and the result order shrinks accordingly.
    Series derivative() const {
        Series d(order() > 0 ? order() - 1 : 0);
        for (int k = 1; k <= order(); ++k) d[k - 1] = c_[static_cast<std::size_t>(k)] * Rational(k);
        return d;
    }

    // S(c x)
    Series compose_scalar(const Rational& c) const {
        Series r(order());
        Rational p(1);
        for (int k = 0; k <= order(); ++k) {
            r[k] = c_[static_cast<std::size_t>(k)] * p;
            p *= c;
        }
        return r;
    }

    Series operator*(const Rational& q) const {
        Series r(order());
        for (int k = 0; k <= order(); ++k) r[k] = c_[static_cast<std::size_t>(k)] * q;
        return r;
    }

    bool operator==(const Series& o) const { return c_ == o.c_; }

private:
    static int check_order(int order) {
        if (order < 0) throw std::domain_error("series order must be non-negative");
        return order;
    }
    Series matched(const Series& o) const {
        if (order() != o.order()) throw std::invalid_argument("series orders differ");
        return Series(order());
    }

    std::vector<R> c_;
};

} // namespace genera
