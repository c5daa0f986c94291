#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "genera/rational.hpp"

namespace genera {

// Exact multivariate polynomial in a fixed number of variables over a
// coefficient ring R: exponent vector -> coefficient, no zeros stored.
template <class R>
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(check_vars(nvars)) {}

    static MultiPoly constant(int nvars, const R& c) {
        MultiPoly p(nvars);
        p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static MultiPoly monomial(int nvars, std::vector<int> expo, const R& c) {
        MultiPoly p(nvars);
        p.add_term(std::move(expo), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> expo, const R& c) {
        if (static_cast<int>(expo.size()) != nvars_)
            throw std::domain_error("exponent vector length mismatch");
        for (int e : expo)
            if (e < 0) throw std::domain_error("negative exponent");
        if (c == R(0)) return;
        auto it = terms_.find(expo);
        if (it == terms_.end()) {
            terms_.emplace(std::move(expo), c);
        } else {
            it->second = it->second + c;
            if (it->second == R(0)) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.matched(*this).terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.matched(*this).terms_) r.add_term(e, R(0) - c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const { return times_truncated(o, -1); }

    // Product keeping only total degree <= maxdeg (maxdeg < 0: keep all).
    MultiPoly times_truncated(const MultiPoly& o, int maxdeg) const {
        matched(o);
        MultiPoly r(nvars_);
        for (const auto& [ea, ca] : terms_) {
            int da = degree_of(ea);
            for (const auto& [eb, cb] : o.terms_) {
                if (maxdeg >= 0 && da + degree_of(eb) > maxdeg) continue;
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    MultiPoly truncated(int maxdeg) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (degree_of(e) <= maxdeg) r.add_term(e, c);
        return r;
    }

    MultiPoly homogeneous_part(int d) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (degree_of(e) == d) r.add_term(e, c);
        return r;
    }

    MultiPoly operator*(const R& s) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    static int degree_of(const std::vector<int>& e) {
        return std::accumulate(e.begin(), e.end(), 0);
    }

private:
    static int check_vars(int n) {
        if (n < 0) throw std::domain_error("variable count must be non-negative");
        return n;
    }
    const MultiPoly& matched(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::domain_error("variable counts differ");
        return *this;
    }

    int nvars_;
    std::map<std::vector<int>, R> terms_;
};

} // namespace genera
