#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "affdev/errors.hpp"
#include "affdev/interval.hpp"

namespace affdev {

inline constexpr int kMaxVars = 8;
using Exponents = std::array<std::uint8_t, kMaxVars>;

/// Sparse multivariate polynomial with interval coefficients. Coefficients
/// are intervals so that enclosures computed downstream account for the
/// rounding already committed while building a system from measured
/// distances.
class Poly {
public:
    struct Term {
        Exponents e{};
        Interval c;
    };

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, Interval c)
    {
        Poly p(nvars);
        if (!(c.lo == 0.0 && c.hi == 0.0)) p.terms_.push_back({Exponents{}, c});
        return p;
    }

    static Poly variable(int nvars, int idx, Interval coeff = Interval(1.0))
    {
        Poly p(nvars);
        Exponents e{};
        e[std::size_t(idx)] = 1;
        p.terms_.push_back({e, coeff});
        return p;
    }

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        Poly r(std::max(a.nvars_, b.nvars_));
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].e < b.terms_[j].e))
                r.terms_.push_back(a.terms_[i++]);
            else if (i == a.terms_.size() || b.terms_[j].e < a.terms_[i].e)
                r.terms_.push_back(b.terms_[j++]);
            else {
                Interval c = a.terms_[i].c + b.terms_[j].c;
                if (!(c.lo == 0.0 && c.hi == 0.0)) r.terms_.push_back({a.terms_[i].e, c});
                ++i;
                ++j;
            }
        }
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r(std::max(a.nvars_, b.nvars_));
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Term t;
                for (int v = 0; v < kMaxVars; ++v)
                    t.e[std::size_t(v)] =
                        std::uint8_t(ta.e[std::size_t(v)] + tb.e[std::size_t(v)]);
                t.c = ta.c * tb.c;
                prod.push_back(t);
            }
        std::sort(prod.begin(), prod.end(),
                  [](const Term& x, const Term& y) { return x.e < y.e; });
        for (const auto& t : prod) {
            if (!r.terms_.empty() && r.terms_.back().e == t.e)
                r.terms_.back().c += t.c;
            else
                r.terms_.push_back(t);
        }
        std::erase_if(r.terms_, [](const Term& t) { return t.c.lo == 0.0 && t.c.hi == 0.0; });
        return r;
    }

    Poly scaled(Interval s) const
    {
        Poly r = *this;
        for (auto& t : r.terms_) t.c *= s;
        return r;
    }

    int degree(int var) const
    {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, int(t.e[std::size_t(var)]));
        return d;
    }

    /// Conservative enclosure of the value over a box.
    Interval eval(std::span<const Interval> x) const
    {
        Interval acc(0.0);
        for (const auto& t : terms_) {
            Interval m = t.c;
            for (int v = 0; v < nvars_; ++v) {
                const int e = t.e[std::size_t(v)];
                if (e == 0) continue;
                if (e == 1)
                    m *= x[std::size_t(v)];
                else if (e == 2)
                    m *= square(x[std::size_t(v)]);
                else
                    m *= pow_nonneg(x[std::size_t(v)], unsigned(e));
            }
            acc += m;
        }
        return acc;
    }

    /// Midpoint-coefficient value at a point.
    double eval_mid(std::span<const double> x) const
    {
        double acc = 0.0;
        for (const auto& t : terms_) {
            double m = t.c.mid();
            for (int v = 0; v < nvars_; ++v)
                for (int e = 0; e < t.e[std::size_t(v)]; ++e) m *= x[std::size_t(v)];
            acc += m;
        }
        return acc;
    }

    /// Sum of absolute term magnitudes at a point; the natural scale for
    /// relative residuals.
    double eval_abs(std::span<const double> x) const
    {
        double acc = 0.0;
        for (const auto& t : terms_) {
            double m = std::fabs(t.c.mid());
            for (int v = 0; v < nvars_; ++v)
                for (int e = 0; e < t.e[std::size_t(v)]; ++e) m *= std::fabs(x[std::size_t(v)]);
            acc += m;
        }
        return acc;
    }

    Poly derivative(int var) const
    {
        Poly r(nvars_);
        for (const auto& t : terms_) {
            const int e = t.e[std::size_t(var)];
            if (e == 0) continue;
            Term d = t;
            d.e[std::size_t(var)] = std::uint8_t(e - 1);
            d.c *= Interval(double(e));
            r.terms_.push_back(d);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return x.e < y.e; });
        return r;
    }

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Determinant of an n x n matrix of polynomials (row-major), by minor
/// expansion. Division-free, so interval coefficients stay valid.
inline Poly det_poly(const std::vector<Poly>& a, int n)
{
    if (n == 1) return a[0];
    struct Rec {
        const std::vector<Poly>& a;
        int n;
        Poly run(int row, std::vector<int>& cols)
        {
            const int m = n - row;
            if (m == 1) return a[std::size_t(row * n + cols[0])];
            Poly acc(a[0].nvars());
            for (int ci = 0; ci < m; ++ci) {
                const Poly& pivot = a[std::size_t(row * n + cols[std::size_t(ci)])];
                if (pivot.is_zero()) continue;
                const int saved = cols[std::size_t(ci)];
                cols.erase(cols.begin() + ci);
                Poly sub = run(row + 1, cols);
                cols.insert(cols.begin() + ci, saved);
                Poly term = pivot * sub;
                acc = (ci % 2 == 1) ? acc - term : acc + term;
            }
            return acc;
        }
    } rec{a, n};
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[std::size_t(i)] = i;
    return rec.run(0, cols);
}

}  // namespace affdev
