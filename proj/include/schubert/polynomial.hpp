#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/monomial.hpp"
#include "schubert/permutation.hpp"

// Exact sparse multivariate integer polynomials, divided differences, and
// the divided-difference route to Schubert polynomials.  Coefficients are
// 64-bit integers with checked arithmetic: anything that would wrap throws
// std::overflow_error instead of silently corrupting a count.

namespace schubert {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("polynomial coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("polynomial coefficient overflow in multiplication");
    return r;
}

// Terms are kept in graded-lexicographic order, largest first, and zero
// coefficients are never stored, so two equal polynomials have identical
// term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, std::int64_t, std::greater<Monomial>>;

    Polynomial() = default;  // zero

    static Polynomial constant(std::int64_t c) { return term(Monomial(), c); }

    static Polynomial variable(int i) { return term(Monomial::variable(i), 1); }

    static Polynomial term(Monomial m, std::int64_t c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    std::int64_t coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Monomial& m, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
        return out;
    }

    Polynomial operator-() const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, checked_mul(c, -1));
        return out;
    }

    bool operator==(const Polynomial&) const = default;

private:
    TermMap terms_;
};

/// Applies the simple transposition s_i to the variables: exchanges x_i and
/// x_{i+1} in every term.
inline Polynomial swap_variables(const Polynomial& f, int i) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) out.add_term(m.with_exponents_swapped(i), c);
    return out;
}

// Divided difference: f -> (f - s_i f) / (x_i - x_{i+1}).  Computed
// termwise by the closed form for x_i^a x_{i+1}^b (times a factor free of
// both variables):
//
//   a > b:  sum_{t=b}^{a-1} x_i^t x_{i+1}^{a+b-1-t}
//   a < b:  the negation of the symmetric sum
//   a = b:  0
//
// which avoids any symbolic division.
inline Polynomial divided_difference(const Polynomial& f, int i) {
    if (i < 1) throw std::invalid_argument("divided_difference: variable index must be >= 1");
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        const int a = m.exponent(i);
        const int b = m.exponent(i + 1);
        if (a == b) continue;
        std::vector<int> base = m.exponents();
        if (static_cast<int>(base.size()) < i + 1) base.resize(static_cast<std::size_t>(i) + 1, 0);
        const std::int64_t coeff = a > b ? c : checked_mul(c, -1);
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        for (int t = lo; t <= hi - 1; ++t) {
            base[static_cast<std::size_t>(i) - 1] = t;
            base[static_cast<std::size_t>(i)] = a + b - 1 - t;
            out.add_term(Monomial(base), coeff);
        }
    }
    return out;
}

/// Specialization at x_1 = x_2 = ... = 1, i.e. the coefficient sum.
inline std::int64_t evaluate_all_ones(const Polynomial& f) {
    std::int64_t total = 0;
    for (const auto& [m, c] : f.terms()) total = checked_add(total, c);
    return total;
}

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::string digits = std::to_string(c);
        if (c < 0) digits.erase(digits.begin());
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m.degree() == 0) {
            out += digits;
        } else {
            if (digits != "1") {
                out += digits;
                out += ' ';
            }
            out += m.str();
        }
    }
    return out;
}

// Computes Schubert polynomials by divided differences, starting from the
// staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1} of the longest element
// and descending along ascents: S_w = d_i S_{w s_i} whenever w(i) < w(i+1).
// Results are memoized by word, so sweeping a whole symmetric group costs
// one polynomial per element.  Not synchronized; use one instance per
// thread or guard externally.
class SchubertCache {
public:
    const Polynomial& polynomial(const Permutation& w) {
        if (auto it = memo_.find(w.word()); it != memo_.end()) return it->second;
        const int n = w.size();
        int ascent = 0;
        for (int i = 1; i < n; ++i) {
            if (w(i) < w(i + 1)) {
                ascent = i;
                break;
            }
        }
        Polynomial result;
        if (ascent == 0) {
            std::vector<int> exps;
            for (int k = n - 1; k >= 1; --k) exps.push_back(k);
            result = Polynomial::term(Monomial(std::move(exps)), 1);
        } else {
            result = divided_difference(polynomial(swap_adjacent(w, ascent)), ascent);
        }
        return memo_.emplace(w.word(), std::move(result)).first->second;
    }

    std::size_t size() const { return memo_.size(); }

private:
    std::unordered_map<std::vector<int>, Polynomial, WordHash> memo_;
};

/// One-shot Schubert polynomial via divided differences.  For sweeps over a
/// whole symmetric group, hold a SchubertCache instead.
inline Polynomial schubert_divdiff(const Permutation& w) {
    SchubertCache cache;
    return cache.polynomial(w);
}

}  // namespace schubert
