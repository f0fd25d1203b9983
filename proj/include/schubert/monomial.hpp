#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// Monomial in variables x1, x2, ... with nonnegative integer exponents.
// Stored in normal form (trailing zero exponents trimmed), so equal
// monomials have identical exponent vectors.  Ordering is graded
// lexicographic: total degree first, then lexicographic on exponents.
class Monomial {
public:
    Monomial() = default;  // the unit monomial

    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("Monomial: exponents must be >= 0");
        while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    }

    static Monomial variable(int i) {
        if (i < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
        std::vector<int> e(static_cast<std::size_t>(i), 0);
        e.back() = 1;
        return Monomial(std::move(e));
    }

    /// Exponent of x_i (1-based); zero beyond the stored width.
    int exponent(int i) const {
        return (i >= 1 && i <= static_cast<int>(exps_.size())) ? exps_[static_cast<std::size_t>(i) - 1]
                                                               : 0;
    }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    /// Index of the last variable with a nonzero exponent (0 for the unit).
    int width() const { return static_cast<int>(exps_.size()); }

    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
        for (std::size_t k = 0; k < exps_.size(); ++k) e[k] += exps_[k];
        for (std::size_t k = 0; k < o.exps_.size(); ++k) e[k] += o.exps_[k];
        return Monomial(std::move(e));
    }

    /// Exchanges the exponents of x_i and x_{i+1}.
    Monomial with_exponents_swapped(int i) const {
        if (i < 1) throw std::invalid_argument("Monomial: variable index must be >= 1");
        std::vector<int> e = exps_;
        if (static_cast<int>(e.size()) < i + 1) e.resize(static_cast<std::size_t>(i) + 1, 0);
        std::swap(e[static_cast<std::size_t>(i) - 1], e[static_cast<std::size_t>(i)]);
        return Monomial(std::move(e));
    }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string out;
        for (std::size_t k = 0; k < exps_.size(); ++k) {
            if (exps_[k] == 0) continue;
            if (!out.empty()) out += ' ';
            out += 'x';
            out += std::to_string(k + 1);
            if (exps_[k] > 1) {
                out += '^';
                out += std::to_string(exps_[k]);
            }
        }
        return out;
    }

    bool operator==(const Monomial&) const = default;

    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = degree() <=> o.degree(); c != std::strong_ordering::equal) return c;
        const std::size_t width = std::max(exps_.size(), o.exps_.size());
        for (std::size_t k = 0; k < width; ++k) {
            const int a = k < exps_.size() ? exps_[k] : 0;
            const int b = k < o.exps_.size() ? o.exps_[k] : 0;
            if (auto c = a <=> b; c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    std::vector<int> exps_;
};

}  // namespace schubert
