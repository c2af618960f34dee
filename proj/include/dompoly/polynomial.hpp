#ifndef DOMPOLY_POLYNOMIAL_HPP
#define DOMPOLY_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/errors.hpp"

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact integer coefficients. coeff(k) is
/// the coefficient of x^k. The zero polynomial stores nothing; every other
/// value keeps its leading coefficient nonzero, so defaulted equality is
/// semantic equality.
class Polynomial {
public:
    Polynomial() = default;

    Polynomial(std::initializer_list<long long> low_to_high) {
        coef_.assign(low_to_high.begin(), low_to_high.end());
        normalize();
    }

    explicit Polynomial(std::vector<BigInt> low_to_high) : coef_(std::move(low_to_high)) {
        normalize();
    }

    static Polynomial constant(BigInt c) {
        Polynomial p;
        if (c != 0) p.coef_.push_back(std::move(c));
        return p;
    }

    static Polynomial monomial(int degree, BigInt c = 1) {
        Polynomial p;
        if (c != 0) {
            p.coef_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
            p.coef_.back() = std::move(c);
        }
        return p;
    }

    static Polynomial one() { return constant(1); }
    static Polynomial x() { return monomial(1); }

    bool is_zero() const { return coef_.empty(); }

    /// Degree, with the zero polynomial mapped to -1.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

    const BigInt& coeff(int k) const {
        static const BigInt zero{0};
        if (k < 0 || static_cast<std::size_t>(k) >= coef_.size()) return zero;
        return coef_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigInt>& coefficients() const { return coef_; }

    Polynomial& operator+=(const Polynomial& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size());
        for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size());
        for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& operator*=(const BigInt& c) {
        if (c == 0) {
            coef_.clear();
        } else {
            for (auto& a : coef_) a *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                r.coef_[i + j] += a.coef_[i] * b.coef_[j];
        }
        return r; // leading product of nonzero leads is nonzero
    }

    friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
    friend Polynomial operator*(const BigInt& c, Polynomial a) { return a *= c; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& a : r.coef_) a = -a;
        return r;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    BigInt evaluate(const BigInt& point) const {
        BigInt acc = 0;
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * point + coef_[i];
        return acc;
    }

    BigRational evaluate(const BigRational& point) const {
        BigRational acc = 0;
        for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * point + BigRational(coef_[i]);
        return acc;
    }

    /// x^k * p(1/x): coefficient j moves to position k - j. Requires k >= degree.
    Polynomial reversed_to_degree(int k) const {
        if (k < degree())
            throw DegreeTooSmall("reversal degree " + std::to_string(k) +
                                 " below polynomial degree " + std::to_string(degree()));
        if (is_zero()) return {};
        Polynomial r;
        r.coef_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
        for (std::size_t j = 0; j < coef_.size(); ++j)
            r.coef_[static_cast<std::size_t>(k) - j] = coef_[j];
        r.normalize();
        return r;
    }

    /// p(-x): negates coefficients of odd degree.
    Polynomial substituted_neg() const {
        Polynomial r = *this;
        for (std::size_t i = 1; i < r.coef_.size(); i += 2) r.coef_[i] = -r.coef_[i];
        return r;
    }

    /// Decimal coefficient strings, low to high degree.
    std::vector<std::string> coefficient_strings() const {
        std::vector<std::string> out;
        out.reserve(coef_.size());
        for (const auto& c : coef_) out.push_back(c.str());
        return out;
    }

    /// Human rendering, highest degree first, e.g. "x^3 + 3x^2 + x".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const BigInt& c = coef_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            const bool negative = c < 0;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            const BigInt mag = abs(c);
            if (mag != 1 || k == 0) out += mag.str();
            if (k >= 1) out += "x";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void normalize() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }

    std::vector<BigInt> coef_;
};

/// (1 + x)^k by iterated Pascal steps.
inline Polynomial binomial_power(int k) {
    std::vector<BigInt> row{1};
    for (int step = 0; step < k; ++step) {
        std::vector<BigInt> next(row.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
        }
        row = std::move(next);
    }
    return Polynomial(std::move(row));
}

inline BigInt binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact at every step
    }
    return result;
}

/// Smallest k with a nonzero coefficient; -1 for the zero polynomial.
inline int lowest_nonzero_degree(const Polynomial& p) {
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) return k;
    return -1;
}

} // namespace dompoly

#endif // DOMPOLY_POLYNOMIAL_HPP
