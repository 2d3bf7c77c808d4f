#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ncdc::exact {

using Rational = mpq_class;

/// Dense univariate polynomial in q over Q. Coefficients are stored lowest
/// degree first with no trailing zeros, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(Rational coeff, std::size_t degree);
    static Polynomial q() { return monomial(Rational(1), 1); }
    static Polynomial one() { return Polynomial(Rational(1)); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Polynomial& operator+=(const Polynomial& rhs);
    /// *this += a * b without intermediate polynomials.
    void add_product(const Polynomial& a, const Polynomial& b);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    /// Exact quotient, assuming the division leaves no remainder.
    Polynomial exact_div(const Polynomial& divisor) const;

    Polynomial monic() const;
    Rational evaluate(const Rational& point) const;

    /// Canonical spelling, highest degree first: "q^2-3/2*q+1".
    std::string to_string() const;
    std::size_t term_count() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace ncdc::exact
