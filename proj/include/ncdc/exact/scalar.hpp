#pragma once

#include "ncdc/exact/polynomial.hpp"

#include <string>
#include <string_view>

namespace ncdc::exact {

/// An element of Q(q), kept in canonical form: coprime numerator and
/// denominator, monic denominator, zero stored as 0/1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : num_(Rational(value)) {}  // NOLINT: implicit from integers is convenient
    explicit Scalar(Rational value) : num_(std::move(value)) {}
    explicit Scalar(Polynomial numerator) : num_(std::move(numerator)) {}

    /// Builds the canonical form of numerator/denominator.
    static Scalar normalize(Polynomial numerator, Polynomial denominator);
    static Scalar q() { return Scalar(Polynomial::q()); }

    const Polynomial& numerator() const noexcept { return num_; }
    Polynomial denominator() const { return den_.is_zero() ? Polynomial::one() : den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_zero(); }
    bool is_constant() const noexcept { return den_.is_zero() && num_.is_constant(); }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    /// *this += a * b; avoids temporaries when all three are polynomials.
    void add_product(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar inverse() const;

    /// Exact value at q = point; throws PoleError if the denominator vanishes there.
    Rational evaluate(const Rational& point) const;

    /// Deterministic canonical spelling accepted back by parse().
    std::string to_string() const;

    /// Parses the scalar grammar: integers, q, ^, *, /, +, -, parentheses.
    static Scalar parse(std::string_view text);

private:
    Polynomial num_;
    Polynomial den_;  // empty means 1
};

enum class ArithKind { add, sub, mul, div };

Scalar arith(ArithKind kind, const Scalar& a, const Scalar& b);

/// Parses a plain rational such as "-3/4" (used for q specialisation values).
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& r);

}  // namespace ncdc::exact
