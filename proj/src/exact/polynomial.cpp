#include "ncdc/exact/polynomial.hpp"

#include "ncdc/error.hpp"

#include <algorithm>

namespace ncdc::exact {

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Polynomial Polynomial::monomial(Rational coeff, std::size_t degree) {
    Polynomial p;
    if (coeff == 0) return p;
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = std::move(coeff);
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return;
    const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (coeffs_.size() < n) coeffs_.resize(n, Rational(0));
    thread_local Rational t;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            mpq_add(coeffs_[i + j].get_mpq_t(), coeffs_[i + j].get_mpq_t(), t.get_mpq_t());
        }
    }
    trim();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Rational> quot(rem.coeffs_.size() - dd, Rational(0));
    const Rational lead_inv = 1 / divisor.leading();
    for (std::size_t k = rem.coeffs_.size(); k-- > dd;) {
        if (rem.coeffs_[k] == 0) continue;
        Rational f = rem.coeffs_[k] * lead_inv;
        const std::size_t shift = k - dd;
        for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[shift + j] -= f * divisor.coeffs_[j];
        quot[shift] = std::move(f);
    }
    rem.trim();
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    if (divisor.is_constant()) {
        if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
        Polynomial r = *this;
        return r *= 1 / divisor.coeffs_[0];
    }
    return divmod(divisor).first;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    Polynomial r = *this;
    return r *= 1 / leading();
}

Rational Polynomial::evaluate(const Rational& point) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * point + coeffs_[k];
    return acc;
}

std::size_t Polynomial::term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (negative) out += '-';
        else if (!out.empty()) out += '+';
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += 'q';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::one();
    Polynomial x = a.degree() >= b.degree() ? a : b;
    Polynomial y = (a.degree() >= b.degree() ? b : a).monic();
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

}  // namespace ncdc::exact
