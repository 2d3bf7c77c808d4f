#include "ncdc/exact/scalar.hpp"

#include "ncdc/error.hpp"

#include <cctype>

namespace ncdc::exact {

Scalar Scalar::normalize(Polynomial numerator, Polynomial denominator) {
    if (denominator.is_zero()) throw DivisionByZero();
    Scalar s;
    if (numerator.is_zero()) return s;
    if (denominator.is_constant()) {
        s.num_ = std::move(numerator) * (1 / denominator.leading());
        return s;
    }
    Polynomial g = gcd(numerator, denominator);
    if (!g.is_one()) {
        numerator = numerator.exact_div(g);
        denominator = denominator.exact_div(g);
    }
    if (!denominator.is_monic()) {
        const Rational inv = 1 / denominator.leading();
        numerator *= inv;
        denominator *= inv;
    }
    s.num_ = std::move(numerator);
    if (!denominator.is_one()) s.den_ = std::move(denominator);
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (den_.is_zero() && rhs.den_.is_zero()) {
        num_ += rhs.num_;
        return *this;
    }
    if (den_ == rhs.den_) return *this = normalize(num_ + rhs.num_, den_);
    const Polynomial a = denominator();
    const Polynomial b = rhs.denominator();
    return *this = normalize(num_ * b + rhs.num_ * a, a * b);
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = Scalar();
    if (rhs.is_constant()) {
        num_ *= rhs.num_.leading();
        return *this;
    }
    if (den_.is_zero() && rhs.den_.is_zero()) {
        num_ = num_ * rhs.num_;
        return *this;
    }
    return *this = normalize(num_ * rhs.num_, denominator() * rhs.denominator());
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (den_.is_zero() && a.den_.is_zero() && b.den_.is_zero()) {
        num_.add_product(a.num_, b.num_);
        return;
    }
    *this += a * b;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return normalize(denominator(), num_);
}

Rational Scalar::evaluate(const Rational& point) const {
    const Rational d = den_.is_zero() ? Rational(1) : den_.evaluate(point);
    if (d == 0) throw PoleError("denominator " + den_.to_string() + " vanishes at q=" + rational_to_string(point));
    Rational r = num_.evaluate(point) / d;
    r.canonicalize();
    return r;
}

std::string Scalar::to_string() const {
    std::string n = num_.to_string();
    if (den_.is_zero()) return n;
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar arith(ArithKind kind, const Scalar& a, const Scalar& b) {
    switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
    }
    throw InternalError("unknown arithmetic kind");
}

std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

namespace {

// Recursive-descent parser. Precedence: ^ > unary minus > * / > + -.
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse_all() {
        skip_ws();
        if (at_end()) throw ParseError("empty scalar", pos_);
        Scalar s = expr();
        skip_ws();
        if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return s;
    }

private:
    Scalar expr() {
        Scalar acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc *= unary();
            } else if (peek() == '/') {
                const std::size_t at = pos_++;
                Scalar d = unary();
                if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        skip_ws();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected non-negative integer exponent", at);
        unsigned long e = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
            if (e > 4096) throw ParseError("exponent too large", at);
        }
        Scalar r(1L);
        for (unsigned long i = 0; i < e; ++i) r *= base;
        return r;
    }

    Scalar primary() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of scalar", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (c == 'q') {
            ++pos_;
            if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                throw ParseError("unknown identifier", pos_ - 1);
            return Scalar::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

Rational parse_rational(std::string_view text) {
    const Scalar s = Scalar::parse(text);
    if (!s.is_constant()) throw ParseError("expected a rational number, got '" + std::string(text) + "'", 0);
    return s.is_zero() ? Rational(0) : s.numerator().leading();
}

}  // namespace ncdc::exact
