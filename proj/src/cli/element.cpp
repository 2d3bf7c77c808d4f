#include "ncdc/cli/element.hpp"

#include "ncdc/calculus/tower.hpp"

#include <cctype>

namespace ncdc::cli {

using calculus::ipow;
using tensor::Vector;

ElementContext element_context(const SpecDocument& doc) { return {doc.v_names, doc.dim_v, doc.q_value}; }

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// ParseError messages end in " at position N"; strip it to re-anchor the position.
std::string bare_message(const ParseError& e) {
    std::string m = e.what();
    const auto cut = m.rfind(" at position ");
    return cut == std::string::npos ? m : m.substr(0, cut);
}

class ElementParser {
public:
    ElementParser(std::string_view text, const ElementContext& ctx) : text_(text), ctx_(ctx) {}

    GradedElement parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty element", pos_);
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (accept('+')) term(false);
            else if (accept('-')) term(true);
            else throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        GradedElement out;
        for (auto& [n, v] : acc_)
            if (!tensor::is_zero(v)) out.emplace(n, std::move(v));
        return out;
    }

private:
    void term(bool negative) {
        Scalar coeff(negative ? -1L : 1L);
        std::vector<std::size_t> word;
        bool first = true;
        for (;;) {
            skip_ws();
            char op = '*';
            std::size_t op_pos = pos_;
            if (!first) {
                if (peek() != '*' && peek() != '/') break;
                op = text_[pos_++];
                skip_ws();
            }
            const std::size_t start = pos_;
            if (at_end()) throw ParseError("unexpected end of element", pos_);
            if (ident_start(peek()) && !is_q()) {
                if (op == '/') throw ParseError("cannot divide by a generator", op_pos);
                word.push_back(generator());
            } else {
                if (!word.empty()) throw ParseError("coefficient must precede the word", start);
                Scalar s = scalar_atom();
                if (op == '/') {
                    if (s.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(op_pos));
                    coeff /= s;
                } else {
                    coeff *= s;
                }
            }
            first = false;
        }
        const std::size_t n = word.size();
        const std::size_t dim = ipow(ctx_.dim_v, n);
        std::size_t index = 0;
        for (std::size_t g : word) index = index * ctx_.dim_v + g;
        Vector& v = acc_[n];
        if (v.empty()) v.assign(dim, Scalar());
        v[index] += specialize(coeff, ctx_.q_value);
    }

    bool is_q() const {
        return peek() == 'q' && (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]));
    }

    std::size_t generator() {
        const std::size_t start = pos_;
        while (!at_end() && ident_char(text_[pos_])) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        for (std::size_t i = 0; i < ctx_.names.size(); ++i)
            if (ctx_.names[i] == name) return i;
        throw ParseError("unknown generator '" + name + "'", start);
    }

    // number | q | ( scalar ), optionally followed by ^ exponent; handed to the scalar parser.
    Scalar scalar_atom() {
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '(') {
            int depth = 0;
            do {
                if (at_end()) throw ParseError("expected ')'", pos_);
                if (text_[pos_] == '(') ++depth;
                else if (text_[pos_] == ')') --depth;
                ++pos_;
            } while (depth > 0);
        } else if (is_q()) {
            ++pos_;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        } else {
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        }
        const std::size_t save = pos_;
        skip_ws();
        if (accept('^')) {
            skip_ws();
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        } else {
            pos_ = save;
        }
        try {
            return Scalar::parse(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(bare_message(e), start + e.position());
        }
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
    const ElementContext& ctx_;
    std::size_t pos_ = 0;
    std::map<std::size_t, Vector> acc_;
};

// True when the spelling has no + or - outside parentheses after its first character,
// so it can be followed by "*word" without changing meaning.
bool is_product(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-')) return false;
    }
    return true;
}

void append_term(std::string& out, const Scalar& coeff, const std::string& word) {
    std::string s = coeff.to_string();
    bool negative = false;
    if (is_product(s) && s[0] == '-') {
        negative = true;
        s.erase(0, 1);
    }
    if (!is_product(s)) s = "(" + s + ")";
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (word.empty()) out += s;
    else if (s == "1") out += word;
    else out += s + "*" + word;
}

}  // namespace

GradedElement parse_element(std::string_view text, const ElementContext& ctx) {
    return ElementParser(text, ctx).parse();
}

std::string format_homogeneous(std::size_t degree, const Vector& coords, const ElementContext& ctx) {
    std::string out;
    const auto shape = tensor::Shape::v_power(degree, ctx.dim_v, 1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        std::string word;
        for (std::size_t g : shape.multi_index(i)) {
            if (!word.empty()) word += '*';
            word += ctx.names.at(g);
        }
        append_term(out, coords[i], word);
    }
    return out.empty() ? "0" : out;
}

std::string format_element(const GradedElement& element, const ElementContext& ctx) {
    std::string out;
    for (const auto& [n, v] : element) {
        if (tensor::is_zero(v)) continue;
        const std::string part = format_homogeneous(n, v, ctx);
        if (out.empty()) {
            out = part;
        } else if (part[0] == '-') {
            out += " - " + part.substr(1);
        } else {
            out += " + " + part;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace ncdc::cli
