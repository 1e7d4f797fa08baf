#include "bergman/symbol_parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "bergman/serialize.hpp"

namespace bergman {

namespace {

class Parser {
public:
    Parser(const std::string& text, int d) : s_(text), d_(d) {}

    MixedPoly parse() {
        MixedPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SymbolParseError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(pos_, w.size(), w) == 0) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    MixedPoly expr() {
        MixedPoly r = term();
        while (true) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    MixedPoly term() {
        MixedPoly r = unary();
        while (accept('*')) r = r * unary();
        return r;
    }

    MixedPoly unary() {
        if (accept('-')) return Complex(-1.0) * unary();
        return power();
    }

    MixedPoly power() {
        MixedPoly base = atom();
        if (!accept('^')) return base;
        skip();
        const std::size_t start = pos_;
        int k = 0;
        const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), k);
        if (ec != std::errc() || k < 0) fail("exponent must be a non-negative integer");
        pos_ = start + static_cast<std::size_t>(end - (s_.data() + start));
        return base.pow(k);
    }

    int variable() {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != 'z') fail("expected variable z<k>");
        ++pos_;
        const std::size_t start = pos_;
        int k = 0;
        const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), k);
        if (ec != std::errc()) fail("expected variable index after 'z'");
        pos_ = start + static_cast<std::size_t>(end - (s_.data() + start));
        if (k < 1 || k > d_) {
            pos_ = start;
            fail("variable index " + std::to_string(k) + " outside 1.." + std::to_string(d_));
        }
        return k - 1;
    }

    MixedPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MixedPoly r = expr();
            expect(')');
            return r;
        }
        if (accept_word("conj")) {
            expect('(');
            MixedPoly r = expr();
            expect(')');
            return r.conjugate();
        }
        if (accept_word("abs2")) {
            expect('(');
            skip();
            if (!accept('z')) fail("abs2 takes the vector z");
            expect(')');
            return MixedPoly::abs2(d_);
        }
        if (c == 'z') return MixedPoly::coordinate(d_, variable());
        if (c == 'i') {
            ++pos_;
            return MixedPoly::constant(d_, Complex(0.0, 1.0));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double x = 0.0;
            const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), x);
            if (ec != std::errc()) fail("malformed number");
            pos_ = static_cast<std::size_t>(end - s_.data());
            return MixedPoly::constant(d_, x);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    int d_;
    std::size_t pos_ = 0;
};

std::string coefficient(Complex c) {
    if (c.imag() == 0.0) return format_double(c.real());
    if (c.real() == 0.0) return "(" + format_double(c.imag()) + "*i)";
    const std::string im = format_double(c.imag());
    return "(" + format_double(c.real()) + (im.front() == '-' ? "" : "+") + im + "*i)";
}

void factors(std::ostringstream& out, const MultiIndex& m, bool conj, bool& first) {
    for (int j = 0; j < m.dim(); ++j) {
        if (m[j] == 0) continue;
        if (!first) out << '*';
        first = false;
        const std::string v = "z" + std::to_string(j + 1);
        out << (conj ? "conj(" + v + ")" : v);
        if (m[j] > 1) out << '^' << m[j];
    }
}

} // namespace

MixedPoly parse_symbol(const std::string& text, int d) {
    if (d < 1) throw std::invalid_argument("parse_symbol: d must be >= 1");
    return Parser(text, d).parse();
}

HoloPoly parse_polynomial(const std::string& text, int d) {
    const MixedPoly p = parse_symbol(text, d);
    if (!p.is_holomorphic()) throw SymbolParseError("polynomial must not depend on conj(z)", 0);
    return p.to_holomorphic();
}

std::string print_symbol(const MixedPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const auto& [key, c] : p.terms()) {
        if (!first_term) out << " + ";
        first_term = false;
        const bool constant = key.hol.degree() == 0 && key.antihol.degree() == 0;
        bool first = true;
        if (constant || c != Complex(1.0)) {
            if (!constant && c == Complex(-1.0)) {
                out << '-';
            } else {
                out << coefficient(c);
                first = false;
            }
        }
        factors(out, key.hol, false, first);
        factors(out, key.antihol, true, first);
    }
    return out.str();
}

} // namespace bergman
