#include "bq/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string_view>
#include <vector>

#include "canonical.hpp"

namespace bq {

namespace {

struct Token {
    enum class Type { Number, Imag, Var, Exp, Plus, Minus, Star, Caret, LParen, RParen, End };
    Type type;
    double number = 0.0;  // Number / Imag magnitude
    int var = 0;          // Var index 1..4
    std::size_t pos = 0;
};

class Lexer {
public:
    Lexer(std::string_view text, Coords coords) : s_(text), coords_(coords) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        tok_.pos = pos_;
        if (pos_ >= s_.size()) {
            tok_.type = Token::Type::End;
            return;
        }
        const char c = s_[pos_];
        switch (c) {
            case '+': tok_.type = Token::Type::Plus; ++pos_; return;
            case '-': tok_.type = Token::Type::Minus; ++pos_; return;
            case '*': tok_.type = Token::Type::Star; ++pos_; return;
            case '^': tok_.type = Token::Type::Caret; ++pos_; return;
            case '(': tok_.type = Token::Type::LParen; ++pos_; return;
            case ')': tok_.type = Token::Type::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            lex_identifier();
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    void lex_number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        // Exponent only when it cannot be the start of an identifier like 'exp'.
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                pos_ = q;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
        }
        double value = 0.0;
        const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != s_.data() + pos_) {
            throw SyntaxError("malformed number", start);
        }
        tok_.number = value;
        tok_.type = Token::Type::Number;
        if (pos_ < s_.size() && s_[pos_] == 'i') {
            finish_imag(start);
        }
    }

    void finish_imag(std::size_t start) {
        ++pos_;
        if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
            throw SyntaxError("unexpected character after imaginary literal", pos_);
        }
        tok_.type = Token::Type::Imag;
        tok_.pos = start;
    }

    void lex_identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string_view id = s_.substr(start, pos_ - start);
        if (id == "i") {
            tok_.type = Token::Type::Imag;
            tok_.number = 1.0;
            return;
        }
        if (id == "exp") {
            tok_.type = Token::Type::Exp;
            return;
        }
        if (id.size() == 2 && (id[0] == 'z' || id[0] == 't') && std::isdigit(static_cast<unsigned char>(id[1]))) {
            const int digit = id[1] - '0';
            const bool cartan_name = id[0] == 'z';
            const int index = cartan_name ? digit : digit + 1;
            if (index >= 1 && index <= 4) {
                if (cartan_name != (coords_ == Basis::Cartan)) {
                    throw WrongCoordinateSystem(
                        std::string("variable '") + std::string(id) + "' does not belong to the " +
                            basis_name(coords_) + " coordinate system",
                        start);
                }
                tok_.type = Token::Type::Var;
                tok_.var = index;
                return;
            }
        }
        throw SyntaxError("unknown identifier '" + std::string(id) + "'", start);
    }

    std::string_view s_;
    Coords coords_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, Coords coords) : lex_(text, coords) {}

    HoloExpr run() {
        HoloExpr e = sum();
        if (lex_.peek().type != Token::Type::End) {
            throw SyntaxError("unexpected trailing input", lex_.peek().pos);
        }
        return e;
    }

private:
    HoloExpr sum() {
        HoloExpr e = product();
        while (true) {
            const auto t = lex_.peek().type;
            if (t == Token::Type::Plus) {
                lex_.take();
                e = e + product();
            } else if (t == Token::Type::Minus) {
                lex_.take();
                e = e - product();
            } else {
                return e;
            }
        }
    }

    HoloExpr product() {
        HoloExpr e = factor();
        while (lex_.peek().type == Token::Type::Star) {
            lex_.take();
            e = e * factor();
        }
        return e;
    }

    HoloExpr factor() {
        if (lex_.peek().type == Token::Type::Minus) {
            lex_.take();
            return -factor();
        }
        return power();
    }

    HoloExpr power() {
        HoloExpr base = atom();
        if (lex_.peek().type != Token::Type::Caret) return base;
        lex_.take();
        const Token t = lex_.take();
        if (t.type != Token::Type::Number) {
            throw SyntaxError("exponent must be a nonnegative integer literal", t.pos);
        }
        if (t.number < 0.0 || t.number != std::floor(t.number) || t.number > 512.0) {
            throw SyntaxError("exponent must be a nonnegative integer literal", t.pos);
        }
        return HoloExpr::pow(base, static_cast<int>(t.number));
    }

    HoloExpr atom() {
        const Token t = lex_.take();
        switch (t.type) {
            case Token::Type::Number: return HoloExpr::constant(Complex(t.number));
            case Token::Type::Imag: return HoloExpr::constant(Complex(0.0, t.number));
            case Token::Type::Var: return HoloExpr::var(t.var);
            case Token::Type::Exp: {
                expect(Token::Type::LParen, "expected '(' after exp");
                HoloExpr arg = sum();
                expect(Token::Type::RParen, "expected ')'");
                return HoloExpr::exp(arg);
            }
            case Token::Type::LParen: {
                HoloExpr e = sum();
                expect(Token::Type::RParen, "expected ')'");
                return e;
            }
            default: throw SyntaxError("expected a value", t.pos);
        }
    }

    void expect(Token::Type type, const char* message) {
        const Token t = lex_.take();
        if (t.type != type) throw SyntaxError(message, t.pos);
    }

    Lexer lex_;
};

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Pure real/imaginary negatives are pulled out as a leading minus so terms
// join as "a - b"; mixed complex coefficients keep their sign inside parens.
bool extract_sign(Complex& c) {
    if (c.imag() == 0.0 && c.real() < 0.0) {
        c = -c;
        return true;
    }
    if (c.real() == 0.0 && c.imag() < 0.0) {
        c = -c;
        return true;
    }
    return false;
}

std::string format_coeff(Complex c) {
    if (c.imag() == 0.0) return format_double(c.real());
    if (c.real() == 0.0) {
        return c.imag() == 1.0 ? "i" : format_double(c.imag()) + "i";
    }
    std::string out = "(" + format_double(c.real());
    out += c.imag() > 0.0 ? "+" : "-";
    const double m = std::abs(c.imag());
    if (m != 1.0) out += format_double(m);
    out += "i)";
    return out;
}

std::string render(const detail::CanonExpr& c, Coords coords);

std::string render_term(const detail::CanonTerm& t, Coords coords, bool& negative) {
    Complex coeff = t.coeff;
    negative = extract_sign(coeff);

    std::vector<std::string> parts;
    const char prefix = coords == Basis::Cartan ? 'z' : 't';
    const int offset = coords == Basis::Cartan ? 0 : -1;
    for (int k = 0; k < 4; ++k) {
        if (t.pw[k] == 0) continue;
        std::string f = std::string(1, prefix) + std::to_string(k + 1 + offset);
        if (t.pw[k] > 1) f += "^" + std::to_string(t.pw[k]);
        parts.push_back(std::move(f));
    }
    if (t.exp_arg) parts.push_back("exp(" + render(*t.exp_arg, coords) + ")");

    if (parts.empty()) return format_coeff(coeff);

    std::string out;
    if (coeff != Complex(1.0)) out = format_coeff(coeff) + "*";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += "*";
        out += parts[k];
    }
    return out;
}

std::string render(const detail::CanonExpr& c, Coords coords) {
    if (c.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : c.terms) {
        bool negative = false;
        const std::string body = render_term(t, coords, negative);
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace

HoloExpr parse_expr(const std::string& text, Coords coords) {
    if (text.empty()) throw SyntaxError("empty expression", 0);
    return Parser(text, coords).run();
}

std::string print_expr(const HoloExpr& e, Coords coords) {
    return render(detail::canonicalize(e, kNormalizeTol), coords);
}

}  // namespace bq
