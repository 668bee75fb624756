#include "dkdv/expr.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dkdv {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string &text) : s_(text) { advance(); }

    const Token &peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        tok_ = Token{Token::End, "", line_, col_};
        if (pos_ >= s_.size()) return;
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) bump();
            tok_ = Token{Token::Number, s_.substr(start, pos_ - start), line_, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                bump();
            tok_ = Token{Token::Ident, s_.substr(start, pos_ - start), line_, tok_.col};
            return;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '/': k = Token::Slash; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default:
            throw std::invalid_argument("parse error at line " + std::to_string(line_) + ", column " +
                                        std::to_string(col_) + ": unexpected character '" +
                                        std::string(1, c) + "'");
        }
        tok_ = Token{k, std::string(1, c), line_, col_};
        bump();
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::End, "", 1, 1};
};

class Parser {
  public:
    Parser(const std::string &text, RingPtr ring, int trunc)
        : lex_(text), ring_(std::move(ring)), trunc_(trunc) {}

    DiffPoly parse() {
        DiffPoly p = expr();
        const Token &t = lex_.peek();
        if (t.kind != Token::End) fail(t, "unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const Token &t, const std::string &msg) {
        throw std::invalid_argument("parse error at line " + std::to_string(t.line) + ", column " +
                                    std::to_string(t.col) + ": " + msg);
    }

    DiffPoly expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus)
            neg = lex_.next().kind == Token::Minus;
        DiffPoly acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.next().kind == Token::Minus;
            DiffPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    DiffPoly term() {
        DiffPoly acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.next();
            acc = acc * factor();
        }
        return acc;
    }

    DiffPoly factor() {
        DiffPoly base = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.next();
            Token e = lex_.next();
            if (e.kind != Token::Number) fail(e, "expected integer exponent after '^'");
            base = base.pow(std::stoi(e.text));
        }
        return base;
    }

    DiffPoly atom() {
        Token t = lex_.next();
        switch (t.kind) {
        case Token::LParen: {
            DiffPoly p = expr();
            Token r = lex_.next();
            if (r.kind != Token::RParen) fail(r, "expected ')'");
            return p;
        }
        case Token::Number: {
            mpz_class num(t.text);
            if (lex_.peek().kind == Token::Slash) {
                lex_.next();
                Token d = lex_.next();
                if (d.kind != Token::Number) fail(d, "expected denominator after '/'");
                return DiffPoly::constant(ring_, trunc_,
                                          GaussianRational(Rational(num, mpz_class(d.text))));
            }
            return DiffPoly::constant(ring_, trunc_, GaussianRational(Rational(mpq_class(num))));
        }
        case Token::Ident: {
            if (t.text == "ep") return DiffPoly::eps(ring_, trunc_);
            if (t.text == "I") return DiffPoly::constant(ring_, trunc_, GaussianRational::i());
            // split an optional jet suffix "_n"
            std::string base = t.text;
            int order = 0;
            auto us = t.text.rfind('_');
            if (us != std::string::npos && us + 1 < t.text.size() &&
                std::all_of(t.text.begin() + static_cast<long>(us) + 1, t.text.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                base = t.text.substr(0, us);
                order = std::stoi(t.text.substr(us + 1));
            }
            int var = ring_->var_index(base);
            if (var < 0 && base != t.text) {
                var = ring_->var_index(t.text);
                if (var >= 0) order = 0;
            }
            if (var < 0) fail(t, "unknown variable '" + t.text + "'");
            return DiffPoly::jet(ring_, trunc_, var, order);
        }
        default: fail(t, "expected a value");
        }
    }

    Lexer lex_;
    RingPtr ring_;
    int trunc_;
};

std::string coeff_prefix(const GaussianRational &c, bool has_mono, bool &negative) {
    negative = false;
    if (c.is_real()) {
        Rational r = c.re;
        if (r.sign() < 0) {
            negative = true;
            r = -r;
        }
        if (has_mono && r.is_one()) return "";
        return r.str();
    }
    if (c.re.is_zero()) {
        Rational b = c.im;
        if (b.sign() < 0) {
            negative = true;
            b = -b;
        }
        if (b.is_one()) return "I";
        return b.str() + "*I";
    }
    std::string im = c.im.sign() < 0 ? "-" + (-c.im).str() : "+" + c.im.str();
    return "(" + c.re.str() + im + "*I)";
}

} // namespace

DiffPoly parse_expr(const std::string &text, const RingPtr &ring, int trunc) {
    return Parser(text, ring, trunc).parse();
}

std::string print_monomial(const Monomial &m, const RingDesc &ring, bool with_eps) {
    std::vector<std::string> parts;
    if (with_eps && m.eps > 0)
        parts.push_back(m.eps == 1 ? "ep" : "ep^" + std::to_string(m.eps));
    for (const auto &f : m.factors) {
        std::string v = ring.names[static_cast<size_t>(f.var)];
        if (f.order > 0) v += "_" + std::to_string(f.order);
        if (f.exp > 1) v += "^" + std::to_string(f.exp);
        parts.push_back(std::move(v));
    }
    if (parts.empty()) return "1";
    std::string out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::string print_poly(const DiffPoly &p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        bool neg = false;
        std::string co = coeff_prefix(c, !m.is_constant() || m.eps > 0, neg);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono = print_monomial(m, *p.ring());
        if (mono == "1")
            os << (co.empty() ? "1" : co);
        else if (co.empty())
            os << mono;
        else
            os << co << "*" << mono;
    }
    return os.str();
}

std::string DiffPoly::str() const { return print_poly(*this); }

std::string poly_to_json(const DiffPoly &p) {
    nlohmann::json arr = nlohmann::json::array();
    std::map<int, nlohmann::json> by_eps;
    for (const auto &[m, c] : p.terms()) {
        auto &bucket = by_eps[m.eps];
        if (bucket.is_null()) bucket = nlohmann::json::array();
        bucket.push_back({{"monomial", print_monomial(m, *p.ring(), false)}, {"coeff", c.str()}});
    }
    for (auto &[e, terms] : by_eps) arr.push_back({{"eps_power", e}, {"terms", std::move(terms)}});
    return arr.dump();
}

} // namespace dkdv
