#include "gebra/parser.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

#include "gebra/errors.hpp"

namespace gebra {

namespace {

enum class Tok { Number, Ident, LParen, RParen, LBracket, RBracket, Comma, Plus, Minus, Star, Slash, Caret, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Number, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case ',': k = Tok::Comma; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            default: throw ParseError(i, "a factor");
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
}

// exactly 'e' followed by digits
bool is_blade_gen(const std::string& s) {
    if (s.size() < 2 || s[0] != 'e') return false;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
}

// 'e' followed by a digit somewhere in front, but not a pure e-blade: the
// legacy rendering "e1we2" falls here and deserves a pointed message
bool is_malformed_blade(const std::string& s) {
    return s.size() >= 2 && s[0] == 'e' && std::isdigit(static_cast<unsigned char>(s[1])) &&
           !is_blade_gen(s);
}

std::uint32_t gen_index(const Token& t) {
    unsigned long v = 0;
    for (std::size_t k = 1; k < t.text.size(); ++k) {
        v = v * 10 + unsigned(t.text[k] - '0');
        if (v > 64) throw ParseError(t.offset, "a generator index between 1 and 64");
    }
    if (v == 0) throw ParseError(t.offset, "a generator index between 1 and 64");
    return std::uint32_t(v);
}

Sym ident_to_sym(const Token& t) {
    std::size_t split = t.text.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(t.text[split - 1]))) --split;
    const std::string name = t.text.substr(0, split);
    const std::string digits = t.text.substr(split);
    if (name.empty()) throw ParseError(t.offset, "a symbol name");
    if (digits.empty()) return Sym(name);
    if (digits.size() == 1) return Sym(name, std::uint32_t(digits[0] - '0'));
    if (digits.size() == 2)
        return Sym(name, std::uint32_t(digits[0] - '0'), std::uint32_t(digits[1] - '0'));
    throw ParseError(t.offset, "a symbol with at most two single-digit indices");
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    Expr run() {
        Expr e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

  private:
    std::vector<Token> t_;
    std::size_t pos_ = 0;

    const Token& cur() const { return t_[pos_]; }
    const Token& ahead() const { return t_[pos_ + 1 < t_.size() ? pos_ + 1 : t_.size() - 1]; }
    void advance() {
        if (pos_ + 1 < t_.size()) ++pos_;
    }
    void expect(Tok k, const std::string& what) {
        if (cur().kind != k) throw ParseError(cur().offset, what);
        advance();
    }

    Expr expr() {
        bool neg = false;
        if (cur().kind == Tok::Minus) {
            neg = true;
            advance();
        }
        Expr acc = term();
        if (neg) {
            Expr n;
            n.kind = Expr::Kind::Neg;
            n.args.push_back(std::move(acc));
            acc = std::move(n);
        }
        while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
            const bool plus = cur().kind == Tok::Plus;
            advance();
            Expr rhs = term();
            Expr n;
            n.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            n.args.push_back(std::move(acc));
            n.args.push_back(std::move(rhs));
            acc = std::move(n);
        }
        return acc;
    }

    Expr term() {
        Expr acc = factor();
        while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
            const bool mul = cur().kind == Tok::Star;
            advance();
            Expr rhs = factor();
            Expr n;
            n.kind = mul ? Expr::Kind::Mul : Expr::Kind::Div;
            n.args.push_back(std::move(acc));
            n.args.push_back(std::move(rhs));
            acc = std::move(n);
        }
        return acc;
    }

    Expr factor() {
        Expr a = atom();
        while (cur().kind == Tok::Caret) {
            advance();
            if (a.kind == Expr::Kind::Blade && cur().kind == Tok::Ident &&
                is_blade_gen(cur().text)) {
                a.gens.push_back(gen_index(cur()));
                advance();
                continue;
            }
            if (cur().kind != Tok::Number)
                throw ParseError(cur().offset, a.kind == Expr::Kind::Blade
                                                   ? "another blade generator or an integer"
                                                   : "an integer exponent");
            Expr n;
            n.kind = Expr::Kind::Pow;
            n.args.push_back(std::move(a));
            n.args.push_back(number(cur()));
            advance();
            a = std::move(n);
        }
        return a;
    }

    static Expr number(const Token& t) {
        Expr n;
        n.kind = Expr::Kind::Number;
        n.value = Rational(t.text, 10);
        return n;
    }

    Expr atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Number: {
                Expr n = number(t);
                advance();
                return n;
            }
            case Tok::LParen: {
                advance();
                Expr e = expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: break;
            default: throw ParseError(t.offset, "a factor");
        }

        if (t.text == "Id") {
            advance();
            Expr b;
            b.kind = Expr::Kind::Blade;
            return b;
        }
        if (is_blade_gen(t.text)) {
            Expr b;
            b.kind = Expr::Kind::Blade;
            b.gens.push_back(gen_index(t));
            advance();
            return b;
        }
        if (is_malformed_blade(t.text))
            throw ParseError(t.offset, "blade syntax with '^' separators (e1^e2, not " + t.text +
                                           ")");

        if (ahead().kind == Tok::LParen || ahead().kind == Tok::LBracket) return call(t);

        Expr s;
        s.kind = Expr::Kind::Symbol;
        s.sym = ident_to_sym(t);
        advance();
        return s;
    }

    Expr call(const Token& name) {
        advance();  // the name
        Expr c;
        c.kind = Expr::Kind::Call;
        c.name = name.text;
        if (cur().kind == Tok::LBracket) {
            advance();
            if (cur().kind != Tok::Ident) throw ParseError(cur().offset, "a form name");
            c.form_tag = cur().text;
            advance();
            expect(Tok::RBracket, "']'");
        }
        expect(Tok::LParen, "'('");
        if (cur().kind != Tok::RParen) {
            c.args.push_back(expr());
            while (cur().kind == Tok::Comma) {
                advance();
                c.args.push_back(expr());
            }
        }
        expect(Tok::RParen, "')' or ','");
        return c;
    }
};

}  // namespace

Expr parse(const std::string& src) { return Parser(tokenize(src)).run(); }

}  // namespace gebra
