#include "hvb/expr.hpp"

#include "hvb/errors.hpp"

#include <cctype>
#include <optional>

namespace hvb {

namespace {

enum class Tok { Number, Ident, LBracket, RBracket, Comma, LParen, RParen, Otimes, Plus, Minus, Slash, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_space();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            const int l = line_, c = col_;
            const char ch = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string s;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    s += advance();
                out.push_back({Tok::Number, s, l, c});
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                std::string s;
                while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
                    s += advance();
                out.push_back({Tok::Ident, s, l, c});
            } else if (src_.substr(pos_, 3) == "(x)") {
                advance(), advance(), advance();
                out.push_back({Tok::Otimes, "(x)", l, c});
            } else {
                Tok k;
                switch (ch) {
                case '[': k = Tok::LBracket; break;
                case ']': k = Tok::RBracket; break;
                case ',': k = Tok::Comma; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '/': k = Tok::Slash; break;
                default: throw SyntaxError("unexpected character", l, c, std::string(1, ch));
                }
                advance();
                out.push_back({k, std::string(1, ch), l, c});
            }
        }
    }

private:
    char advance()
    {
        const char ch = src_[pos_++];
        if (ch == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return ch;
    }
    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

TensorElement outer(const TensorElement& a, const TensorElement& b, const Token& at)
{
    if (a.arity() + b.arity() > 3)
        throw SyntaxError("tensor arity exceeds 3", at.line, at.column, at.text);
    TensorElement out(a.arity() + b.arity());
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m;
            m.arity = static_cast<std::uint8_t>(ma.arity + mb.arity);
            for (int k = 0; k < ma.arity; ++k)
                m.legs[k] = ma[k];
            for (int k = 0; k < mb.arity; ++k)
                m.legs[ma.arity + k] = mb[k];
            out.add_term(m, ca * cb);
        }
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, const AlgebraSpec& alg) : toks_(std::move(toks)), alg_(alg) {}

    TensorElement parse_all()
    {
        TensorElement e = expr();
        if (peek().kind != Tok::End)
            fail("unexpected token");
        return e;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    const Token& take() { return toks_[i_++]; }
    bool accept(Tok k)
    {
        if (peek().kind == k) {
            ++i_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        throw SyntaxError(msg, t.line, t.column, t.kind == Tok::End ? "<end>" : t.text);
    }
    const Token& expect(Tok k, const char* what)
    {
        if (peek().kind != k)
            fail(std::string("expected ") + what);
        return take();
    }

    TensorElement expr()
    {
        TensorElement acc = product();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = take();
            TensorElement rhs = product();
            if (rhs.arity() != acc.arity())
                throw SyntaxError("mixed tensor arities in sum", op.line, op.column, op.text);
            acc.add_scaled(rhs, op.kind == Tok::Plus ? 1 : -1);
        }
        return acc;
    }

    TensorElement product()
    {
        TensorElement acc = factor();
        while (peek().kind == Tok::Otimes) {
            const Token& op = take();
            acc = outer(acc, factor(), op);
        }
        return acc;
    }

    TensorElement factor()
    {
        Scalar coeff = 1;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
            if (take().kind == Tok::Minus)
                coeff = -coeff;
        if (peek().kind == Tok::Number) {
            Scalar num(mpz_class(take().text, 10));
            if (accept(Tok::Slash)) {
                const Token& den = expect(Tok::Number, "denominator");
                mpz_class d(den.text, 10);
                if (d == 0)
                    throw SyntaxError("zero denominator", den.line, den.column, den.text);
                num /= Scalar(d);
            }
            coeff *= num;
        }
        if (accept(Tok::LParen)) {
            TensorElement inner = expr();
            expect(Tok::RParen, "')'");
            return scale(coeff, inner);
        }
        const BasisVector b = basis();
        alg_.require_admissible(b);
        return TensorElement::monomial(Monomial::of(b), coeff);
    }

    int integer(bool allow_sign)
    {
        bool neg = false;
        if (allow_sign && (peek().kind == Tok::Minus || peek().kind == Tok::Plus))
            neg = take().kind == Tok::Minus;
        const Token& t = expect(Tok::Number, "integer");
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw SyntaxError("index out of range", t.line, t.column, t.text);
        }
        if (v > 1000000)
            throw SyntaxError("index out of range", t.line, t.column, t.text);
        return static_cast<int>(neg ? -v : v);
    }

    BasisVector basis()
    {
        if (peek().kind != Tok::Ident)
            fail("expected a basis symbol");
        const Token& id = take();
        const std::string& s = id.text;
        if (s == "CL") return BasisVector::CL();
        if (s == "CI") return BasisVector::CI();
        if (s == "CLI") return BasisVector::CLI();
        if (s == "C") return BasisVector::C();
        if (s == "L" || s == "I" || s == "Y") {
            expect(Tok::LBracket, "'['");
            const int m = integer(true);
            expect(Tok::RBracket, "']'");
            return s == "L" ? BasisVector::L(m) : s == "I" ? BasisVector::I(m) : BasisVector::Y(m);
        }
        if (s == "E") {
            expect(Tok::LBracket, "'['");
            const int m = integer(true);
            expect(Tok::Comma, "','");
            const int n = integer(false);
            expect(Tok::RBracket, "']'");
            return BasisVector::E(m, n);
        }
        throw SyntaxError("unknown basis symbol", id.line, id.column, id.text);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    const AlgebraSpec& alg_;
};

bool is_literal_zero(std::string_view src)
{
    std::size_t a = 0, b = src.size();
    while (a < b && std::isspace(static_cast<unsigned char>(src[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(src[b - 1])))
        --b;
    return src.substr(a, b - a) == "0";
}

}  // namespace

TensorElement parse_expression(std::string_view src, const AlgebraSpec& alg)
{
    if (is_literal_zero(src))
        return TensorElement(1);
    Parser p(Lexer(src).run(), alg);
    return p.parse_all();
}

Element parse_element(std::string_view src, const AlgebraSpec& alg)
{
    return parse_tensor(src, alg, 1).as_element();
}

TensorElement parse_tensor(std::string_view src, const AlgebraSpec& alg, int arity)
{
    if (is_literal_zero(src))
        return TensorElement(arity);
    TensorElement t = parse_expression(src, alg);
    if (t.arity() != arity)
        throw ArityMismatch("expected a tensor of arity " + std::to_string(arity) + ", got arity " +
                            std::to_string(t.arity()));
    return t;
}

}  // namespace hvb
