#include "quatkit/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace quatkit::expr {

ExprPtr make_const(Quaternion value) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Const;
    e->values.push_back(std::move(value));
    return e;
}

ExprPtr make_var() {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::VarQ;
    return e;
}

ExprPtr make_component(int t) {
    if (t < 0 || t > 3) throw InvalidArgumentError("component index out of range");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Component;
    e->component = t;
    return e;
}

ExprPtr make_conj(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Conj;
    e->children.push_back(std::move(child));
    return e;
}

ExprPtr make_neg(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Neg;
    e->children.push_back(std::move(child));
    return e;
}

ExprPtr make_sum(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Sum;
    e->children.push_back(std::move(lhs));
    e->children.push_back(std::move(rhs));
    return e;
}

ExprPtr make_prod(std::vector<ExprPtr> factors) {
    if (factors.empty()) throw InvalidArgumentError("empty product");
    if (factors.size() == 1) return factors.front();
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Prod;
    e->children = std::move(factors);
    return e;
}

ExprPtr make_pow(ExprPtr child, unsigned exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->children.push_back(std::move(child));
    e->exponent = exponent;
    return e;
}

ExprPtr make_series(std::vector<Quaternion> coefficients, unsigned truncation) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Series;
    e->values = std::move(coefficients);
    e->exponent = truncation;
    return e;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

constexpr unsigned kExponentCap = 64;
constexpr int kMaxDepth = 200;

struct Token {
    enum class Kind {
        Integer, Decimal, Ident, Plus, Minus, Star, Caret, Slash,
        LParen, RParen, Comma, Equal, End
    };
    Kind kind;
    std::string text;
    std::size_t position; // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t n = text.size(), at = 0;
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (at < n) {
        const char c = text[at];
        const std::size_t pos = at + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++at;
            continue;
        }
        if (is_digit(c)) {
            std::size_t end = at;
            while (end < n && is_digit(text[end])) ++end;
            bool decimal = false;
            if (end < n && text[end] == '.') {
                decimal = true;
                ++end;
                while (end < n && is_digit(text[end])) ++end;
            }
            if (end < n && (text[end] == 'e' || text[end] == 'E')) {
                std::size_t exp = end + 1;
                if (exp < n && (text[exp] == '+' || text[exp] == '-')) ++exp;
                if (exp < n && is_digit(text[exp])) {
                    decimal = true;
                    end = exp;
                    while (end < n && is_digit(text[end])) ++end;
                }
            }
            out.push_back({decimal ? Token::Kind::Decimal : Token::Kind::Integer,
                           text.substr(at, end - at), pos});
            at = end;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = at;
            while (end < n && (std::isalnum(static_cast<unsigned char>(text[end])) ||
                               text[end] == '_'))
                ++end;
            out.push_back({Token::Kind::Ident, text.substr(at, end - at), pos});
            at = end;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::Plus; break;
            case '-': kind = Token::Kind::Minus; break;
            case '*': kind = Token::Kind::Star; break;
            case '^': kind = Token::Kind::Caret; break;
            case '/': kind = Token::Kind::Slash; break;
            case '(': kind = Token::Kind::LParen; break;
            case ')': kind = Token::Kind::RParen; break;
            case ',': kind = Token::Kind::Comma; break;
            case '=': kind = Token::Kind::Equal; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        out.push_back({kind, std::string(1, c), pos});
        ++at;
    }
    out.push_back({Token::Kind::End, "", n + 1});
    return out;
}

ExprPtr make_ident(const std::string& name, std::size_t position) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Ident;
    e->name = name;
    e->position = position;
    return e;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(std::vector<Token> tokens, Mode mode) : tokens_(std::move(tokens)), mode_(mode) {}

    ExprPtr parse_toplevel() {
        ExprPtr main = parse_expr();
        std::vector<std::pair<std::string, ExprPtr>> bindings;
        if (peek().kind == Token::Kind::Ident && peek().text == "where") {
            advance();
            for (;;) {
                const Token name = expect(Token::Kind::Ident, "binding name");
                if (is_keyword(name.text))
                    throw ParseError("'" + name.text + "' cannot be rebound", name.position);
                expect(Token::Kind::Equal, "'='");
                bindings.emplace_back(name.text, parse_expr());
                if (peek().kind != Token::Kind::Comma) break;
                advance();
            }
        }
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'",
                             peek().position);
        // Substitute left to right; later bindings may use earlier ones.
        for (std::size_t b = 0; b < bindings.size(); ++b) {
            for (std::size_t later = b + 1; later < bindings.size(); ++later)
                bindings[later].second =
                    substitute(bindings[later].second, bindings[b].first, bindings[b].second);
            main = substitute(main, bindings[b].first, bindings[b].second);
        }
        check_no_idents(main);
        return main;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }
    Token expect(Token::Kind kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + ", found '" +
                                 (peek().kind == Token::Kind::End ? "end of input" : peek().text) +
                                 "'",
                             peek().position);
        return advance();
    }

    static bool is_keyword(const std::string& s) {
        return s == "q" || s == "q0" || s == "q1" || s == "q2" || s == "q3" || s == "i" ||
               s == "j" || s == "k" || s == "conj" || s == "where";
    }

    ExprPtr parse_expr() {
        DepthGuard guard(*this);
        ExprPtr lhs = parse_term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const bool minus = advance().kind == Token::Kind::Minus;
            ExprPtr rhs = parse_term();
            lhs = make_sum(std::move(lhs), minus ? make_neg(std::move(rhs)) : std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (peek().kind == Token::Kind::Star) {
            advance();
            factors.push_back(parse_factor());
        }
        return make_prod(std::move(factors));
    }

    ExprPtr parse_factor() {
        int negations = 0;
        while (peek().kind == Token::Kind::Minus) {
            advance();
            ++negations;
        }
        ExprPtr base = parse_base();
        if (peek().kind == Token::Kind::Caret) {
            advance();
            const Token nat = expect(Token::Kind::Integer, "a non-negative integer exponent");
            unsigned long value = 0;
            try {
                value = std::stoul(nat.text);
            } catch (const std::exception&) {
                throw ParseError("exponent overflow (cap is " + std::to_string(kExponentCap) +
                                     ")",
                                 nat.position);
            }
            if (value > kExponentCap)
                throw ParseError("exponent overflow (cap is " + std::to_string(kExponentCap) +
                                     ")",
                                 nat.position);
            base = make_pow(std::move(base), static_cast<unsigned>(value));
        }
        for (int n = 0; n < negations; ++n) base = make_neg(std::move(base));
        return base;
    }

    ExprPtr parse_base() {
        DepthGuard guard(*this);
        const Token tok = advance();
        switch (tok.kind) {
            case Token::Kind::Integer: {
                // Optional "/ d" continues a rational literal.
                if (peek().kind == Token::Kind::Slash) {
                    advance();
                    const Token den = expect(Token::Kind::Integer, "a denominator");
                    return number(tok.text + "/" + den.text, tok.position);
                }
                return number(tok.text, tok.position);
            }
            case Token::Kind::Decimal: {
                if (mode_ != Mode::Float64)
                    throw ParseError("decimal literal requires float mode", tok.position);
                return with_position(make_const(Quaternion::real(
                                         Scalar::float64(std::strtod(tok.text.c_str(), nullptr)))),
                                     tok.position);
            }
            case Token::Kind::LParen: {
                ExprPtr inner = parse_expr();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            case Token::Kind::Ident: {
                const std::string& s = tok.text;
                if (s == "q") return with_position(make_var(), tok.position);
                if (s.size() == 2 && s[0] == 'q' && s[1] >= '0' && s[1] <= '3')
                    return with_position(make_component(s[1] - '0'), tok.position);
                if (s == "i" || s == "j" || s == "k") {
                    const int unit = s == "i" ? 1 : (s == "j" ? 2 : 3);
                    return with_position(make_const(Quaternion::unit(unit, mode_)), tok.position);
                }
                if (s == "conj") {
                    expect(Token::Kind::LParen, "'(' after conj");
                    ExprPtr inner = parse_expr();
                    expect(Token::Kind::RParen, "')'");
                    return with_position(make_conj(std::move(inner)), tok.position);
                }
                if (s == "where")
                    throw ParseError("'where' is only allowed after a complete expression",
                                     tok.position);
                return make_ident(s, tok.position);
            }
            default:
                throw ParseError("expected an expression, found '" +
                                     (tok.kind == Token::Kind::End ? "end of input" : tok.text) +
                                     "'",
                                 tok.position);
        }
    }

    ExprPtr number(const std::string& text, std::size_t position) {
        if (mode_ == Mode::ExactRational) {
            try {
                return with_position(
                    make_const(Quaternion::real(Scalar::rational(Rational::from_string(text)))),
                    position);
            } catch (const DivisionByZeroError&) {
                throw ParseError("zero denominator in rational literal", position);
            } catch (const InvalidArgumentError&) {
                throw ParseError("malformed number literal '" + text + "'", position);
            }
        }
        const auto slash = text.find('/');
        double value;
        if (slash == std::string::npos) {
            value = std::strtod(text.c_str(), nullptr);
        } else {
            const double den = std::strtod(text.c_str() + slash + 1, nullptr);
            if (den == 0.0) throw ParseError("zero denominator in rational literal", position);
            value = std::strtod(text.substr(0, slash).c_str(), nullptr) / den;
        }
        return with_position(make_const(Quaternion::real(Scalar::float64(value))), position);
    }

    static ExprPtr with_position(ExprPtr e, std::size_t position) {
        // Nodes are freshly built here, so the const_cast is safe.
        const_cast<Expr*>(e.get())->position = position;
        return e;
    }

    static ExprPtr substitute(const ExprPtr& e, const std::string& name, const ExprPtr& value) {
        if (e->kind == Expr::Kind::Ident) return e->name == name ? value : e;
        if (e->children.empty()) return e;
        auto copy = std::make_shared<Expr>(*e);
        for (auto& child : copy->children) child = substitute(child, name, value);
        return copy;
    }

    static void check_no_idents(const ExprPtr& e) {
        if (e->kind == Expr::Kind::Ident)
            throw ParseError("unbound identifier '" + e->name + "'", e->position);
        for (const auto& child : e->children) check_no_idents(child);
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth)
                throw ParseError("expression nesting too deep", parser.peek().position);
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    Mode mode_;
    int depth_ = 0;
};

} // namespace

ExprPtr parse(const std::string& text, Mode mode) {
    return Parser(tokenize(text), mode).parse_toplevel();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

Quaternion pow_quaternion(const Quaternion& base, unsigned exponent) {
    Quaternion acc = Quaternion::one(base.mode());
    Quaternion sq = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) acc = mul_components(acc, sq);
        e >>= 1u;
        if (e > 0) sq = mul_components(sq, sq);
    }
    return acc;
}

} // namespace

Quaternion eval(const ExprPtr& e, const Quaternion& q) {
    switch (e->kind) {
        case Expr::Kind::Const: {
            const Quaternion& c = e->values.front();
            if (c.mode() != q.mode())
                throw ModeMismatchError("constant mode differs from evaluation point mode");
            return c;
        }
        case Expr::Kind::VarQ:
            return q;
        case Expr::Kind::Component:
            return Quaternion::real(q.component(e->component));
        case Expr::Kind::Conj:
            return conjugate(eval(e->children[0], q));
        case Expr::Kind::Neg:
            return negate(eval(e->children[0], q));
        case Expr::Kind::Sum:
            return add(eval(e->children[0], q), eval(e->children[1], q));
        case Expr::Kind::Prod: {
            Quaternion acc = eval(e->children[0], q);
            for (std::size_t f = 1; f < e->children.size(); ++f)
                acc = mul_components(acc, eval(e->children[f], q));
            return acc;
        }
        case Expr::Kind::Pow:
            return pow_quaternion(eval(e->children[0], q), e->exponent);
        case Expr::Kind::Series: {
            if (e->values.empty()) return Quaternion::zero(q.mode());
            const std::size_t last =
                std::min<std::size_t>(e->exponent, e->values.size() - 1);
            // Horner with coefficients on the left: a_0 + (a_1 + (...)q)q.
            Quaternion acc = e->values[last];
            if (acc.mode() != q.mode())
                throw ModeMismatchError("series coefficient mode differs from point mode");
            for (std::size_t n = last; n-- > 0;)
                acc = add(e->values[n], mul_components(acc, q));
            return acc;
        }
        case Expr::Kind::Ident:
            throw Error("internal: identifier survived parsing");
    }
    throw Error("internal: unknown expression kind");
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

int precedence(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Sum: return 0;
        case Expr::Kind::Neg: return 1;
        case Expr::Kind::Prod: return 2;
        case Expr::Kind::Pow: return 3;
        default: return 4;
    }
}

std::string render(const ExprPtr& e, int parent_precedence);

std::string render_const(const Quaternion& v, int parent_precedence) {
    const std::string s = v.to_string();
    // Anything that is not a single atom ("2", "i", "1/2") must be wrapped
    // inside products and powers to reparse with the same grouping.
    bool needs_parens = !s.empty() && s[0] == '-';
    for (std::size_t c = 1; c < s.size(); ++c)
        if (s[c] == '+' || s[c] == '-' || s[c] == '*') needs_parens = true;
    return needs_parens && parent_precedence >= 2 ? "(" + s + ")" : s;
}

std::string render(const ExprPtr& e, int parent_precedence) {
    std::string out;
    switch (e->kind) {
        case Expr::Kind::Const: out = render_const(e->values.front(), parent_precedence); break;
        case Expr::Kind::VarQ: out = "q"; break;
        case Expr::Kind::Component: out = "q" + std::to_string(e->component); break;
        case Expr::Kind::Conj: out = "conj(" + render(e->children[0], 0) + ")"; break;
        case Expr::Kind::Neg:
            // Precedence 2 parenthesizes composite constants and nested
            // negations; a bare "-" binds to one factor only when reparsed.
            out = "-" + render(e->children[0], 2);
            break;
        case Expr::Kind::Sum: {
            const ExprPtr& rhs = e->children[1];
            if (rhs->kind == Expr::Kind::Neg)
                out = render(e->children[0], 0) + " - " + render(rhs->children[0], 2);
            else
                out = render(e->children[0], 0) + " + " + render(rhs, 0);
            break;
        }
        case Expr::Kind::Prod: {
            for (std::size_t f = 0; f < e->children.size(); ++f) {
                if (f) out += "*";
                out += render(e->children[f], 2);
            }
            break;
        }
        case Expr::Kind::Pow:
            // Precedence 4 forces parens around any composite base, so
            // nested powers stay reparseable.
            out = render(e->children[0], 4) + "^" + std::to_string(e->exponent);
            break;
        case Expr::Kind::Series: {
            for (std::size_t n = 0; n < e->values.size() && n <= e->exponent; ++n) {
                if (n) out += " + ";
                out += render_const(e->values[n], 2);
                if (n == 1) out += "*q";
                if (n > 1) out += "*q^" + std::to_string(n);
            }
            if (out.empty()) out = "0";
            break;
        }
        case Expr::Kind::Ident: out = e->name; break;
    }
    if (precedence(*e) < parent_precedence) return "(" + out + ")";
    return out;
}

} // namespace

std::string to_string(const ExprPtr& e) { return render(e, 0); }

} // namespace quatkit::expr
