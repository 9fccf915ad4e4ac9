#include "gwa/parse.hpp"

#include <cctype>

namespace gwa {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const ParserOptions& options)
        : text_(text), options_(options), vars_(LaurentPoly::th_vars()) {}

    LaurentPoly parse() {
        skip_ws();
        if (eof()) throw ParseError("empty expression", pos_);
        LaurentPoly result = parse_expr();
        skip_ws();
        if (!eof()) throw ParseError("unexpected trailing input", pos_);
        return result;
    }

  private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool starts_factor() const {
        if (eof()) return false;
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'h' ||
               c == 't' || c == '(';
    }

    LaurentPoly parse_expr() {
        skip_ws();
        bool negate = false;
        if (!eof() && peek() == '-') {
            negate = true;
            ++pos_;
        }
        LaurentPoly acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) break;
            char op = peek();
            ++pos_;
            LaurentPoly rhs = parse_term();
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    LaurentPoly parse_term() {
        LaurentPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                acc *= parse_factor();
                continue;
            }
            if (starts_factor()) {
                acc *= parse_factor();
                continue;
            }
            break;
        }
        return acc;
    }

    LaurentPoly parse_factor() {
        LaurentPoly base = parse_base();
        skip_ws();
        if (!eof() && peek() == '^') {
            std::size_t caret = pos_;
            ++pos_;
            std::int64_t e = parse_int();
            if (e < 0 && !base.is_unit())
                throw ParseError("negative power of a non-unit expression", caret);
            base = base.pow(e);
        }
        return base;
    }

    LaurentPoly parse_base() {
        skip_ws();
        if (eof()) throw ParseError("expected a value", pos_);
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = parse_expr();
            skip_ws();
            if (eof() || peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'h' || c == 't') {
            ++pos_;
            return LaurentPoly::variable(vars_, std::string(1, c));
        }
        if (c == 'z') {
            std::size_t start = pos_;
            ++pos_;
            std::int64_t n = parse_digits("conductor");
            if (n < 1) throw ParseError("conductor must be >= 1", start);
            if (n > options_.max_conductor)
                throw ParseError("conductor exceeds the configured limit of " +
                                     std::to_string(options_.max_conductor),
                                 start);
            return LaurentPoly::constant(vars_, Scalar::root_of_unity(n));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num(parse_bigint(), 1);
            // '/' joins a rational literal only when digits follow.
            if (!eof() && peek() == '/' && pos_ + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                std::size_t slash = pos_;
                ++pos_;
                mpz_class den = parse_bigint();
                if (den == 0) throw ParseError("zero denominator", slash);
                num /= Rational(den, 1);
            }
            num.canonicalize();
            return LaurentPoly::constant(vars_, Scalar::from_rational(num));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    mpz_class parse_bigint() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    std::int64_t parse_digits(const char* what) {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what, pos_);
        mpz_class value = parse_bigint();
        if (!value.fits_slong_p()) throw ParseError(std::string(what) + " out of range", pos_);
        return static_cast<std::int64_t>(value.get_si());
    }

    std::int64_t parse_int() {
        skip_ws();
        bool neg = false;
        if (!eof() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::int64_t v = parse_digits("integer exponent");
        return neg ? -v : v;
    }

    const std::string& text_;
    ParserOptions options_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const ParserOptions& options) {
    return Parser(text, options).parse();
}

LaurentPoly parse_a_poly(const std::string& text, const ParserOptions& options) {
    LaurentPoly p = parse_poly(text, options);
    std::size_t t_idx = p.var_index("t");
    for (const auto& [e, c] : p.terms())
        if (e[t_idx] != 0) throw ParseError("a(h) must not involve t", 0);
    return p.without_var("t");
}

Scalar parse_scalar(const std::string& text, const ParserOptions& options) {
    LaurentPoly p = parse_poly(text, options);
    if (!p.is_constant()) throw ParseError("expected a constant expression", 0);
    return p.constant_value();
}

}  // namespace gwa
