#include "symcrit/expr.hpp"

#include <cctype>
#include <string>

#include "symcrit/errors.hpp"

namespace symcrit {

namespace {

constexpr long kMaxOrder = 1000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    CycNum parse() {
        if (text_.find('.') != std::string_view::npos) fail("decimal input is rejected; use exact fractions");
        CycNum v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    long small_integer() {
        const std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        return std::stol(d);
    }

    CycNum expr() {
        CycNum v = term();
        while (true) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    CycNum term() {
        CycNum v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const CycNum d = unary();
                if (d.is_zero()) throw DivisionByZero();
                v = v / d;
            } else {
                return v;
            }
        }
    }

    CycNum unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    CycNum power() {
        CycNum base = primary();
        if (!accept('^')) return base;
        const bool negative = accept('-');
        const long e = small_integer();
        if (negative && base.is_zero()) throw DivisionByZero();
        return base.pow(negative ? -e : e);
    }

    CycNum primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            CycNum v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos_;
            const long n = small_integer();
            if (n < 1) fail("root of unity order must be positive");
            if (n > kMaxOrder) fail("root of unity order exceeds " + std::to_string(kMaxOrder));
            return root_of_unity(static_cast<int>(n), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return CycNum(BigRational(mpz_class(digits())));
        fail("unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_cyc(std::string_view text) { return Parser(text).parse(); }

}  // namespace symcrit
