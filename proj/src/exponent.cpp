#include "xsb/exponent.hpp"

#include "xsb/detail/scan.hpp"
#include "xsb/error.hpp"

#include <cctype>
#include <ostream>

namespace xsb {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : Error([&] {
          std::string what = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
          if (!expected.empty()) {
              what += " (expected ";
              for (std::size_t i = 0; i < expected.size(); ++i) {
                  if (i) what += i + 1 == expected.size() ? " or " : ", ";
                  what += expected[i];
              }
              what += ")";
          }
          return what;
      }()),
      line_(line), column_(column), detail_(std::move(message)), expected_(std::move(expected)) {}

Rational q(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    return Rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view scan_digits(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    return text.substr(start, pos - start);
}

[[noreturn]] void fail(std::size_t line, std::size_t column, std::string msg,
                       std::vector<std::string> expected) {
    throw ParseError(line, column, std::move(msg), std::move(expected));
}

} // namespace

void skip_blanks(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

bool exponent_starts(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) return false;
    char c = text[pos];
    return is_digit(c) || c == '-' || c == '+' || c == 'e';
}

Exponent scan_exponent(std::string_view text, std::size_t& pos, std::size_t line,
                       std::size_t column_base) {
    auto col = [&] { return column_base + pos; };
    auto expect_number = [&]() -> Integer {
        auto digits = scan_digits(text, pos);
        if (digits.empty()) fail(line, col(), "malformed exponent literal", {"digit"});
        return Integer(std::string(digits));
    };

    Exponent total;
    bool first = true;
    for (;;) {
        skip_blanks(text, pos);
        int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_blanks(text, pos);
        } else if (!first) {
            break;
        }
        if (pos >= text.size() || !(is_digit(text[pos]) || text[pos] == 'e')) {
            fail(line, col(), "malformed exponent literal", {"digit", "'e'"});
        }

        Rational coeff(1);
        bool has_number = false;
        if (is_digit(text[pos])) {
            has_number = true;
            Integer num = expect_number();
            Integer den(1);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                den = expect_number();
                if (den == 0) fail(line, col(), "zero denominator in exponent literal", {});
            }
            coeff = Rational(num, den);
        }

        std::size_t save = pos;
        skip_blanks(text, pos);
        bool starred = false;
        if (has_number && pos < text.size() && text[pos] == '*') {
            starred = true;
            ++pos;
            skip_blanks(text, pos);
        }
        if (pos < text.size() && text[pos] == 'e' &&
            (pos + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])) ||
             text[pos + 1] == '/')) {
            ++pos;
            if (!has_number && pos < text.size() && text[pos] == '/') {
                ++pos;
                Integer den = expect_number();
                if (den == 0) fail(line, col(), "zero denominator in exponent literal", {});
                coeff = Rational(Integer(1), den);
            }
            total += Exponent::eps(sign * coeff);
        } else if (starred || !has_number) {
            fail(line, col(), "malformed exponent literal", {"'e'"});
        } else {
            pos = save;
            total += Exponent(sign * coeff);
        }
        first = false;

        // A trailing sign with nothing after it belongs to the caller (goal
        // classes such as `-5/32-`).
        std::size_t look = pos;
        skip_blanks(text, look);
        if (look < text.size() && (text[look] == '+' || text[look] == '-')) {
            std::size_t after = look + 1;
            skip_blanks(text, after);
            if (after < text.size() && (is_digit(text[after]) || text[after] == 'e')) {
                pos = look;
                continue;
            }
        }
        break;
    }
    return total;
}

} // namespace detail

Exponent& Exponent::operator+=(const Exponent& o) {
    base_ += o.base_;
    slack_ += o.slack_;
    return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
    base_ -= o.base_;
    slack_ -= o.slack_;
    return *this;
}

Exponent& Exponent::operator*=(const Rational& k) {
    base_ *= k;
    slack_ *= k;
    return *this;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (a.base_ < b.base_) return std::strong_ordering::less;
    if (b.base_ < a.base_) return std::strong_ordering::greater;
    if (a.slack_ < b.slack_) return std::strong_ordering::less;
    if (b.slack_ < a.slack_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering exp_cmp(const Exponent& a, const Exponent& b) { return a <=> b; }

Exponent multiply(const Exponent& a, const Exponent& b) {
    if (!a.is_rational() && !b.is_rational()) {
        throw DomainError("product " + a.str() + " * " + b.str() + " has an e^2 term");
    }
    return {a.base() * b.base(), a.base() * b.slack() + a.slack() * b.base()};
}

std::string Exponent::str() const {
    std::string out;
    bool show_base = base_ != 0 || slack_ == 0;
    if (show_base) out = to_string(base_);
    if (slack_ != 0) {
        Rational mag = slack_ < 0 ? Rational(-slack_) : slack_;
        if (slack_ < 0) out += "-";
        else if (show_base) out += "+";
        out += mag == 1 ? std::string("e") : to_string(mag) + "*e";
    }
    return out;
}

Exponent Exponent::parse(std::string_view text) {
    std::size_t pos = 0;
    Exponent e = detail::scan_exponent(text, pos);
    detail::skip_blanks(text, pos);
    if (pos != text.size()) {
        throw ParseError(1, pos + 1, "unexpected trailing input in exponent literal", {"end of literal"});
    }
    return e;
}

Rational parse_rational(std::string_view text) {
    Exponent e = Exponent::parse(text);
    if (!e.is_rational()) throw ParseError(1, 1, "expected a rational, got " + e.str(), {});
    return e.base();
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.str(); }

} // namespace xsb
