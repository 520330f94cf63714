#include "rigidity/rational.hpp"

#include <algorithm>
#include <cctype>

#include "rigidity/errors.hpp"

namespace rigidity {
namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_text(s)) throw InvalidArgument("malformed rational: '" + std::string(whole) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos) throw InvalidArgument("malformed rational: empty string");
    std::string_view s = text.substr(first, last - first + 1);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        std::string_view den_text = s.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '-')
            throw InvalidArgument("malformed rational: negative denominator in '" + std::string(text) + "'");
        mpz_class den = parse_integer(den_text, text);
        if (den == 0) throw InvalidArgument("malformed rational: zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        std::string_view int_digits = int_part;
        if (!int_digits.empty() && (int_digits.front() == '-' || int_digits.front() == '+')) int_digits.remove_prefix(1);
        if (int_digits.empty() && frac_part.empty()) throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
        mpz_class whole = int_digits.empty() ? mpz_class(0) : parse_integer(int_digits, text);
        mpz_class frac = frac_part.empty() ? mpz_class(0) : parse_integer(frac_part, text);
        if (!frac_part.empty() && !std::isdigit(static_cast<unsigned char>(frac_part.front())))
            throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Rational q(whole * scale + frac, scale);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    return Rational(parse_integer(s, text));
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace rigidity
