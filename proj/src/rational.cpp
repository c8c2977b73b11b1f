#include "quasisym/rational.hpp"

#include "quasisym/error.hpp"

#include <cctype>

namespace quasisym {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string num_s(num);
    if (num_s[0] == '+') num_s.erase(0, 1);
    Integer p(num_s, 10), q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

} // namespace quasisym
