#include "ratbase/integers.hpp"

#include "ratbase/error.hpp"

#include <cctype>

namespace ratbase {

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_str();
}

namespace {

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_decimal(text))
            throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
        return Rat(Int(text, 10));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_decimal(num) || !is_decimal(den))
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    Int d(den, 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
    return make_rat(Int(num, 10), d);
}

} // namespace ratbase
