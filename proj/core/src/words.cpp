#include "ratbase/words.hpp"

#include "ratbase/error.hpp"

#include <cctype>

namespace ratbase {

namespace {

const std::string kEpsilon = "\xce\xb5"; // U+03B5

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Digit parse_digit(const std::string& token) {
    std::string t = trim(token);
    if (t.empty())
        throw Error(ErrorKind::ParseError, "empty digit in word");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
        throw Error(ErrorKind::ParseError, "bad digit '" + token + "'");
    for (std::size_t j = i; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j])))
            throw Error(ErrorKind::ParseError, "bad digit '" + token + "'");
    return Digit(t, 10);
}

} // namespace

std::string format_word(const DigitWord& word) {
    if (word.empty()) return kEpsilon;
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += word[i].get_str();
    }
    return out;
}

DigitWord parse_word(const std::string& text, const Int& p) {
    std::string t = trim(text);
    if (t.empty() || t == "eps" || t == kEpsilon) return {};

    if (t.find(',') != std::string::npos) {
        DigitWord word;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = t.find(',', pos);
            word.push_back(parse_digit(t.substr(pos, comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return word;
    }

    bool all_ascii_digits = true;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            all_ascii_digits = false;
            break;
        }
    if (all_ascii_digits && p <= 10) {
        // Compact form: one character per digit. Only unambiguous when every
        // canonical digit is a single decimal character.
        DigitWord word;
        word.reserve(t.size());
        for (char c : t) word.emplace_back(c - '0');
        return word;
    }

    return {parse_digit(t)};
}

} // namespace ratbase
