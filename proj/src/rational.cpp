#include "minorder/rational.hpp"

#include <cstdlib>

#include "minorder/errors.hpp"

namespace minorder {

namespace {

long long parse_integer(std::string_view text) {
    if (text.empty()) {
        throw InputError("empty integer in rational literal");
    }
    size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) {
        throw InputError("sign without digits in rational literal");
    }
    long long value = 0;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch < '0' || ch > '9') {
            throw InputError(std::string("bad character '") + ch + "' in rational literal");
        }
        value = value * 10 + (ch - '0');
    }
    return negative ? -value : value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_integer(text));
    }
    long long num = parse_integer(text.substr(0, slash));
    long long den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw InputError("zero denominator in rational literal '" + std::string(text) + "'");
    }
    return Rat(num, den);
}

std::string format_rational(const Rat& value) {
    std::string out = std::to_string(value.numerator());
    if (value.denominator() != 1) {
        out += '/';
        out += std::to_string(value.denominator());
    }
    return out;
}

}  // namespace minorder
