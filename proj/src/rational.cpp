#include "itdual/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace itdual {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to)
{
    if (from >= to)
        return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}

Rat parse_rational(const std::string& text)
{
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    size_t slash = text.find('/', pos);
    BigInt num, den = 1;
    if (slash == std::string::npos) {
        if (!all_digits(text, pos, text.size()))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        num = BigInt(text.substr(pos));
    } else {
        if (!all_digits(text, pos, slash) || !all_digits(text, slash + 1, text.size()))
            throw std::invalid_argument("malformed rational: '" + text + "'");
        num = BigInt(text.substr(pos, slash - pos));
        den = BigInt(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator: '" + text + "'");
    }

    Rat value(num, den);
    return negative ? Rat(-value) : value;
}

std::string rat_to_string(const Rat& value)
{
    return value.str();
}

double rat_to_double(const Rat& value)
{
    return value.convert_to<double>();
}

}
