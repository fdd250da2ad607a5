#include "jorvar/rational.hpp"

namespace jorvar {

std::string to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += "/";
        s += rat_den(r).str();
    }
    return s;
}

namespace {

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw ParseError("bad integer literal '" + text + "'");
    }
}

} // namespace

Rat parse_rat(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + text + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

std::optional<Int> int_sqrt_exact(const Int& n) {
    if (n < 0)
        return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n)
        return r;
    return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (r < 0)
        return std::nullopt;
    auto num = int_sqrt_exact(rat_num(r));
    if (!num)
        return std::nullopt;
    auto den = int_sqrt_exact(rat_den(r));
    if (!den)
        return std::nullopt;
    return Rat(*num, *den);
}

} // namespace jorvar
