#include "alcove/exact.hpp"

#include <cmath>
#include <limits>

namespace alcove {

ExactScalar parse_rational(std::string_view text) {
    auto bad = [&] { throw ParseError("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return ExactScalar(BigInt(std::string(text)));
        }
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return ExactScalar(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return ExactScalar();  // unreachable
}

std::string rational_to_string(const ExactScalar& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) {
        s += "/";
        s += denominator(v).str();
    }
    return s;
}

double to_double(const ExactScalar& v) { return v.convert_to<double>(); }

ExactScalar rationalize(double x, long max_den) {
    if (!std::isfinite(x)) throw ParseError("cannot rationalize a non-finite value");
    double scaled = x * static_cast<double>(max_den);
    double rounded = std::round(scaled);
    // llround would overflow for huge inputs; go through a string-free path.
    BigInt num(static_cast<long long>(rounded));
    return ExactScalar(num, BigInt(max_den));
}

}  // namespace alcove
