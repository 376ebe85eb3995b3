#include "antipod/scalar.hpp"

namespace antipod {

Scalar parse_scalar(const std::string& text) {
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Scalar(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + text + "'");
        }
        return Scalar(num, den);  // two-arg ctor canonicalizes
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal '" + text + "'");
    }
}

std::string scalar_str(const Scalar& q) {
    return q.str();
}

Scalar pow_scalar(const Scalar& q, unsigned e) {
    Scalar out(1);
    Scalar base = q;
    while (e > 0) {
        if (e & 1u) {
            out *= base;
        }
        base *= base;
        e >>= 1u;
    }
    return out;
}

}  // namespace antipod
