#include "quatkit/rational.hpp"

namespace quatkit {

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw InvalidArgumentError("empty rational literal");
    const auto slash = text.find('/');
    try {
        // Base fixed at 10: the default base 0 would read leading zeros as octal.
        if (slash == std::string::npos) {
            mpq_class v{mpz_class(text, 10)};
            return Rational(v);
        }
        mpz_class num(text.substr(0, slash), 10);
        mpz_class den(text.substr(slash + 1), 10);
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        mpq_class v;
        v.get_num() = num;
        v.get_den() = den;
        v.canonicalize();
        return Rational(v);
    } catch (const std::invalid_argument&) {
        throw InvalidArgumentError("malformed rational literal '" + text + "'");
    }
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace quatkit
