#include "quatkit/scalar.hpp"

#include <charconv>
#include <cmath>

namespace quatkit {

std::string Scalar::to_string() const {
    if (is_exact()) return rat_.to_string();
    if (std::isnan(flt_)) return "nan";
    if (std::isinf(flt_)) return flt_ > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), flt_);
    (void)ec;
    return std::string(buf, end);
}

} // namespace quatkit
