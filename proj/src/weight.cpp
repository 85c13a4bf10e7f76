#include "quadbound/weight.hpp"

#include <charconv>
#include <cstdio>

namespace quadbound {

WeightSpec WeightSpec::parse(std::string_view text) {
    if (text == "chebyshev1") return chebyshev1();
    if (text == "legendre") return legendre();
    if (text == "chebyshev2") return chebyshev2();
    constexpr std::string_view prefix = "gegenbauer:";
    if (text.starts_with(prefix)) {
        const auto body = text.substr(prefix.size());
        double lambda = 0.0;
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), lambda);
        if (ec == std::errc() && ptr == body.data() + body.size()) return gegenbauer(lambda);
    }
    throw ParameterError("unknown weight '" + std::string(text) +
                         "' (expected chebyshev1, legendre, chebyshev2 or gegenbauer:<lambda>)");
}

std::string WeightSpec::name() const {
    if (lambda_ == 0.0) return "chebyshev1";
    if (lambda_ == 0.5) return "legendre";
    if (lambda_ == 1.0) return "chebyshev2";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, lambda_);
    return "gegenbauer(" + std::string(buf, ptr) + ")";
}

} // namespace quadbound
