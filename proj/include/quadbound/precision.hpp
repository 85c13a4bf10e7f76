#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace quadbound {

/// 100 decimal digits. Used wherever an "actual error" has to be resolved below
/// double round-off, e.g. e^x under a 25-point rule where |I - Q_N| ~ 1e-79.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                                    boost::multiprecision::et_off>;

template <class Real>
[[nodiscard]] inline double to_double(const Real& x) {
    return static_cast<double>(x);
}

} // namespace quadbound
