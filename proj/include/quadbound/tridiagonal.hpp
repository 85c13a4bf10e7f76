#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "quadbound/errors.hpp"

namespace quadbound {

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector (all Golub-Welsch needs).
template <class Real>
struct TridiagonalEigen {
    std::vector<Real> values;
    std::vector<Real> first_components;
};

namespace detail {

template <class Real>
Real pythag(const Real& a, const Real& b) {
    using std::abs;
    using std::sqrt;
    const Real absa = abs(a);
    const Real absb = abs(b);
    if (absa > absb) {
        const Real q = absb / absa;
        return absa * sqrt(Real(1) + q * q);
    }
    if (absb == 0) return Real(0);
    const Real q = absa / absb;
    return absb * sqrt(Real(1) + q * q);
}

template <class Real>
Real copy_sign(const Real& magnitude, const Real& sign) {
    using std::abs;
    return sign >= 0 ? Real(abs(magnitude)) : Real(-abs(magnitude));
}

} // namespace detail

/// Implicit-shift QL iteration on the matrix with diagonal `diag` and
/// off-diagonal `offdiag` (size n-1). Only row 0 of the accumulated rotation
/// matrix is tracked, so the cost is O(n^2) with O(n) memory.
///
/// An off-diagonal element is treated as zero once
/// |e_m| <= eps * (|d_m| + |d_{m+1}|). The total number of QL sweeps is
/// capped at 30 n; exceeding it throws NonConvergence. Results are in the
/// order the iteration leaves them (not sorted).
template <class Real>
[[nodiscard]] TridiagonalEigen<Real> symmetric_tridiagonal_eigen(std::vector<Real> diag,
                                                                 std::vector<Real> offdiag) {
    using std::abs;
    const std::size_t n = diag.size();
    if (n == 0) throw ParameterError("symmetric_tridiagonal_eigen: empty matrix");
    if (offdiag.size() + 1 != n) {
        throw ParameterError("symmetric_tridiagonal_eigen: off-diagonal must have n-1 entries");
    }

    std::vector<Real>& d = diag;
    std::vector<Real> e(n, Real(0));
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = offdiag[i];

    std::vector<Real> z(n, Real(0));
    z[0] = Real(1);

    const Real eps = std::numeric_limits<Real>::epsilon();
    const std::size_t max_sweeps = 30 * n;
    std::size_t sweeps = 0;

    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const Real dd = abs(d[m]) + abs(d[m + 1]);
                if (abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++sweeps > max_sweeps) {
                throw NonConvergence("symmetric_tridiagonal_eigen: QL iteration exceeded " +
                                     std::to_string(max_sweeps) + " sweeps");
            }

            Real g = (d[l + 1] - d[l]) / (Real(2) * e[l]);
            Real r = detail::pythag(g, Real(1));
            g = d[m] - d[l] + e[l] / (g + detail::copy_sign(r, g));
            Real s(1);
            Real c(1);
            Real p(0);
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                Real f = s * e[i];
                const Real b = c * e[i];
                r = detail::pythag(f, g);
                e[i + 1] = r;
                if (r == 0) {
                    d[i + 1] -= p;
                    e[m] = Real(0);
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + Real(2) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = Real(0);
        } while (m != l);
    }

    return {std::move(d), std::move(z)};
}

} // namespace quadbound
