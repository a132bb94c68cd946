#pragma once

#include "dynamo/rational.hpp"

#include <type_traits>
#include <vector>

namespace dynamo {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Determinant: Bareiss over Z, Gaussian elimination over a field otherwise.
template <class K>
K det(Matrix<K> m) {
    size_t n = m.size();
    if (n == 0) return K(1);
    int sign = 1;
    if constexpr (std::is_same_v<K, Z>) {
        Z prev = 1;
        for (size_t k = 0; k + 1 < n; ++k) {
            if (m[k][k] == 0) {
                size_t piv = k + 1;
                while (piv < n && m[piv][k] == 0) ++piv;
                if (piv == n) return Z(0);
                std::swap(m[k], m[piv]);
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i) {
                for (size_t j = k + 1; j < n; ++j) {
                    Z t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                    m[i][j] = t;
                }
            }
            prev = m[k][k];
        }
        return sign < 0 ? Z(-m[n - 1][n - 1]) : m[n - 1][n - 1];
    } else {
        K acc(1);
        for (size_t k = 0; k < n; ++k) {
            size_t piv = k;
            while (piv < n && is_zero(m[piv][k])) ++piv;
            if (piv == n) return K(0);
            if (piv != k) {
                std::swap(m[k], m[piv]);
                sign = -sign;
            }
            acc *= m[k][k];
            K inv = K(1) / m[k][k];
            for (size_t i = k + 1; i < n; ++i) {
                if (is_zero(m[i][k])) continue;
                K f = m[i][k] * inv;
                for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
            }
        }
        return sign < 0 ? K(-acc) : acc;
    }
}

// Sylvester matrix of two coefficient lists given highest-degree first.
template <class K>
Matrix<K> sylvester(const std::vector<K>& a, const std::vector<K>& b) {
    size_t m = a.size() - 1, n = b.size() - 1;
    Matrix<K> s(m + n, std::vector<K>(m + n, K(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) s[i][i + j] = a[j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[j];
    return s;
}

} // namespace dynamo

namespace dynamo {

// Characteristic polynomial det(t*I - M) over a field, constant term first,
// by reduction to upper Hessenberg form.
template <class K>
std::vector<K> charpoly(Matrix<K> a) {
    size_t n = a.size();
    for (size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
        size_t piv = m;
        while (piv < n && is_zero(a[piv][m - 1])) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            std::swap(a[piv], a[m]);
            for (size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
        }
        K inv = K(1) / a[m][m - 1];
        for (size_t i = m + 1; i < n; ++i) {
            if (is_zero(a[i][m - 1])) continue;
            K u = a[i][m - 1] * inv;
            for (size_t j = 0; j < n; ++j) a[i][j] -= u * a[m][j];
            for (size_t j = 0; j < n; ++j) a[j][m] += u * a[j][i];
        }
    }
    // p_k(t) = char poly of leading k x k block
    std::vector<std::vector<K>> p(n + 1);
    p[0] = {K(1)};
    for (size_t k = 1; k <= n; ++k) {
        // p_k = (t - a[k-1][k-1]) p_{k-1} - sum_{i<k-1} a[i][k-1] * (prod_{j=i+1}^{k-1} a[j][j-1]) p_i
        std::vector<K> r(k + 1, K(0));
        for (size_t i = 0; i < p[k - 1].size(); ++i) {
            r[i + 1] += p[k - 1][i];
            r[i] -= a[k - 1][k - 1] * p[k - 1][i];
        }
        K prod(1);
        for (size_t ii = k - 1; ii-- > 0;) {
            prod *= a[ii + 1][ii];
            if (is_zero(prod)) break;
            K coef = a[ii][k - 1] * prod;
            if (is_zero(coef)) continue;
            for (size_t j = 0; j < p[ii].size(); ++j) r[j] -= coef * p[ii][j];
        }
        p[k] = std::move(r);
    }
    return p[n];
}

} // namespace dynamo
