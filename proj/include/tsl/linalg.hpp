// Small dense exact-rational vectors and matrices.

#pragma once

#include <cstddef>
#include <vector>

#include "tsl/rational.hpp"

namespace tsl {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline Rat dot(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) throw error("dot: dimension mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vec_add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) throw error("vec_add: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size()) throw error("vec_sub: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a)
{
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a)
{
    for (const Rat& x : a)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec mat_apply(const Mat& m, const Vec& v)
{
    Vec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b)
{
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(p));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < p; ++j) {
            Rat s;
            for (size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

inline Mat mat_identity(size_t n)
{
    Mat m(n, Vec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

inline Rat mat_det(Mat m)
{
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Gauss-Jordan inverse; throws on singular input.
inline Mat mat_inverse(Mat m)
{
    size_t n = m.size();
    Mat inv = mat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw error("mat_inverse: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t c = 0; c < n; ++c) { m[col][c] /= d; inv[col][c] /= d; }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rat f = m[r][col];
            for (size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

inline size_t vec_hash(const Vec& v)
{
    size_t h = 1469598103934665603ull;
    for (const Rat& x : v) {
        h = (h ^ x.hash()) * 1099511628211ull;
    }
    return h;
}

inline std::string vec_str(const Vec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace tsl
