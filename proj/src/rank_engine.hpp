#pragma once

// Machine-integer engine for exact left-row elimination over the quaternions.
// Rows carry int64 coefficients; every update is computed in 128-bit
// intermediates with range guards, and any row may be divided by a common
// positive factor (a left scalar, so the left row space is untouched). When a
// guard cannot be satisfied the engine reports failure and the caller falls
// back to the GMP reference elimination.
//
// The update rule avoids inverses entirely: with pivot entry p and target
// entry a, the target row is replaced by |p|^2 * row - (a p*) * pivot_row.
// Since p* p = |p|^2 is real and central this zeroes the target entry, and it
// equals |p|^2 times the classical row (row - a p^{-1} pivot_row), so the
// zero pattern and pivot trace coincide with the reference engine's.

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qgg/qmatrix.hpp"

namespace qgg::detail {

using i128 = __int128;
using u128 = unsigned __int128;

struct IQuat {
    std::int64_t w, x, y, z;
    bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
};

struct IQuat128 {
    i128 w = 0, x = 0, y = 0, z = 0;
};

constexpr int kIntRankMaxDim = 16;

struct IQuatMat {
    int rows = 0;
    int cols = 0;
    std::array<IQuat, kIntRankMaxDim * kIntRankMaxDim> e{};

    IQuat& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const IQuat& at(int r, int c) const {
        return e[static_cast<std::size_t>(r) * cols + c];
    }
};

struct IntElimResult {
    int pivot_count = 0;
    bool ok = false;             // false: range guard failed, use the reference engine
    bool stopped_early = false;  // early_stop pivots reached before completion
    std::vector<std::pair<int, int>> pivot_trace;
};

inline u128 abs128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

inline u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// |q|^2 in 128 bits; exact for any int64 coefficients.
inline u128 norm_squared_128(const IQuat& q) {
    auto sq = [](std::int64_t v) { return static_cast<u128>(abs128(v)) * abs128(v); };
    return sq(q.w) + sq(q.x) + sq(q.y) + sq(q.z);
}

// a * conj(p) with 128-bit coefficients.
inline IQuat128 mul_conj_128(const IQuat& a, const IQuat& p) {
    i128 pw = p.w, px = -static_cast<i128>(p.x), py = -static_cast<i128>(p.y),
         pz = -static_cast<i128>(p.z);
    IQuat128 r;
    r.w = static_cast<i128>(a.w) * pw - static_cast<i128>(a.x) * px -
          static_cast<i128>(a.y) * py - static_cast<i128>(a.z) * pz;
    r.x = static_cast<i128>(a.w) * px + static_cast<i128>(a.x) * pw +
          static_cast<i128>(a.y) * pz - static_cast<i128>(a.z) * py;
    r.y = static_cast<i128>(a.w) * py - static_cast<i128>(a.x) * pz +
          static_cast<i128>(a.y) * pw + static_cast<i128>(a.z) * px;
    r.z = static_cast<i128>(a.w) * pz + static_cast<i128>(a.x) * py -
          static_cast<i128>(a.y) * px + static_cast<i128>(a.z) * pw;
    return r;
}

// Safe operating ranges. Stored coefficients stay below kRowLimit and every
// scalar that multiplies a stored coefficient stays below kMulLimit, so each
// product is < 2^124 and sums of five such terms cannot overflow i128.
constexpr std::int64_t kRowLimit = std::int64_t(1) << 62;
constexpr u128 kMulLimit = u128(1) << 62;
constexpr std::int64_t kStripThreshold = std::int64_t(1) << 40;

// Divides the active segment [from, cols) of a row by the gcd of its
// coefficients. Returns the largest |coefficient| remaining.
inline u128 strip_row_128(IQuat128* row, int from, int cols) {
    u128 g = 0;
    for (int c = from; c < cols; ++c) {
        g = gcd128(g, abs128(row[c].w));
        g = gcd128(g, abs128(row[c].x));
        g = gcd128(g, abs128(row[c].y));
        g = gcd128(g, abs128(row[c].z));
        if (g == 1) break;
    }
    u128 maxabs = 0;
    for (int c = from; c < cols; ++c) {
        if (g > 1) {
            row[c].w /= static_cast<i128>(g);
            row[c].x /= static_cast<i128>(g);
            row[c].y /= static_cast<i128>(g);
            row[c].z /= static_cast<i128>(g);
        }
        maxabs = std::max({maxabs, abs128(row[c].w), abs128(row[c].x), abs128(row[c].y),
                           abs128(row[c].z)});
    }
    return maxabs;
}

inline std::int64_t iabs64(std::int64_t v) { return v < 0 ? -v : v; }

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = iabs64(a);
    b = iabs64(b);
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Divides a stored row segment by its gcd; returns the largest |coefficient|.
inline std::int64_t strip_row_64(IQuatMat& m, int r, int from) {
    std::int64_t g = 0;
    for (int c = from; c < m.cols; ++c) {
        const IQuat& q = m.at(r, c);
        g = gcd64(g, q.w);
        g = gcd64(g, q.x);
        g = gcd64(g, q.y);
        g = gcd64(g, q.z);
        if (g == 1) break;
    }
    std::int64_t maxabs = 0;
    for (int c = from; c < m.cols; ++c) {
        IQuat& q = m.at(r, c);
        if (g > 1) {
            q.w /= g;
            q.x /= g;
            q.y /= g;
            q.z /= g;
        }
        maxabs = std::max({maxabs, iabs64(q.w), iabs64(q.x), iabs64(q.y), iabs64(q.z)});
    }
    return maxabs;
}

/// Row-echelon elimination in place. Stops after early_stop pivots when
/// early_stop > 0 (the pivot count is then a lower bound on the rank, which
/// is all a strict-bound check needs). pivot rows in the trace refer to the
/// input row order.
inline IntElimResult eliminate_int64(IQuatMat& m, int early_stop, bool record_pivots) {
    IntElimResult res;
    std::array<int, kIntRankMaxDim> rowid;
    for (int r = 0; r < m.rows; ++r) rowid[r] = r;

    int pivot_row = 0;
    for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        int pr = -1;
        for (int r = pivot_row; r < m.rows; ++r) {
            if (!m.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != pivot_row) {
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(pivot_row, c));
            std::swap(rowid[pr], rowid[pivot_row]);
        }
        ++res.pivot_count;
        if (record_pivots) res.pivot_trace.emplace_back(rowid[pivot_row], col);
        if (early_stop > 0 && res.pivot_count >= early_stop) {
            res.ok = true;
            res.stopped_early = true;
            return res;
        }

        u128 pn2 = norm_squared_128(m.at(pivot_row, col));
        if (pn2 >= kMulLimit) {
            strip_row_64(m, pivot_row, col);
            pn2 = norm_squared_128(m.at(pivot_row, col));
            if (pn2 >= kMulLimit) return res;  // ok = false
        }
        const i128 pn2s = static_cast<i128>(pn2);

        std::array<IQuat128, kIntRankMaxDim> buf;
        for (int r = pivot_row + 1; r < m.rows; ++r) {
            if (m.at(r, col).is_zero()) continue;
            IQuat128 t = mul_conj_128(m.at(r, col), m.at(pivot_row, col));
            u128 tmax = std::max({abs128(t.w), abs128(t.x), abs128(t.y), abs128(t.z)});
            if (tmax >= kMulLimit) {
                strip_row_64(m, r, col);
                t = mul_conj_128(m.at(r, col), m.at(pivot_row, col));
                tmax = std::max({abs128(t.w), abs128(t.x), abs128(t.y), abs128(t.z)});
                if (tmax >= kMulLimit) return res;
            }

            u128 maxabs = 0;
            for (int c = col + 1; c < m.cols; ++c) {
                const IQuat& a = m.at(r, c);
                const IQuat& p = m.at(pivot_row, c);
                IQuat128& o = buf[c];
                o.w = pn2s * a.w - (t.w * p.w - t.x * p.x - t.y * p.y - t.z * p.z);
                o.x = pn2s * a.x - (t.w * p.x + t.x * p.w + t.y * p.z - t.z * p.y);
                o.y = pn2s * a.y - (t.w * p.y - t.x * p.z + t.y * p.w + t.z * p.x);
                o.z = pn2s * a.z - (t.w * p.z + t.x * p.y - t.y * p.x + t.z * p.w);
                maxabs = std::max({maxabs, abs128(o.w), abs128(o.x), abs128(o.y),
                                   abs128(o.z)});
            }
            if (maxabs >= static_cast<u128>(kStripThreshold))
                maxabs = strip_row_128(buf.data(), col + 1, m.cols);
            if (maxabs >= static_cast<u128>(kRowLimit)) return res;

            m.at(r, col) = IQuat{};
            for (int c = col + 1; c < m.cols; ++c) {
                m.at(r, c) = IQuat{static_cast<std::int64_t>(buf[c].w),
                                   static_cast<std::int64_t>(buf[c].x),
                                   static_cast<std::int64_t>(buf[c].y),
                                   static_cast<std::int64_t>(buf[c].z)};
            }
        }
        ++pivot_row;
    }
    res.ok = true;
    return res;
}

/// Loads a rational-quaternion matrix, clearing denominators row by row
/// (left scaling by the row's denominator lcm). Fails when any lcm or scaled
/// coefficient falls outside the headroom the elimination guards assume.
inline bool load_scaled(const QMatrix& a, IQuatMat& out) {
    if (a.rows() > kIntRankMaxDim || a.cols() > kIntRankMaxDim) return false;
    out.rows = a.rows();
    out.cols = a.cols();
    const mpz_class lcm_limit(std::int64_t(1) << 31);
    const mpz_class coef_limit(std::int64_t(1) << 45);
    mpz_class lcm, scaled, q;
    for (int r = 0; r < a.rows(); ++r) {
        lcm = 1;
        for (int c = 0; c < a.cols(); ++c)
            for (int k = 0; k < 4; ++k) {
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                        a.at(r, c).coeff(k).denominator().get_mpz_t());
            }
        if (lcm > lcm_limit) return false;
        for (int c = 0; c < a.cols(); ++c) {
            std::array<std::int64_t, 4> v{};
            for (int k = 0; k < 4; ++k) {
                const Rational& coef = a.at(r, c).coeff(k);
                mpz_divexact(q.get_mpz_t(), lcm.get_mpz_t(),
                             coef.denominator().get_mpz_t());
                scaled = coef.numerator() * q;
                if (scaled > coef_limit || scaled < -coef_limit) return false;
                v[k] = static_cast<std::int64_t>(scaled.get_si());
            }
            out.at(r, c) = IQuat{v[0], v[1], v[2], v[3]};
        }
    }
    return true;
}

}  // namespace qgg::detail
