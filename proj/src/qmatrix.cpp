#include "qgg/qmatrix.hpp"

#include <algorithm>
#include <complex>
#include <numeric>

#include "rank_engine.hpp"

namespace qgg {

std::string QMatrix::str() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out += " | ";
            out += at(r, c).str();
        }
        out += '\n';
    }
    return out;
}

QMatrix conjugate_transpose(const QMatrix& a) {
    QMatrix out(a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c).conjugate();
    return out;
}

bool is_hermitian(const QMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = r; c < a.cols(); ++c)
            if (a.at(r, c) != a.at(c, r).conjugate()) return false;
    return true;
}

namespace detail {

RankResult rank_exact_reference(const QMatrix& a) {
    const int rows = a.rows();
    const int cols = a.cols();
    std::vector<std::vector<Quaternion>> m(rows, std::vector<Quaternion>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m[r][c] = a.at(r, c);
    std::vector<int> rowid(rows);
    std::iota(rowid.begin(), rowid.end(), 0);

    RankResult res;
    res.method = RankMethod::ExactElimination;
    int pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows; ++col) {
        int pr = -1;
        for (int r = pivot_row; r < rows; ++r) {
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(m[pr], m[pivot_row]);
        std::swap(rowid[pr], rowid[pivot_row]);
        res.pivot_trace.emplace_back(rowid[pivot_row], col);
        ++res.rank;

        // Normalize the pivot row from the left, then clear the column below.
        Quaternion inv = m[pivot_row][col].inverse();
        for (int c = col; c < cols; ++c) m[pivot_row][c] = inv * m[pivot_row][c];
        for (int r = pivot_row + 1; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            Quaternion f = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = m[r][c] - f * m[pivot_row][c];
        }
        ++pivot_row;
    }
    return res;
}

}  // namespace detail

RankResult rank_exact(const QMatrix& a) {
    detail::IQuatMat im;
    if (detail::load_scaled(a, im)) {
        detail::IntElimResult r = detail::eliminate_int64(im, 0, true);
        if (r.ok) {
            RankResult res;
            res.rank = r.pivot_count;
            res.method = RankMethod::ExactElimination;
            res.pivot_trace = std::move(r.pivot_trace);
            return res;
        }
    }
    return detail::rank_exact_reference(a);
}

RankResult rank_adjoint(const QMatrix& a, double tol) {
    if (tol <= 0) throw std::invalid_argument("rank_adjoint: tol must be positive");
    const int n = a.rows();
    const int m = a.cols();
    const int rows = 2 * n;
    const int cols = 2 * m;
    std::vector<std::vector<std::complex<double>>> x(
        rows, std::vector<std::complex<double>>(cols));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            const Quaternion& q = a.at(r, c);
            std::complex<double> z1(q.a0().to_double(), q.a1().to_double());
            std::complex<double> z2(q.a2().to_double(), q.a3().to_double());
            x[r][c] = z1;
            x[r][m + c] = z2;
            x[n + r][c] = -std::conj(z2);
            x[n + r][m + c] = std::conj(z1);
        }

    double max_initial = 0.0;
    for (const auto& row : x)
        for (const auto& v : row) max_initial = std::max(max_initial, std::abs(v));
    const double threshold = tol * max_initial;

    // Fully pivoted elimination; entries at or below the threshold are noise.
    int rank = 0;
    const int steps = std::min(rows, cols);
    for (int k = 0; k < steps; ++k) {
        int pr = k, pc = k;
        double best = 0.0;
        for (int r = k; r < rows; ++r)
            for (int c = k; c < cols; ++c)
                if (double v = std::abs(x[r][c]); v > best) {
                    best = v;
                    pr = r;
                    pc = c;
                }
        if (best <= threshold) break;
        std::swap(x[k], x[pr]);
        if (pc != k)
            for (int r = 0; r < rows; ++r) std::swap(x[r][k], x[r][pc]);
        ++rank;
        for (int r = k + 1; r < rows; ++r) {
            std::complex<double> f = x[r][k] / x[k][k];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            x[r][k] = 0.0;
            for (int c = k + 1; c < cols; ++c) x[r][c] -= f * x[k][c];
        }
    }

    if (rank % 2 != 0)
        throw OracleError("rank_adjoint: odd complex rank (tolerance failure)");
    RankResult res;
    res.rank = rank / 2;
    res.method = RankMethod::ComplexAdjoint;
    return res;
}

QMatrix principal_submatrix(const QMatrix& a, const std::vector<int>& indices) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("principal_submatrix: matrix must be square");
    if (indices.empty())
        throw std::invalid_argument("principal_submatrix: empty index set");
    for (std::size_t t = 0; t < indices.size(); ++t) {
        if (indices[t] < 0 || indices[t] >= a.rows())
            throw std::out_of_range("principal_submatrix: index out of range");
        if (t > 0 && indices[t] <= indices[t - 1])
            throw std::invalid_argument(
                "principal_submatrix: indices must be strictly increasing");
    }
    const int k = static_cast<int>(indices.size());
    QMatrix out(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) out.at(r, c) = a.at(indices[r], indices[c]);
    return out;
}

}  // namespace qgg
