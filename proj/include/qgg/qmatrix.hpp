#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgg/quaternion.hpp"

namespace qgg {

/// Dense matrix of exact quaternions, row-major.
class QMatrix {
public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("QMatrix: dimensions must be positive");
        e_.resize(static_cast<std::size_t>(rows) * cols);
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int d = 0; d < n; ++d) m.at(d, d) = Quaternion::one();
        return m;
    }

    static QMatrix diagonal(const std::vector<Quaternion>& entries) {
        QMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
        for (int d = 0; d < m.rows(); ++d) m.at(d, d) = entries[d];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Quaternion& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Quaternion& at(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
        QMatrix out(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const Quaternion& f = a.at(r, k);
                if (f.is_zero()) continue;
                for (int c = 0; c < b.cols_; ++c) {
                    const Quaternion& g = b.at(k, c);
                    if (g.is_zero()) continue;
                    out.at(r, c) = out.at(r, c) + f * g;
                }
            }
        return out;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// One line per row, entries as "a0 a1 a2 a3" separated by " | ".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
        return os << m.str();
    }

private:
    int rows_, cols_;
    std::vector<Quaternion> e_;
};

/// (A*)_{jk} = (A_{kj})*.
QMatrix conjugate_transpose(const QMatrix& a);

/// True iff A is square and A_{jk} = (A_{kj})* for all j, k.
bool is_hermitian(const QMatrix& a);

enum class RankMethod { ExactElimination, ComplexAdjoint };

struct RankResult {
    int rank = 0;
    RankMethod method = RankMethod::ExactElimination;
    /// (row, column) of each pivot, in elimination order; rows refer to the
    /// input matrix. Empty for the adjoint method.
    std::vector<std::pair<int, int>> pivot_trace;
};

/// Exact rank by left-row Gaussian elimination: the pivot is the first
/// nonzero entry of the current column region scanning top to bottom, rows
/// are combined with coefficients multiplying from the left, and the rank is
/// the pivot count. Matches the left-row-rank definition; by the theory of
/// quaternion matrix rank this equals the right column rank as well (a test
/// asserts the equality via the conjugate transpose).
RankResult rank_exact(const QMatrix& a);

/// Signals that the floating-point adjoint oracle produced an impossible
/// answer (an odd complex rank), i.e. the tolerance failed.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Floating-point rank oracle through the complex adjoint: for A = A1 + A2*j
/// forms the 2n x 2m complex matrix [[A1, A2], [-conj(A2), conj(A1)]] and
/// returns half its numerical rank, computed by fully pivoted elimination
/// with threshold tol * (largest initial entry magnitude). Never the reported
/// rank in exact workflows; it exists as an independent cross-check.
RankResult rank_adjoint(const QMatrix& a, double tol = 1e-9);

/// Rows and columns of a square matrix restricted to the given strictly
/// increasing index set.
QMatrix principal_submatrix(const QMatrix& a, const std::vector<int>& indices);

namespace detail {

/// Reference elimination over GMP rationals, always available. rank_exact
/// dispatches to a faster machine-integer engine when the input allows and
/// falls back to this one; tests drive both and assert agreement.
RankResult rank_exact_reference(const QMatrix& a);

}  // namespace detail

}  // namespace qgg
