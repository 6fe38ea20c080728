#include "dofia/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/SVD>

namespace dofia {

namespace {

constexpr std::uint64_t P = Fp::modulus;

inline std::uint64_t fold(std::uint64_t x) {
    x = (x & P) + (x >> 31);
    x = (x & P) + (x >> 31);
    return x >= P ? x - P : x;
}

// Row-major working copy; 64-bit lanes let the update loop vectorize with
// 32x32->64 multiplies.
struct Work {
    Eigen::Index rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    std::uint64_t* row(Eigen::Index r) { return a.data() + r * cols; }
};

Work load(const MatrixXp& m, const VectorXp* rhs) {
    Work w;
    w.rows = m.rows();
    w.cols = m.cols() + (rhs ? 1 : 0);
    w.a.resize(static_cast<std::size_t>(w.rows * w.cols));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        std::uint64_t* dst = w.row(r);
        for (Eigen::Index c = 0; c < m.cols(); ++c) dst[c] = m(r, c).v;
        if (rhs) dst[m.cols()] = (*rhs)(r).v;
    }
    return w;
}

void scale_row(std::uint64_t* row, Eigen::Index from, Eigen::Index to, std::uint64_t s) {
    for (Eigen::Index j = from; j < to; ++j) row[j] = fold(row[j] * s);
}

// dst -= f * src over [from, to)
void axpy_row(std::uint64_t* __restrict dst, const std::uint64_t* __restrict src, Eigen::Index from, Eigen::Index to,
              std::uint64_t f) {
    const std::uint64_t neg = P - f;
    for (Eigen::Index j = from; j < to; ++j) dst[j] = fold(dst[j] + neg * src[j]);
}

// Eliminates over the first `pivot_cols` columns. Full (reduced) elimination
// when `reduce_above` is set. Returns the pivot column of each pivot row.
std::vector<Eigen::Index> eliminate(Work& w, Eigen::Index pivot_cols, bool reduce_above) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < pivot_cols && r < w.rows; ++c) {
        Eigen::Index p = r;
        while (p < w.rows && w.row(p)[c] == 0) ++p;
        if (p == w.rows) continue;
        if (p != r) std::swap_ranges(w.row(p), w.row(p) + w.cols, w.row(r));
        std::uint64_t* prow = w.row(r);
        scale_row(prow, c, w.cols, Fp::raw(static_cast<std::uint32_t>(prow[c])).inverse().v);
        const Eigen::Index first = reduce_above ? 0 : r + 1;
        for (Eigen::Index k = first; k < w.rows; ++k) {
            if (k == r) continue;
            std::uint64_t* krow = w.row(k);
            if (krow[c] != 0) axpy_row(krow, prow, c, w.cols, krow[c]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Eigen::Index rank_fp(const MatrixXp& m) {
    if (m.size() == 0) return 0;
    Work w = load(m, nullptr);
    return static_cast<Eigen::Index>(eliminate(w, w.cols, false).size());
}

Eigen::Index rank_real(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double tol = static_cast<double>(std::max(m.rows(), m.cols())) * std::numeric_limits<double>::epsilon() * s(0);
    return static_cast<Eigen::Index>((s.array() > tol).count());
}

SolveResult solve(const MatrixXp& a, const VectorXp& b) {
    SolveResult out;
    out.x = VectorXp::Zero(a.cols());
    Work w = load(a, &b);
    const auto pivots = eliminate(w, a.cols(), true);
    out.rank = static_cast<Eigen::Index>(pivots.size());
    out.consistent = true;
    for (Eigen::Index r = out.rank; r < w.rows; ++r)
        if (w.row(r)[a.cols()] != 0) out.consistent = false;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        out.x(pivots[r]) = Fp::raw(static_cast<std::uint32_t>(w.row(static_cast<Eigen::Index>(r))[a.cols()]));
    return out;
}

}  // namespace dofia
