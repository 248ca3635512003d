#include "sr/linalg.hpp"

namespace sr {

RatMat eval_matrix(const PolyMat& m, std::span<const Rat> pt) {
    RatMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).eval(pt);
    return r;
}

int rank_at(const PolyMat& m, std::span<const Rat> pt) {
    return rank_ff<Rat>(eval_matrix(m, pt));
}

int generic_rank(const PolyMat& m) {
    return rank_ff<Poly>(m);
}

Poly det(const PolyMat& m) {
    return bareiss_det<Poly>(m);
}

RatMat hcat(const RatMat& a, const RatMat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
    RatMat r(a.rows(), a.cols() + b.cols());
    r.block(0, 0, a.rows(), a.cols()) = a;
    r.block(0, a.cols(), b.rows(), b.cols()) = b;
    return r;
}

int intersection_dim(const RatMat& a, const RatMat& b) {
    return rank_ff<Rat>(a) + rank_ff<Rat>(b) - rank_ff<Rat>(hcat(a, b));
}

std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_square: shape");
    // Gauss-Jordan with exact division.
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            a.row(piv).swap(a.row(col));
            std::swap(b(piv), b(col));
        }
        Rat inv = Rat(1) / a(col, col);
        for (Eigen::Index j = col; j < n; ++j) a(col, j) *= inv;
        b(col) *= inv;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Rat f = a(i, col);
            for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b(i) -= f * b(col);
        }
    }
    return b;
}

std::optional<RatMat> inverse(const RatMat& a) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse: non-square");
    RatMat work = a;
    RatMat inv(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = Rat(i == j ? 1 : 0);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = col; i < n; ++i)
            if (!work(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            work.row(piv).swap(work.row(col));
            inv.row(piv).swap(inv.row(col));
        }
        Rat s = Rat(1) / work(col, col);
        for (Eigen::Index j = 0; j < n; ++j) { work(col, j) *= s; inv(col, j) *= s; }
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == col || work(i, col).is_zero()) continue;
            Rat f = work(i, col);
            for (Eigen::Index j = 0; j < n; ++j) {
                work(i, j) -= f * work(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<RatVec> nullspace_basis(RatMat a) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    std::vector<Eigen::Index> pivot_of_col(cols, -1);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        Rat s = Rat(1) / a(row, col);
        for (Eigen::Index j = col; j < cols; ++j) a(row, j) *= s;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Rat f = a(i, col);
            for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_of_col[col] = row;
        ++row;
    }
    std::vector<RatVec> basis;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        RatVec v(cols);
        for (Eigen::Index j = 0; j < cols; ++j) v(j) = Rat(0);
        v(free_col) = Rat(1);
        for (Eigen::Index col = 0; col < cols; ++col) {
            Eigen::Index pr = pivot_of_col[col];
            if (pr >= 0) v(col) = -a(pr, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool EchelonBasis::insert(RatVec v) {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
    for (const auto& [p, u] : rows_) {
        if (!v(p).is_zero()) {
            Rat f = v(p);
            for (Eigen::Index j = 0; j < dim_; ++j) v(j) -= f * u(j);
        }
    }
    Eigen::Index piv = -1;
    for (Eigen::Index j = 0; j < dim_; ++j)
        if (!v(j).is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    Rat s = Rat(1) / v(piv);
    for (Eigen::Index j = 0; j < dim_; ++j) v(j) *= s;
    rows_.emplace_back(piv, std::move(v));
    return true;
}

bool EchelonBasis::contains(RatVec v) const {
    for (const auto& [p, u] : rows_) {
        if (!v(p).is_zero()) {
            Rat f = v(p);
            for (Eigen::Index j = 0; j < dim_; ++j) v(j) -= f * u(j);
        }
    }
    for (Eigen::Index j = 0; j < dim_; ++j)
        if (!v(j).is_zero()) return false;
    return true;
}

std::optional<RatVec> solve_full_column_rank(const RatMat& a, const RatVec& b) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("solve_full_column_rank: shape");
    RatMat aug = hcat(a, b);
    // Forward elimination to row echelon form.
    Eigen::Index row = 0;
    std::vector<Eigen::Index> pivot_col;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!aug(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) aug.row(piv).swap(aug.row(row));
        Rat s = Rat(1) / aug(row, col);
        for (Eigen::Index j = col; j <= cols; ++j) aug(row, j) *= s;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            Rat f = aug(i, col);
            for (Eigen::Index j = col; j <= cols; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (static_cast<Eigen::Index>(pivot_col.size()) != cols) return std::nullopt;  // dependent columns
    for (Eigen::Index i = row; i < rows; ++i)
        if (!aug(i, cols).is_zero()) return std::nullopt;  // inconsistent
    RatVec x(cols);
    for (Eigen::Index k = 0; k < cols; ++k) x(k) = aug(k, cols);
    return x;
}

}  // namespace sr
