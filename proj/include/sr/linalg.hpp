#ifndef SR_LINALG_HPP
#define SR_LINALG_HPP

#include <Eigen/Core>

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sr/poly.hpp"
#include "sr/rat.hpp"

// Eigen scalar plumbing for the exact types.
namespace Eigen {

template <>
struct NumTraits<sr::Rat> : GenericNumTraits<sr::Rat> {
    using Real = sr::Rat;
    using NonInteger = sr::Rat;
    using Nested = sr::Rat;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
    static int digits10() { return 0; }
};

template <>
struct NumTraits<sr::Poly> : GenericNumTraits<sr::Poly> {
    using Real = sr::Poly;
    using NonInteger = sr::Poly;
    using Nested = sr::Poly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 200,
        MulCost = 400,
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace sr {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using PolyMat = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;

inline bool scalar_is_zero(const Rat& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Poly& x) { return x.is_zero(); }

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("fraction-free elimination: non-exact division");
    return *q;
}

namespace detail {
inline Rat scalar_one(const RatMat&) { return Rat(1); }
inline Poly scalar_one(const PolyMat& m) {
    int nv = 0;
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!m(i).is_zero()) { nv = m(i).nvars(); break; }
    return Poly::constant(nv, Rat(1));
}
}  // namespace detail

/*
 * Fraction-free (Bareiss) determinant. Works over any integral domain
 * scalar providing exact_div; pivot search takes the lowest nonzero row.
 */
template <typename S>
S bareiss_det(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("bareiss_det: non-square matrix");
    S one = detail::scalar_one(m);
    if (n == 0) return one;
    S prev = one;
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (scalar_is_zero(m(k, k))) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (!scalar_is_zero(m(i, k))) { piv = i; break; }
            if (piv < 0) return S();  // zero column: singular
            m.row(k).swap(m.row(piv));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = S();
        }
        prev = m(k, k);
    }
    S det = m(n - 1, n - 1);
    return negate ? S() - det : det;
}

/*
 * Fraction-free row elimination; returns the rank. Over Poly this is the
 * rank over the field of rational functions (generic rank); pivot ties
 * break at the lowest (row, col).
 */
template <typename S>
int rank_ff(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    S prev = detail::scalar_one(m);
    Eigen::Index row = 0;
    int rank = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = row; i < rows; ++i)
            if (!scalar_is_zero(m(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j)
                m(i, j) = exact_div(m(i, j) * m(row, col) - m(i, col) * m(row, j), prev);
            m(i, col) = S();
        }
        prev = m(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

/// Rank of M(pt) over the rationals.
int rank_at(const PolyMat& m, std::span<const Rat> pt);
/// Rank over the rational function field in the entries' variables.
int generic_rank(const PolyMat& m);
/// Exact determinant (fraction-free expansion).
Poly det(const PolyMat& m);

RatMat eval_matrix(const PolyMat& m, std::span<const Rat> pt);

/// dim(span A ∩ span B) = rank A + rank B - rank [A|B].
int intersection_dim(const RatMat& a, const RatMat& b);

/// Solves the square system a x = b exactly; nullopt when a is singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);
/// Exact inverse; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& a);

/// Solves a x = b for full-column-rank rectangular a; nullopt when the
/// system is inconsistent or the columns are dependent.
std::optional<RatVec> solve_full_column_rank(const RatMat& a, const RatVec& b);

RatMat hcat(const RatMat& a, const RatMat& b);

/// Basis of the kernel of a (one vector per free column of the RREF),
/// in deterministic column order.
std::vector<RatVec> nullspace_basis(RatMat a);

/*
 * Incremental exact column-echelon basis of a subspace of Q^n. insert()
 * reduces against the stored basis and reports whether the vector enlarged
 * the span.
 */
class EchelonBasis {
public:
    explicit EchelonBasis(int dim) : dim_(dim) {}

    bool insert(RatVec v);
    bool contains(RatVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<std::pair<Eigen::Index, RatVec>> rows_;  // (pivot, normalized vector)
};

}  // namespace sr

#endif
