#ifndef SR_VECFIELD_HPP
#define SR_VECFIELD_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sr/linalg.hpp"
#include "sr/poly.hpp"

namespace sr {

/// Polynomial vector field on R^n: one component per coordinate.
struct VecField {
    std::vector<Poly> comp;

    VecField() = default;
    explicit VecField(int dim) : comp(dim) {}
    explicit VecField(std::vector<Poly> c) : comp(std::move(c)) {}

    int dim() const { return static_cast<int>(comp.size()); }
    bool is_zero() const;

    std::vector<Rat> eval(std::span<const Rat> pt) const;

    VecField operator+(const VecField& o) const;
    VecField operator-(const VecField& o) const;
    VecField scaled(const Rat& c) const;
};

/// Derivation of f along X: X f = sum_j X^j d_j f.
Poly lie_derivative(const VecField& x, const Poly& f);

/// [X, Y]^j = sum_i X^i d_i Y^j - Y^i d_i X^j. Throws on dimension mismatch.
VecField lie_bracket(const VecField& x, const VecField& y);

/// Orthonormal frame X_1..X_m of a rank-m distribution on R^n, m < n.
struct Frame {
    std::vector<VecField> fields;
    int dim = 0;

    Frame() = default;
    Frame(std::vector<VecField> f, int n);

    int rank() const { return static_cast<int>(fields.size()); }
};

/// Multiindex over {1..m}; nonempty.
using MultiIndex = std::vector<int>;

std::string multiindex_str(const MultiIndex& idx);

/// X_I = [X_{i1}, [X_{i2}, ... X_{ij}]...]; X_I = X_{i1} for |I| = 1.
VecField bracket_of(const MultiIndex& idx, const Frame& f);

/// (X_{i1} ... X_{ij} f): the letters act as first-order derivations, the
/// rightmost applied to f first. Empty word returns f.
Poly lie_derivative_word(std::span<const int> word, const Poly& f, const Frame& frame);

struct BracketEntry {
    MultiIndex idx;
    VecField field;
    bool zero;
};

/// All multiindices of length <= max_len with their bracket fields, in
/// (length, lexicographic) order; identically-zero fields flagged and kept.
std::vector<BracketEntry> enumerate_brackets(const Frame& f, int max_len);

/*
 * Memoized bracket calculus for one frame. Zero fields are not expanded
 * further ([X_i, 0] = 0), so enumeration stays proportional to the number
 * of essentially nonzero brackets.
 */
class BracketTable {
public:
    explicit BracketTable(const Frame& f) : frame_(f) {}

    const Frame& frame() const { return frame_; }
    int dim() const { return frame_.dim; }

    const VecField& get(const MultiIndex& idx);

    /// Multiindices with identically nonzero bracket field, |I| <= len,
    /// in (length, lex) order.
    const std::vector<MultiIndex>& nonzero_upto(int len);

    /// True when every bracket of exactly this length vanishes identically
    /// (the module flag can then never grow again).
    bool level_exhausted(int len);

    /// Poly matrix whose columns are the nonzero bracket fields, |I| <= len.
    PolyMat bracket_matrix(int len);
    /// Same matrix evaluated at a point.
    RatMat bracket_matrix_at(int len, std::span<const Rat> pt);

private:
    void extend_levels(int len);

    Frame frame_;
    std::map<MultiIndex, VecField> cache_;
    // levels_[j] = multiindices of length j+1 with nonzero field.
    std::vector<std::vector<MultiIndex>> levels_;
    std::vector<std::vector<MultiIndex>> prefix_;  // nonzero with length <= j+1
};

struct BracketFamily {
    std::vector<MultiIndex> indices;

    int total_length() const {
        int t = 0;
        for (const auto& i : indices) t += static_cast<int>(i.size());
        return t;
    }
    std::string str() const;
};

}  // namespace sr

#endif
