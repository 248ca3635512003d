#include "sr/vecfield.hpp"

#include <sstream>
#include <stdexcept>

#include "sr/errors.hpp"

namespace sr {

bool VecField::is_zero() const {
    for (const auto& p : comp)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<Rat> VecField::eval(std::span<const Rat> pt) const {
    std::vector<Rat> v;
    v.reserve(comp.size());
    for (const auto& p : comp) v.push_back(p.eval(pt));
    return v;
}

VecField VecField::operator+(const VecField& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("VecField: dimension mismatch");
    VecField r(dim());
    for (int j = 0; j < dim(); ++j) r.comp[j] = comp[j] + o.comp[j];
    return r;
}

VecField VecField::operator-(const VecField& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("VecField: dimension mismatch");
    VecField r(dim());
    for (int j = 0; j < dim(); ++j) r.comp[j] = comp[j] - o.comp[j];
    return r;
}

VecField VecField::scaled(const Rat& c) const {
    VecField r(dim());
    for (int j = 0; j < dim(); ++j) r.comp[j] = comp[j] * c;
    return r;
}

Poly lie_derivative(const VecField& x, const Poly& f) {
    Poly r;
    for (int i = 0; i < x.dim(); ++i) {
        if (x.comp[i].is_zero()) continue;
        r += x.comp[i] * f.partial(i);
    }
    return r;
}

VecField lie_bracket(const VecField& x, const VecField& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("lie_bracket: dimension mismatch");
    const int n = x.dim();
    VecField r(n);
    for (int j = 0; j < n; ++j) {
        r.comp[j] = lie_derivative(x, y.comp[j]) - lie_derivative(y, x.comp[j]);
    }
    return r;
}

Frame::Frame(std::vector<VecField> f, int n) : fields(std::move(f)), dim(n) {
    if (static_cast<int>(fields.size()) >= n)
        throw AnalysisError("frame rank must be < dimension");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].dim() != n)
            throw AnalysisError("frame field " + std::to_string(i + 1) + " has wrong dimension");
        if (fields[i].is_zero())
            throw AnalysisError("frame field " + std::to_string(i + 1) + " is identically zero");
    }
}

std::string multiindex_str(const MultiIndex& idx) {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) os << ",";
        os << idx[k];
    }
    os << ")";
    return os.str();
}

VecField bracket_of(const MultiIndex& idx, const Frame& f) {
    if (idx.empty()) throw std::invalid_argument("bracket_of: empty multiindex");
    for (int i : idx)
        if (i < 1 || i > f.rank()) throw std::out_of_range("bracket_of: index out of range");
    if (idx.size() == 1) return f.fields[idx[0] - 1];
    MultiIndex tail(idx.begin() + 1, idx.end());
    return lie_bracket(f.fields[idx[0] - 1], bracket_of(tail, f));
}

Poly lie_derivative_word(std::span<const int> word, const Poly& f, const Frame& frame) {
    Poly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (i < 1 || i > frame.rank()) throw std::out_of_range("lie_derivative_word: index");
        g = lie_derivative(frame.fields[i - 1], g);
        if (g.is_zero()) break;
    }
    return g;
}

std::vector<BracketEntry> enumerate_brackets(const Frame& f, int max_len) {
    if (max_len < 1) throw std::invalid_argument("enumerate_brackets: max_len >= 1 required");
    std::vector<BracketEntry> out;
    for (int i = 1; i <= f.rank(); ++i) {
        out.push_back({MultiIndex{i}, f.fields[i - 1], f.fields[i - 1].is_zero()});
    }
    std::size_t level_start = 0;
    for (int len = 2; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        // Extend the previous level by each prefix; (length, lex) order falls
        // out of iterating prefixes outermost over a lex-ordered level.
        std::vector<BracketEntry> next;
        for (int i = 1; i <= f.rank(); ++i) {
            for (std::size_t k = level_start; k < level_end; ++k) {
                const auto& e = out[k];
                MultiIndex idx;
                idx.reserve(e.idx.size() + 1);
                idx.push_back(i);
                idx.insert(idx.end(), e.idx.begin(), e.idx.end());
                VecField fld = e.zero ? VecField(f.dim)
                                      : lie_bracket(f.fields[i - 1], e.field);
                bool z = fld.is_zero();
                next.push_back({std::move(idx), std::move(fld), z});
            }
        }
        level_start = out.size();
        for (auto& e : next) out.push_back(std::move(e));
    }
    return out;
}

const VecField& BracketTable::get(const MultiIndex& idx) {
    auto it = cache_.find(idx);
    if (it != cache_.end()) return it->second;
    VecField v = bracket_of(idx, frame_);
    return cache_.emplace(idx, std::move(v)).first->second;
}

void BracketTable::extend_levels(int len) {
    if (levels_.empty()) {
        std::vector<MultiIndex> l1;
        for (int i = 1; i <= frame_.rank(); ++i) {
            MultiIndex idx{i};
            get(idx);
            l1.push_back(idx);  // frame fields are nonzero by invariant
        }
        levels_.push_back(l1);
        prefix_.push_back(l1);
    }
    while (static_cast<int>(levels_.size()) < len) {
        const auto& prev = levels_.back();
        std::vector<MultiIndex> next;
        for (int i = 1; i <= frame_.rank(); ++i) {
            for (const auto& tail : prev) {
                MultiIndex idx;
                idx.reserve(tail.size() + 1);
                idx.push_back(i);
                idx.insert(idx.end(), tail.begin(), tail.end());
                VecField v = lie_bracket(frame_.fields[i - 1], get(tail));
                bool z = v.is_zero();
                cache_.emplace(idx, std::move(v));
                if (!z) next.push_back(std::move(idx));
            }
        }
        std::vector<MultiIndex> pref = prefix_.back();
        pref.insert(pref.end(), next.begin(), next.end());
        levels_.push_back(std::move(next));
        prefix_.push_back(std::move(pref));
    }
}

const std::vector<MultiIndex>& BracketTable::nonzero_upto(int len) {
    extend_levels(len);
    return prefix_[len - 1];
}

bool BracketTable::level_exhausted(int len) {
    extend_levels(len);
    return levels_[len - 1].empty();
}

PolyMat BracketTable::bracket_matrix(int len) {
    const auto& idxs = nonzero_upto(len);
    PolyMat m(frame_.dim, static_cast<Eigen::Index>(idxs.size()));
    for (std::size_t c = 0; c < idxs.size(); ++c) {
        const VecField& v = get(idxs[c]);
        for (int r = 0; r < frame_.dim; ++r) m(r, static_cast<Eigen::Index>(c)) = v.comp[r];
    }
    return m;
}

RatMat BracketTable::bracket_matrix_at(int len, std::span<const Rat> pt) {
    const auto& idxs = nonzero_upto(len);
    RatMat m(frame_.dim, static_cast<Eigen::Index>(idxs.size()));
    for (std::size_t c = 0; c < idxs.size(); ++c) {
        std::vector<Rat> v = get(idxs[c]).eval(pt);
        for (int r = 0; r < frame_.dim; ++r) m(r, static_cast<Eigen::Index>(c)) = v[r];
    }
    return m;
}

std::string BracketFamily::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (k) os << ", ";
        os << multiindex_str(indices[k]);
    }
    os << "}";
    return os.str();
}

}  // namespace sr
