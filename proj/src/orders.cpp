#include "sr/orders.hpp"

#include <algorithm>
#include <map>

#include "sr/errors.hpp"

namespace sr {

std::string NhOrder::str() const {
    if (above_cap) return "> " + std::to_string(value);
    return std::to_string(value);
}

namespace {

/// Leading-monomial echelon set of polynomials (all monic).
class PolySpan {
public:
    /// Reduces p against the span; stores and reports true if independent.
    bool insert(Poly p) {
        while (!p.is_zero()) {
            auto [lm, lc] = p.leading_term();
            auto it = rows_.find(lm);
            if (it == rows_.end()) {
                rows_.emplace(lm, p * (Rat(1) / lc));
                return true;
            }
            p -= it->second * lc;
        }
        return false;
    }

    std::vector<Poly> basis() const {
        std::vector<Poly> out;
        out.reserve(rows_.size());
        for (const auto& [m, p] : rows_) out.push_back(p);
        return out;
    }

private:
    std::map<Mono, Poly, GrlexLess> rows_;
};

}  // namespace

DerivativeLevels::DerivativeLevels(Poly f, const Frame& frame) : frame_(frame) {
    PolySpan s;
    std::vector<Poly> l0;
    if (s.insert(std::move(f))) l0 = s.basis();
    levels_.push_back(std::move(l0));
}

const std::vector<Poly>& DerivativeLevels::level(int j) {
    while (static_cast<int>(levels_.size()) <= j) {
        const auto& prev = levels_.back();
        PolySpan next;
        for (const auto& b : prev) {
            for (const auto& x : frame_.fields) {
                Poly d = lie_derivative(x, b);
                if (!d.is_zero()) next.insert(std::move(d));
            }
        }
        levels_.push_back(next.basis());
    }
    return levels_[j];
}

NhOrder DerivativeLevels::order_at(std::span<const Rat> pt, int cap) {
    for (int j = 0; j <= cap; ++j) {
        const auto& basis = level(j);
        if (basis.empty()) return NhOrder::capped(cap);  // vanishes to all orders
        for (const auto& b : basis)
            if (!b.eval(pt).is_zero()) return NhOrder::finite(j);
    }
    return NhOrder::capped(cap);
}

NhOrder DerivativeLevels::order_along(const SubmanifoldSpec& n, int cap) {
    for (int j = 0; j <= cap; ++j) {
        const auto& basis = level(j);
        if (basis.empty()) return NhOrder::capped(cap);
        for (const auto& b : basis)
            if (!n.restrict_poly(b).is_zero()) return NhOrder::finite(j);
    }
    return NhOrder::capped(cap);
}

NhOrder nonholonomic_order(const Poly& f, const Frame& frame, std::span<const Rat> pt, int cap) {
    if (cap < 0) throw std::invalid_argument("nonholonomic_order: cap >= 0 required");
    DerivativeLevels levels(f, frame);
    return levels.order_at(pt, cap);
}

NhOrder generic_order_along(const Poly& f, const Frame& frame, const SubmanifoldSpec& n, int cap) {
    DerivativeLevels levels(f, frame);
    return levels.order_along(n, cap);
}

Poly family_volume(const BracketFamily& family, BracketTable& bt, const VolumeForm& vol) {
    const int n = bt.dim();
    if (static_cast<int>(family.indices.size()) != n)
        throw AnalysisError("family_volume: family must have exactly n members");
    PolyMat m(n, n);
    for (int c = 0; c < n; ++c) {
        const VecField& v = bt.get(family.indices[c]);
        for (int r = 0; r < n; ++r) m(r, c) = v.comp[r];
    }
    return vol.density * det(m);
}

std::vector<BracketFamily> enumerate_families(BracketTable& bt, int total, int max_len,
                                              std::size_t budget) {
    const int n = bt.dim();
    const auto& cand = bt.nonzero_upto(max_len);  // (length, lex) order
    std::vector<int> len(cand.size());
    for (std::size_t i = 0; i < cand.size(); ++i) len[i] = static_cast<int>(cand[i].size());

    std::vector<BracketFamily> out;
    std::vector<std::size_t> pick;
    std::size_t visited = 0;

    auto rec = [&](auto&& self, std::size_t start, int slots, int remaining) -> void {
        if (slots == 0) {
            if (remaining == 0) {
                if (++visited > budget) throw EnumerationOverflow(budget);
                BracketFamily f;
                for (std::size_t k : pick) f.indices.push_back(cand[k]);
                out.push_back(std::move(f));
            }
            return;
        }
        for (std::size_t i = start; i < cand.size(); ++i) {
            int li = len[i];
            // Candidates are length-sorted: the remaining slots each need at
            // least li, and at most max_len.
            if (remaining < li + (slots - 1) * li) {
                // Every later candidate is at least as long.
                break;
            }
            if (remaining > li + (slots - 1) * max_len) continue;
            pick.push_back(i);
            self(self, i + 1, slots - 1, remaining - li);
            pick.pop_back();
        }
    };
    rec(rec, 0, n, total);
    return out;
}

OrderResult sigma_bounds(BracketTable& bt, const VolumeForm& vol, const SubmanifoldSpec& n,
                         int Q_ref, const SigmaOptions& opts,
                         std::span<const std::vector<Rat>> sample_params,
                         const GrowthProfile& profile_at_center) {
    if (Q_ref < bt.dim())
        throw AnalysisError("sigma_bounds: total length below the dimension admits no family");
    OrderResult res;
    res.Q_ref = Q_ref;
    res.bracket_len_cap = opts.bracket_len_cap > 0 ? opts.bracket_len_cap : profile_at_center.step;
    res.order_cap = opts.order_cap > 0 ? opts.order_cap : 2 * profile_at_center.Q;

    std::vector<std::vector<Rat>> sample_points;
    for (const auto& t : sample_params) sample_points.push_back(n.map_point(t));

    auto families = enumerate_families(bt, Q_ref, res.bracket_len_cap, opts.family_budget);
    for (auto& fam : families) {
        Poly volume = family_volume(fam, bt, vol);
        if (volume.is_zero()) {
            ++res.families_skipped_zero;
            continue;
        }
        FamilyOrderInfo info;
        info.family = std::move(fam);
        info.volume = std::move(volume);
        DerivativeLevels levels(info.volume, bt.frame());
        info.generic_order = levels.order_along(n, res.order_cap);
        for (const auto& q : sample_points)
            info.sample_orders.push_back(levels.order_at(q, res.order_cap));
        res.families.push_back(std::move(info));
    }
    if (res.families.empty())
        throw AnalysisError("sigma_bounds: every candidate family has identically zero volume");

    // sigma_-: generic order of the least-degenerate family.
    NhOrder smin = NhOrder::capped(res.order_cap);
    for (const auto& f : res.families) {
        if (f.generic_order.above_cap) continue;
        if (smin.above_cap || f.generic_order.value < smin.value) smin = f.generic_order;
    }
    res.sigma_minus = smin;

    // sigma_+ (sampled): max over sample points of min over families.
    NhOrder splus = NhOrder::finite(0);
    bool any_sample = false;
    for (std::size_t s = 0; s < sample_points.size(); ++s) {
        NhOrder best = NhOrder::capped(res.order_cap);
        for (const auto& f : res.families) {
            const NhOrder& o = f.sample_orders[s];
            if (o.above_cap) continue;
            if (best.above_cap || o.value < best.value) best = o;
        }
        if (!any_sample || best.above_cap ||
            (!splus.above_cap && best.value > splus.value))
            splus = best;
        if (splus.above_cap) break;
        any_sample = true;
    }
    if (sample_points.empty()) splus = res.sigma_minus;
    res.sigma_plus = splus;

    // sigma exists when the bounds agree and some family realizes that order
    // at every sample (the uniform witness).
    if (!res.sigma_minus.above_cap && !res.sigma_plus.above_cap &&
        res.sigma_minus.value == res.sigma_plus.value) {
        int s = res.sigma_minus.value;
        for (std::size_t i = 0; i < res.families.size(); ++i) {
            const auto& f = res.families[i];
            if (f.generic_order.above_cap || f.generic_order.value != s) continue;
            bool uniform = true;
            for (const auto& o : f.sample_orders)
                if (o.above_cap || o.value != s) { uniform = false; break; }
            if (uniform) res.witnesses.push_back(i);
        }
        if (!res.witnesses.empty()) res.sigma = s;
    }
    return res;
}

NuResult nu_at(BracketTable& bt, const VolumeForm& vol, std::span<const Rat> pt,
               int Q_ref, int max_len, std::size_t budget) {
    auto families = enumerate_families(bt, Q_ref, max_len, budget);
    NuResult res;
    res.value = Rat(0);
    Rat dens = vol.density.eval(pt);
    const int n = bt.dim();
    for (auto& fam : families) {
        RatMat m(n, n);
        for (int c = 0; c < n; ++c) {
            std::vector<Rat> v = bt.get(fam.indices[c]).eval(pt);
            for (int r = 0; r < n; ++r) m(r, c) = v[r];
        }
        Rat val = (dens * bareiss_det<Rat>(m)).abs();
        if (val > res.value) {
            res.value = val;
            res.argmax.clear();
            res.argmax.push_back(std::move(fam));
        } else if (!val.is_zero() && val == res.value) {
            res.argmax.push_back(std::move(fam));
        }
    }
    if (res.value.is_zero())
        throw AnalysisError("nu_at: every total-length-" + std::to_string(Q_ref) +
                            " family vanishes at the point (point not regular for this length)");
    return res;
}

}  // namespace sr
