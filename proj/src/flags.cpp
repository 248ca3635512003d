#include "sr/flags.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "sr/errors.hpp"

namespace sr {

std::string GrowthProfile::dims_str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ",";
        os << dims[i];
    }
    os << ")";
    return os.str();
}

int weighted_dimension(std::span<const int> dims) {
    int q = 0, prev = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        q += static_cast<int>(i + 1) * (dims[i] - prev);
        prev = dims[i];
    }
    return q;
}

namespace {

// Shared driver: rank_of(i) yields n_i; stops at n, throws past the cap.
// A stalled level (all brackets of that length identically zero) can never
// grow again, so it aborts early with the same error.
std::vector<int> climb_flag(BracketTable& bt, int cap,
                            const std::function<int(int)>& rank_of) {
    const int n = bt.dim();
    std::vector<int> dims;
    for (int i = 1; i <= cap; ++i) {
        int ni = rank_of(i);
        dims.push_back(ni);
        if (ni == n) return dims;
        if (bt.level_exhausted(i))
            throw NotBracketGeneratingWithinCap(ni, n, cap);
    }
    throw NotBracketGeneratingWithinCap(dims.back(), n, cap);
}

}  // namespace

GrowthProfile growth_vector(BracketTable& bt, std::span<const Rat> pt, int cap) {
    if (cap < 1) throw std::invalid_argument("growth_vector: cap >= 1 required");
    GrowthProfile g;
    g.dims = climb_flag(bt, cap, [&](int i) { return rank_ff<Rat>(bt.bracket_matrix_at(i, pt)); });
    g.step = static_cast<int>(g.dims.size());
    g.Q = weighted_dimension(g.dims);
    g.point.assign(pt.begin(), pt.end());
    return g;
}

GrowthProfile generic_growth(BracketTable& bt, int cap) {
    GrowthProfile g;
    g.dims = climb_flag(bt, cap, [&](int i) { return generic_rank(bt.bracket_matrix(i)); });
    g.step = static_cast<int>(g.dims.size());
    g.Q = weighted_dimension(g.dims);
    return g;
}

Regularity classify_point(BracketTable& bt, std::span<const Rat> pt, int cap) {
    GrowthProfile at = growth_vector(bt, pt, cap);
    GrowthProfile gen = generic_growth(bt, cap);
    return at.dims == gen.dims ? Regularity::Regular : Regularity::Singular;
}

SubmanifoldSpec SubmanifoldSpec::coordinate_subspace(std::string name, int ambient,
                                                     std::vector<int> zeroed_coords) {
    std::sort(zeroed_coords.begin(), zeroed_coords.end());
    zeroed_coords.erase(std::unique(zeroed_coords.begin(), zeroed_coords.end()),
                        zeroed_coords.end());
    for (int z : zeroed_coords)
        if (z < 0 || z >= ambient) throw AnalysisError("submanifold: zeroed coordinate out of range");
    SubmanifoldSpec s;
    s.name = std::move(name);
    s.ambient = ambient;
    s.zeroed = zeroed_coords;
    s.b = ambient - static_cast<int>(zeroed_coords.size());
    if (s.b <= 0) throw AnalysisError("submanifold: dimension must be positive");
    s.phi.reserve(ambient);
    int t = 0;
    for (int j = 0; j < ambient; ++j) {
        if (std::binary_search(s.zeroed.begin(), s.zeroed.end(), j)) {
            s.phi.push_back(Poly::zero(s.b));
        } else {
            s.phi.push_back(Poly::variable(s.b, t++));
        }
    }
    return s;
}

SubmanifoldSpec SubmanifoldSpec::parametrized(std::string name, int ambient, int params,
                                              std::vector<Poly> map) {
    if (static_cast<int>(map.size()) != ambient)
        throw AnalysisError("submanifold: map must have one component per ambient coordinate");
    SubmanifoldSpec s;
    s.name = std::move(name);
    s.ambient = ambient;
    s.b = params;
    s.phi = std::move(map);
    for (const auto& p : s.phi)
        if (!p.is_zero() && p.nvars() != params)
            throw AnalysisError("submanifold: map component arity mismatch");
    if (generic_rank(s.jacobian()) != params)
        throw AnalysisError("submanifold '" + s.name + "': parametrization Jacobian has generic rank < " +
                            std::to_string(params));
    return s;
}

PolyMat SubmanifoldSpec::jacobian() const {
    PolyMat j(ambient, b);
    for (int i = 0; i < ambient; ++i)
        for (int t = 0; t < b; ++t) j(i, t) = phi[i].is_zero() ? Poly() : phi[i].partial(t);
    return j;
}

std::vector<Rat> SubmanifoldSpec::map_point(std::span<const Rat> param_pt) const {
    if (static_cast<int>(param_pt.size()) != b)
        throw AnalysisError("submanifold: parameter point arity mismatch");
    std::vector<Rat> q;
    q.reserve(ambient);
    for (const auto& p : phi) q.push_back(p.is_zero() ? Rat(0) : p.eval(param_pt));
    return q;
}

std::vector<Rat> SubmanifoldSpec::param_of(std::span<const Rat> ambient_pt) const {
    if (!is_coordinate_subspace())
        throw AnalysisError("submanifold '" + name + "': parameter preimage requires a coordinate subspace");
    if (static_cast<int>(ambient_pt.size()) != ambient)
        throw AnalysisError("submanifold: point arity mismatch");
    std::vector<Rat> t;
    t.reserve(b);
    for (int j = 0; j < ambient; ++j)
        if (!std::binary_search(zeroed.begin(), zeroed.end(), j)) t.push_back(ambient_pt[j]);
    return t;
}

bool SubmanifoldSpec::contains(std::span<const Rat> ambient_pt) const {
    if (!is_coordinate_subspace())
        throw AnalysisError("submanifold '" + name + "': containment test requires a coordinate subspace");
    for (int z : zeroed)
        if (!ambient_pt[z].is_zero()) return false;
    return true;
}

Poly SubmanifoldSpec::restrict_poly(const Poly& f) const {
    if (f.is_zero()) return Poly::zero(b);
    return f.substitute(phi);
}

int compute_r_notN(std::span<const int> dims, std::span<const int> dimsN) {
    int r = 0, prev = 0, prevN = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        int d = dims[i] - prev;
        int dN = dimsN[i] - prevN;
        if (d > dN) r = static_cast<int>(i + 1);
        prev = dims[i];
        prevN = dimsN[i];
    }
    return r;
}

RestrictedProfile restricted_profile(BracketTable& bt, const SubmanifoldSpec& n,
                                     std::span<const Rat> param_pt, int cap) {
    RestrictedProfile rp;
    rp.param_pt.assign(param_pt.begin(), param_pt.end());
    rp.point = n.map_point(param_pt);
    RatMat jac = eval_matrix(n.jacobian(), param_pt);
    if (rank_ff<Rat>(jac) != n.b)
        throw AnalysisError("submanifold '" + n.name + "' is not an immersion at the given parameter point");
    const int dim = bt.dim();
    for (int i = 1; i <= cap; ++i) {
        RatMat a = bt.bracket_matrix_at(i, rp.point);
        int ni = rank_ff<Rat>(a);
        int mix = rank_ff<Rat>(hcat(a, jac));
        rp.dims.push_back(ni);
        rp.dimsN.push_back(ni + n.b - mix);
        if (ni == dim) break;
        if (bt.level_exhausted(i)) throw NotBracketGeneratingWithinCap(ni, dim, cap);
    }
    if (rp.dims.empty() || rp.dims.back() != dim)
        throw NotBracketGeneratingWithinCap(rp.dims.empty() ? 0 : rp.dims.back(), dim, cap);
    rp.Q = weighted_dimension(rp.dims);
    rp.Q_N = weighted_dimension(rp.dimsN);
    rp.r_notN = compute_r_notN(rp.dims, rp.dimsN);
    return rp;
}

namespace {

Rat van_der_corput(unsigned long s, long base) {
    Rat v(0);
    Rat scale(1, base);
    while (s > 0) {
        long digit = static_cast<long>(s % static_cast<unsigned long>(base));
        v += Rat(digit) * scale;
        scale /= Rat(base);
        s /= static_cast<unsigned long>(base);
    }
    return v;
}

constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

std::vector<std::vector<Rat>> default_samples(int b, int count) {
    if (b > static_cast<int>(std::size(kPrimes)))
        throw AnalysisError("default_samples: too many parameters");
    std::vector<std::vector<Rat>> out;
    out.reserve(count);
    for (int s = 0; s < count; ++s) {
        std::vector<Rat> pt(b, Rat(0));
        if (s > 0) {
            for (int j = 0; j < b; ++j) {
                Rat v = van_der_corput(static_cast<unsigned long>(s), kPrimes[j]);
                pt[j] = Rat(2) * v - Rat(1);
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

EquiregResult strong_equireg_check(BracketTable& bt, const SubmanifoldSpec& n,
                                   std::span<const std::vector<Rat>> samples, int cap) {
    if (samples.empty()) throw AnalysisError("strong_equireg_check: samples required");
    EquiregResult res;
    // Function-field ranks of the substituted matrices: the generic profile
    // along N.
    PolyMat jac = n.jacobian();
    if (generic_rank(jac) != n.b)
        throw AnalysisError("submanifold '" + n.name + "': parametrization Jacobian rank deficient");
    const int dim = bt.dim();
    for (int i = 1; i <= cap; ++i) {
        const auto& idxs = bt.nonzero_upto(i);
        PolyMat a(dim, static_cast<Eigen::Index>(idxs.size()));
        for (std::size_t c = 0; c < idxs.size(); ++c) {
            const VecField& v = bt.get(idxs[c]);
            for (int r = 0; r < dim; ++r)
                a(r, static_cast<Eigen::Index>(c)) = n.restrict_poly(v.comp[r]);
        }
        int gi = generic_rank(a);
        PolyMat mix(dim, a.cols() + jac.cols());
        mix.block(0, 0, dim, a.cols()) = a;
        mix.block(0, a.cols(), dim, jac.cols()) = jac;
        int gmix = generic_rank(mix);
        res.generic_dims.push_back(gi);
        res.generic_dimsN.push_back(gi + n.b - gmix);
        if (gi == dim) break;
        if (bt.level_exhausted(i)) throw NotBracketGeneratingWithinCap(gi, dim, cap);
    }
    if (res.generic_dims.empty() || res.generic_dims.back() != dim)
        throw NotBracketGeneratingWithinCap(
            res.generic_dims.empty() ? 0 : res.generic_dims.back(), dim, cap);
    res.generic_Q = weighted_dimension(res.generic_dims);
    res.generic_Q_N = weighted_dimension(res.generic_dimsN);
    res.generic_r_notN = compute_r_notN(res.generic_dims, res.generic_dimsN);

    for (const auto& s : samples) {
        RestrictedProfile rp = restricted_profile(bt, n, s, cap);
        if (rp.dims != res.generic_dims || rp.dimsN != res.generic_dimsN)
            res.witnesses.push_back(s);
        ++res.samples_checked;
    }
    res.holds_on_samples = res.witnesses.empty();
    return res;
}

BracketFamily adapted_family(BracketTable& bt, std::span<const Rat> pt, int cap) {
    const int n = bt.dim();
    EchelonBasis basis(n);
    BracketFamily fam;
    for (int len = 1; len <= cap; ++len) {
        const auto& all = bt.nonzero_upto(len);
        for (const auto& idx : all) {
            if (static_cast<int>(idx.size()) != len) continue;
            std::vector<Rat> v = bt.get(idx).eval(pt);
            RatVec col(n);
            for (int r = 0; r < n; ++r) col(r) = v[r];
            if (basis.insert(std::move(col))) {
                fam.indices.push_back(idx);
                if (basis.rank() == n) return fam;
            }
        }
        if (bt.level_exhausted(len))
            throw NotBracketGeneratingWithinCap(basis.rank(), n, cap);
    }
    throw NotBracketGeneratingWithinCap(basis.rank(), n, cap);
}

AdaptedBasis adapted_basis(BracketTable& bt, std::span<const Rat> pt, int cap) {
    BracketFamily fam = adapted_family(bt, pt, cap);
    AdaptedBasis ab;
    for (const auto& idx : fam.indices) {
        ab.fields.push_back(bt.get(idx));
        ab.layers.push_back(static_cast<int>(idx.size()));
        ab.combos.push_back({{idx, Rat(1)}});
    }
    ab.tangential = bt.dim();
    return ab;
}

AdaptedBasis restricted_adapted_basis(BracketTable& bt, const SubmanifoldSpec& n,
                                      std::span<const Rat> param_pt, int cap) {
    RestrictedProfile rp = restricted_profile(bt, n, param_pt, cap);
    const int dim = bt.dim();
    const auto& q = rp.point;
    RatMat jac = eval_matrix(n.jacobian(), param_pt);

    AdaptedBasis tang, trans;
    EchelonBasis tangential_span(dim);  // inside T_qN
    EchelonBasis full_span(dim);

    int prevN = 0;
    for (std::size_t li = 0; li < rp.dims.size(); ++li) {
        int layer = static_cast<int>(li + 1);
        int wantN = rp.dimsN[li] - prevN;
        prevN = rp.dimsN[li];

        const auto& idxs = bt.nonzero_upto(layer);
        if (wantN > 0) {
            // Constant combinations A c of bracket values lying in T_qN:
            // nullspace of [A | -jac] projected through A.
            RatMat a(dim, static_cast<Eigen::Index>(idxs.size()));
            for (std::size_t c = 0; c < idxs.size(); ++c) {
                std::vector<Rat> v = bt.get(idxs[c]).eval(q);
                for (int r = 0; r < dim; ++r) a(r, static_cast<Eigen::Index>(c)) = v[r];
            }
            RatMat sys(dim, a.cols() + jac.cols());
            sys.block(0, 0, dim, a.cols()) = a;
            sys.block(0, a.cols(), dim, jac.cols()) = -jac;
            int added = 0;
            for (const RatVec& ker : nullspace_basis(sys)) {
                if (added == wantN) break;
                RatVec combo = ker.head(a.cols());
                RatVec v(dim);
                for (int r = 0; r < dim; ++r) v(r) = Rat(0);
                for (Eigen::Index c = 0; c < a.cols(); ++c) {
                    if (combo(c).is_zero()) continue;
                    for (int r = 0; r < dim; ++r) v(r) += a(r, c) * combo(c);
                }
                RatVec vcopy = v;
                if (!tangential_span.insert(std::move(vcopy))) continue;
                full_span.insert(v);
                VecField y(dim);
                std::vector<std::pair<MultiIndex, Rat>> parts;
                for (Eigen::Index c = 0; c < a.cols(); ++c) {
                    if (combo(c).is_zero()) continue;
                    y = y + bt.get(idxs[c]).scaled(combo(c));
                    parts.emplace_back(idxs[c], combo(c));
                }
                tang.fields.push_back(std::move(y));
                tang.layers.push_back(layer);
                tang.combos.push_back(std::move(parts));
                ++added;
            }
            if (added != wantN)
                throw AnalysisError("restricted adapted basis: could not realize layer " +
                                    std::to_string(layer) + " inside T_qN");
        }

        // Complete the layer to n_i with plain bracket fields.
        int target = rp.dims[li];
        for (const auto& idx : idxs) {
            if (full_span.rank() >= target) break;
            if (static_cast<int>(idx.size()) != layer) continue;
            std::vector<Rat> v = bt.get(idx).eval(q);
            RatVec col(dim);
            for (int r = 0; r < dim; ++r) col(r) = v[r];
            if (full_span.insert(std::move(col))) {
                trans.fields.push_back(bt.get(idx));
                trans.layers.push_back(layer);
                trans.combos.push_back({{idx, Rat(1)}});
            }
        }
        if (full_span.rank() < target)
            throw AnalysisError("restricted adapted basis: layer " + std::to_string(layer) +
                                " could not be completed");
    }

    AdaptedBasis out;
    out.tangential = static_cast<int>(tang.fields.size());
    out.fields = std::move(tang.fields);
    out.layers = std::move(tang.layers);
    out.combos = std::move(tang.combos);
    out.fields.insert(out.fields.end(), trans.fields.begin(), trans.fields.end());
    out.layers.insert(out.layers.end(), trans.layers.begin(), trans.layers.end());
    out.combos.insert(out.combos.end(), trans.combos.begin(), trans.combos.end());
    return out;
}

}  // namespace sr
