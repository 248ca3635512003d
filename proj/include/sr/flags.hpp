#ifndef SR_FLAGS_HPP
#define SR_FLAGS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sr/vecfield.hpp"

namespace sr {

constexpr int kDefaultGrowthCap = 10;

/// Growth vector (n_1(q),...,n_r(q)) with its step and weighted dimension Q.
struct GrowthProfile {
    std::vector<int> dims;
    int step = 0;
    int Q = 0;
    std::vector<Rat> point;  // empty for the generic profile

    std::string dims_str() const;
};

int weighted_dimension(std::span<const int> dims);

/// Pointwise growth vector at pt: n_i = rank of all bracket values with
/// |I| <= i. Plateaus are not terminal (growth can resume); stops at
/// n_i = n or, failing that within cap, throws NotBracketGeneratingWithinCap.
GrowthProfile growth_vector(BracketTable& bt, std::span<const Rat> pt,
                            int cap = kDefaultGrowthCap);

/// Growth vector over the rational function field (value on the open dense
/// regular stratum); Q of this profile is the regular-stratum dimension.
GrowthProfile generic_growth(BracketTable& bt, int cap = kDefaultGrowthCap);

enum class Regularity { Regular, Singular };

/// Regular iff every n_i(pt) equals the generic rank of the corresponding
/// bracket matrix (exact decision, no thresholds).
Regularity classify_point(BracketTable& bt, std::span<const Rat> pt,
                          int cap = kDefaultGrowthCap);

/*
 * Parametrized submanifold N of R^n: t in R^b -> phi(t), with the
 * parametrization Jacobian of generic rank b. A coordinate subspace
 * {x_j = 0, j in zeroed} is the special case phi = inclusion of the
 * free coordinates.
 */
struct SubmanifoldSpec {
    std::string name;
    int ambient = 0;
    int b = 0;
    std::vector<Poly> phi;     // n components, Polys in b parameters
    std::vector<int> zeroed;   // nonempty iff coordinate subspace

    static SubmanifoldSpec coordinate_subspace(std::string name, int ambient,
                                               std::vector<int> zeroed_coords);
    static SubmanifoldSpec parametrized(std::string name, int ambient,
                                        int params, std::vector<Poly> map);

    bool is_coordinate_subspace() const { return !zeroed.empty(); }
    PolyMat jacobian() const;  // n x b, entries in the parameters
    std::vector<Rat> map_point(std::span<const Rat> param_pt) const;
    /// For coordinate subspaces: the parameter point of an ambient point on N.
    std::vector<Rat> param_of(std::span<const Rat> ambient_pt) const;
    bool contains(std::span<const Rat> ambient_pt) const;  // coordinate subspaces only

    /// Composes an ambient Poly with phi (a Poly in the parameters).
    Poly restrict_poly(const Poly& f) const;
};

/// Restricted flag data at q = phi(param_pt).
struct RestrictedProfile {
    std::vector<int> dims;      // ambient n_i at q
    std::vector<int> dimsN;     // n_i^N(q)
    int Q = 0;                  // ambient Q(q)
    int Q_N = 0;
    int r_notN = 0;
    std::vector<Rat> point;     // ambient coordinates of q
    std::vector<Rat> param_pt;
};

/// n_i^N = dim(D^i_q ∩ T_qN) via rank(A_i) + rank(B) - rank([A_i|B]).
/// Throws when the Jacobian drops rank at param_pt (not an immersion).
RestrictedProfile restricted_profile(BracketTable& bt, const SubmanifoldSpec& n,
                                     std::span<const Rat> param_pt,
                                     int cap = kDefaultGrowthCap);

int compute_r_notN(std::span<const int> dims, std::span<const int> dimsN);

/// Deterministic rational sample grid in [-1,1]^b: the origin first, then
/// van der Corput points (bases 2,3,5,...) mapped by t -> 2t-1.
std::vector<std::vector<Rat>> default_samples(int b, int count);

struct EquiregResult {
    bool holds_on_samples = false;
    std::vector<int> generic_dims;    // ambient n_i along N, function-field ranks
    std::vector<int> generic_dimsN;
    int generic_Q = 0;                // = Qbar along N
    int generic_Q_N = 0;              // = Qbar_N
    int generic_r_notN = 0;
    std::vector<std::vector<Rat>> witnesses;  // param points where dims deviate
    int samples_checked = 0;
};

/// Definition check on samples backed by function-field ranks of the
/// substituted bracket matrices: holds when every sampled profile matches
/// the generic one.
EquiregResult strong_equireg_check(BracketTable& bt, const SubmanifoldSpec& n,
                                   std::span<const std::vector<Rat>> samples,
                                   int cap = kDefaultGrowthCap);

/// Greedy adapted family at pt: multiindices in (length, lex) order whose
/// values extend the rank; satisfies sum |I_i| = Q(pt).
BracketFamily adapted_family(BracketTable& bt, std::span<const Rat> pt,
                             int cap = kDefaultGrowthCap);

/*
 * Adapted basis as actual vector fields, each a constant-rational
 * combination of bracket fields, with its flag layer. Used by the chart
 * construction; the combination is recorded for the induced-form data.
 */
struct AdaptedBasis {
    std::vector<VecField> fields;
    std::vector<int> layers;
    // combos[i]: the bracket combination Y_i = sum c_I X_I.
    std::vector<std::vector<std::pair<MultiIndex, Rat>>> combos;
    int tangential = 0;  // first `tangential` fields are adapted to the restricted flag
};

AdaptedBasis adapted_basis(BracketTable& bt, std::span<const Rat> pt,
                           int cap = kDefaultGrowthCap);

/// First b fields adapted to the restricted flag at phi(param_pt) (constant
/// combinations of brackets, tangent to N at the point), completed to a basis
/// adapted to the full flag.
AdaptedBasis restricted_adapted_basis(BracketTable& bt, const SubmanifoldSpec& n,
                                      std::span<const Rat> param_pt,
                                      int cap = kDefaultGrowthCap);

}  // namespace sr

#endif
