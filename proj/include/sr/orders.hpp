#ifndef SR_ORDERS_HPP
#define SR_ORDERS_HPP

#include <optional>
#include <span>
#include <vector>

#include "sr/flags.hpp"
#include "sr/vecfield.hpp"

namespace sr {

/// Volume form w = density · dx_1 ∧ ... ∧ dx_n; density not identically zero.
struct VolumeForm {
    Poly density;
};

/// A nonholonomic order: a finite value, or "all words up to the cap vanish".
struct NhOrder {
    int value = 0;
    bool above_cap = false;

    static NhOrder finite(int v) { return {v, false}; }
    static NhOrder capped(int cap) { return {cap, true}; }

    bool operator==(const NhOrder&) const = default;
    std::string str() const;
};

/*
 * Breadth-first levels of span{ X_w f : |w| = j } over Q, each level kept
 * as a reduced (leading-monomial echelon) basis. Derivations are linear,
 * so replacing the word set by a basis of its span preserves every
 * "some word does not vanish at/along ..." test while keeping levels small.
 */
class DerivativeLevels {
public:
    DerivativeLevels(Poly f, const Frame& frame);

    /// Basis of level j (j = 0 is {f}); empty means all higher levels vanish.
    const std::vector<Poly>& level(int j);

    /// Smallest j <= cap with some level-j element nonzero at pt.
    NhOrder order_at(std::span<const Rat> pt, int cap);
    /// Smallest j <= cap with some level-j element not identically zero on N.
    NhOrder order_along(const SubmanifoldSpec& n, int cap);

private:
    Frame frame_;
    std::vector<std::vector<Poly>> levels_;
};

/// ord_pt(f): smallest j with (X_{i1}...X_{ij} f)(pt) != 0; 0 when f(pt) != 0.
NhOrder nonholonomic_order(const Poly& f, const Frame& frame, std::span<const Rat> pt, int cap);

/// Order of f at a generic point of N: smallest j with some length-j
/// derivative not identically zero along N.
NhOrder generic_order_along(const Poly& f, const Frame& frame, const SubmanifoldSpec& n, int cap);

/// density · det[X_{I_1} | ... | X_{I_n}] as an exact Poly.
Poly family_volume(const BracketFamily& family, BracketTable& bt, const VolumeForm& vol);

constexpr std::size_t kDefaultFamilyBudget = 200000;

/// All bracket families with sum |I_i| = total and |I_i| <= max_len, one per
/// unordered combination (permutations only flip the determinant's sign).
/// Members are distinct multiindices with identically-nonzero fields.
std::vector<BracketFamily> enumerate_families(BracketTable& bt, int total, int max_len,
                                              std::size_t budget = kDefaultFamilyBudget);

struct SigmaOptions {
    int bracket_len_cap = 0;   // 0: use the generic step
    int order_cap = 0;         // 0: use 2 * Q(p)
    std::size_t family_budget = kDefaultFamilyBudget;
};

struct FamilyOrderInfo {
    BracketFamily family;
    Poly volume;
    NhOrder generic_order;
    std::vector<NhOrder> sample_orders;
};

struct OrderResult {
    NhOrder sigma_minus;
    NhOrder sigma_plus;              // sampled: max over samples of min over families
    std::optional<int> sigma;        // set when sigma_- = sigma_+ with a uniform witness
    std::vector<std::size_t> witnesses;  // families achieving sigma at every sample
    std::vector<FamilyOrderInfo> families;
    int families_skipped_zero = 0;   // identically-zero volume (incl. repeated members)
    int order_cap = 0;
    int bracket_len_cap = 0;
    int Q_ref = 0;
};

/// The extremal orders sigma_- <= sigma_+ of the volume determinants of all
/// total-length-Q_ref families along N, with pointwise confirmation on the
/// given parameter samples.
OrderResult sigma_bounds(BracketTable& bt, const VolumeForm& vol, const SubmanifoldSpec& n,
                         int Q_ref, const SigmaOptions& opts,
                         std::span<const std::vector<Rat>> sample_params,
                         const GrowthProfile& profile_at_center);

struct NuResult {
    Rat value;
    std::vector<BracketFamily> argmax;
};

/// nu at a regular point: max |w(X_{I_1},...,X_{I_n})(pt)| over families with
/// sum |I_i| = Q_ref. Throws when every family vanishes at pt.
NuResult nu_at(BracketTable& bt, const VolumeForm& vol, std::span<const Rat> pt,
               int Q_ref, int max_len, std::size_t budget = kDefaultFamilyBudget);

}  // namespace sr

#endif
