#ifndef SR_POLY_HPP
#define SR_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sr/rat.hpp"

namespace sr {

/// Exponent vector of a monomial; length is the variable count of the ring.
using Mono = std::vector<uint32_t>;

inline int total_degree(const Mono& m) {
    int d = 0;
    for (uint32_t e : m) d += static_cast<int>(e);
    return d;
}

/// Graded lexicographic order: first by total degree, then lexicographically.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic on exponent vectors
    }
};

/*
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Canonical form: no stored zero coefficients, terms ordered by grlex.
 * Equality is term-map equality. A polynomial with no terms is the zero
 * polynomial and combines with polynomials of any variable count; all
 * other mixed-arity arithmetic is a logic error.
 */
class Poly {
public:
    using TermMap = std::map<Mono, Rat, GrlexLess>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index);  // x_index, 0-based
    static Poly monomial(int nvars, const Mono& m, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const;  // total degree; -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a monomial (zero if absent).
    Rat coeff(const Mono& m) const;
    /// Leading term under grlex (highest); requires non-zero.
    std::pair<Mono, Rat> leading_term() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator*(const Poly& a, const Rat& c);
    friend Poly operator*(const Rat& c, const Poly& a) { return a * c; }
    Poly pow(unsigned e, int trunc_degree = -1) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact formal partial derivative with respect to variable `axis`.
    Poly partial(int axis) const;

    /// Exact value at a rational point. Throws on arity mismatch.
    Rat eval(std::span<const Rat> pt) const;
    /// Floating-point value (probe module only).
    double eval_double(std::span<const double> pt) const;

    /// Substitute variable i by images[i]; result lives in the images' ring.
    /// trunc_degree >= 0 drops all terms of total degree > trunc_degree.
    Poly substitute(std::span<const Poly> images, int trunc_degree = -1) const;

    /// Drop all terms of total degree above `d`.
    Poly truncate_degree(int d) const;
    /// Keep only the terms whose weighted degree sum(w_i * e_i) equals `d`.
    Poly weighted_part(std::span<const int> weights, int d) const;
    int min_weighted_degree(std::span<const int> weights) const;  // INT_MAX when zero

    /// `this / d` when the division is exact; nullopt otherwise.
    std::optional<Poly> divide_exact(const Poly& d) const;

    /// Canonical, re-parseable rendering ("1/2*x1^2 - x2").
    std::string str(std::span<const std::string> names) const;
    std::string str() const;  // default names x1..xn

    void insert_term(const Mono& m, const Rat& c);  // adds (merges) a term

private:
    static int common_nvars(const Poly& a, const Poly& b);

    int nvars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace sr

#endif
