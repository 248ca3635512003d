#include "sr/poly.hpp"

#include <cassert>
#include <climits>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sr {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("Poly::variable index");
    Mono m(nvars, 0);
    m[index] = 1;
    return monomial(nvars, m, Rat(1));
}

Poly Poly::monomial(int nvars, const Mono& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars) throw std::invalid_argument("Poly::monomial arity");
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

Rat Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::pair<Mono, Rat> Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

int Poly::common_nvars(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.nvars_;
    if (b.is_zero()) return a.nvars_;
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: mixed variable counts");
    return a.nvars_;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    nvars_ = common_nvars(*this, o);
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    nvars_ = common_nvars(*this, o);
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

void Poly::insert_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly operator*(const Poly& a, const Poly& b) {
    int nv = Poly::common_nvars(a, b);
    Poly r(nv);
    if (a.is_zero() || b.is_zero()) return r;
    Mono m(nv, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < nv; ++i) m[i] = ma[i] + mb[i];
            r.insert_term(m, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Poly& a, const Rat& c) {
    Poly r(a.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(unsigned e, int trunc_degree) const {
    Poly r = Poly::constant(nvars_, Rat(1));
    Poly base = *this;
    if (trunc_degree >= 0) base = base.truncate_degree(trunc_degree);
    unsigned k = e;
    while (k > 0) {
        if (k & 1u) {
            r = r * base;
            if (trunc_degree >= 0) r = r.truncate_degree(trunc_degree);
        }
        k >>= 1u;
        if (k) {
            base = base * base;
            if (trunc_degree >= 0) base = base.truncate_degree(trunc_degree);
        }
    }
    return r;
}

Poly Poly::partial(int axis) const {
    if (axis < 0 || axis >= nvars_) {
        if (is_zero()) return *this;
        throw std::out_of_range("Poly::partial axis");
    }
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[axis] == 0) continue;
        Mono d = m;
        d[axis] -= 1;
        r.insert_term(d, c * Rat(static_cast<long>(m[axis])));
    }
    return r;
}

Rat Poly::eval(std::span<const Rat> pt) const {
    if (is_zero()) return Rat(0);
    if (static_cast<int>(pt.size()) != nvars_) throw std::invalid_argument("Poly::eval arity mismatch");
    // Memoize powers per variable.
    std::vector<std::vector<Rat>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(Rat(1));
    auto power = [&](int i, uint32_t e) -> const Rat& {
        auto& v = pw[i];
        while (v.size() <= e) v.push_back(v.back() * pt[i]);
        return v[e];
    };
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            if (m[i]) t *= power(i, m[i]);
        acc += t;
    }
    return acc;
}

double Poly::eval_double(std::span<const double> pt) const {
    if (is_zero()) return 0.0;
    if (static_cast<int>(pt.size()) != nvars_) throw std::invalid_argument("Poly::eval_double arity mismatch");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < nvars_; ++i) {
            for (uint32_t k = 0; k < m[i]; ++k) t *= pt[i];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(std::span<const Poly> images, int trunc_degree) const {
    if (is_zero()) return Poly(images.empty() ? 0 : images[0].nvars());
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("Poly::substitute arity mismatch");
    int target_nv = 0;
    for (const auto& im : images)
        if (!im.is_zero()) { target_nv = im.nvars(); break; }
    // Memoized powers of each image.
    std::vector<std::vector<Poly>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(Poly::constant(target_nv, Rat(1)));
    auto power = [&](int i, uint32_t e) -> const Poly& {
        auto& v = pw[i];
        while (v.size() <= e) {
            Poly next = v.back() * images[i];
            if (trunc_degree >= 0) next = next.truncate_degree(trunc_degree);
            v.push_back(std::move(next));
        }
        return v[e];
    };
    Poly acc(target_nv);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target_nv, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i]) {
                t = t * power(i, m[i]);
                if (trunc_degree >= 0) t = t.truncate_degree(trunc_degree);
            }
        }
        acc += t;
    }
    if (trunc_degree >= 0) acc = acc.truncate_degree(trunc_degree);
    return acc;
}

Poly Poly::truncate_degree(int d) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) <= d) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::weighted_part(std::span<const int> weights, int d) const {
    if (!is_zero() && static_cast<int>(weights.size()) != nvars_)
        throw std::invalid_argument("Poly::weighted_part arity mismatch");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
        int wd = 0;
        for (int i = 0; i < nvars_; ++i) wd += weights[i] * static_cast<int>(m[i]);
        if (wd == d) r.terms_.emplace(m, c);
    }
    return r;
}

int Poly::min_weighted_degree(std::span<const int> weights) const {
    int best = INT_MAX;
    for (const auto& [m, c] : terms_) {
        int wd = 0;
        for (int i = 0; i < nvars_; ++i) wd += weights[i] * static_cast<int>(m[i]);
        if (wd < best) best = wd;
    }
    return best;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divide_exact by zero");
    int nv = nvars_;
    if (is_zero()) return Poly(nv);
    if (d.is_constant()) {
        Rat c = d.terms_.begin()->second;
        Poly q(nv);
        for (const auto& [m, k] : terms_) q.terms_.emplace(m, k / c);
        return q;
    }
    if (d.nvars() != nv) throw std::invalid_argument("Poly::divide_exact arity mismatch");
    Poly r = *this;
    Poly q(nv);
    auto [dm, dc] = d.leading_term();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        Mono qm(nv, 0);
        for (int i = 0; i < nv; ++i) {
            if (rm[i] < dm[i]) return std::nullopt;  // leading monomial not divisible
            qm[i] = rm[i] - dm[i];
        }
        Rat qc = rc / dc;
        Poly step = Poly::monomial(nv, qm, qc);
        q += step;
        r -= step * d;
    }
    return q;
}

std::string Poly::str(std::span<const std::string> names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first: iterate descending grlex.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool has_vars = total_degree(m) > 0;
        bool coef_shown = !a.is_one() || !has_vars;
        if (coef_shown) os << a.str();
        bool need_star = coef_shown;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

std::string Poly::str() const {
    std::vector<std::string> names;
    names.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i + 1));
    return str(names);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

}  // namespace sr
