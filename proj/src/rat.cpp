#include "sr/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace sr {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("Rat: cannot parse '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("Rat: zero denominator");
    q.canonicalize();
    return Rat(q);
}

Rat Rat::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rat(r);  // num/den coprime => powers coprime, but canonicalize anyway
}

std::string Rat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

}  // namespace sr
