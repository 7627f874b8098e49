#ifndef LGCY_RATIONAL_HPP
#define LGCY_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgcy {

// Exact arithmetic layer. GMP's mpq arithmetic keeps canonical operands
// canonical (lowest terms, positive denominator) but the two-argument
// constructor does not reduce, so Rat wraps mpq_class with canonicalizing
// constructors; every value in the ring is canonical by construction.
using Int = mpz_class;

class Rat : public mpq_class {
public:
    Rat() : mpq_class() {}
    Rat(const mpq_class& q) : mpq_class(q) {}
    Rat(int n) : mpq_class(static_cast<long>(n)) {}
    Rat(long n) : mpq_class(n) {}
    Rat(const Int& n) : mpq_class(n) {}
    Rat(long n, long d) : mpq_class(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        canonicalize();
    }
    Rat(const Int& n, const Int& d) : mpq_class(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        canonicalize();
    }
    template <class T, class U> Rat(const __gmp_expr<T, U>& e) : mpq_class(e) {}
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (b == 0) throw std::domain_error("pow_rat: negative power of zero");
        r = Rat(1) / r;
    }
    r.canonicalize();
    return r;
}

// sum_{k=from}^{to} 1/k
inline Rat harmonic(unsigned long from, unsigned long to) {
    Rat s(0);
    for (unsigned long k = from; k <= to; ++k) s += Rat(1, k);
    s.canonicalize();
    return s;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

} // namespace lgcy

#endif
