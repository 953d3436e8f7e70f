#include "densesum/rational.hpp"

#include <cctype>
#include <limits>

#include "densesum/errors.hpp"

namespace densesum {

rational parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_input("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        rational q;
        if (q.set_str(s, 10) != 0) throw invalid_input("bad rational literal: " + s);
        if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        bigint z;
        if (z.set_str(s, 10) != 0) throw invalid_input("bad integer literal: " + s);
        return rational(z);
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw invalid_input("bad rational literal: " + s);
    bigint num;
    if (num.set_str(digits, 10) != 0) throw invalid_input("bad rational literal: " + s);
    bigint den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    rational q(num, den);
    q.canonicalize();
    return q;
}

bigint floor_to_int(const rational& q) {
    bigint r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

bigint ceil_to_int(const rational& q) {
    bigint r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

bool fits_u64(const bigint& z) {
    if (sgn(z) < 0) return false;
    return mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const bigint& z) {
    if (!fits_u64(z)) throw invalid_input("value does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
}

rational log2_upper(std::uint64_t x) {
    if (x == 0) throw invalid_input("log2 of zero");
    bigint v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(x), 256);
    std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    // 2^L >= v: L = bits unless v is exactly a power of two.
    unsigned long low_one = mpz_scan1(v.get_mpz_t(), 0);
    bool pow2 = (low_one == bits - 1);
    std::size_t L = pow2 ? bits - 1 : bits;
    rational q(static_cast<unsigned long>(L), 256);
    q.canonicalize();
    return q;
}

std::string to_string(const rational& q) {
    return q.get_str();
}

} // namespace densesum
