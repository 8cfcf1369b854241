#include "diffgsb/rational.hpp"

namespace diffgsb {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.empty() || num.empty())
            throw std::invalid_argument("rational: malformed '" + s + "'");
    }
    auto check = [&](const std::string& part, bool sign_ok) {
        for (size_t i = 0; i < part.size(); ++i) {
            char c = part[i];
            if (i == 0 && sign_ok && (c == '-' || c == '+') && part.size() > 1) continue;
            if (c < '0' || c > '9')
                throw std::invalid_argument("rational: malformed '" + s + "'");
        }
    };
    check(num, true);
    check(den, false);
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpq_class r(1);
    mpq_class base = v_;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational multinomial3(long n, long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) return Rational(0);
    mpz_class r1, r2;
    mpz_bin_uiui(r1.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(a));
    mpz_bin_uiui(r2.get_mpz_t(), static_cast<unsigned long>(n - a), static_cast<unsigned long>(b));
    return Rational(mpz_class(r1 * r2));
}

}  // namespace diffgsb
