#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsmash {

// Exact rational scalar. mpq_class stores lowest terms with positive
// denominator once canonicalized; every constructor here canonicalizes.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("to_long: not a small integer: " + rat_str(r));
    return r.get_num().get_si();
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) { b *= (n - i); b /= (i + 1); }
    return b;
}

// Deterministic splitmix64 stream; the same seed yields the same values on
// every platform, which the seeded suites rely on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return lo + static_cast<long>(v % span);
    }

    Rat rat_in(long height) { return rat(uniform(-height, height)); }

    Rng fork() { return Rng(next_u64()); }

  private:
    std::uint64_t state_;
};

}  // namespace qsmash
