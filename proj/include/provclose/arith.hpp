// arith.hpp -- integer utilities: factorization, prime sets (explicit or
// complement-of-finite), the largest P-smooth divisor, and maximal-divisor
// search under a predicate.

#ifndef PROVCLOSE_ARITH_HPP
#define PROVCLOSE_ARITH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace provclose {

/// prime -> multiplicity; empty for 1.
using Factorization = std::map<long long, int>;

/// Trial division with a 2,3 wheel. Word exponents never get big enough
/// to need more.
inline Factorization factorize(long long k) {
    if (k <= 0) throw std::invalid_argument("factorize requires a positive integer");
    Factorization f;
    for (long long p : {2ll, 3ll}) {
        while (k % p == 0) {
            ++f[p];
            k /= p;
        }
    }
    for (long long p = 5; p * p <= k; p += 6) {
        for (long long q : {p, p + 2}) {
            while (k % q == 0) {
                ++f[q];
                k /= q;
            }
        }
    }
    if (k > 1) ++f[k];
    return f;
}

inline bool is_prime(long long k) {
    if (k < 2) return false;
    Factorization f = factorize(k);
    return f.size() == 1 && f.begin()->second == 1;
}

/// Sorted divisors of k.
inline std::vector<long long> divisors(long long k) {
    std::vector<long long> ds{1};
    for (const auto& [p, a] : factorize(k)) {
        std::size_t n = ds.size();
        long long q = 1;
        for (int i = 0; i < a; ++i) {
            q *= p;
            for (std::size_t j = 0; j < n; ++j) ds.push_back(ds[j] * q);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// A set of primes, either a finite explicit set or the complement of one.
/// Explicit sets must be nonempty; a complement of the empty set means all
/// primes.
class PrimeSet {
  public:
    static PrimeSet explicit_set(std::set<long long> primes) {
        if (primes.empty()) throw std::invalid_argument("explicit prime set must be nonempty");
        return PrimeSet(false, std::move(primes));
    }

    static PrimeSet complement_of(std::set<long long> primes) {
        return PrimeSet(true, std::move(primes));
    }

    static PrimeSet all_primes() { return PrimeSet(true, {}); }

    bool is_complement() const { return complement_; }
    const std::set<long long>& listed() const { return listed_; }

    bool contains(long long p) const {
        return complement_ ? listed_.count(p) == 0 : listed_.count(p) != 0;
    }

    PrimeSet complement() const {
        if (complement_ && listed_.empty())
            throw std::domain_error("complement of all primes is empty");
        return complement_ ? explicit_set(listed_) : complement_of(listed_);
    }

    /// "2,3" for explicit sets, "!2,7" for complements.
    std::string text() const {
        std::string out = complement_ ? "!" : "";
        bool first = true;
        for (long long p : listed_) {
            if (!first) out += ',';
            out += std::to_string(p);
            first = false;
        }
        return out;
    }

    /// Accepts "2,3,5", "!2", "!2,7" and the alias "odd" (= "!2").
    static PrimeSet parse(const std::string& text) {
        if (text == "odd") return complement_of({2});
        std::string body = text;
        bool comp = false;
        if (!body.empty() && body[0] == '!') {
            comp = true;
            body = body.substr(1);
        }
        std::set<long long> primes;
        std::size_t i = 0;
        while (i < body.size()) {
            std::size_t j = body.find(',', i);
            if (j == std::string::npos) j = body.size();
            std::string tok = body.substr(i, j - i);
            if (tok.empty()) throw std::invalid_argument("malformed prime set '" + text + "'");
            long long v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("malformed prime set '" + text + "'");
                v = v * 10 + (c - '0');
                if (v > 1000000000) throw std::invalid_argument("prime too large in '" + text + "'");
            }
            if (!is_prime(v))
                throw std::invalid_argument(std::to_string(v) + " is not prime in '" + text + "'");
            primes.insert(v);
            i = j + 1;
        }
        if (primes.empty() && !comp)
            throw std::invalid_argument("explicit prime set must be nonempty");
        return comp ? complement_of(std::move(primes)) : explicit_set(std::move(primes));
    }

  private:
    PrimeSet(bool complement, std::set<long long> listed)
        : complement_(complement), listed_(std::move(listed)) {}

    bool complement_;
    std::set<long long> listed_;
};

/// Largest divisor of k that is a product of primes in P: the product of
/// the p-parts of k over p in P.
inline long long nu(long long k, const PrimeSet& P) {
    if (k <= 0) throw std::invalid_argument("nu requires a positive integer");
    long long out = 1;
    for (const auto& [p, a] : factorize(k)) {
        if (!P.contains(p)) continue;
        for (int i = 0; i < a; ++i) out *= p;
    }
    return out;
}

/// Single-prime case: the p-part of k.
inline long long nu_p(long long k, long long p) {
    if (k <= 0) throw std::invalid_argument("nu requires a positive integer");
    long long out = 1;
    while (k % p == 0) {
        out *= p;
        k /= p;
    }
    return out;
}

/// max { d >= 1 : d | e and accept(d) }. accept(1) must hold.
template <typename Pred>
long long max_divisor_where(long long e, Pred&& accept) {
    long long best = 1;
    for (long long d : divisors(e))
        if (d > best && accept(d)) best = d;
    return best;
}

}  // namespace provclose

#endif
