// word.hpp -- exact arithmetic on elements of free groups of finite rank:
// free reduction, group operations, cyclic decomposition, primitive roots,
// abelianization.

#ifndef PROVCLOSE_WORD_HPP
#define PROVCLOSE_WORD_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace provclose {

/// One signed generator occurrence. index is 1-based; sign is +1 or -1.
struct Letter {
    int index = 1;
    int sign = +1;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

inline Letter inverse(Letter l) { return Letter{l.index, -l.sign}; }

/// A freely reduced word over a ranked alphabet. The empty word is the
/// identity. Words are immutable values; every operation returns a fresh
/// reduced word. Equality compares letter sequences only -- the declared
/// rank does not affect the group element.
class Word {
  public:
    Word() = default;

    /// Reduces an arbitrary letter sequence to its unique normal form.
    static Word reduced(std::vector<Letter> raw, int rank = 0) {
        std::vector<Letter> out;
        out.reserve(raw.size());
        for (const Letter& l : raw) {
            if (l.index < 1) throw std::invalid_argument("letter index must be >= 1");
            if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
            if (!out.empty() && out.back() == inverse(l))
                out.pop_back();
            else
                out.push_back(l);
        }
        Word w;
        w.letters_ = std::move(out);
        w.rank_ = rank;
        for (const Letter& l : w.letters_)
            if (l.index > w.rank_) w.rank_ = l.index;
        return w;
    }

    const std::vector<Letter>& letters() const { return letters_; }
    int rank() const { return rank_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    /// Same letters, larger declared rank.
    Word with_rank(int rank) const {
        if (rank < rank_) throw std::invalid_argument("cannot shrink rank below letters used");
        Word w = *this;
        w.rank_ = rank;
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  private:
    std::vector<Letter> letters_;
    int rank_ = 0;
};

/// reduce as a standalone operation (idempotent).
inline Word reduce(const std::vector<Letter>& raw, int rank = 0) {
    return Word::reduced(raw, rank);
}

inline Word multiply(const Word& x, const Word& y) {
    std::vector<Letter> raw = x.letters();
    raw.insert(raw.end(), y.letters().begin(), y.letters().end());
    return Word::reduced(std::move(raw), std::max(x.rank(), y.rank()));
}

inline Word invert(const Word& x) {
    std::vector<Letter> raw;
    raw.reserve(x.length());
    for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it)
        raw.push_back(inverse(*it));
    return Word::reduced(std::move(raw), x.rank());
}

/// w^k for any integer k (k = 0 gives the identity).
inline Word power(const Word& x, long long k) {
    Word base = k < 0 ? invert(x) : x;
    unsigned long long n = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                                 : static_cast<unsigned long long>(k);
    Word acc = Word::reduced({}, x.rank());
    // square-and-multiply; each product is reduced, so conjugate powers
    // like (bab^-1)^k stay short
    while (n > 0) {
        if (n & 1ull) acc = multiply(acc, base);
        n >>= 1;
        if (n) base = multiply(base, base);
    }
    return acc;
}

/// w = conjugator . core . conjugator^-1 with core cyclically reduced
/// (or empty); conjugator is the maximal cancelling prefix.
struct CyclicDecomposition {
    Word conjugator;
    Word core;
};

inline CyclicDecomposition cyclic_decompose(const Word& w) {
    const std::vector<Letter>& ls = w.letters();
    std::size_t i = 0, j = ls.size();
    while (j > i + 1 && ls[i] == inverse(ls[j - 1])) {
        ++i;
        --j;
    }
    std::vector<Letter> conj(ls.begin(), ls.begin() + i);
    std::vector<Letter> core(ls.begin() + i, ls.begin() + j);
    return CyclicDecomposition{Word::reduced(std::move(conj), w.rank()),
                               Word::reduced(std::move(core), w.rank())};
}

/// Primitive root u and maximal exponent e >= 1 with u^e = w.
struct RootExp {
    Word root;
    long long exponent = 1;
};

/// Period detection over divisors of the cyclic core length, conjugated
/// back. The smallest valid period gives the maximal exponent.
inline RootExp root_exp(const Word& w) {
    if (w.is_identity()) throw std::domain_error("no root of the empty word");
    CyclicDecomposition cd = cyclic_decompose(w);
    const std::vector<Letter>& core = cd.core.letters();
    const std::size_t n = core.size();
    std::size_t period = n;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = core[i] == core[i % d];
        if (ok) {
            period = d;
            break;
        }
    }
    std::vector<Letter> raw = cd.conjugator.letters();
    raw.insert(raw.end(), core.begin(), core.begin() + period);
    for (auto it = cd.conjugator.letters().rbegin(); it != cd.conjugator.letters().rend(); ++it)
        raw.push_back(inverse(*it));
    return RootExp{Word::reduced(std::move(raw), w.rank()),
                   static_cast<long long>(n / period)};
}

/// Exact membership of v in the cyclic subgroup generated by w.
inline bool in_cyclic_subgroup(const Word& v, const Word& w) {
    if (v.is_identity()) return true;
    if (w.is_identity()) return false;
    RootExp rv = root_exp(v), rw = root_exp(w);
    if (rv.root != rw.root && rv.root != invert(rw.root)) return false;
    return rv.exponent % rw.exponent == 0;
}

/// Signed letter counts; entry i-1 is the image of w under the i-th
/// coordinate homomorphism onto the integers.
using AbelianVector = std::vector<long long>;

inline AbelianVector abelianization(const Word& w) {
    AbelianVector v(static_cast<std::size_t>(w.rank()), 0);
    for (const Letter& l : w.letters())
        v[static_cast<std::size_t>(l.index - 1)] += l.sign;
    return v;
}

/// Canonical rendering: "1" for the identity; runs collapsed to powers,
/// inverses as ^-1. Letters a..z for rank <= 26, a1 a2 ... otherwise.
inline std::string to_string(const Word& w) {
    if (w.is_identity()) return "1";
    const bool indexed = w.rank() > 26;
    std::string out;
    const std::vector<Letter>& ls = w.letters();
    for (std::size_t i = 0; i < ls.size();) {
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        long long run = static_cast<long long>(j - i) * ls[i].sign;
        if (indexed) {
            if (!out.empty()) out += ' ';
            out += 'a' + std::to_string(ls[i].index);
        } else {
            out += static_cast<char>('a' + ls[i].index - 1);
        }
        if (run != 1) out += '^' + std::to_string(run);
        i = j;
    }
    return out;
}

}  // namespace provclose

#endif
