// variety.hpp -- pseudovariety descriptors and the two decision procedures
// everything else needs: cyclic-group membership C_k in V, and membership
// of a concrete finite group.
//
// Supported kinds: G (all finite groups), G_P for a prime set P, O (odd
// order, alias G_{2^comp}), N (nilpotent), S (solvable), Su
// (supersolvable), Ab(m) (abelian of exponent dividing m), V_p (normal
// Sylow p-subgroup with quotient abelian of exponent dividing p-1).

#ifndef PROVCLOSE_VARIETY_HPP
#define PROVCLOSE_VARIETY_HPP

#include <functional>
#include <memory>
#include <string>

#include "arith.hpp"
#include "finite_group.hpp"

namespace provclose {

class PseudovarietyDescriptor {
  public:
    enum class Kind { G, GP, O, N, S, Su, Ab, Vp, Custom };

    static PseudovarietyDescriptor all_finite() { return PseudovarietyDescriptor(Kind::G); }

    static PseudovarietyDescriptor gp(PrimeSet primes) {
        PseudovarietyDescriptor v(Kind::GP);
        v.primes_ = std::make_shared<PrimeSet>(std::move(primes));
        return v;
    }

    static PseudovarietyDescriptor odd() { return PseudovarietyDescriptor(Kind::O); }
    static PseudovarietyDescriptor nilpotent() { return PseudovarietyDescriptor(Kind::N); }
    static PseudovarietyDescriptor solvable() { return PseudovarietyDescriptor(Kind::S); }
    static PseudovarietyDescriptor supersolvable() { return PseudovarietyDescriptor(Kind::Su); }

    static PseudovarietyDescriptor ab(long long m) {
        if (m < 1) throw std::invalid_argument("Ab exponent must be >= 1");
        PseudovarietyDescriptor v(Kind::Ab);
        v.m_ = m;
        return v;
    }

    static PseudovarietyDescriptor vp(long long p) {
        if (!is_prime(p)) throw std::invalid_argument("Vp requires a prime");
        PseudovarietyDescriptor v(Kind::Vp);
        v.p_ = p;
        return v;
    }

    /// Extension point for user-supplied cyclic-membership predicates.
    /// Such descriptors are unverified: the closure formula accepts them
    /// only when declared extension-closed, and there is no finite-group
    /// membership test for them.
    static PseudovarietyDescriptor custom(std::string name,
                                          std::function<bool(long long)> cyclic_pred,
                                          bool extension_closed) {
        PseudovarietyDescriptor v(Kind::Custom);
        v.custom_name_ = std::move(name);
        v.custom_pred_ = std::make_shared<std::function<bool(long long)>>(std::move(cyclic_pred));
        v.custom_extension_closed_ = extension_closed;
        return v;
    }

    Kind kind() const { return kind_; }

    const PrimeSet& prime_set() const {
        if (kind_ == Kind::O) {
            static const PrimeSet odd_set = PrimeSet::complement_of({2});
            return odd_set;
        }
        if (kind_ != Kind::GP) throw std::logic_error("descriptor has no prime set");
        return *primes_;
    }

    long long ab_exponent() const {
        if (kind_ != Kind::Ab) throw std::logic_error("descriptor has no Ab exponent");
        return m_;
    }

    long long p() const {
        if (kind_ != Kind::Vp) throw std::logic_error("descriptor has no prime p");
        return p_;
    }

    bool extension_closed() const {
        switch (kind_) {
            case Kind::G:
            case Kind::GP:
            case Kind::O:
            case Kind::S: return true;
            case Kind::N:
            case Kind::Su: return false;
            case Kind::Ab: return m_ == 1;
            case Kind::Vp: return p_ == 2;  // V_2 = G_2
            case Kind::Custom: return custom_extension_closed_;
        }
        return false;
    }

    bool contains_all_abelian() const {
        switch (kind_) {
            case Kind::G:
            case Kind::N:
            case Kind::S:
            case Kind::Su: return true;
            default: return false;
        }
    }

    bool contains_nilpotent() const { return contains_all_abelian(); }

    /// Canonical text, matching the parse syntax.
    std::string text() const {
        switch (kind_) {
            case Kind::G: return "G";
            case Kind::GP: return "GP:" + primes_->text();
            case Kind::O: return "O";
            case Kind::N: return "N";
            case Kind::S: return "S";
            case Kind::Su: return "Su";
            case Kind::Ab: return "Ab:" + std::to_string(m_);
            case Kind::Vp: return "Vp:" + std::to_string(p_);
            case Kind::Custom: return "custom:" + custom_name_;
        }
        return "?";
    }

    /// Accepts "G", "GP:2,3", "GP:!2", "GP:odd", "O", "N", "S", "Su",
    /// "Ab:6", "Vp:3".
    static PseudovarietyDescriptor parse(const std::string& text) {
        if (text == "G") return all_finite();
        if (text == "O") return odd();
        if (text == "N") return nilpotent();
        if (text == "S") return solvable();
        if (text == "Su") return supersolvable();
        auto num = [&](const std::string& body) {
            long long v = 0;
            if (body.empty()) throw std::invalid_argument("malformed descriptor '" + text + "'");
            for (char c : body) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("malformed descriptor '" + text + "'");
                v = v * 10 + (c - '0');
                if (v > 1000000000) throw std::invalid_argument("descriptor number too large");
            }
            return v;
        };
        if (text.rfind("GP:", 0) == 0) return gp(PrimeSet::parse(text.substr(3)));
        if (text.rfind("Ab:", 0) == 0) return ab(num(text.substr(3)));
        if (text.rfind("Vp:", 0) == 0) {
            long long p = num(text.substr(3));
            if (!is_prime(p))
                throw std::invalid_argument("Vp requires a prime, got " + std::to_string(p));
            return vp(p);
        }
        throw std::invalid_argument("unknown pseudovariety descriptor '" + text + "'");
    }

    friend bool operator==(const PseudovarietyDescriptor& a, const PseudovarietyDescriptor& b) {
        return a.text() == b.text();
    }

    bool custom_predicate(long long k) const { return (*custom_pred_)(k); }

  private:
    explicit PseudovarietyDescriptor(Kind k) : kind_(k) {}

    Kind kind_;
    std::shared_ptr<PrimeSet> primes_;
    long long m_ = 1;
    long long p_ = 2;
    std::string custom_name_;
    std::shared_ptr<std::function<bool(long long)>> custom_pred_;
    bool custom_extension_closed_ = false;
};

/// Decides C_k in V.
inline bool cyclic_membership(long long k, const PseudovarietyDescriptor& v) {
    if (k < 1) throw std::invalid_argument("cyclic order must be >= 1");
    using Kind = PseudovarietyDescriptor::Kind;
    switch (v.kind()) {
        case Kind::G: return true;
        case Kind::GP:
        case Kind::O: return nu(k, v.prime_set()) == k;
        case Kind::N:
        case Kind::S:
        case Kind::Su: return true;  // cyclic groups are nilpotent
        case Kind::Ab: return v.ab_exponent() % k == 0;
        case Kind::Vp: {
            // k = p^a q with p not dividing q; C_k has normal Sylow
            // C_{p^a} and cyclic quotient C_q of exponent q
            long long q = k / nu_p(k, v.p());
            return (v.p() - 1) % q == 0;
        }
        case Kind::Custom: return v.custom_predicate(k);
    }
    return false;
}

/// Decides membership of a concrete finite group. The Su test is
/// deliberately not implemented (no chief-series machinery here); custom
/// descriptors carry no group-level predicate.
inline bool finite_group_membership(const FiniteGroup& g, const PseudovarietyDescriptor& v) {
    using Kind = PseudovarietyDescriptor::Kind;
    switch (v.kind()) {
        case Kind::G: return true;
        case Kind::GP:
        case Kind::O: return nu(g.order, v.prime_set()) == g.order;
        case Kind::N: return structure_flags(g).nilpotent;
        case Kind::S: return structure_flags(g).solvable;
        case Kind::Su: throw std::domain_error("Su: unsupported check (no chief-series test)");
        case Kind::Ab: {
            StructureFlags f = structure_flags(g);
            return f.abelian && v.ab_exponent() % f.exponent == 0;
        }
        case Kind::Vp: {
            const long long p = v.p();
            long long ppart = nu_p(g.order, p);
            std::vector<bool> syl = p_elements(g, p);
            long long count = 0;
            for (int a = 0; a < g.order; ++a)
                if (syl[a]) ++count;
            if (count != ppart) return false;  // Sylow p not normal
            // quotient must be abelian of exponent dividing p-1
            for (int a = 0; a < g.order; ++a) {
                if (!syl[g.power(a, p - 1)]) return false;
                for (int b = a + 1; b < g.order; ++b)
                    if (!syl[g.mul(g.mul(g.mul(a, b), g.inverse[a]), g.inverse[b])]) return false;
            }
            return true;
        }
        case Kind::Custom:
            throw std::domain_error("custom descriptor: unsupported finite-group check");
    }
    return false;
}

/// max { k >= 1 : k | e and C_k in V }. Only meaningful for
/// extension-closed descriptors, and rejected otherwise.
inline long long max_divisor_in_variety(long long e, const PseudovarietyDescriptor& v) {
    if (!v.extension_closed())
        throw std::domain_error("max_divisor_in_variety requires an extension-closed descriptor");
    return max_divisor_where(e, [&](long long d) { return cyclic_membership(d, v); });
}

}  // namespace provclose

#endif
