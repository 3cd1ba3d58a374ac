// closure.hpp -- computes the pro-V closure of a cyclic subgroup <w> of a
// free group and decides V-closedness, for every supported descriptor.
// Every result carries a derivation trace naming the rule that fired, so
// output can be audited step by step.

#ifndef PROVCLOSE_CLOSURE_HPP
#define PROVCLOSE_CLOSURE_HPP

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arith.hpp"
#include "variety.hpp"
#include "word.hpp"

namespace provclose {

struct TraceStep {
    std::string rule;
    std::string detail;
};

struct ClosureResult {
    Word input;
    PseudovarietyDescriptor variety = PseudovarietyDescriptor::all_finite();
    Word root;
    long long exponent = 1;
    long long closure_exponent = 1;
    Word generator;
    bool closed = true;
    std::vector<TraceStep> trace;
};

struct ClosedDecision {
    bool closed = false;
    std::string rule;
    std::string detail;
};

/// h_w = (p-1) / gcd(p-1, coordinates of the abelianization of w), with
/// gcd(x, 0) = x. Equals the least r >= 1 with all coordinates of w^r
/// divisible by p-1.
inline long long h_value(const Word& w, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("h_value requires a prime");
    long long g = p - 1;
    for (long long c : abelianization(w)) g = std::gcd(g, c);
    return (p - 1) / g;
}

namespace detail {

inline void reject_unsupported(const PseudovarietyDescriptor& v) {
    using Kind = PseudovarietyDescriptor::Kind;
    if (v.kind() == Kind::Ab) throw std::domain_error("Ab(m): no closure formula in scope");
    if (v.kind() == Kind::Custom && !v.extension_closed())
        throw std::domain_error(
            "custom descriptor not declared extension-closed: closure formula unavailable");
}

inline std::string identity_rule(const PseudovarietyDescriptor& v) {
    using Kind = PseudovarietyDescriptor::Kind;
    switch (v.kind()) {
        case Kind::GP: return "Cor 3.5(i)";
        case Kind::O: return "Cor 3.7(i)";
        case Kind::Vp: return "Cor 2.5";
        case Kind::N: return "Thm 4.1";
        case Kind::S: return "Cor 3.4(i)";
        case Kind::G:
        case Kind::Su: return "Cor 4.2";
        default: return "Thm 3.2(i)";
    }
}

inline std::string contains_n_rule(const PseudovarietyDescriptor& v) {
    using Kind = PseudovarietyDescriptor::Kind;
    switch (v.kind()) {
        case Kind::N: return "Thm 4.1";
        case Kind::S: return "Cor 3.4(i)";
        default: return "Cor 4.2";
    }
}

}  // namespace detail

/// Exact closure of <w>: the subgroup generated by root(w)^m where m is
/// picked by the rule for the descriptor's kind.
inline ClosureResult closure_cyclic(const Word& w, const PseudovarietyDescriptor& v) {
    detail::reject_unsupported(v);
    ClosureResult r;
    r.input = w;
    r.variety = v;

    if (w.is_identity()) {
        r.trace.push_back({detail::identity_rule(v), "the trivial subgroup is closed"});
        return r;
    }

    RootExp re = root_exp(w);
    r.root = re.root;
    r.exponent = re.exponent;
    const long long e = re.exponent;
    r.trace.push_back({"root/exp", "u = " + to_string(re.root) + ", e = " + std::to_string(e)});

    using Kind = PseudovarietyDescriptor::Kind;
    long long m = 1;
    if (v.contains_nilpotent()) {
        m = e;
        r.trace.push_back({detail::contains_n_rule(v),
                           "m = e = " + std::to_string(e) + "; every cyclic subgroup is closed"});
    } else if (v.kind() == Kind::O) {
        m = nu(e, v.prime_set());
        r.trace.push_back({"Cor 3.7(iii)", "m = e / nu_2(e) = " + std::to_string(e) + " / " +
                                               std::to_string(e / m) + " = " + std::to_string(m)});
    } else if (v.kind() == Kind::GP) {
        m = nu(e, v.prime_set());
        r.trace.push_back({"Cor 3.5(iii)", "m = nu_P(" + std::to_string(e) + ") = " +
                                               std::to_string(m) + " (P = " +
                                               v.prime_set().text() + ")"});
    } else if (v.kind() == Kind::Vp) {
        const long long p = v.p();
        const long long hu = h_value(re.root, p);
        const long long np = nu_p(e, p);
        m = std::gcd(e, hu) * np;
        r.trace.push_back(
            {"Cor 4.7", "h_u = " + std::to_string(hu) + ", d_" + std::to_string(p) +
                            " = gcd(e, h_u) * nu_" + std::to_string(p) + "(e) = gcd(" +
                            std::to_string(e) + ", " + std::to_string(hu) + ") * " +
                            std::to_string(np) + " = " + std::to_string(m)});
    } else {
        m = max_divisor_in_variety(e, v);
        r.trace.push_back({"Thm 3.2(iv)", "m = max { d | " + std::to_string(e) +
                                              " : C_d in V } = " + std::to_string(m)});
    }

    r.closure_exponent = m;
    r.generator = power(re.root, m);
    r.closed = m == e;
    return r;
}

/// Direct closedness criterion; always agrees with closure_cyclic's
/// closed flag.
inline ClosedDecision is_closed_cyclic(const Word& w, const PseudovarietyDescriptor& v) {
    detail::reject_unsupported(v);
    if (w.is_identity())
        return {true, detail::identity_rule(v), "the trivial subgroup is closed"};

    RootExp re = root_exp(w);
    const long long e = re.exponent;
    using Kind = PseudovarietyDescriptor::Kind;

    if (v.contains_nilpotent())
        return {true, detail::contains_n_rule(v), "every cyclic subgroup is closed"};
    if (v.kind() == Kind::O) {
        bool closed = e % 2 == 1;
        return {closed, "Cor 3.7(ii)",
                "e = " + std::to_string(e) + (closed ? " is odd" : " is even")};
    }
    if (v.kind() == Kind::GP) {
        bool closed = nu(e, v.prime_set()) == e;
        return {closed, "Cor 3.5(ii)",
                "e = " + std::to_string(e) + (closed ? " is" : " is not") +
                    " a product of primes in " + v.prime_set().text()};
    }
    if (v.kind() == Kind::Vp) {
        const long long p = v.p();
        const long long hu = h_value(re.root, p);
        const long long hw = h_value(w, p);
        if (hu % hw != 0) throw std::logic_error("h_w does not divide h_u");
        const long long t = hu / hw;
        long long q = e % t == 0 ? e / t : 0;
        bool closed = false;
        if (q > 0) {
            while (q % p == 0) q /= p;
            closed = q == 1;
        }
        return {closed, "Prop 4.6",
                "e = " + std::to_string(e) + (closed ? " = " : " != ") + "(h_u/h_w) p^s with h_u = " +
                    std::to_string(hu) + ", h_w = " + std::to_string(hw)};
    }
    bool closed = cyclic_membership(e, v);
    return {closed, "Thm 3.2(iii)",
            "C_" + std::to_string(e) + (closed ? " lies in V" : " does not lie in V")};
}

/// Does v belong to the closure of <w>? Membership in <u^m> is decided on
/// roots: v must be a power of u (either sign) with exponent a multiple
/// of m.
inline bool membership_in_closure(const Word& v, const Word& w,
                                  const PseudovarietyDescriptor& variety) {
    ClosureResult c = closure_cyclic(w, variety);
    if (v.is_identity()) return true;
    if (w.is_identity()) return false;
    RootExp rv = root_exp(v);
    if (rv.root != c.root && rv.root != invert(c.root)) return false;
    return rv.exponent % c.closure_exponent == 0;
}

/// Root and exponent of w relative to the verbal subgroup K_n (words
/// whose abelianization coordinates are all divisible by p-1): the root
/// is u^{h_u} and the exponent drops to e / h_u.
struct KRootExp {
    Word root_in_K;
    long long exponent_in_K = 1;
};

inline KRootExp root_exp_in_K(const Word& w, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("root_exp_in_K requires a prime");
    if (w.is_identity()) throw std::domain_error("no root of the empty word");
    AbelianVector ab = abelianization(w);
    for (std::size_t i = 0; i < ab.size(); ++i)
        if (ab[i] % (p - 1) != 0)
            throw std::domain_error("not in K_n: coordinate " + std::to_string(i + 1) +
                                    " (value " + std::to_string(ab[i]) +
                                    ") is not divisible by p-1 = " + std::to_string(p - 1));
    RootExp re = root_exp(w);
    const long long hu = h_value(re.root, p);
    if (re.exponent % hu != 0) throw std::logic_error("h_u does not divide e");
    return KRootExp{power(re.root, hu), re.exponent / hu};
}

/// If some prime p outside P divides exp(w), the isolation property
/// fails: v = u^{e/p} has v^p in <w> but v outside <w>. Returns that
/// witness for the smallest such p, or nothing (and then <w> is
/// G_P-closed).
inline std::optional<Word> isolation_witness(const Word& w, const PrimeSet& P) {
    if (w.is_identity()) throw std::domain_error("isolation_witness requires a nonempty word");
    RootExp re = root_exp(w);
    for (const auto& [p, mult] : factorize(re.exponent)) {
        if (!P.contains(p)) return power(re.root, re.exponent / p);
    }
    return std::nullopt;
}

/// Integer-level consistency of the coset decomposition behind the V_p
/// closure: inside <u> the union of the cosets h_u nu_p(e) Z + i e for
/// 0 <= i < h_w must equal d_p Z. Checked by enumerating both sets over
/// the window [-N, N] with N = 4 e h_u nu_p(e); any discrepancy between
/// the two periodic sets shows up within one period.
inline bool vtog_consistency_check(const Word& w, long long p) {
    if (!is_prime(p)) throw std::invalid_argument("vtog_consistency_check requires a prime");
    if (w.is_identity()) throw std::domain_error("vtog_consistency_check requires a nonempty word");
    RootExp re = root_exp(w);
    const long long e = re.exponent;
    const long long hu = h_value(re.root, p);
    const long long hw = h_value(w, p);
    const long long np = nu_p(e, p);
    const long long step = hu * np;
    const long long dp = std::gcd(e, hu) * np;
    const long long window = 4 * e * step;

    std::set<long long> lhs;
    for (long long i = 0; i < hw; ++i) {
        long long offset = i * e;
        long long t0 = -(window + offset) / step - 2;
        for (long long t = t0; step * t + offset <= window; ++t) {
            long long val = step * t + offset;
            if (val >= -window) lhs.insert(val);
        }
    }
    std::set<long long> rhs;
    for (long long t = -window / dp - 2; dp * t <= window; ++t) {
        long long val = dp * t;
        if (val >= -window) rhs.insert(val);
    }
    return lhs == rhs;
}

}  // namespace provclose

#endif
