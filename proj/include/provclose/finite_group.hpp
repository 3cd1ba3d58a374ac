// finite_group.hpp -- small finite groups with materialized multiplication
// tables: cyclic, permutation and unitriangular builders, structural flags
// (Sylow normality, derived series), homomorphism enumeration from free
// groups, and separating-homomorphism search inside one group.

#ifndef PROVCLOSE_FINITE_GROUP_HPP
#define PROVCLOSE_FINITE_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arith.hpp"
#include "word.hpp"

namespace provclose {

/// A fully enumerated finite group. Element 0 is the identity; the table
/// is row-major with table[a*order + b] = a.b. Immutable after
/// construction, so instances can be shared freely across threads.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<std::string> element_names;
    std::vector<int> generators;
    std::string provenance;

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }

    int power(int a, long long k) const {
        int base = k < 0 ? inverse[a] : a;
        unsigned long long n = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                                     : static_cast<unsigned long long>(k);
        int acc = 0;
        while (n > 0) {
            if (n & 1ull) acc = mul(acc, base);
            n >>= 1;
            if (n) base = mul(base, base);
        }
        return acc;
    }

    long long element_order(int a) const {
        long long k = 1;
        int x = a;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }
};

/// Group-law check: latin square, identity, inverses, associativity.
/// Associativity is exhaustive up to order 64 and sampled (1e5 fixed-seed
/// triples) above.
inline void validate_group(const FiniteGroup& g) {
    const int n = g.order;
    if (n < 1 || static_cast<int>(g.table.size()) != n * n ||
        static_cast<int>(g.inverse.size()) != n)
        throw std::invalid_argument(g.name + ": malformed group data");
    for (int a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw std::invalid_argument(g.name + ": element 0 is not an identity");
        if (g.mul(a, g.inverse[a]) != 0 || g.mul(g.inverse[a], a) != 0)
            throw std::invalid_argument(g.name + ": bad inverse table");
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            int r = g.mul(a, b), c = g.mul(b, a);
            if (r < 0 || r >= n || c < 0 || c >= n || seen_row[r] || seen_col[c])
                throw std::invalid_argument(g.name + ": table is not a latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }
    auto check = [&](int a, int b, int c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw std::invalid_argument(g.name + ": associativity fails");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 100000; ++i) check(pick(rng), pick(rng), pick(rng));
    }
}

inline FiniteGroup build_cyclic(long long k) {
    if (k < 1) throw std::invalid_argument("cyclic order must be >= 1");
    if (k > 5000) throw std::invalid_argument("cyclic order exceeds the element cap");
    FiniteGroup g;
    g.name = "C" + std::to_string(k);
    g.provenance = "cyclic " + std::to_string(k);
    g.order = static_cast<int>(k);
    g.table.resize(k * k);
    g.inverse.resize(k);
    g.element_names.resize(k);
    for (long long a = 0; a < k; ++a) {
        g.inverse[a] = static_cast<int>((k - a) % k);
        g.element_names[a] = a == 0 ? "1" : a == 1 ? "x" : "x^" + std::to_string(a);
        for (long long b = 0; b < k; ++b)
            g.table[a * k + b] = static_cast<int>((a + b) % k);
    }
    g.generators = {k > 1 ? 1 : 0};
    validate_group(g);
    return g;
}

// ---- permutations ------------------------------------------------------

/// perm[i] = image of point i (0-based).
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

/// Cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "(1,2,3)".
/// Cycles are composed left to right as functions (leftmost applied last).
inline Perm parse_permutation(const std::string& text, int degree) {
    Perm acc = perm_identity(degree);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("expected '(' in permutation '" + text + "'");
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ')') { ++i; break; }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("malformed permutation '" + text + "'");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v < 1 || v > degree)
                throw std::invalid_argument("point " + std::to_string(v) +
                                            " out of range in permutation '" + text + "'");
            cycle.push_back(v - 1);
        }
        std::set<int> uniq(cycle.begin(), cycle.end());
        if (uniq.size() != cycle.size())
            throw std::invalid_argument("repeated point in cycle of '" + text + "'");
        Perm c = perm_identity(degree);
        for (std::size_t j = 0; j < cycle.size(); ++j)
            c[cycle[j]] = cycle[(j + 1) % cycle.size()];
        acc = perm_compose(acc, c);
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("empty permutation '" + text + "'");
    return acc;
}

inline std::string permutation_name(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

/// Closure of the generators under composition, breadth-first from the
/// identity. Element order is discovery order, which makes results
/// deterministic for a fixed generator list.
inline FiniteGroup build_permutation_group(int degree, const std::vector<Perm>& gens,
                                           const std::string& name = "",
                                           int element_cap = 5000) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[v])
                throw std::invalid_argument("generator is not a permutation");
            seen[v] = true;
        }
    }
    std::vector<Perm> elems{perm_identity(degree)};
    std::map<Perm, int> index{{elems[0], 0}};
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        Perm cur = elems[static_cast<std::size_t>(todo.front())];
        todo.pop();
        for (const Perm& g : gens) {
            Perm prod = perm_compose(cur, g);
            auto [it, fresh] = index.emplace(std::move(prod), static_cast<int>(elems.size()));
            if (fresh) {
                if (static_cast<int>(elems.size()) >= element_cap)
                    throw std::invalid_argument("permutation closure exceeds the element cap of " +
                                                std::to_string(element_cap));
                elems.push_back(it->first);
                todo.push(it->second);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    FiniteGroup g;
    g.name = name.empty() ? "Perm" + std::to_string(degree) + "." + std::to_string(n) : name;
    g.provenance = "permutation degree " + std::to_string(degree);
    g.order = n;
    g.table.resize(static_cast<std::size_t>(n) * n);
    g.inverse.assign(n, -1);
    g.element_names.resize(n);
    for (int a = 0; a < n; ++a) {
        g.element_names[a] = permutation_name(elems[a]);
        for (int b = 0; b < n; ++b) {
            int idx = index.at(perm_compose(elems[a], elems[b]));
            g.table[static_cast<std::size_t>(a) * n + b] = idx;
            if (idx == 0) g.inverse[a] = b;
        }
    }
    for (const Perm& gen : gens) g.generators.push_back(index.at(gen));
    validate_group(g);
    return g;
}

// ---- unitriangular groups ----------------------------------------------

/// Index of the matrix with above-diagonal entries (x, y, z) -- positions
/// (1,2), (2,3) and (1,3) -- in UT(3, Z/m).
inline int unitriangular_index(int m, int x, int y, int z) {
    return (x * m + y) * m + z;
}

/// 3x3 upper unitriangular matrices over Z/m, order m^3. UT(3, Z/2) is
/// the dihedral group of order 8.
inline FiniteGroup build_unitriangular(int m) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (static_cast<long long>(m) * m * m > 5000)
        throw std::invalid_argument("unitriangular order exceeds the element cap");
    const int n = m * m * m;
    FiniteGroup g;
    g.name = "UT(3," + std::to_string(m) + ")";
    g.provenance = "unitriangular mod " + std::to_string(m);
    g.order = n;
    g.table.resize(static_cast<std::size_t>(n) * n);
    g.inverse.resize(n);
    g.element_names.resize(n);
    auto unpack = [m](int i, int& x, int& y, int& z) {
        z = i % m;
        y = (i / m) % m;
        x = i / (m * m);
    };
    for (int a = 0; a < n; ++a) {
        int x1, y1, z1;
        unpack(a, x1, y1, z1);
        g.element_names[a] = "u(" + std::to_string(x1) + "," + std::to_string(y1) + "," +
                             std::to_string(z1) + ")";
        g.inverse[a] = unitriangular_index(m, (m - x1) % m, (m - y1) % m,
                                           ((x1 * y1 - z1) % m + m) % m);
        for (int b = 0; b < n; ++b) {
            int x2, y2, z2;
            unpack(b, x2, y2, z2);
            g.table[static_cast<std::size_t>(a) * n + b] =
                unitriangular_index(m, (x1 + x2) % m, (y1 + y2) % m, (z1 + z2 + x1 * y2) % m);
        }
    }
    g.generators = {unitriangular_index(m, 1 % m, 0, 0), unitriangular_index(m, 0, 1 % m, 0)};
    validate_group(g);
    return g;
}

// ---- structure ----------------------------------------------------------

struct StructureFlags {
    bool abelian = false;
    long long exponent = 1;
    Factorization order_factors;
    std::map<long long, bool> sylow_normal;  // per prime dividing |G|
    bool nilpotent = false;
    bool solvable = false;
};

namespace detail {

/// Subgroup generated by a set of element indices (breadth-first closure).
inline std::vector<int> subgroup_closure(const FiniteGroup& g, const std::set<int>& gens) {
    std::vector<bool> in(g.order, false);
    in[0] = true;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (int s : gens) {
            int prod = g.mul(cur, s);
            if (!in[prod]) {
                in[prod] = true;
                todo.push(prod);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < g.order; ++i)
        if (in[i]) out.push_back(i);
    return out;
}

inline std::vector<int> derived_subgroup(const FiniteGroup& g, const std::vector<int>& sub) {
    std::set<int> comms;
    for (int x : sub)
        for (int y : sub)
            comms.insert(g.mul(g.mul(g.mul(x, y), g.inverse[x]), g.inverse[y]));
    return subgroup_closure(g, comms);
}

}  // namespace detail

/// The Sylow p-subgroup is normal iff the p-elements number exactly the
/// p-part of |G| (they then form the unique Sylow p-subgroup).
inline StructureFlags structure_flags(const FiniteGroup& g) {
    StructureFlags f;
    f.order_factors = factorize(g.order);

    std::vector<long long> orders(g.order);
    for (int a = 0; a < g.order; ++a) {
        orders[a] = g.element_order(a);
        f.exponent = std::lcm(f.exponent, orders[a]);
    }

    f.abelian = true;
    for (int a = 0; a < g.order && f.abelian; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) {
                f.abelian = false;
                break;
            }

    f.nilpotent = true;
    for (const auto& [p, mult] : f.order_factors) {
        long long ppart = 1;
        for (int i = 0; i < mult; ++i) ppart *= p;
        long long count = 0;
        for (int a = 0; a < g.order; ++a) {
            long long o = orders[a];
            while (o % p == 0) o /= p;
            if (o == 1) ++count;
        }
        f.sylow_normal[p] = count == ppart;
        if (!f.sylow_normal[p]) f.nilpotent = false;
    }

    std::vector<int> layer(static_cast<std::size_t>(g.order));
    std::iota(layer.begin(), layer.end(), 0);
    while (true) {
        if (layer.size() == 1) {
            f.solvable = true;
            break;
        }
        std::vector<int> next = detail::derived_subgroup(g, layer);
        if (next.size() == layer.size()) {
            f.solvable = false;
            break;
        }
        layer = std::move(next);
    }
    return f;
}

/// Elements of p-power order. When the Sylow p-subgroup is normal this is
/// exactly that subgroup.
inline std::vector<bool> p_elements(const FiniteGroup& g, long long p) {
    std::vector<bool> in(g.order, false);
    for (int a = 0; a < g.order; ++a) {
        long long o = g.element_order(a);
        while (o % p == 0) o /= p;
        in[a] = o == 1;
    }
    return in;
}

// ---- homomorphisms from free groups --------------------------------------

/// A generator-image assignment; since the source is free, any assignment
/// extends uniquely.
struct Homomorphism {
    int rank = 0;
    std::vector<int> images;

    friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
        return a.rank == b.rank && a.images == b.images;
    }
};

/// Streams all |G|^rank assignments exactly once. The first generator's
/// image varies fastest, so for rank 2 the order is (0,0), (1,0), ...,
/// (0,1), (1,1), ...
class HomEnumerator {
  public:
    HomEnumerator(int rank, const FiniteGroup& g, long long cap = 10000000)
        : group_(g), rank_(rank) {
        if (rank < 1) throw std::invalid_argument("rank must be >= 1");
        long long total = 1;
        for (int i = 0; i < rank; ++i) {
            total *= g.order;
            if (total > cap)
                throw std::invalid_argument("homomorphism count exceeds the cap of " +
                                            std::to_string(cap));
        }
        total_ = total;
    }

    long long total() const { return total_; }

    bool next(Homomorphism& out) {
        if (done_) return false;
        if (current_.empty()) {
            current_.assign(static_cast<std::size_t>(rank_), 0);
        } else {
            std::size_t i = 0;
            while (i < current_.size()) {
                if (++current_[i] < group_.order) break;
                current_[i] = 0;
                ++i;
            }
            if (i == current_.size()) {
                done_ = true;
                return false;
            }
        }
        out.rank = rank_;
        out.images = current_;
        return true;
    }

  private:
    const FiniteGroup& group_;
    int rank_;
    long long total_ = 0;
    std::vector<int> current_;
    bool done_ = false;
};

inline std::vector<Homomorphism> enumerate_homs(int rank, const FiniteGroup& g,
                                                long long cap = 10000000) {
    HomEnumerator en(rank, g, cap);
    std::vector<Homomorphism> out;
    out.reserve(static_cast<std::size_t>(en.total()));
    Homomorphism h;
    while (en.next(h)) out.push_back(h);
    return out;
}

/// Evaluates the unique extension of the assignment on w.
inline int apply_hom(const Homomorphism& h, const Word& w, const FiniteGroup& g) {
    if (w.rank() > h.rank)
        throw std::invalid_argument("word rank exceeds homomorphism rank");
    int acc = 0;
    for (const Letter& l : w.letters()) {
        int img = h.images[static_cast<std::size_t>(l.index - 1)];
        acc = g.mul(acc, l.sign > 0 ? img : g.inverse[img]);
    }
    return acc;
}

/// in_cyc[a*order + b] = 1 iff b lies in the cyclic subgroup <a>.
inline std::vector<std::uint8_t> cyclic_membership_table(const FiniteGroup& g) {
    std::vector<std::uint8_t> in_cyc(static_cast<std::size_t>(g.order) * g.order, 0);
    for (int a = 0; a < g.order; ++a) {
        int x = 0;
        do {
            in_cyc[static_cast<std::size_t>(a) * g.order + x] = 1;
            x = g.mul(x, a);
        } while (x != 0);
    }
    return in_cyc;
}

/// First assignment (in enumeration order) whose image of v escapes the
/// cyclic subgroup generated by the image of w; nothing if no such
/// assignment exists in this group.
inline std::optional<Homomorphism> separating_hom_in_group(const Word& v, const Word& w,
                                                           const FiniteGroup& g,
                                                           long long hom_cap = 10000000) {
    const int rank = std::max(std::max(v.rank(), w.rank()), 1);
    std::vector<std::uint8_t> in_cyc = cyclic_membership_table(g);
    HomEnumerator en(rank, g, hom_cap);
    Homomorphism h;
    const bool same = v == w;
    while (en.next(h)) {
        int iw = apply_hom(h, w, g);
        int iv = same ? iw : apply_hom(h, v, g);
        if (!in_cyc[static_cast<std::size_t>(iw) * g.order + iv]) return h;
    }
    return std::nullopt;
}

}  // namespace provclose

#endif
