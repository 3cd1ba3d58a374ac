// oracle.hpp -- brute-force verification backend. A catalog of small
// finite groups is scanned with exhaustive homomorphism enumeration:
// necessary_condition_check confirms that a claimed closure element is
// never separated from <w> by an eligible quotient, and
// find_separating_quotient hunts for a quotient certifying that a
// candidate lies outside the closure. A finite catalog can only confirm
// membership claims, never refute them, so separation searches can end
// "inconclusive".

#ifndef PROVCLOSE_ORACLE_HPP
#define PROVCLOSE_ORACLE_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "finite_group.hpp"
#include "variety.hpp"
#include "word.hpp"

namespace provclose {

struct Catalog {
    std::vector<FiniteGroup> groups;
};

/// C_2..C_16, S_3, D_4, Q_8, A_4 and UT(3, Z/m) for m in {2,3,4,8,9}.
/// Cyclic groups separate everything visible in the abelianization;
/// the unitriangular p-groups reach one level deeper and separate
/// commutator-rooted pairs.
inline Catalog default_catalog() {
    Catalog c;
    for (long long k = 2; k <= 16; ++k) c.groups.push_back(build_cyclic(k));
    c.groups.push_back(build_permutation_group(
        3, {parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)}, "S3"));
    c.groups.push_back(build_permutation_group(
        4, {parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)}, "D4"));
    c.groups.push_back(build_permutation_group(
        8,
        {parse_permutation("(1 2 3 4)(5 6 7 8)", 8), parse_permutation("(1 5 3 7)(2 8 4 6)", 8)},
        "Q8"));
    c.groups.push_back(build_permutation_group(
        4, {parse_permutation("(1 2 3)", 4), parse_permutation("(1 2)(3 4)", 4)}, "A4"));
    for (int m : {2, 3, 4, 8, 9}) c.groups.push_back(build_unitriangular(m));
    return c;
}

/// Catalog file format: a JSON list of
///   {"name": ..., "kind": "cyclic",        "k": 6}
///   {"name": ..., "kind": "permutation",   "degree": 3, "generators": ["(1 2)", "(1 2 3)"]}
///   {"name": ..., "kind": "unitriangular", "modulus": 4}
/// Every loaded table passes the group-law check.
inline Catalog load_catalog(std::istream& in, int element_cap = 5000) {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_array()) throw std::invalid_argument("catalog file must be a JSON list");
    Catalog c;
    for (const auto& entry : doc) {
        std::string kind = entry.at("kind").get<std::string>();
        std::string name = entry.value("name", "");
        FiniteGroup g;
        if (kind == "cyclic") {
            g = build_cyclic(entry.at("k").get<long long>());
        } else if (kind == "permutation") {
            int degree = entry.at("degree").get<int>();
            std::vector<Perm> gens;
            for (const auto& t : entry.at("generators"))
                gens.push_back(parse_permutation(t.get<std::string>(), degree));
            g = build_permutation_group(degree, gens, name, element_cap);
        } else if (kind == "unitriangular") {
            g = build_unitriangular(entry.at("modulus").get<int>());
        } else {
            throw std::invalid_argument("unknown catalog kind '" + kind + "'");
        }
        if (!name.empty()) g.name = name;
        c.groups.push_back(std::move(g));
    }
    return c;
}

inline Catalog load_catalog_file(const std::string& path, int element_cap = 5000) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file '" + path + "'");
    return load_catalog(in, element_cap);
}

struct NecessaryConditionReport {
    bool passed = true;
    bool vacuous = false;  // no eligible group in the catalog
    int eligible_groups = 0;
    std::string counterexample_group;
    std::optional<Homomorphism> counterexample;
};

/// Membership necessary condition: if candidate really lies in the
/// closure of <w>, then no homomorphism onto an eligible quotient can
/// move candidate outside the image of <w>. Scans every eligible catalog
/// group and every assignment; reports the first counterexample.
inline NecessaryConditionReport necessary_condition_check(const Word& candidate, const Word& w,
                                                          const PseudovarietyDescriptor& v,
                                                          const Catalog& catalog,
                                                          long long hom_cap = 10000000) {
    NecessaryConditionReport report;
    for (const FiniteGroup& g : catalog.groups) {
        if (!finite_group_membership(g, v)) continue;
        ++report.eligible_groups;
        if (auto wit = separating_hom_in_group(candidate, w, g, hom_cap)) {
            report.passed = false;
            report.counterexample_group = g.name;
            report.counterexample = std::move(wit);
            return report;
        }
    }
    report.vacuous = report.eligible_groups == 0;
    return report;
}

struct SeparationResult {
    enum class Status { separated, in_subgroup, inconclusive };
    Status status = Status::inconclusive;
    std::string group;
    std::optional<Homomorphism> witness;

    std::string status_text() const {
        switch (status) {
            case Status::separated: return "separated";
            case Status::in_subgroup: return "in_subgroup";
            default: return "inconclusive";
        }
    }
};

/// Scans eligible groups in catalog order and returns the first
/// separating homomorphism. A candidate already in <w> cannot be
/// separated at all; otherwise an exhausted catalog means only
/// "inconclusive" -- the closure formula, not the catalog, is the source
/// of truth.
inline SeparationResult find_separating_quotient(const Word& v, const Word& w,
                                                 const PseudovarietyDescriptor& variety,
                                                 const Catalog& catalog,
                                                 long long hom_cap = 10000000) {
    SeparationResult result;
    if (in_cyclic_subgroup(v, w)) {
        result.status = SeparationResult::Status::in_subgroup;
        return result;
    }
    for (const FiniteGroup& g : catalog.groups) {
        if (!finite_group_membership(g, variety)) continue;
        if (auto wit = separating_hom_in_group(v, w, g, hom_cap)) {
            result.status = SeparationResult::Status::separated;
            result.group = g.name;
            result.witness = std::move(wit);
            return result;
        }
    }
    return result;
}

}  // namespace provclose

#endif
