// cli.hpp -- command-line front end. Subcommands: root, closure,
// is-closed, member, separate, verify, batch. Output is human-readable
// text or one JSON document per request (one per line in batch mode).
// Exit codes: 0 success, 1 domain errors, 2 usage errors.

#ifndef PROVCLOSE_CLI_HPP
#define PROVCLOSE_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "closure.hpp"
#include "oracle.hpp"
#include "parse.hpp"

namespace provclose {
namespace cli {

using nlohmann::json;

namespace detail {

inline Catalog resolve_catalog(const std::string& flag_path) {
    if (!flag_path.empty()) return load_catalog_file(flag_path);
    if (const char* env = std::getenv("PROVCLOSE_CATALOG"); env != nullptr && *env != '\0')
        return load_catalog_file(env);
    return default_catalog();
}

inline json trace_json(const std::vector<TraceStep>& trace) {
    json arr = json::array();
    for (const TraceStep& t : trace) arr.push_back({{"rule", t.rule}, {"detail", t.detail}});
    return arr;
}

inline json hom_json(const Homomorphism& h, const FiniteGroup& g) {
    json images = json::array();
    json assignment = json::array();
    for (int i = 0; i < h.rank; ++i) {
        images.push_back(h.images[static_cast<std::size_t>(i)]);
        Word gen = Word::reduced({Letter{i + 1, +1}}, h.rank);
        assignment.push_back(to_string(gen) + " -> " +
                             g.element_names[static_cast<std::size_t>(h.images[i])]);
    }
    return {{"images", images}, {"assignment", assignment}};
}

inline const FiniteGroup& group_by_name(const Catalog& cat, const std::string& name) {
    for (const FiniteGroup& g : cat.groups)
        if (g.name == name) return g;
    throw std::logic_error("group '" + name + "' missing from catalog");
}

inline json closure_json(const ClosureResult& r) {
    return {{"input", to_string(r.input)},
            {"variety", r.variety.text()},
            {"root", to_string(r.root)},
            {"exponent", r.exponent},
            {"closure_exponent", r.closure_exponent},
            {"generator", to_string(r.generator)},
            {"closed", r.closed},
            {"trace", trace_json(r.trace)},
            {"oracle", json{{"status", "not_run"}}}};
}

inline void print_closure_text(std::ostream& out, const ClosureResult& r) {
    out << "input:            " << to_string(r.input) << "\n"
        << "variety:          " << r.variety.text() << "\n"
        << "root:             " << to_string(r.root) << "\n"
        << "exponent:         " << r.exponent << "\n"
        << "closure exponent: " << r.closure_exponent << "\n"
        << "generator:        " << to_string(r.generator) << "\n"
        << "closed:           " << (r.closed ? "yes" : "no") << "\n";
    for (const TraceStep& t : r.trace) out << "  [" << t.rule << "] " << t.detail << "\n";
}

/// verify = closure + both oracle directions: the necessary condition on
/// the computed generator, and a separation search for every excluded
/// divisor power u^j (j | e, m does not divide j).
inline json run_verify(const ClosureResult& r, const Catalog& catalog) {
    json oracle;
    NecessaryConditionReport nec =
        necessary_condition_check(r.generator, r.input, r.variety, catalog);
    json necessary{{"status", nec.passed ? (nec.vacuous ? "vacuous-pass" : "pass") : "fail"}};
    std::string status = nec.passed ? "pass" : "fail";
    if (!nec.passed) {
        necessary["group"] = nec.counterexample_group;
        oracle["witness"] =
            hom_json(*nec.counterexample, group_by_name(catalog, nec.counterexample_group));
        oracle["witness"]["group"] = nec.counterexample_group;
    }
    oracle["necessary"] = necessary;

    json separation = json::array();
    if (!r.input.is_identity()) {
        for (long long j : divisors(r.exponent)) {
            if (j % r.closure_exponent == 0) continue;
            SeparationResult sep =
                find_separating_quotient(power(r.root, j), r.input, r.variety, catalog);
            json rec{{"j", j}, {"status", sep.status_text()}};
            if (sep.status == SeparationResult::Status::separated) {
                rec["group"] = sep.group;
                rec.update(hom_json(*sep.witness, group_by_name(catalog, sep.group)));
                if (!oracle.contains("witness") && status != "fail") {
                    oracle["witness"] = rec;
                }
            } else if (status == "pass") {
                status = "inconclusive";
            }
            separation.push_back(std::move(rec));
        }
    }
    oracle["separation"] = separation;
    oracle["status"] = status;
    return oracle;
}

struct Options {
    std::string word;
    std::string candidate;
    std::string variety;
    std::string catalog_path;
    std::string batch_file;
    bool as_json = false;
};

}  // namespace detail

/// Runs one request. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pro-V closures of cyclic subgroups of free groups"};
    app.require_subcommand(1);
    detail::Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_variety, bool needs_word) {
        if (needs_variety)
            sub->add_option("-V,--variety", opt.variety,
                            "pseudovariety descriptor (G, GP:2,3, GP:!2, O, N, S, Su, Ab:6, Vp:3)")
                ->required();
        if (needs_word) sub->add_option("-w,--word", opt.word, "input word")->required();
        sub->add_flag("--json", opt.as_json, "emit JSON instead of text");
    };

    CLI::App* c_root = app.add_subcommand("root", "primitive root and exponent of a word");
    add_common(c_root, false, true);
    CLI::App* c_closure = app.add_subcommand("closure", "closure of the cyclic subgroup <w>");
    add_common(c_closure, true, true);
    CLI::App* c_isclosed = app.add_subcommand("is-closed", "decide whether <w> is closed");
    add_common(c_isclosed, true, true);
    CLI::App* c_member = app.add_subcommand("member", "is v in the closure of <w>?");
    add_common(c_member, true, true);
    c_member->add_option("-v,--candidate", opt.candidate, "candidate word")->required();
    CLI::App* c_separate =
        app.add_subcommand("separate", "search the catalog for a quotient separating v from <w>");
    add_common(c_separate, true, true);
    c_separate->add_option("-v,--candidate", opt.candidate, "candidate word")->required();
    c_separate->add_option("--catalog", opt.catalog_path, "catalog JSON file");
    CLI::App* c_verify =
        app.add_subcommand("verify", "closure plus both brute-force oracle directions");
    add_common(c_verify, true, true);
    c_verify->add_option("--catalog", opt.catalog_path, "catalog JSON file");
    CLI::App* c_batch = app.add_subcommand("batch", "one closure per line of a word file");
    c_batch->add_option("-V,--variety", opt.variety, "pseudovariety descriptor")->required();
    c_batch->add_option("file", opt.batch_file, "newline-delimited word file")->required();
    c_batch->add_flag("--json", opt.as_json, "emit JSON instead of text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    // usage phase: word and descriptor text must parse
    Word w, candidate;
    PseudovarietyDescriptor variety = PseudovarietyDescriptor::all_finite();
    try {
        if (!c_batch->parsed()) w = parse_word(opt.word);
        if (!opt.candidate.empty() || c_member->parsed() || c_separate->parsed())
            candidate = parse_word(opt.candidate);
        if (!c_root->parsed()) variety = PseudovarietyDescriptor::parse(opt.variety);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    // execution phase: domain errors exit 1
    try {
        if (c_root->parsed()) {
            RootExp re = root_exp(w);
            if (opt.as_json)
                out << json{{"input", to_string(w)},
                            {"rank", w.rank()},
                            {"root", to_string(re.root)},
                            {"exponent", re.exponent}}
                           .dump()
                    << "\n";
            else
                out << "root:     " << to_string(re.root) << "\nexponent: " << re.exponent << "\n";
            return 0;
        }

        if (c_closure->parsed()) {
            ClosureResult r = closure_cyclic(w, variety);
            if (opt.as_json)
                out << detail::closure_json(r).dump() << "\n";
            else
                detail::print_closure_text(out, r);
            return 0;
        }

        if (c_isclosed->parsed()) {
            ClosedDecision d = is_closed_cyclic(w, variety);
            json rec{{"input", to_string(w)},
                     {"variety", variety.text()},
                     {"closed", d.closed},
                     {"reason", d.rule},
                     {"detail", d.detail}};
            if (!w.is_identity()) {
                RootExp re = root_exp(w);
                rec["root"] = to_string(re.root);
                rec["exponent"] = re.exponent;
            }
            if (opt.as_json)
                out << rec.dump() << "\n";
            else
                out << (d.closed ? "closed" : "not closed") << "  [" << d.rule << "] " << d.detail
                    << "\n";
            return 0;
        }

        if (c_member->parsed()) {
            bool member = membership_in_closure(candidate, w, variety);
            if (opt.as_json)
                out << json{{"candidate", to_string(candidate)},
                            {"input", to_string(w)},
                            {"variety", variety.text()},
                            {"member", member}}
                           .dump()
                    << "\n";
            else
                out << (member ? "member" : "not a member") << "\n";
            return 0;
        }

        if (c_separate->parsed()) {
            Catalog catalog = detail::resolve_catalog(opt.catalog_path);
            SeparationResult sep = find_separating_quotient(candidate, w, variety, catalog);
            json rec{{"candidate", to_string(candidate)},
                     {"input", to_string(w)},
                     {"variety", variety.text()},
                     {"status", sep.status_text()}};
            ClosureResult r = closure_cyclic(w, variety);
            rec["root"] = to_string(r.root);
            rec["exponent"] = r.exponent;
            rec["closure_exponent"] = r.closure_exponent;
            rec["closed"] = r.closed;
            if (sep.status == SeparationResult::Status::separated) {
                rec["witness"] = detail::hom_json(*sep.witness, detail::group_by_name(catalog, sep.group));
                rec["witness"]["group"] = sep.group;
            }
            if (opt.as_json) {
                out << rec.dump() << "\n";
            } else {
                out << sep.status_text();
                if (sep.status == SeparationResult::Status::separated) {
                    out << " by " << sep.group << ": ";
                    for (const auto& a : rec["witness"]["assignment"])
                        out << a.get<std::string>() << "  ";
                }
                out << "\n";
            }
            return 0;
        }

        if (c_verify->parsed()) {
            Catalog catalog = detail::resolve_catalog(opt.catalog_path);
            ClosureResult r = closure_cyclic(w, variety);
            json rec = detail::closure_json(r);
            rec["oracle"] = detail::run_verify(r, catalog);
            if (opt.as_json) {
                out << rec.dump() << "\n";
            } else {
                detail::print_closure_text(out, r);
                out << "oracle: " << rec["oracle"]["status"].get<std::string>() << "\n"
                    << "  necessary condition: "
                    << rec["oracle"]["necessary"]["status"].get<std::string>() << "\n";
                for (const auto& s : rec["oracle"]["separation"])
                    out << "  separate u^" << s["j"] << ": " << s["status"].get<std::string>()
                        << (s.contains("group") ? " by " + s["group"].get<std::string>() : "")
                        << "\n";
            }
            return 0;
        }

        if (c_batch->parsed()) {
            std::ifstream in(opt.batch_file);
            if (!in) throw std::invalid_argument("cannot open word file '" + opt.batch_file + "'");
            std::string line;
            long long lineno = 0;
            bool all_ok = true;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                try {
                    ClosureResult r = closure_cyclic(parse_word(line), variety);
                    if (opt.as_json) {
                        json rec = detail::closure_json(r);
                        rec["line"] = lineno;
                        out << rec.dump() << "\n";
                    } else {
                        out << lineno << ": Cl(" << to_string(r.input) << ") = <"
                            << to_string(r.generator) << ">"
                            << (r.closed ? " (closed)" : "") << "\n";
                    }
                } catch (const std::exception& e) {
                    all_ok = false;
                    if (opt.as_json)
                        out << json{{"line", lineno}, {"input", line}, {"error", e.what()}}.dump()
                            << "\n";
                    else
                        out << lineno << ": error: " << e.what() << "\n";
                }
            }
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace cli
}  // namespace provclose

#endif
