// sumfree: exact computations around sum-free subsets of finite abelian
// groups.  Every subcommand prints one JSON report:
//   {version, group, op, params, result, elapsed_ms}
// Exit codes: 0 ok, 2 guard refusal, 1 failed assertion or bad input.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumfree/acceptance.hpp"
#include "sumfree/classify.hpp"
#include "sumfree/counting.hpp"
#include "sumfree/io.hpp"
#include "sumfree/orbits.hpp"
#include "sumfree/sumfree_ops.hpp"

using nlohmann::json;
using namespace sumfree;

namespace {

struct Options {
    std::string group;
    std::string set_file;
    std::string x_spec;
    std::string epsilon;
    std::string out_path;
    std::string format = "json";
    std::string mode = "all";
    std::string which = "smallg";
    std::string suite = "fast";
    long long t = 2;
    long long m = 7;
    long long r = 0;
    long long k1 = 2, k2 = 3, n = 7;
    double c_const = 10.0;
    long long guard_order = -1;
    int workers = 1;
    bool stable_output = false;
    bool relaxed = false;
    long long max_witnesses = 64;
};

json subset_list_json(const std::vector<GroupSubset>& sets, long long cap) {
    json arr = json::array();
    for (const auto& s : sets) {
        if ((long long)arr.size() >= cap) break;
        arr.push_back(subset_to_json(s));
    }
    return arr;
}

json presentation_json(const Presentation& p, const FinAbGroup& g) {
    json out;
    out["kind"] = family_kind_name(p.kind);
    out["H"] = subset_to_json(p.split.H.set);
    out["H_invariant_factors"] = p.split.H.invariant_factors;
    out["f"] = {{"gen", element_to_json(g, p.split.gen)}};
    out["K"] = p.kind == FamilyKind::Zero ? json(nullptr) : subset_to_json(p.K.set);
    return out;
}

GroupSubset load_set(const FinAbGroup& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open set file: " + path);
    json j;
    in >> j;
    return subset_from_json(g, j);
}

int run_command(const std::string& op, const Options& opt) {
    Guards guards;
    if (opt.guard_order > 0) guards.max_structural_order = opt.guard_order;
    guards.workers = std::max(1, opt.workers);

    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["version"] = 1;
    report["op"] = op;
    json params;
    json result;
    std::string csv;

    if (op == "verify") {
        params["suite"] = opt.suite;
        std::ostringstream lines;
        int failures = run_acceptance(opt.suite, lines);
        std::cout << lines.str();
        return failures == 0 ? 0 : 1;
    }

    FinAbGroup g = parse_group_literal(opt.group.empty() ? "7" : opt.group);
    report["group"] = group_literal(g);

    if (op == "cmax") {
        result = c_of_G(g);
    } else if (op == "census") {
        params["mode"] = opt.mode;
        if (opt.mode == "all") {
            result["count"] = count_all_sumfree(g, guards);
            result["c"] = c_of_G(g);
        } else if (opt.mode == "extremal") {
            auto ext = enumerate_extremal(g, guards);
            result["count"] = ext.size();
            result["c"] = c_of_G(g);
            result["witnesses"] = subset_list_json(ext, opt.max_witnesses);
        } else if (opt.mode == "max") {
            MaxSumFree mf = max_sumfree_bruteforce(g, guards);
            result["count"] = mf.size;
            result["c"] = c_of_G(g);
            result["witnesses"] = json::array({subset_to_json(mf.witness)});
        } else {
            throw std::invalid_argument("unknown census mode: " + opt.mode);
        }
    } else if (op == "extremal") {
        auto ext = enumerate_extremal(g, guards);
        result["count"] = ext.size();
        result["c"] = c_of_G(g);
        result["witnesses"] = subset_list_json(ext, opt.max_witnesses);
    } else if (op == "classify") {
        GroupSubset a = load_set(g, opt.set_file);
        params["set"] = subset_to_json(a);
        if (g.rank() == 1) {
            auto cc = classify_cyclic_extremal(a);
            if (cc) {
                result["d"] = cc->unit;
                result["family"] = cc->family;
            } else {
                throw TheoremViolation("extremal set is not a dilate of any family: " +
                                       subset_to_json(a).dump());
            }
        }
        auto pr = presentation_of(a, guards);
        if (pr.status == PresentationStatus::Violation)
            throw TheoremViolation("extremal set without presentation: " +
                                   subset_to_json(a).dump());
        result["status"] = pr.status == PresentationStatus::Found ? "found" : "not-extremal";
        if (pr.pres) result["presentation"] = presentation_json(*pr.pres, g);
    } else if (op == "recover") {
        GroupSubset a = load_set(g, opt.set_file);
        params["set"] = subset_to_json(a);
        RecoveryParams rp;
        rp.strict_mode = !opt.relaxed;
        if (!opt.epsilon.empty()) {
            rp.epsilon = parse_rational(opt.epsilon);
            rp.epsilon_given = true;
            params["epsilon"] = opt.epsilon;
        }
        auto rec = recover_structure(a, rp, guards);
        result = presentation_json(rec.pres, g);
        result["excess"] = rec.excess;
        result["epsilon"] = rec.epsilon.str();
        result["heuristic"] = rec.heuristic;
        result["L"] = subset_to_json(rec.family);
    } else if (op == "orbits") {
        params["target"] = opt.mode == "subgroups" ? "subgroups" : "extremal";
        OrbitReport rep = opt.mode == "subgroups" ? orbit_count_subgroups(g, guards)
                                                  : orbit_count_extremal(g, guards);
        result["orbit_count"] = rep.orbit_count;
        result["sizes"] = rep.orbit_sizes;
        result["acted_size"] = rep.acted_size;
        result["provenance"] = rep.provenance;
        result["representatives"] = subset_list_json(rep.representatives, opt.max_witnesses);
    } else if (op == "orbi") {
        params["m"] = opt.m;
        params["r"] = opt.r;
        result["orbits"] = orbi_formula(opt.m, opt.r);
    } else if (op == "subgroups") {
        auto subs = enumerate_subgroups(g, guards);
        result["count"] = subs.size();
        json arr = json::array();
        for (const auto& s : subs) {
            json one;
            one["order"] = s.order();
            one["invariant_factors"] = s.invariant_factors;
            one["elements"] = subset_to_json(s.set);
            arr.push_back(one);
        }
        result["subgroups"] = arr;
    } else if (op == "doubling") {
        params["t"] = opt.t;
        DoublingTable tab = doubling_table(g, opt.t, guards);
        json arr = json::array();
        csv = "t,k1,k2,count\n";
        for (auto& [key, cnt] : tab.entries) {
            arr.push_back({key.first, key.second, cnt});
            csv += std::to_string(opt.t) + "," + std::to_string(key.first) + "," +
                   std::to_string(key.second) + "," + std::to_string(cnt) + "\n";
        }
        result["entries"] = arr;
        result["total"] = tab.total();
        result["a"] = a_of_H(g, opt.t, guards).str();
    } else if (op == "aofh") {
        params["t"] = opt.t;
        Dyadic a = a_of_H(g, opt.t, guards);
        Dyadic a2 = a_of_H_direct(g, opt.t, guards);
        if (a != a2) throw TheoremViolation("a(t,H) table route != direct route");
        result["num"] = a.num();
        result["exp2"] = a.exp2();
        result["value"] = a.str();
        result["decimal"] = a.to_double();
    } else if (op == "windowcount") {
        auto splits = enumerate_splittings(g, guards);
        if (splits.empty()) throw std::invalid_argument("no splitting");
        WindowCountReport rep = window_count_identity(g, splits.front(), guards);
        result["dfs"] = rep.dfs_count;
        result["layered"] = rep.layered_count;
        result["closed_form"] = rep.closed_form;
        result["paper_literal"] = rep.paper_literal;
        result["a_H"] = rep.a_H.str();
        result["match"] = rep.matches;
        if (!rep.matches) throw TheoremViolation("window count identity failed");
    } else if (op == "windowcensus") {
        WindowCensusReport rep = window_census(g, guards);
        result["total"] = rep.total;
        result["covered"] = rep.covered;
        result["exceptions"] = rep.exceptions;
        result["exception_fraction"] = rep.exception_fraction.str();
    } else if (op == "paircover") {
        GroupSubset l = load_set(g, opt.set_file);
        Elem x = element_from_json(g, json::parse(opt.x_spec));
        params["set"] = subset_to_json(l);
        params["x"] = element_to_json(g, x);
        auto pairs = disjoint_pair_cover(x, l);
        json arr = json::array();
        for (auto [a, b] : pairs)
            arr.push_back({element_to_json(g, a), element_to_json(g, b)});
        result["pairs"] = arr;
        result["count"] = pairs.size();
    } else if (op == "bounds") {
        params["which"] = opt.which;
        if (opt.which == "smallg") {
            BoundValue b = smallG_bound(opt.k1, opt.k2, opt.n, opt.c_const);
            result["log2"] = b.log2_value;
            result["value"] = b.value;
        } else if (opt.which == "coun") {
            BoundValue b = coun_bound(g.order(), g.exponent(), opt.c_const);
            result["log2"] = b.log2_value;
            result["value"] = b.value;
        } else if (opt.which == "bah") {
            BoundValue b = bah_bound(g.order(), g.exponent(), opt.c_const);
            result["log2"] = b.log2_value;
            result["value"] = b.value;
        } else if (opt.which == "tfree") {
            TFreeLowerBound b = t_free_lower_bound(g, opt.t, guards);
            result["mantissa"] = b.mantissa.str();
            result["exp2"] = b.exponent;
            if (b.value) result["value"] = *b.value;
        } else {
            throw std::invalid_argument("unknown bound kind: " + opt.which);
        }
    } else {
        throw std::invalid_argument("unknown operation: " + op);
    }

    auto t1 = std::chrono::steady_clock::now();
    report["params"] = params;
    report["result"] = result;
    report["elapsed_ms"] =
        opt.stable_output
            ? 0
            : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::string text = opt.format == "csv" && !csv.empty() ? csv : report.dump(2) + "\n";
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        f << text;
    }
    std::cout << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sum-free set computations in finite abelian groups"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", opt.group, "group literal, e.g. 7,7");
        sub->add_option("--guard-order", opt.guard_order, "override the structural size guard");
        sub->add_option("--workers", opt.workers, "worker threads for censuses");
        sub->add_option("--out", opt.out_path, "also write the report to this file");
        sub->add_option("--format", opt.format, "json|csv");
        sub->add_flag("--stable-output", opt.stable_output, "zero the elapsed_ms field");
        sub->add_option("--max-witnesses", opt.max_witnesses, "cap emitted witness lists");
        return sub;
    };

    add_common(app.add_subcommand("cmax", "largest sum-free cardinality c(G)"));
    auto* census = add_common(app.add_subcommand("census", "count sum-free sets"));
    census->add_option("--mode", opt.mode, "all|extremal|max");
    add_common(app.add_subcommand("extremal", "enumerate extremal sum-free sets"));
    auto* classify = add_common(app.add_subcommand("classify", "presentation of an extremal set"));
    classify->add_option("--set", opt.set_file, "JSON file with the set")->required();
    auto* recover = add_common(app.add_subcommand("recover", "near-extremal structure recovery"));
    recover->add_option("--set", opt.set_file, "JSON file with the set")->required();
    recover->add_option("--epsilon", opt.epsilon, "claimed deficiency, e.g. 0 or 1/49");
    recover->add_flag("--relaxed", opt.relaxed, "allow epsilon beyond the strict threshold");
    auto* orbits = add_common(app.add_subcommand("orbits", "Aut-orbit report"));
    orbits->add_option("--mode", opt.mode, "extremal|subgroups");
    auto* orbi = app.add_subcommand("orbi", "closed orbit-count formula for (Z/mZ)^{r+1}");
    orbi->add_option("--m", opt.m)->required();
    orbi->add_option("--r", opt.r)->required();
    add_common(app.add_subcommand("subgroups", "subgroup lattice"));
    auto* doubling = add_common(app.add_subcommand("doubling", "doubling table S(t,k1,k2,H)"));
    doubling->add_option("--t", opt.t, "number of summands");
    auto* aofh = add_common(app.add_subcommand("aofh", "a(t,H) exact dyadic"));
    aofh->add_option("--t", opt.t, "number of summands");
    add_common(app.add_subcommand("windowcount", "sum-free count in (H,[2k,4k]) window"));
    add_common(app.add_subcommand("windowcensus", "how many sum-free sets live in windows"));
    auto* paircover = add_common(app.add_subcommand("paircover", "maximum disjoint pair cover R(x,L)"));
    paircover->add_option("--set", opt.set_file)->required();
    paircover->add_option("--x", opt.x_spec, "element, e.g. [0,3]")->required();
    auto* bounds = add_common(app.add_subcommand("bounds", "bound calculators"));
    bounds->add_option("--which", opt.which, "smallg|coun|bah|tfree");
    bounds->add_option("--k1", opt.k1);
    bounds->add_option("--k2", opt.k2);
    bounds->add_option("--n", opt.n);
    bounds->add_option("--c", opt.c_const, "user-supplied constant");
    bounds->add_option("--t", opt.t);
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--suite", opt.suite, "fast|full");

    CLI11_PARSE(app, argc, argv);

    try {
        return run_command(app.get_subcommands().front()->get_name(), opt);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return 2;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
