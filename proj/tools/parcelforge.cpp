// Command-line front end: exact flow counts, polynomials, parcel censuses,
// and the identity verifier.  JSON goes to stdout, a short human summary to
// stderr.  Exit codes: 0 ok / identity holds, 1 identity violated, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <parcelforge/poly_engine.hpp>
#include <parcelforge/verify.hpp>

using json = nlohmann::json;
using namespace parcelforge;

namespace {

Instance load_instance(const std::string& ref) {
    const std::string builtin_prefix = "builtin:";
    if (ref.rfind(builtin_prefix, 0) == 0) return corpus_instance(ref.substr(builtin_prefix.size()));
    std::ifstream in(ref);
    if (!in) throw ParseError("cannot open instance file \"" + ref + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), ref);
}

json bipoly_json(const BiPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({{"l", key.first}, {"x", key.second}, {"c", c.get_str()}});
    return {{"terms", terms}};
}

json unipoly_json(const ZPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"x", e}, {"c", c.get_str()}});
    return {{"terms", terms}};
}

json census_json(const Census& c) {
    json bins = json::object();
    for (const auto& [k, v] : c.bins) bins[std::to_string(k)] = v.get_str();
    return {{"family", c.family},
            {"sigma", c.sigma},
            {"bins", bins},
            {"tier", c.tier},
            {"universe", c.universe.get_str()}};
}

json report_json(const IdentityReport& r) {
    return {{"theorem", r.theorem}, {"instance", r.instance}, {"params", r.params},
            {"lhs", r.lhs},         {"rhs", r.rhs},           {"equal", r.equal},
            {"applicable", r.applicable},                     {"exceptional", r.exceptional},
            {"tier", r.tier},       {"seconds", r.seconds},   {"note", r.note}};
}

SetOp parse_setop(const std::string& s) {
    if (s == "union") return SetOp::Union;
    if (s == "intersect") return SetOp::Intersect;
    if (s == "symdiff") return SetOp::SymDiff;
    if (s == "stroke") return SetOp::Stroke;
    if (s == "implies") return SetOp::Implies;
    throw ParseError("unknown set operation \"" + s + "\"");
}

int emit_summary(const VerifySummary& s) {
    json out = {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
    json reports = json::array();
    for (const IdentityReport& r : s.reports) reports.push_back(report_json(r));
    out["reports"] = reports;
    std::cout << out.dump(2) << "\n";
    std::cerr << "passed " << s.passed << ", failed " << s.failed << ", skipped "
              << s.skipped << "\n";
    for (const IdentityReport& r : s.reports)
        if (r.applicable && !r.equal)
            std::cerr << "FAIL " << r.theorem << " on " << r.instance << " [" << r.params
                      << "]: " << r.lhs << " != " << r.rhs << "\n";
    return s.failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact flow censuses and parcel identity verification"};
    app.require_subcommand(1);

    std::string instance_ref, group_ref = "cyclic:2", theorem, family = "hamming";
    std::string setop_name_arg = "union", corpus_ref = "builtin";
    long sigma = 2, rho = 1, alpha = 1, beta = 1;
    int m = 2, tier = 0, charpoly_at = 0;
    (void)charpoly_at;

    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--instance", instance_ref, "builtin:<name> or JSON file path")
            ->required();
    };

    CLI::App* sc_rank = app.add_subcommand("rankpoly", "rank generating and Tutte polynomials");
    add_instance(sc_rank);

    CLI::App* sc_char = app.add_subcommand("charpoly", "characteristic polynomial");
    add_instance(sc_char);

    CLI::App* sc_flows = app.add_subcommand("flows", "flow count and kernel census");
    add_instance(sc_flows);
    sc_flows->add_option("--group", group_ref, "cyclic:q | gfp:p:d | product:<base>:m");

    CLI::App* sc_census = app.add_subcommand("census", "parcel census");
    add_instance(sc_census);
    sc_census->add_option("--group", group_ref, "coefficient group");
    sc_census->add_option("--family", family,
                          "hamming | hamming-nonzero | support | setop | inner | tuple | "
                          "prop25 | flow-support");
    sc_census->add_option("--sigma", sigma, "congruence modulus (0 = exact statistic)");
    sc_census->add_option("--alpha", alpha, "support weight for f");
    sc_census->add_option("--beta", beta, "support weight for g");
    sc_census->add_option("--m", m, "tuple arity");
    sc_census->add_option("--op", setop_name_arg, "union|intersect|symdiff|stroke|implies");
    sc_census->add_option("--tier", tier, "force tier 1 or 2");

    CLI::App* sc_enum = app.add_subcommand("enumerator", "support-difference enumerator");
    add_instance(sc_enum);
    sc_enum->add_option("--group", group_ref, "coefficient group");

    CLI::App* sc_verify = app.add_subcommand("verify", "check one identity");
    add_instance(sc_verify);
    sc_verify->add_option("--theorem", theorem, "identity id, e.g. thm3.1")->required();
    sc_verify->add_option("--group", group_ref, "coefficient group (sets q)");
    sc_verify->add_option("--sigma", sigma, "congruence modulus");
    sc_verify->add_option("--rho", rho, "root selector, coprime to sigma");
    sc_verify->add_option("--alpha", alpha, "support weight for f");
    sc_verify->add_option("--beta", beta, "support weight for g");
    sc_verify->add_option("--m", m, "tuple arity");
    sc_verify->add_option("--op", setop_name_arg, "set operation");
    sc_verify->add_option("--tier", tier, "force census tier");

    CLI::App* sc_all = app.add_subcommand("verify-all", "sweep the registry over a corpus");
    sc_all->add_option("--corpus", corpus_ref, "only \"builtin\" is supported");

    app.add_subcommand("corpus", "list built-in instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sc_rank->parsed()) {
            Instance inst = load_instance(instance_ref);
            Matroid mat(inst);
            json out = {{"instance", inst.name},
                        {"ground", inst.ground},
                        {"rank", inst.rank_full},
                        {"rankpoly", bipoly_json(rank_gen_poly(mat))},
                        {"tutte", bipoly_json(tutte(mat))}};
            std::cout << out.dump(2) << "\n";
            std::cerr << inst.name << ": rank " << inst.rank_full << " on " << inst.ground
                      << " elements\n";
        } else if (sc_char->parsed()) {
            Instance inst = load_instance(instance_ref);
            Matroid mat(inst);
            UniPoly chi = char_poly(mat);
            json out = {{"instance", inst.name}, {"charpoly", unipoly_json(chi)}};
            std::cout << out.dump(2) << "\n";
            std::cerr << inst.name << ": " << chi.to_string("q") << "\n";
        } else if (sc_flows->parsed()) {
            Instance inst = load_instance(instance_ref);
            GroupSpec a = GroupSpec::parse(group_ref);
            if (!a.compatible_with(inst)) throw ParseError("group incompatible with instance");
            std::map<int, Int> kc = kernel_census(inst, a);
            Int total = 0;
            json bins = json::object();
            for (const auto& [k, v] : kc) {
                bins[std::to_string(k)] = v.get_str();
                total += v;
            }
            json out = {{"instance", inst.name},
                        {"group", a.name()},
                        {"count", total.get_str()},
                        {"kernel_census", bins}};
            std::cout << out.dump(2) << "\n";
            std::cerr << inst.name << ": " << total.get_str() << " flows over " << a.name()
                      << "\n";
        } else if (sc_census->parsed()) {
            Instance inst = load_instance(instance_ref);
            GroupSpec a = GroupSpec::parse(group_ref);
            if (!a.compatible_with(inst)) throw ParseError("group incompatible with instance");
            Census c;
            if (family == "hamming")
                c = hamming_census(inst, a, sigma, false, tier);
            else if (family == "hamming-nonzero")
                c = hamming_census(inst, a, sigma, true, tier);
            else if (family == "support")
                c = support_census(inst, a, alpha, beta, sigma, tier);
            else if (family == "setop")
                c = setop_census(inst, a, parse_setop(setop_name_arg), sigma, tier);
            else if (family == "inner")
                c = inner_product_census(inst, static_cast<int>(a.order()), tier);
            else if (family == "tuple")
                c = tuple_census(inst, a, m, sigma, tier);
            else if (family == "prop25")
                c = prop25_census(inst, static_cast<long>(a.order()), tier);
            else if (family == "flow-support")
                c = flow_support_census(inst, a, sigma);
            else
                throw ParseError("unknown census family \"" + family + "\"");
            std::cout << census_json(c).dump(2) << "\n";
            std::cerr << inst.name << ": " << c.family << " census, " << c.bins.size()
                      << " bins, tier " << c.tier << "\n";
        } else if (sc_enum->parsed()) {
            Instance inst = load_instance(instance_ref);
            GroupSpec a = GroupSpec::parse(group_ref);
            if (!a.compatible_with(inst)) throw ParseError("group incompatible with instance");
            LaurentPoly e = support_diff_enumerator(inst, a);
            json out = {{"instance", inst.name},
                        {"group", a.name()},
                        {"enumerator", unipoly_json(e)}};
            std::cout << out.dump(2) << "\n";
            std::cerr << inst.name << ": " << e.to_string("X") << "\n";
        } else if (sc_verify->parsed()) {
            Instance inst = load_instance(instance_ref);
            VerifyParams p;
            p.sigma = sigma;
            p.q = static_cast<long>(GroupSpec::parse(group_ref).order());
            p.rho = rho;
            p.alpha = alpha;
            p.beta = beta;
            p.m = m;
            p.op = parse_setop(setop_name_arg);
            p.tier = tier;
            VerifySummary s;
            s.absorb(run_check(theorem, inst, p));
            return emit_summary(s);
        } else if (sc_all->parsed()) {
            if (corpus_ref != "builtin") throw ParseError("only --corpus builtin is supported");
            return emit_summary(verify_corpus_all());
        } else {  // corpus
            json out = json::array();
            for (const Instance& inst : corpus())
                out.push_back({{"name", inst.name},
                               {"kind", inst.is_graph() ? "graph"
                                        : inst.is_gfp() ? "gfp"
                                                        : "tu"},
                               {"ground", inst.ground},
                               {"rank", inst.rank_full}});
            std::cout << out.dump(2) << "\n";
            std::cerr << out.size() << " built-in instances\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
