// Command-line front door: parse a root-datum document plus one query,
// dispatch to the library, print a single JSON document on stdout.
// Exit codes: 0 success, 2 mathematical-domain error, 3 schema/usage error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "adlv/json_io.hpp"

using namespace adlv;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
    std::string datum_path;
    std::string type;
    int components = 1;
    std::string sigma;
    std::string lambda, b, mu, mup, ups, J;
    std::string lemma, profile = "quick", out;
    int bound = 3;
    long long two_rho_bound = 8;
    unsigned long long seed = 7;
};

RootDatum load_datum(const Options& opt) {
    if (!opt.datum_path.empty()) {
        std::ifstream in(opt.datum_path);
        if (!in) throw schema_error("cannot open datum file " + opt.datum_path);
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded()) throw schema_error("datum file is not valid JSON");
        return datum_from_json(j);
    }
    if (opt.type.empty())
        throw schema_error("either --datum FILE or --type TYPE is required");
    json j = {{"type", opt.type}, {"components", opt.components}};
    if (!opt.sigma.empty()) j["sigma"] = opt.sigma;
    return datum_from_json(j);
}

std::vector<int> parse_J(const std::string& s) {
    if (s.empty()) return {};
    Vec v = parse_vec(s);
    return {v.begin(), v.end()};
}

void emit(const json& doc, const std::string& out) {
    std::cout << doc.dump(2) << "\n";
    if (!out.empty()) {
        std::ofstream f(out);
        f << doc.dump(2) << "\n";
    }
}

int run(const std::string& cmd, const Options& opt) {
    json doc = {{"schema_version", kSchemaVersion}, {"command", cmd}};

    if (cmd == "verify-all") {
        auto reports = verify_all(opt.profile);
        json arr = json::array();
        bool any_fail = false;
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r));
            any_fail |= !r.failures.empty();
            std::cerr << r.lemma_id << " [" << r.datum << "]: " << r.status() << " in "
                      << r.wall_time_s << "s\n";
        }
        doc["reports"] = arr;
        doc["summary_tsv"] = reports_tsv(reports);
        emit(doc, opt.out);
        return any_fail ? 1 : 0;
    }

    if (cmd == "verify") {
        if (opt.lemma.empty()) throw schema_error("--lemma is required");
        RootDatum d = load_datum(opt);
        VerifyConfig cfg;
        cfg.bound = opt.bound;
        cfg.two_rho_bound = opt.two_rho_bound;
        cfg.seed = opt.seed;
        auto r = verify(opt.lemma, d, cfg);
        std::cerr << r.lemma_id << " [" << r.datum << "]: " << r.status() << " in "
                  << r.wall_time_s << "s\n";
        doc["report"] = report_to_json(r);
        emit(doc, opt.out);
        return r.failures.empty() ? 0 : 1;
    }

    RootDatum d = load_datum(opt);

    if (cmd == "pi0") {
        Vec lam = parse_vec(opt.lambda);
        ExtAff b = parse_aff(d, opt.b);
        doc["result"] = pi0_to_json(pi0(d, lam, b, opt.seed));
    } else if (cmd == "nonempty") {
        Vec lam = parse_vec(opt.lambda);
        ExtAff b = parse_aff(d, opt.b);
        FGAbelianGroup coinv = pi1_coinvariants(d);
        bool kappa_ok = coinv.same(lam, b.mu);
        bool newton_ok = false;
        if (kappa_ok) newton_ok = nonempty(d, lam, b);
        doc["result"] = {{"nonempty", kappa_ok && newton_ok}};
        if (!kappa_ok)
            doc["result"]["criterion"] = "kappa mismatch";
        else if (!newton_ok)
            doc["result"]["criterion"] = "newton point not below lambda";
        emit(doc, opt.out);
        return kappa_ok && newton_ok ? 0 : 2;
    } else if (cmd == "invariants") {
        ExtAff b = parse_aff(d, opt.b);
        auto inv = invariants_of(d, b);
        doc["result"] = {{"kappa", inv.kappa_key},
                         {"nu", ratvec_to_json(inv.nu)},
                         {"basic", is_basic(d, b)},
                         {"superbasic", is_superbasic_omega(d, omega_elem(d, inv.kappa_rep))}};
    } else if (cmd == "choose-levi") {
        Vec lam = parse_vec(opt.lambda);
        ExtAff b = parse_aff(d, opt.b);
        doc["result"] = choose_j_to_json(choose_J(d, lam, b, opt.seed));
    } else if (cmd == "ibar") {
        Vec lam = parse_vec(opt.lambda);
        ExtAff b = parse_aff(d, opt.b);
        doc["result"] = {{"ibar", ibar(d, lam, parse_J(opt.J), b)}};
    } else if (cmd == "theta") {
        Vec lam = parse_vec(opt.lambda);
        Vec mu = parse_vec(opt.mu);
        Vec mup = parse_vec(opt.mup);
        auto ts = theta_sets(d, mu, mup, lam);
        auto roots = [&](const std::vector<int>& rs) {
            json out = json::array();
            for (int r : rs) out.push_back(d.root(r).rc);
            return out;
        };
        doc["result"] = {{"theta", roots(ts.theta)}, {"xi", roots(ts.xi)},
                         {"xi1", roots(ts.xi1)}};
    } else if (cmd == "chain") {
        Vec lam = parse_vec(opt.lambda);
        Vec mu = parse_vec(opt.mu);
        Vec ups = parse_vec(opt.ups);
        auto steps = conv_chain(d, mu, ups, lam);
        json arr = json::array();
        for (const auto& st : steps) {
            Vec av = d.coroot_co(st.alpha);
            Vec sav = d.coroot_co(d.sigma_root(st.alpha, st.r));
            Vec m1 = st.mu, m2 = st.mu, m3 = st.mu;
            for (int i = 0; i < d.rank(); i++) {
                m1[i] -= av[i];
                m2[i] += sav[i];
                m3[i] += sav[i] - av[i];
            }
            arr.push_back({{"mu", st.mu},
                           {"alpha", d.root(st.alpha).rc},
                           {"r", st.r},
                           {"witnesses", {st.mu, m1, m2, m3}}});
        }
        doc["result"] = {{"steps", arr}, {"checker_ok", check_conv_chain(d, mu, ups, lam, steps)}};
    } else if (cmd == "straight") {
        Vec lam = parse_vec(opt.lambda);
        json arr = json::array();
        for (const auto& e : straight_classes_below(d, lam))
            arr.push_back({{"elem", aff_to_json(e.elem)},
                           {"kappa", e.kappa_key},
                           {"nu", ratvec_to_json(e.nu_bar)}});
        doc["result"] = {{"classes", arr}};
    } else if (cmd == "reduce") {
        ExtAff x = parse_aff(d, opt.b);
        auto r = reduce_to_min(d, x);
        doc["result"] = {{"min", aff_to_json(r.min)},
                         {"length", length(d, r.min)},
                         {"trace", r.trace},
                         {"budget_exhausted", r.budget_exhausted}};
    } else {
        throw schema_error("unknown command " + cmd);
    }
    emit(doc, opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed affine Deligne-Lusztig component-count toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"pi0", "nonempty", "invariants", "choose-levi", "ibar", "theta",
                             "chain", "straight", "reduce", "verify", "verify-all"}) {
        CLI::App* s = app.add_subcommand(name);
        s->add_option("--datum", opt.datum_path, "root-datum JSON file");
        s->add_option("--type", opt.type, "component type, e.g. A2");
        s->add_option("--components", opt.components, "number of diagram components");
        s->add_option("--sigma", opt.sigma, "sigma in cycle notation, e.g. \"(0 1)\"");
        s->add_option("--lambda", opt.lambda, "dominant cocharacter, e.g. \"[2,0]\"");
        s->add_option("--b", opt.b, "element, e.g. \"t[2];e\" or \"e\"");
        s->add_option("--mu", opt.mu, "cocharacter");
        s->add_option("--mu-prime", opt.mup, "cocharacter");
        s->add_option("--ups", opt.ups, "cocharacter");
        s->add_option("--J", opt.J, "node subset, e.g. \"[0,1]\"");
        s->add_option("--lemma", opt.lemma, "verification check id");
        s->add_option("--profile", opt.profile, "quick|full");
        s->add_option("--bound", opt.bound, "coordinate window bound");
        s->add_option("--two-rho-bound", opt.two_rho_bound, "<2rho,lambda> cap");
        s->add_option("--seed", opt.seed, "random seed");
        s->add_option("--out", opt.out, "also write the JSON document here");
        subs.push_back(s);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 3;
    }
    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const schema_error& e) {
        std::cout << json{{"schema_version", kSchemaVersion}, {"error", e.what()},
                          {"kind", "schema"}}.dump(2)
                  << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cout << json{{"schema_version", kSchemaVersion}, {"error", e.what()},
                          {"kind", "domain"}}.dump(2)
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
