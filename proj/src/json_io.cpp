#include "adlv/json_io.hpp"

#include <sstream>

namespace adlv {

static std::vector<int> sigma_from_cycles(const std::string& s, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; i++) perm[i] = i;
    std::vector<int> cycle;
    bool open = false;
    std::string tok;
    auto flush_tok = [&] {
        if (tok.empty()) return;
        int v = std::stoi(tok);
        if (v < 0 || v >= n) throw schema_error("sigma: node index out of range");
        cycle.push_back(v);
        tok.clear();
    };
    for (char ch : s) {
        if (ch == '(') {
            if (open) throw schema_error("sigma: nested cycle");
            open = true;
            cycle.clear();
        } else if (ch == ')') {
            flush_tok();
            if (!open) throw schema_error("sigma: unmatched ')'");
            open = false;
            for (size_t i = 0; i < cycle.size(); i++)
                perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
        } else if (isdigit(ch)) {
            tok += ch;
        } else if (ch == ' ' || ch == ',') {
            flush_tok();
        } else {
            throw schema_error(std::string("sigma: unexpected character '") + ch + "'");
        }
    }
    if (open || !tok.empty()) throw schema_error("sigma: unterminated cycle");
    return perm;
}

RootDatum datum_from_json(const json& j) {
    if (!j.is_object()) throw schema_error("datum: expected a JSON object");
    for (auto& [key, val] : j.items()) {
        (void)val;
        if (key != "components" && key != "type" && key != "sigma")
            throw schema_error("datum: unknown field \"" + key + "\"");
    }
    if (!j.contains("type") || !j["type"].is_string())
        throw schema_error("datum: field \"type\" (string) is required");
    std::string type = j["type"];
    int h = j.value("components", 1);
    if (h < 1) throw schema_error("datum: \"components\" must be >= 1");
    // rank of one component = trailing digits of the type label
    size_t p = type.find_first_of("0123456789");
    if (type.empty() || p == std::string::npos || p == 0)
        throw schema_error("datum: malformed type \"" + type + "\"");
    int n = h * std::stoi(type.substr(p));
    std::vector<int> sigma(n);
    for (int i = 0; i < n; i++) sigma[i] = i;
    if (j.contains("sigma")) {
        if (j["sigma"].is_string())
            sigma = sigma_from_cycles(j["sigma"].get<std::string>(), n);
        else if (j["sigma"].is_array()) {
            sigma = j["sigma"].get<std::vector<int>>();
            if ((int)sigma.size() != n) throw schema_error("datum: sigma has wrong size");
        } else
            throw schema_error("datum: sigma must be a cycle string or an array");
    }
    return RootDatum(type, h, sigma);
}

Vec parse_vec(const std::string& s) {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw schema_error("expected a JSON integer array, got \"" + s + "\"");
    return j.get<Vec>();
}

Weyl parse_word(const RootDatum& d, const std::string& s) {
    std::vector<int> word;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok == "e") continue;
        if (tok.size() < 2 || tok[0] != 's')
            throw schema_error("word: expected \"e\" or tokens like \"s1\", got \"" + tok + "\"");
        int v = std::stoi(tok.substr(1)) - 1;
        if (v < 0 || v >= d.rank()) throw schema_error("word: node index out of range");
        word.push_back(v);
    }
    return d.canonical_weyl(word);
}

std::string word_str(const Weyl& w) {
    if (w.is_identity()) return "e";
    std::ostringstream os;
    for (size_t i = 0; i < w.word.size(); i++) os << (i ? " " : "") << "s" << (w.word[i] + 1);
    return os.str();
}

ExtAff parse_aff(const RootDatum& d, const std::string& s) {
    if (!s.empty() && s[0] == '{') {
        json j = json::parse(s, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("mu") || !j.contains("w"))
            throw schema_error("element: expected {\"mu\": [...], \"w\": \"...\"}");
        Vec mu = j["mu"].get<Vec>();
        if ((int)mu.size() != d.rank()) throw schema_error("element: mu has wrong size");
        return ExtAff{mu, parse_word(d, j["w"].get<std::string>())};
    }
    Vec mu(d.rank(), 0);
    std::string word = s;
    if (s.rfind("t[", 0) == 0) {
        size_t close = s.find(']');
        if (close == std::string::npos) throw schema_error("element: missing ']'");
        mu = parse_vec(s.substr(1, close));
        if ((int)mu.size() != d.rank()) throw schema_error("element: mu has wrong size");
        word = close + 1 < s.size() && s[close + 1] == ';' ? s.substr(close + 2) : "";
    }
    return ExtAff{mu, parse_word(d, word)};
}

json aff_to_json(const ExtAff& x) { return {{"mu", x.mu}, {"w", word_str(x.w)}}; }

json ratvec_to_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(r.str());
    return out;
}

json choose_j_to_json(const ChooseJResult& r) {
    json checks = json::object();
    for (const auto& [k, v] : r.checks) checks[k] = v;
    return {{"J", r.J},
            {"z0", word_str(r.z0)},
            {"w0", aff_to_json(r.w0)},
            {"nu", ratvec_to_json(r.nu_bar)},
            {"chi0", r.chi0},
            {"checks", checks}};
}

json pi0_to_json(const Pi0Result& r) {
    json out = {{"size", r.size},
                {"sigma_fixed_order", r.sigma_fixed_order},
                {"fiber", r.fiber},
                {"hn_irreducible", r.hn_irred},
                {"formula_asserted", r.formula_asserted},
                {"certificate",
                 {{"choose_J", choose_j_to_json(r.levi_certificate)},
                  {"kernel", r.kernel_certificate.kernel},
                  {"kernel_span_ok", r.kernel_certificate.span_ok}}}};
    if (r.span_certificate) {
        out["certificate"]["generator_span_ok"] = r.span_certificate->ok;
        out["certificate"]["generators"] = r.span_certificate->generators;
    }
    if (!r.formula_asserted)
        out["note"] = "fiber reported for exploration; the component-count formula is only "
                      "asserted under HN-irreducibility";
    return out;
}

// wall time is deliberately omitted: stdout documents must be byte-identical
// for identical (input, seed, version); timings go to stderr logs instead
json report_to_json(const LemmaReport& r) {
    return {{"lemma_id", r.lemma_id}, {"datum", r.datum},         {"config", r.config},
            {"status", r.status()},   {"cases_run", r.cases_run}, {"failures", r.failures},
            {"vacuous", r.vacuous},   {"truncated", r.truncated}, {"note", r.note}};
}

std::string reports_tsv(const std::vector<LemmaReport>& rs) {
    std::ostringstream os;
    os << "lemma_id\tdatum\tstatus\tcases_run\ttruncated\tnote\n";
    for (const auto& r : rs)
        os << r.lemma_id << "\t" << r.datum << "\t" << r.status() << "\t" << r.cases_run << "\t"
           << (r.truncated ? "yes" : "no") << "\t" << r.note << "\n";
    return os.str();
}

}  // namespace adlv
