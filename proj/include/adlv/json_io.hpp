#pragma once
// JSON ingestion and emission: root-datum documents, cocharacter vectors,
// extended affine elements in both the compact "t[coords];word" form and the
// {"mu": ..., "w": ...} form, plus serializers for certificates and reports.

#include <json.hpp>

#include "adlv/verify.hpp"

namespace adlv {

using json = nlohmann::json;

// malformed input documents / flags, as opposed to mathematical domain errors
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"components": h, "type": "A2", "sigma": "(0 1)"} — sigma optional
// (identity), given in cycle notation on node indices 0..n-1 or as a plain
// permutation array. Unknown fields are rejected.
RootDatum datum_from_json(const json& j);

// "[2,0,-1]" or a JSON array
Vec parse_vec(const std::string& s);

// "e", "s1 s3 s2" (1-based node indices)
Weyl parse_word(const RootDatum& d, const std::string& s);
std::string word_str(const Weyl& w);

// "t[2,0];s1 s2", "t[2,0]", "e", "s1", or {"mu": [...], "w": "..."}
ExtAff parse_aff(const RootDatum& d, const std::string& s);

json aff_to_json(const ExtAff& x);
json ratvec_to_json(const RatVec& v);  // entries as "p/q" strings

json choose_j_to_json(const ChooseJResult& r);
json pi0_to_json(const Pi0Result& r);
json report_to_json(const LemmaReport& r);
std::string reports_tsv(const std::vector<LemmaReport>& rs);

}  // namespace adlv
