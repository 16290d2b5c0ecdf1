#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ssk3/census.hpp"
#include "ssk3/lattice.hpp"
#include "ssk3/splitcode.hpp"

namespace ssk3::cli {

using Json = nlohmann::ordered_json;

struct LatticeSummary {
    int rank = 0;
    std::int64_t determinant = 0;
    bool even = false;
    bool type_I = false;
    int dg_log2 = -1;          // -1 when the lattice is odd
    std::int64_t index = 0;    // [S : S0] from the determinant ratio
    bool index_matches = false;
};

LatticeSummary lattice_summary(const Code& code);

Json point_json(const FieldCtx& F, const Point3& p);
Json word_json(Mask w);
Json zlocus_json(const ZLocus& z);
Json split_json(const ZLocus& z, const SplitCensus& s);
Json code_json(const Code& code);
Json invariants_json(const ConfigInvariants& inv);
ConfigInvariants invariants_from_json(const Json& j);
Json lattice_json(const LatticeSummary& l);

Json analyze_report(const Analysis& a, const LatticeSummary& l, std::optional<int> class_id);
std::string analyze_table(const Analysis& a, const LatticeSummary& l, std::optional<int> class_id);

Json census_json(const CensusResult& r);
// Rebuilds the class list (omega prints and invariants are recomputed).
CensusResult census_from_json(const Json& j);

}  // namespace ssk3::cli
