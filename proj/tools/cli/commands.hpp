#pragma once

#include <exception>
#include <optional>
#include <string>

#include "hexagon.hpp"
#include "report.hpp"

namespace ssk3::cli {

enum ExitCode : int { kOk = 0, kNotInU = 2, kConfigError = 3, kInternalError = 4 };

int exit_code_for(const std::exception& e);

struct PolyInput {
    std::string poly;              // inline text
    std::string poly_file;         // or read from a file
    std::string field_poly;        // coefficient field, e.g. "t^6+t^5+t^3+t^2+1"
    std::string locus_field_poly;  // field for the points of Z(dG)
};

HomPoly3 load_poly(const PolyInput& in);
ZLocusOptions locus_options(const PolyInput& in);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

struct AnalyzeOutput {
    Analysis analysis;
    LatticeSummary lattice;
    std::optional<int> class_id;
    Json report;
    std::string table;
};

AnalyzeOutput analyze_poly(const HomPoly3& g, const ZLocusOptions& opts, const std::string& census_file = {});
AnalyzeOutput cmd_analyze(const PolyInput& in, const std::string& census_file = {});

Json cmd_census(const CensusParams& p);

// Either a saved analyze report or a polynomial; returns the class id.
int cmd_match(const std::string& report_file, const PolyInput& in, const std::string& census_file);

Json cmd_lattice(const PolyInput& in);

struct HexagonInput {
    int m = 5;
    std::uint64_t seed = 0;
    std::string params;  // optional: six field elements separated by ';'
};

struct HexagonOutput {
    Hexagon hexagon;
    PascalCheck check;
    LatticeSummary lattice;
    Json report;
    std::string table;
};

HexagonOutput cmd_hexagon(const HexagonInput& in);

}  // namespace ssk3::cli
