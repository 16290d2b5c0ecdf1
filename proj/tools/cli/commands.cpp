#include "commands.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ssk3/errors.hpp"

namespace ssk3::cli {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NotInU*>(&e)) return kNotInU;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const NotIrreducible*>(&e) ||
        dynamic_cast<const IncompatibleFields*>(&e) || dynamic_cast<const FieldCapExceeded*>(&e) ||
        dynamic_cast<const MixedDegree*>(&e) || dynamic_cast<const DegenerateHexagon*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::ios_base::failure*>(&e))
        return kConfigError;
    return kInternalError;
}

HomPoly3 load_poly(const PolyInput& in) {
    std::string text = in.poly;
    if (!in.poly_file.empty()) {
        if (!text.empty()) throw std::invalid_argument("give either a polynomial or a polynomial file, not both");
        std::ifstream f(in.poly_file);
        if (!f) throw std::invalid_argument("cannot read " + in.poly_file);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    }
    if (text.empty()) throw std::invalid_argument("no polynomial given");
    FieldCtx K = in.field_poly.empty() ? FieldCtx() : FieldCtx::create(in.field_poly);
    return HomPoly3::parse(text, K);
}

ZLocusOptions locus_options(const PolyInput& in) {
    ZLocusOptions o;
    if (!in.locus_field_poly.empty()) o.field_poly = GF2Poly::parse(in.locus_field_poly);
    return o;
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << j.dump(2) << '\n';
}

AnalyzeOutput analyze_poly(const HomPoly3& g, const ZLocusOptions& opts, const std::string& census_file) {
    AnalyzeOutput out;
    out.analysis = analyze(g, opts);
    out.lattice = lattice_summary(out.analysis.code);
    if (!census_file.empty()) {
        CensusResult census = census_from_json(read_json_file(census_file));
        out.class_id = match_class(out.analysis.invariants, census).id;
    }
    out.report = analyze_report(out.analysis, out.lattice, out.class_id);
    out.table = analyze_table(out.analysis, out.lattice, out.class_id);
    return out;
}

AnalyzeOutput cmd_analyze(const PolyInput& in, const std::string& census_file) {
    return analyze_poly(load_poly(in), locus_options(in), census_file);
}

Json cmd_census(const CensusParams& p) { return census_json(run_census(p)); }

int cmd_match(const std::string& report_file, const PolyInput& in, const std::string& census_file) {
    if (census_file.empty()) throw std::invalid_argument("match needs a census file");
    ConfigInvariants inv;
    if (!report_file.empty()) {
        Json r = read_json_file(report_file);
        if (!r.contains("invariants")) throw ParseError(report_file + ": no invariants field");
        inv = invariants_from_json(r["invariants"]);
    } else {
        inv = analyze(load_poly(in), locus_options(in)).invariants;
    }
    CensusResult census = census_from_json(read_json_file(census_file));
    return match_class(inv, census).id;
}

Json cmd_lattice(const PolyInput& in) {
    Analysis a = analyze(load_poly(in), locus_options(in));
    Json j = lattice_json(lattice_summary(a.code));
    j["sigma"] = a.invariants.sigma;
    j["code"] = code_json(a.code);
    return j;
}

HexagonOutput cmd_hexagon(const HexagonInput& in) {
    HexagonOutput out;
    if (in.params.empty()) {
        out.hexagon = sample_hexagon(in.m, in.seed);
    } else {
        FieldCtx F = FieldCtx::standard(in.m);
        std::array<FFElem, 6> t{};
        std::stringstream ss(in.params);
        std::string item;
        std::size_t k = 0;
        while (std::getline(ss, item, ';')) {
            if (k == 6) throw std::invalid_argument("expected six hexagon parameters");
            t[k++] = F.parse(item);
        }
        if (k != 6) throw std::invalid_argument("expected six hexagon parameters");
        out.hexagon = make_hexagon(F, t);
    }
    out.check = check_pascal(out.hexagon);
    out.lattice = lattice_summary(out.check.analysis.code);
    out.report = analyze_report(out.check.analysis, out.lattice, std::nullopt);
    const Hexagon& h = out.hexagon;
    Json hex;
    hex["field"] = {{"degree", h.field.degree()}, {"poly", h.field.def_poly().to_string()}};
    Json params = Json::array(), verts = Json::array(), sides = Json::array();
    for (int i = 0; i < 6; ++i) {
        params.push_back(h.field.format(h.params[i]));
        verts.push_back(point_json(h.field, h.vertices[i]));
        sides.push_back(point_json(h.field, h.sides[i]));
    }
    hex["params"] = params;
    hex["vertices"] = verts;
    hex["sides"] = sides;
    hex["pascal"] = {{"sides_split", out.check.sides_split},
                     {"pascal_line_split", out.check.pascal_line_split},
                     {"inscribed_conics_split", out.check.conics_split},
                     {"sigma", out.check.sigma},
                     {"ok", out.check.ok()}};
    out.report["hexagon"] = hex;
    std::ostringstream os;
    os << analyze_table(out.check.analysis, out.lattice, std::nullopt);
    os << "pascal          sides " << (out.check.sides_split ? "split" : "FAIL") << ", line M "
       << (out.check.pascal_line_split ? "splits" : "FAIL") << ", conics " << out.check.conics_split << "/4, "
       << (out.check.ok() ? "ok" : "FAIL") << '\n';
    out.table = os.str();
    return out;
}

}  // namespace ssk3::cli
