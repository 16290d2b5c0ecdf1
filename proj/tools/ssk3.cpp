#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ssk3/errors.hpp"

using namespace ssk3;
using namespace ssk3::cli;

namespace {

void add_poly_options(CLI::App* cmd, PolyInput& in) {
    cmd->add_option("--poly", in.poly, "sextic in X0,X1,X2 (coefficients may use the field generator a)");
    cmd->add_option("--poly-file", in.poly_file, "file holding the polynomial");
    cmd->add_option("--field-poly", in.field_poly, "defining polynomial of the coefficient field, in t");
    cmd->add_option("--locus-field-poly", in.locus_field_poly, "defining polynomial of the field holding Z(dG)");
}

std::vector<int> parse_weights(const std::string& s) {
    std::vector<int> w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            w.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ssk3::ParseError("bad weight '" + item + "'");
        }
    }
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ssk3: purely inseparable double planes in characteristic 2"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_path;
    unsigned threads = 0;
    app.add_option("--json", json_path, "write the JSON result here");
    app.add_option("--threads", threads, "worker threads (0: all cores)");

    PolyInput poly;
    std::string census_file, report_file;

    auto* analyze = app.add_subcommand("analyze", "Z(dG), splitting curves, code, invariants and lattice");
    add_poly_options(analyze, poly);
    analyze->add_option("--census", census_file, "census JSON to match the class against");

    CensusParams cp;
    std::string weights = "0,5,8,9,12,13,16,21";
    std::string out_path;
    auto* census = app.add_subcommand("census", "classify codes up to permutation of the points");
    census->add_option("--n", cp.n, "code length")->check(CLI::Range(1, 64));
    census->add_option("--weights", weights, "allowed weights, comma separated");
    auto* max_dim_opt = census->add_option("--max-dim", cp.max_dim, "largest dimension (default: n)");
    census->add_option("--out", out_path, "census JSON output");

    auto* match = app.add_subcommand("match", "find the census class of a polynomial or report");
    add_poly_options(match, poly);
    match->add_option("--report", report_file, "analyze JSON report");
    match->add_option("--census", census_file, "census JSON")->required();

    auto* lattice = app.add_subcommand("lattice", "lattice summary of the code of a polynomial");
    add_poly_options(lattice, poly);

    HexagonInput hx;
    auto* hexagon = app.add_subcommand("hexagon", "product of the sides of a hexagon inscribed in X0^2 = X1*X2");
    hexagon->add_option("--m", hx.m, "field degree")->check(CLI::Range(3, 16));
    hexagon->add_option("--seed", hx.seed, "sampling seed");
    hexagon->add_option("--params", hx.params, "six parameters t (vertices [t,t^2,1]) separated by ';'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        Json result;
        if (*analyze) {
            auto out = cmd_analyze(poly, census_file);
            std::cout << out.table;
            result = out.report;
        } else if (*census) {
            cp.weights = parse_weights(weights);
            cp.threads = threads;
            if (!*max_dim_opt) cp.max_dim = cp.n;
            result = cmd_census(cp);
            std::cout << "total " << result["total"] << " classes; by dimension";
            for (const auto& c : result["counts_by_dim"]) std::cout << ' ' << c;
            std::cout << '\n';
            if (!out_path.empty()) write_json_file(out_path, result);
        } else if (*match) {
            int id = cmd_match(report_file, poly, census_file);
            std::cout << "class " << id << '\n';
            result = {{"class", id}};
        } else if (*lattice) {
            result = cmd_lattice(poly);
            std::cout << result.dump(2) << '\n';
        } else if (*hexagon) {
            auto out = cmd_hexagon(hx);
            std::cout << out.table;
            result = out.report;
            if (!out.check.ok()) {
                if (!json_path.empty()) write_json_file(json_path, result);
                std::cerr << "error: Pascal configuration check failed\n";
                return kInternalError;
            }
        }
        if (!json_path.empty()) write_json_file(json_path, result);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kOk;
}
