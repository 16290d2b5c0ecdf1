#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ssk3/errors.hpp"

namespace ssk3::cli {

LatticeSummary lattice_summary(const Code& code) {
    LatticeSummary s;
    DyadicLattice lat = lattice_from_code(code);
    s.rank = lat.rank();
    s.determinant = disc_and_signature(lat).determinant;
    s.even = is_even(lat);
    s.type_I = is_type_I(lat);
    if (s.even) s.dg_log2 = discriminant_form(lat).log2_order();
    std::int64_t det0 = disc_and_signature(lattice_from_code(Code(code.length(), {}))).determinant;
    if (s.determinant != 0 && det0 % s.determinant == 0) {
        std::int64_t ratio = det0 / s.determinant;
        auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(ratio))));
        if (r * r == ratio) s.index = r;
    }
    s.index_matches = s.index == (std::int64_t{1} << code.dim());
    return s;
}

Json point_json(const FieldCtx& F, const Point3& p) {
    return Json::array({F.format(p[0]), F.format(p[1]), F.format(p[2])});
}

Json word_json(Mask w) {
    Json a = Json::array();
    for (Mask m = w; m; m &= m - 1) a.push_back(std::countr_zero(m));
    return a;
}

Json zlocus_json(const ZLocus& z) {
    Json j;
    j["b"] = z.b;
    j["count"] = z.size();
    j["common_field"] = {{"degree", z.common_field.degree()}, {"poly", z.common_field.def_poly().to_string()}};
    Json pts = Json::array();
    for (const auto& p : z.points) pts.push_back(point_json(z.common_field, p));
    j["points"] = pts;
    j["frobenius_perm"] = z.frobenius_perm;
    Json orbits = Json::array();
    for (const auto& o : frobenius_orbits(z)) orbits.push_back(o);
    j["frobenius_orbits"] = orbits;
    Json coll = Json::array();
    for (const auto& t : z.collinear) coll.push_back({t[0], t[1], t[2]});
    j["collinear_triples"] = coll;
    return j;
}

Json split_json(const ZLocus& z, const SplitCensus& s) {
    Json j;
    Json lines = Json::array(), conics = Json::array(), pencils = Json::array();
    for (const auto& l : s.lines) lines.push_back({{"word", word_json(l.word.mask)}, {"line", point_json(z.common_field, l.line)}});
    for (const auto& c : s.conics) conics.push_back({{"word", word_json(c.word.mask)}, {"conic", c.conic.format()}});
    for (const auto& p : s.pencils)
        pencils.push_back({{"word", word_json(p.word.mask)}, {"cubics", {p.cubic1.format(), p.cubic2.format()}}});
    j["lines"] = lines;
    j["conics"] = conics;
    j["pencils"] = pencils;
    return j;
}

Json code_json(const Code& code) {
    Json j;
    j["length"] = code.length();
    j["dim"] = code.dim();
    Json basis = Json::array();
    for (Mask b : code.basis()) basis.push_back(encode_mask(b, code.length()));
    j["basis"] = basis;
    j["weight_enumerator"] = code.weight_enumerator();
    return j;
}

Json invariants_json(const ConfigInvariants& inv) {
    Json j;
    j["sigma"] = inv.sigma;
    j["l"] = inv.l;
    j["q"] = inv.q;
    j["e"] = inv.e;
    j["tl"] = inv.tl;
    j["lq"] = inv.lq;
    j["qq"] = inv.qq;
    j["tq1"] = inv.tq1;
    j["tq2"] = inv.tq2;
    return j;
}

ConfigInvariants invariants_from_json(const Json& j) {
    ConfigInvariants inv;
    if (j.is_array()) {
        if (j.size() != 9) throw ParseError("invariant tuple must have nine entries");
        int* f[9] = {&inv.sigma, &inv.l, &inv.q, &inv.e, &inv.tl, &inv.lq, &inv.qq, &inv.tq1, &inv.tq2};
        for (std::size_t i = 0; i < 9; ++i) *f[i] = j[i].get<int>();
        return inv;
    }
    inv.sigma = j.at("sigma").get<int>();
    inv.l = j.at("l").get<int>();
    inv.q = j.at("q").get<int>();
    inv.e = j.at("e").get<int>();
    inv.tl = j.at("tl").get<int>();
    inv.lq = j.at("lq").get<int>();
    inv.qq = j.at("qq").get<int>();
    inv.tq1 = j.at("tq1").get<int>();
    inv.tq2 = j.at("tq2").get<int>();
    return inv;
}

Json lattice_json(const LatticeSummary& l) {
    Json j;
    j["rank"] = l.rank;
    j["determinant"] = l.determinant;
    j["even"] = l.even;
    j["type_I"] = l.type_I;
    if (l.dg_log2 >= 0) j["discriminant_group_log2_order"] = l.dg_log2;
    j["index_over_frame"] = l.index;
    return j;
}

Json analyze_report(const Analysis& a, const LatticeSummary& l, std::optional<int> class_id) {
    Json j;
    j["input"] = {{"polynomial", a.z.g.format()}, {"degree", a.z.g.degree()}};
    const FieldCtx& K = a.z.g.field();
    j["field"] = {{"coefficient_field", {{"degree", K.degree()}, {"poly", K.def_poly().to_string()}}},
                  {"common_field", {{"degree", a.z.common_field.degree()}, {"poly", a.z.common_field.def_poly().to_string()}}},
                  {"coefficient_generator_image", a.z.common_field.format(a.z.coeff_embedding.image_of_generator())}};
    j["zlocus"] = zlocus_json(a.z);
    j["split"] = split_json(a.z, a.split);
    j["code"] = code_json(a.code);
    j["invariants"] = invariants_json(a.invariants);
    j["lattice"] = lattice_json(l);
    if (class_id) j["census_class"] = *class_id;
    return j;
}

std::string analyze_table(const Analysis& a, const LatticeSummary& l, std::optional<int> class_id) {
    std::ostringstream os;
    auto row = [&](const char* k) -> std::ostream& { return os << std::left << k << std::string(16 - std::string(k).size(), ' '); };
    row("polynomial") << a.z.g.format() << '\n';
    row("points") << a.z.size() << " over GF(2^" << a.z.common_field.degree() << ")\n";
    auto orbits = frobenius_orbits(a.z);
    std::vector<int> sizes;
    for (const auto& o : orbits) sizes.push_back(static_cast<int>(o.size()));
    row("orbit sizes");
    for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? " " : "") << sizes[i];
    os << '\n';
    row("splitting") << a.split.lines.size() << " lines, " << a.split.conics.size() << " conics, "
                     << a.split.pencils.size() << " pencils\n";
    row("code") << "dim " << a.code.dim() << ", weights";
    auto we = a.code.weight_enumerator();
    for (std::size_t w = 0; w < we.size(); ++w)
        if (we[w]) os << ' ' << w << ':' << we[w];
    os << '\n';
    const auto t = a.invariants.tuple();
    row("invariants") << "(sigma,l,q,e,tl,lq,qq,tq1,tq2) = (";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")\n";
    row("artin sigma") << a.invariants.sigma << '\n';
    row("lattice") << "rank " << l.rank << ", det " << l.determinant << (l.even ? ", even" : ", odd")
                   << (l.type_I ? ", type I" : ", not type I") << '\n';
    if (class_id) row("census class") << *class_id << '\n';
    return os.str();
}

Json census_json(const CensusResult& r) {
    Json j;
    j["n"] = r.params.n;
    j["weights"] = r.params.weights;
    j["max_dim"] = r.params.max_dim;
    j["total"] = r.total();
    Json counts = Json::array();
    for (const auto& l : r.levels) counts.push_back(l.size());
    j["counts_by_dim"] = counts;
    if (r.params.n == 21) j["counts_by_sigma"] = r.sigma_counts();
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json classes = Json::array();
        for (const auto& e : l) {
            Json c;
            c["id"] = e.id;
            Json basis = Json::array();
            for (Mask m : e.std_basis) basis.push_back(encode_mask(m, r.params.n));
            c["std_basis"] = basis;
            c["weight_enumerator"] = e.weight_enumerator;
            if (e.invariants) c["invariants"] = e.invariants->tuple();
            classes.push_back(c);
        }
        levels.push_back({{"dim", l.empty() ? 0 : l.front().dim}, {"classes", classes}});
    }
    j["levels"] = levels;
    Json edges = Json::array();
    for (const auto& [a, b] : r.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

CensusResult census_from_json(const Json& j) {
    CensusResult r;
    try {
        r.params.n = j.at("n").get<int>();
        r.params.weights = j.at("weights").get<std::vector<int>>();
        r.params.max_dim = j.at("max_dim").get<int>();
        for (const auto& lvl : j.at("levels")) {
            std::vector<ClassEntry> entries;
            for (const auto& c : lvl.at("classes")) {
                ClassEntry e;
                e.id = c.at("id").get<int>();
                for (const auto& v : c.at("std_basis")) e.std_basis.push_back(decode_mask(v.get<std::uint64_t>(), r.params.n));
                Code code(r.params.n, e.std_basis);
                e.dim = code.dim();
                e.weight_enumerator = code.weight_enumerator();
                e.omega = omega_print(e.std_basis, r.params.n);
                if (c.contains("invariants")) e.invariants = invariants_from_json(c.at("invariants"));
                entries.push_back(std::move(e));
            }
            r.levels.push_back(std::move(entries));
        }
        for (const auto& e : j.at("edges")) r.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed census file: ") + ex.what());
    }
    return r;
}

}  // namespace ssk3::cli
