#include "hexagon.hpp"

#include <algorithm>
#include <random>

#include "ssk3/errors.hpp"

namespace ssk3::cli {

namespace {

HomPoly3 linear_form(const FieldCtx& F, const Point3& l) {
    HomPoly3 f(F, 1);
    const Exponents e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        if (l[i] != F.zero()) f.add_term(e[i], l[i]);
    return f;
}

bool is_zero(const Point3& p) { return p[0].bits == 0 && p[1].bits == 0 && p[2].bits == 0; }

int index_of(const ZLocus& z, const Point3& p) {
    Point3 q = normalize(z.common_field, {z.coeff_embedding(p[0]), z.coeff_embedding(p[1]), z.coeff_embedding(p[2])});
    auto it = std::find(z.points.begin(), z.points.end(), q);
    return it == z.points.end() ? -1 : static_cast<int>(it - z.points.begin());
}

Mask mask_of(const ZLocus& z, const std::vector<Point3>& pts) {
    Mask m = 0;
    for (const auto& p : pts) {
        int i = index_of(z, p);
        if (i < 0) return 0;
        m |= Mask{1} << i;
    }
    return m;
}

// Side orders whose consecutive intersections lie on a common conic.
constexpr int kInscribed[4][6] = {{0, 1, 2, 3, 4, 5}, {0, 4, 2, 3, 1, 5}, {0, 1, 5, 3, 4, 2}, {0, 4, 5, 3, 1, 2}};

}  // namespace

Point3 join(const FieldCtx& F, const Point3& p, const Point3& q) {
    return {F.mul(p[1], q[2]) + F.mul(p[2], q[1]), F.mul(p[2], q[0]) + F.mul(p[0], q[2]),
            F.mul(p[0], q[1]) + F.mul(p[1], q[0])};
}

Hexagon make_hexagon(const FieldCtx& F, const std::array<FFElem, 6>& params) {
    Hexagon h;
    h.field = F;
    h.params = params;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (params[i] == params[j]) throw DegenerateHexagon("hexagon vertices coincide");
    for (int i = 0; i < 6; ++i) h.vertices[i] = {params[i], F.sqr(params[i]), F.one()};
    for (int i = 0; i < 6; ++i) h.sides[i] = normalize(F, join(F, h.vertices[i], h.vertices[(i + 1) % 6]));
    std::vector<Point3> meets;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            Point3 m = join(F, h.sides[i], h.sides[j]);
            if (is_zero(m)) throw DegenerateHexagon("two sides coincide");
            meets.push_back(normalize(F, m));
        }
    std::sort(meets.begin(), meets.end());
    if (std::adjacent_find(meets.begin(), meets.end()) != meets.end())
        throw DegenerateHexagon("three sides are concurrent");
    h.g = linear_form(F, h.sides[0]);
    for (int i = 1; i < 6; ++i) h.g = h.g * linear_form(F, h.sides[i]);
    return h;
}

Hexagon sample_hexagon(int m, std::uint64_t seed) {
    FieldCtx F = FieldCtx::standard(m);
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(m));
    std::uint64_t mask = F.size_minus_one();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<FFElem, 6> t;
        for (auto& x : t) x = F.from_bits(rng() & mask);
        try {
            return make_hexagon(F, t);
        } catch (const DegenerateHexagon&) {
        }
    }
    throw DegenerateHexagon("no non-degenerate hexagon found");
}

PascalCheck check_pascal(const Hexagon& h) {
    const FieldCtx& F = h.field;
    PascalCheck c;
    c.analysis = analyze(h.g);
    const ZLocus& z = c.analysis.z;
    c.sigma = c.analysis.invariants.sigma;

    auto line_words = [&] {
        std::vector<Mask> v;
        for (const auto& l : c.analysis.split.lines) v.push_back(l.word.mask);
        return v;
    }();
    auto line_splits = [&](const std::vector<Point3>& on_line) {
        Mask m = mask_of(z, on_line);
        if (std::popcount(m) < 2) return false;
        return std::any_of(line_words.begin(), line_words.end(), [&](Mask w) { return (w & m) == m; });
    };

    c.sides_split = true;
    for (int i = 0; i < 6; ++i) {
        std::vector<Point3> on;
        for (int j = 0; j < 6; ++j)
            if (j != i) on.push_back(join(F, h.sides[i], h.sides[j]));
        c.sides_split = c.sides_split && line_splits(on);
    }
    std::vector<Point3> pascal;
    for (int i = 0; i < 3; ++i) pascal.push_back(join(F, h.sides[i], h.sides[i + 3]));
    Point3 m = join(F, pascal[0], pascal[1]);
    FFElem on = F.mul(m[0], pascal[2][0]) + F.mul(m[1], pascal[2][1]) + F.mul(m[2], pascal[2][2]);
    c.pascal_line_split = !is_zero(m) && on == F.zero() && line_splits(pascal);

    for (const auto& order : kInscribed) {
        std::vector<Point3> verts;
        for (int i = 0; i < 6; ++i) verts.push_back(join(F, h.sides[order[i]], h.sides[order[(i + 1) % 6]]));
        Mask m = mask_of(z, verts);
        if (std::popcount(m) != 6) continue;
        bool hit = std::any_of(c.analysis.split.conics.begin(), c.analysis.split.conics.end(),
                               [&](const ConicWitness& w) { return (w.word.mask & m) == m; });
        c.conics_split += hit;
    }
    return c;
}

}  // namespace ssk3::cli
