#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ssk3/field.hpp"
#include "ssk3/poly3.hpp"
#include "ssk3/upoly.hpp"

namespace ssk3 {

struct ZLocusOptions {
    // Defining polynomial for the common field; its degree must equal the
    // lcm of the residue degrees. Defaults to the coefficient field when
    // that suffices, otherwise to the smallest irreducible polynomial.
    std::optional<GF2Poly> field_poly;
};

// The reduced zero scheme of the three partials of G, as explicit points.
struct ZLocus {
    int b = 0;
    HomPoly3 g;
    FieldCtx common_field;
    Embedding coeff_embedding;  // g.field() -> common_field
    std::vector<Point3> points;  // normalized: last nonzero coordinate is 1
    // Index of the image under x -> x^|K|, K the coefficient field.
    std::vector<int> frobenius_perm;
    std::vector<std::array<int, 3>> collinear;  // sorted index triples

    int size() const { return static_cast<int>(points.size()); }
};

inline int expected_point_count(int b) { return b * b - 3 * b + 3; }

ZLocus compute_zlocus(const HomPoly3& g, const ZLocusOptions& opts = {});

Point3 normalize(const FieldCtx& F, Point3 p);
std::vector<std::array<int, 3>> collinear_triples(const FieldCtx& F, const std::vector<Point3>& pts);
// Orbits of frobenius_perm, each listed from its smallest index; sorted by
// size and then by first index.
std::vector<std::vector<int>> frobenius_orbits(const ZLocus& z);
// Rank of the evaluation matrix of all degree-d monomials at the points.
int evaluation_rank(const ZLocus& z, int degree);
// Coefficient of uv in the local expansion at p (reducedness test).
FFElem local_mixed_coefficient(const ZLocus& z, const Point3& p);

}  // namespace ssk3
