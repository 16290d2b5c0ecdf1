#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ssk3/splitcode.hpp"

namespace ssk3::cli {

// Hexagon with vertices [t, t^2, 1] on the conic X0^2 = X1*X2.
struct Hexagon {
    FieldCtx field;
    std::array<FFElem, 6> params;
    std::array<Point3, 6> vertices;
    std::array<Point3, 6> sides;  // sides[i] joins vertices i and i+1
    HomPoly3 g;                   // product of the six side forms
};

// Throws DegenerateHexagon for repeated parameters or three concurrent sides.
Hexagon make_hexagon(const FieldCtx& F, const std::array<FFElem, 6>& params);
// Deterministic: the first non-degenerate draw from a generator seeded by (m, seed).
Hexagon sample_hexagon(int m, std::uint64_t seed);

struct PascalCheck {
    Analysis analysis;
    bool sides_split = false;
    bool pascal_line_split = false;
    int conics_split = 0;  // how many of the four inscribed conics split
    int sigma = 0;

    bool ok() const { return sides_split && pascal_line_split && conics_split >= 4 && sigma <= 5; }
};

PascalCheck check_pascal(const Hexagon& h);

Point3 join(const FieldCtx& F, const Point3& p, const Point3& q);

}  // namespace ssk3::cli
