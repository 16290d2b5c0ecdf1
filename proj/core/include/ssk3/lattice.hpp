#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ssk3/code.hpp"

namespace ssk3 {

// Coordinates in the frame (e_P/2 for each point, then h/2).
using DyadicVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Twice the pairing: -sum a_i b_i + a_h b_h.
std::int64_t pairing_twice(const DyadicVec& v, const DyadicVec& w);

// Lift of a word: 1 on its points, 1 on h iff the weight is odd.
DyadicVec lift(Mask word, int n);

struct DyadicLattice {
    int n = 0;              // number of points; rank is n + 1
    Code code;              // code it was built from
    IntMatrix basis;        // Hermite normal form rows
    IntMatrix gram;         // integral Gram matrix of the basis

    int rank() const { return n + 1; }
};

// Row-style Hermite normal form of a full-column-rank integer matrix.
IntMatrix hermite_normal_form(IntMatrix rows);

// Overlattice of 2*(frame) generated by the lifts of the code's words.
// Throws NotIntegral if some pairing is not an integer.
DyadicLattice lattice_from_code(const Code& code);

struct DiscSign {
    std::int64_t determinant = 0;
    int sign = 0;
};
DiscSign disc_and_signature(const DyadicLattice& lat);

// Diagonal test, cross-checked against the weight criterion (|A| = 0,1 mod 4).
bool is_even(const DyadicLattice& lat);
// Every vector of the dual lattice has integral norm.
bool is_type_I(const DyadicLattice& lat);

// DG = lifted code's orthogonal complement modulo the lifted code, inside
// F_2^(n+1) (point bits, then the h bit at position n).
struct DiscriminantForm {
    int n = 0;
    std::vector<Mask> lifted_code;  // basis of the lifted code
    std::vector<Mask> generators;   // representatives of a basis of DG

    int log2_order() const { return static_cast<int>(generators.size()); }
    // q(x) = k/2 mod 2Z, returned as k mod 4.
    int q_halves(Mask x) const;
    // b(x, y) = k/2 mod Z, returned as k mod 2.
    int b_halves(Mask x, Mask y) const;
};

// Throws NotEven for odd lattices.
DiscriminantForm discriminant_form(const DyadicLattice& lat);

}  // namespace ssk3
