#pragma once

#include <array>
#include <compare>
#include <vector>

#include "ssk3/code.hpp"
#include "ssk3/poly3.hpp"
#include "ssk3/zlocus.hpp"

namespace ssk3 {

inline constexpr std::array<int, 8> kAllowedWeights{0, 5, 8, 9, 12, 13, 16, 21};

struct LineWitness {
    Word word;
    Point3 line;  // coefficients of the linear form, normalized
};

struct ConicWitness {
    Word word;
    HomPoly3 conic;  // over the common field
};

struct PencilWitness {
    Word word;
    HomPoly3 cubic1, cubic2;  // basis of the cubics through the nine points
};

struct SplitCensus {
    std::vector<LineWitness> lines;
    std::vector<ConicWitness> conics;
    std::vector<PencilWitness> pencils;
};

struct ConfigInvariants {
    int sigma = 0, l = 0, q = 0, e = 0, tl = 0, lq = 0, qq = 0, tq1 = 0, tq2 = 0;

    std::array<int, 9> tuple() const { return {sigma, l, q, e, tl, lq, qq, tq1, tq2}; }
    friend bool operator==(const ConfigInvariants&, const ConfigInvariants&) = default;
    friend auto operator<=>(const ConfigInvariants&, const ConfigInvariants&) = default;
};

std::vector<LineWitness> find_lines(const ZLocus& z);
std::vector<ConicWitness> find_conics(const ZLocus& z);
std::vector<PencilWitness> find_pencils(const ZLocus& z);
// True iff the product of the two cubics is c*G + (square) for some c != 0.
bool pencil_splits(const ZLocus& z, const HomPoly3& cubic1, const HomPoly3& cubic2);

Code assemble_code(const ZLocus& z, const SplitCensus& s);

// Weight-8/9 words with no collinear triple.
std::vector<Word> irreducible_words(const Code& code, const ZLocus& z, int weight);

// Computed from the code alone: a weight-8 word is reducible iff it is a
// sum of two weight-5 words, a weight-9 word iff it is a weight-5 word plus
// a weight-8 word. Requires a code of length 21 containing the all-ones word.
ConfigInvariants config_invariants(const Code& code);

// Weight-5, irreducible weight-8 and irreducible weight-9 words.
struct ClassifiedWords {
    std::vector<Mask> w5, w8, w9;
};
ClassifiedWords classify_words(const Code& code);

Mask apply_permutation(Mask w, const std::vector<int>& perm);
// Orbit id per word under the Frobenius permutation of the points; ids are
// numbered in order of first appearance.
std::vector<int> word_orbits(const std::vector<Word>& words, const ZLocus& z);
std::vector<int> orbit_sizes(const std::vector<int>& orbit_ids);

struct Analysis {
    ZLocus z;
    SplitCensus split;
    Code code;
    ConfigInvariants invariants;
};

// Full pipeline with the cross-checks between the geometric scans and the code.
Analysis analyze(const HomPoly3& g, const ZLocusOptions& opts = {});

}  // namespace ssk3
