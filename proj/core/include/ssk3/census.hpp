#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ssk3/code.hpp"
#include "ssk3/splitcode.hpp"

namespace ssk3 {

// Ordered word sequence; bit i of each mask is point i.
using WordSeq = std::vector<Mask>;

// Weights of the iterated intersections; entry j intersects the words A_i
// with bit i set in j, entry 0 being the full point set.
std::vector<int> omega_print(const WordSeq& seq, int n);

// Column values (first word most significant) are non-decreasing.
bool is_sn_increasing(const WordSeq& seq, int n);

// First sequence of words of `code_words` (tried in ascending order) whose
// omega print equals `target`, if any.
std::optional<WordSeq> omega_match(const std::vector<int>& target, const std::vector<Mask>& code_words, int n);

// The spanned codes are equivalent under a permutation of the points.
bool equivalent(const WordSeq& a, const WordSeq& b, int n);

struct ClassEntry {
    int id = 0;  // 1-based, in order of dimension then discovery
    WordSeq std_basis;
    int dim = 0;
    std::vector<int> weight_enumerator;
    std::vector<int> omega;
    std::optional<ConfigInvariants> invariants;  // only for length-21 codes

    Code code(int n) const { return Code(n, std_basis); }
};

struct CensusParams {
    int n = 21;
    std::vector<int> weights{kAllowedWeights.begin(), kAllowedWeights.end()};
    int max_dim = 10;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Level k+1 from the complete level-k list. Entries get ids starting at first_id.
std::vector<ClassEntry> extend_level(const std::vector<ClassEntry>& level, const CensusParams& p, int first_id = 1);

struct CensusResult {
    CensusParams params;
    std::vector<std::vector<ClassEntry>> levels;  // levels[k-1] holds dimension k
    std::vector<std::pair<int, int>> edges;       // (smaller, larger) covering pairs by id

    std::vector<const ClassEntry*> all() const;
    std::size_t total() const;
    // Classes of dimension 11 - sigma, for sigma = 1..10 (length-21 codes).
    std::vector<int> sigma_counts() const;
};

CensusResult run_census(const CensusParams& p);

// a <= b: some permutation maps a's code into b's code.
bool class_leq(const ClassEntry& a, const ClassEntry& b, int n);

// Throws NoMatch or AmbiguousMatch.
const ClassEntry& match_class(const ConfigInvariants& inv, const CensusResult& census);

// Integer with the first point as the most significant of n bits.
std::uint64_t encode_mask(Mask m, int n);
Mask decode_mask(std::uint64_t v, int n);

}  // namespace ssk3
