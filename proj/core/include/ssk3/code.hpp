#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ssk3 {

using Mask = std::uint64_t;

// Subset of the point set; bit i is point i.
struct Word {
    Mask mask = 0;

    int weight() const { return std::popcount(mask); }
    bool contains(int i) const { return (mask >> i) & 1U; }
    friend Word operator+(Word a, Word b) { return {a.mask ^ b.mask}; }
    friend Word operator&(Word a, Word b) { return {a.mask & b.mask}; }
    friend bool operator==(Word, Word) = default;
    friend auto operator<=>(Word, Word) = default;
};

inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Binary linear code of length n <= 64, kept in reduced echelon form.
class Code {
public:
    Code() = default;
    Code(int n, const std::vector<Mask>& generators);

    int length() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    // Echelon basis ordered by descending leading bit; each leading bit
    // appears in exactly one basis vector.
    const std::vector<Mask>& basis() const { return basis_; }
    bool contains(Mask w) const;
    // All 2^dim words, in Gray-code order starting at 0.
    std::vector<Mask> words() const;
    std::vector<int> weight_enumerator() const;

    bool operator==(const Code& o) const { return n_ == o.n_ && basis_ == o.basis_; }

private:
    Mask reduce(Mask w) const;
    int n_ = 0;
    std::vector<Mask> basis_;
};

}  // namespace ssk3
