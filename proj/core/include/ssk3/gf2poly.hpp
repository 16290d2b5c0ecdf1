#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssk3 {

// Polynomial over F_2 in the variable t, stored as packed bits.
class GF2Poly {
public:
    GF2Poly() = default;
    static GF2Poly from_bits(std::uint64_t low);
    static GF2Poly monomial(int degree);
    // Accepts "t^14+t^13+1"; whitespace ignored, repeated terms cancel.
    static GF2Poly parse(std::string_view text);

    int degree() const;  // -1 for zero
    bool is_zero() const { return words_.empty(); }
    bool coeff(int i) const;
    void set_coeff(int i, bool v);
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    GF2Poly operator+(const GF2Poly& o) const;
    GF2Poly operator*(const GF2Poly& o) const;
    GF2Poly operator%(const GF2Poly& m) const;
    GF2Poly operator/(const GF2Poly& m) const;
    std::pair<GF2Poly, GF2Poly> divmod(const GF2Poly& m) const;
    GF2Poly shifted(int k) const;

    bool is_irreducible() const;
    std::string to_string() const;

    bool operator==(const GF2Poly&) const = default;
    // Orders by degree, then by the integer read from the bits.
    std::strong_ordering operator<=>(const GF2Poly& o) const;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

GF2Poly gcd(GF2Poly a, GF2Poly b);
GF2Poly mulmod(const GF2Poly& a, const GF2Poly& b, const GF2Poly& m);

// Smallest irreducible polynomial of the given degree (as an integer).
GF2Poly smallest_irreducible(int degree);

}  // namespace ssk3
