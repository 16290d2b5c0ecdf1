#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "ssk3/gf2poly.hpp"

namespace ssk3 {

inline constexpr int kMaxFieldDegree = 64;

// Element of a binary field: bit i is the coefficient of alpha^i.
// Elements carry no field pointer; containers hold the FieldCtx.
struct FFElem {
    std::uint64_t bits = 0;

    bool is_zero() const { return bits == 0; }
    friend FFElem operator+(FFElem a, FFElem b) { return {a.bits ^ b.bits}; }
    friend FFElem operator-(FFElem a, FFElem b) { return {a.bits ^ b.bits}; }
    FFElem& operator+=(FFElem o) {
        bits ^= o.bits;
        return *this;
    }
    friend bool operator==(FFElem, FFElem) = default;
    friend auto operator<=>(FFElem, FFElem) = default;
};

// F_2[t]/(f) for an irreducible f of degree 1..64. Cheap to copy.
class FieldCtx {
public:
    // The prime field, defined by t+1 so that its generator is 1.
    FieldCtx();
    static FieldCtx create(const GF2Poly& def_poly);
    static FieldCtx create(std::string_view def_poly) { return create(GF2Poly::parse(def_poly)); }
    // Field defined by the smallest irreducible polynomial of the degree.
    static FieldCtx standard(int degree);

    int degree() const;
    const GF2Poly& def_poly() const;
    std::uint64_t size_minus_one() const;  // 2^m - 1 (wraps for m = 64)

    FFElem zero() const { return {}; }
    FFElem one() const { return {1}; }
    FFElem generator() const;
    FFElem from_bits(std::uint64_t bits) const;  // throws if out of range

    FFElem mul(FFElem a, FFElem b) const;
    FFElem sqr(FFElem a) const { return mul(a, a); }
    FFElem inv(FFElem a) const;  // throws DivisionByZero
    FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }
    FFElem pow(FFElem a, std::uint64_t e) const;
    FFElem frobenius(FFElem a, int k = 1) const;  // a^(2^k)
    FFElem sqrt(FFElem a) const;
    int trace(FFElem a) const;  // absolute trace to F_2

    std::string format(FFElem a) const;          // "a^5+a^3+a+1"
    FFElem parse(std::string_view text) const;   // inverse of format

    bool operator==(const FieldCtx& o) const;
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    struct Impl;

private:
    explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace ssk3
