#pragma once

#include <utility>
#include <vector>

#include "ssk3/field.hpp"

namespace ssk3 {

// Univariate polynomial over a binary field; coefficient i belongs to x^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(FieldCtx field) : field_(std::move(field)) {}
    UPoly(FieldCtx field, std::vector<FFElem> coeffs);
    static UPoly constant(const FieldCtx& field, FFElem c);
    static UPoly monomial(const FieldCtx& field, int degree, FFElem c);
    static UPoly x(const FieldCtx& field) { return monomial(field, 1, field.one()); }

    const FieldCtx& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FFElem coeff(int i) const;
    FFElem lead() const { return c_.empty() ? FFElem{} : c_.back(); }
    const std::vector<FFElem>& coeffs() const { return c_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const { return *this + o; }
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(FFElem s) const;
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly monic() const;
    UPoly derivative() const;
    FFElem eval(FFElem x) const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    FieldCtx field_;
    std::vector<FFElem> c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic, or zero
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod_x_2k(const UPoly& m, int k);  // x^(2^k) mod m

// Complete factorization into monic irreducibles with multiplicities,
// sorted by degree and then by coefficient bits. Deterministic.
std::vector<std::pair<UPoly, int>> factor_univariate(const UPoly& f);

// Field homomorphism sub -> sup sending the generator of sub to a fixed root
// of its defining polynomial. Identity when sub == sup; otherwise the root
// that is smallest when bits are compared from alpha^0 upward.
class Embedding {
public:
    Embedding() = default;
    static Embedding create(const FieldCtx& sub, const FieldCtx& sup);

    const FieldCtx& sub() const { return sub_; }
    const FieldCtx& sup() const { return sup_; }
    FFElem image_of_generator() const { return gen_image_; }
    FFElem operator()(FFElem a) const;
    UPoly operator()(const UPoly& p) const;

private:
    FieldCtx sub_, sup_;
    FFElem gen_image_{};
    std::vector<FFElem> basis_images_;  // images of alpha^i
};

// Distinct roots in emb.sup() of a polynomial over emb.sub(), ascending by bits.
std::vector<FFElem> roots_in(const UPoly& f, const Embedding& emb);
std::vector<FFElem> roots_in(const UPoly& f, const FieldCtx& target);

// Distinct roots of a polynomial that splits into distinct linear factors.
std::vector<FFElem> split_linear(const UPoly& f);

}  // namespace ssk3
