#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssk3/field.hpp"
#include "ssk3/upoly.hpp"

namespace ssk3 {

using Exponents = std::array<int, 3>;
using Point3 = std::array<FFElem, 3>;

// Graded reverse lexicographic order with X0 > X1 > X2; "less" puts the
// larger monomial first so that map iteration is the canonical order.
struct GrevlexFirst {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// All exponent triples of total degree d in canonical order.
std::vector<Exponents> monomials(int degree);

class HomPoly3 {
public:
    using Terms = std::map<Exponents, FFElem, GrevlexFirst>;

    HomPoly3() = default;
    HomPoly3(FieldCtx field, int degree) : field_(std::move(field)), degree_(degree) {}
    // Grammar: terms c*X0^i*X1^j*X2^k joined by '+'. The coefficient is a
    // product of a, a^e, 1 and parenthesised alpha-polynomials.
    static HomPoly3 parse(std::string_view text, const FieldCtx& field = FieldCtx());

    const FieldCtx& field() const { return field_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    FFElem coeff(const Exponents& e) const;
    void add_term(const Exponents& e, FFElem c);

    HomPoly3 operator+(const HomPoly3& o) const;
    HomPoly3 operator*(const HomPoly3& o) const;
    HomPoly3 scaled(FFElem s) const;
    HomPoly3 embedded(const Embedding& emb) const;

    FFElem evaluate(const Point3& p) const;
    // Point coordinates live in emb.sup().
    FFElem evaluate(const Point3& p, const Embedding& emb) const;

    std::string format() const;
    bool operator==(const HomPoly3& o) const;

private:
    FieldCtx field_;
    int degree_ = 0;
    Terms terms_;
};

// Polynomial with no all-even monomial.
struct BarPoly {
    HomPoly3 poly;
};

HomPoly3 partial(const HomPoly3& g, int axis);
// Divided derivative with orders k: coefficient prod C(e_v, k_v) mod 2.
HomPoly3 hasse_derivative(const HomPoly3& g, const Exponents& orders);
HomPoly3 hasse_mixed(const HomPoly3& g, int i, int j);
BarPoly bar_reduce(const HomPoly3& g);
// c with bar(g1) = c * bar(g2), if any. Both must be over the same field.
std::optional<FFElem> equiv_mod_squares(const HomPoly3& g1, const HomPoly3& g2);

}  // namespace ssk3
