#include "ssk3/upoly.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "ssk3/errors.hpp"

namespace ssk3 {

UPoly::UPoly(FieldCtx field, std::vector<FFElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
}

UPoly UPoly::constant(const FieldCtx& field, FFElem c) { return UPoly(field, {c}); }

UPoly UPoly::monomial(const FieldCtx& field, int degree, FFElem c) {
    std::vector<FFElem> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UPoly(field, std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FFElem UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator+(const UPoly& o) const {
    if (field_ != o.field_) throw IncompatibleFields("adding polynomials over different fields");
    UPoly r = c_.size() >= o.c_.size() ? *this : o;
    const UPoly& s = c_.size() >= o.c_.size() ? o : *this;
    for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] += s.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (field_ != o.field_) throw IncompatibleFields("multiplying polynomials over different fields");
    if (is_zero() || o.is_zero()) return UPoly(field_);
    std::vector<FFElem> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += field_.mul(c_[i], o.c_[j]);
    }
    return UPoly(field_, std::move(r));
}

UPoly UPoly::scaled(FFElem s) const {
    std::vector<FFElem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], s);
    return UPoly(field_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (field_ != d.field_) throw IncompatibleFields("dividing polynomials over different fields");
    std::vector<FFElem> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {UPoly(field_), *this};
    std::vector<FFElem> q(static_cast<std::size_t>(degree() - dd) + 1);
    FFElem li = field_.inv(d.lead());
    for (int i = degree(); i >= dd; --i) {
        FFElem c = r[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        FFElem f = field_.mul(c, li);
        q[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] += field_.mul(f, d.c_[static_cast<std::size_t>(j)]);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
}

UPoly UPoly::derivative() const {
    std::vector<FFElem> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(i % 2 ? c_[i] : FFElem{});
    return UPoly(field_, std::move(r));
}

FFElem UPoly::eval(FFElem x) const {
    FFElem acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.mul(acc, x) + c_[i];
    return acc;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod_x_2k(const UPoly& m, int k) {
    UPoly h = UPoly::x(m.field()) % m;
    for (int i = 0; i < k; ++i) h = mulmod(h, h, m);
    return h;
}

namespace {

bool is_one(const UPoly& p) { return p.degree() == 0 && p.lead() == p.field().one(); }

// Square root of a polynomial whose odd coefficients vanish.
UPoly poly_sqrt(const UPoly& f) {
    std::vector<FFElem> r;
    for (int i = 0; i <= f.degree(); i += 2) r.push_back(f.field().sqrt(f.coeff(i)));
    return UPoly(f.field(), std::move(r));
}

void squarefree(const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
    if (f.degree() <= 0) return;
    UPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree(poly_sqrt(f), 2 * mult, out);
        return;
    }
    UPoly c = gcd(f, d);
    UPoly w = f / c;
    int i = 1;
    while (!is_one(w)) {
        UPoly y = gcd(w, c);
        UPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (!is_one(c)) squarefree(poly_sqrt(c), 2 * mult, out);
}

// Random polynomial of degree < n, seeded per call site.
UPoly random_poly(const FieldCtx& F, int n, std::mt19937_64& rng) {
    std::vector<FFElem> v(static_cast<std::size_t>(n));
    for (auto& e : v) e = {rng() & F.size_minus_one()};
    return UPoly(F, std::move(v));
}

// Splits a product of distinct irreducibles of degree d by trace maps.
void equal_degree(const UPoly& g, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FieldCtx& F = g.field();
    int steps = F.degree() * d;
    for (;;) {
        UPoly a = random_poly(F, g.degree(), rng);
        if (a.degree() <= 0) continue;
        UPoly t = a;
        UPoly s = a;
        for (int i = 1; i < steps; ++i) {
            s = mulmod(s, s, g);
            t = t + s;
        }
        UPoly h = gcd(g, t);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

bool poly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::uint64_t bit_reverse(std::uint64_t v) {
    std::uint64_t r = 0;
    for (int i = 0; i < 64; ++i) r |= ((v >> i) & 1U) << (63 - i);
    return r;
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_univariate(const UPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::vector<std::pair<UPoly, int>> sqf;
    squarefree(f.monic(), 1, sqf);
    std::vector<std::pair<UPoly, int>> out;
    std::mt19937_64 rng(0x5eed5eedULL);
    const FieldCtx& F = f.field();
    for (auto& [g0, mult] : sqf) {
        UPoly g = g0;
        UPoly h = UPoly::x(F) % g;
        for (int i = 1; g.degree() >= 2 * i; ++i) {
            for (int k = 0; k < F.degree(); ++k) h = mulmod(h, h, g);
            UPoly dd = gcd(g, h + UPoly::x(F));
            if (dd.degree() > 0) {
                std::vector<UPoly> parts;
                equal_degree(dd, i, rng, parts);
                for (auto& p : parts) out.emplace_back(std::move(p), mult);
                g = g / dd;
                h = h % g;
            }
        }
        if (g.degree() > 0) out.emplace_back(g.monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

std::vector<FFElem> split_linear(const UPoly& f) {
    std::vector<FFElem> roots;
    if (f.degree() <= 0) return roots;
    const FieldCtx& F = f.field();
    if (f.degree() == 1) {
        roots.push_back(F.div(f.coeff(0), f.coeff(1)));
        return roots;
    }
    if (F.degree() == 1) {
        for (std::uint64_t v : {0ULL, 1ULL})
            if (f.eval({v}).is_zero()) roots.push_back({v});
        return roots;
    }
    UPoly g = f.monic();
    FFElem beta = F.one();
    for (int j = 0; j < F.degree(); ++j, beta = F.mul(beta, F.generator())) {
        UPoly bx = UPoly::monomial(F, 1, beta) % g;
        UPoly t = bx;
        UPoly s = bx;
        for (int i = 1; i < F.degree(); ++i) {
            s = mulmod(s, s, g);
            t = t + s;
        }
        UPoly h = gcd(g, t);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            auto a = split_linear(h);
            auto b = split_linear(g / h);
            a.insert(a.end(), b.begin(), b.end());
            std::sort(a.begin(), a.end());
            return a;
        }
    }
    throw InternalInconsistency("polynomial does not split into distinct linear factors");
}

std::vector<FFElem> roots_in(const UPoly& f, const Embedding& emb) {
    if (f.field() != emb.sub()) throw IncompatibleFields("polynomial field does not match embedding source");
    if (f.is_zero()) throw std::invalid_argument("the zero polynomial has every element as a root");
    UPoly g = emb(f).monic();
    if (g.degree() <= 0) return {};
    const FieldCtx& F = emb.sup();
    UPoly h = powmod_x_2k(g, F.degree()) + UPoly::x(F);
    UPoly s = gcd(g, h);
    auto roots = split_linear(s);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<FFElem> roots_in(const UPoly& f, const FieldCtx& target) {
    return roots_in(f, Embedding::create(f.field(), target));
}

Embedding Embedding::create(const FieldCtx& sub, const FieldCtx& sup) {
    if (sup.degree() % sub.degree() != 0)
        throw IncompatibleFields("F_2^" + std::to_string(sub.degree()) + " does not embed in F_2^" +
                                 std::to_string(sup.degree()));
    Embedding e;
    e.sub_ = sub;
    e.sup_ = sup;
    if (sub == sup) {
        e.gen_image_ = sup.generator();
    } else {
        const GF2Poly& f = sub.def_poly();
        std::vector<FFElem> c;
        for (int i = 0; i <= f.degree(); ++i) c.push_back(f.coeff(i) ? sup.one() : sup.zero());
        UPoly fp(sup, c);
        UPoly h = powmod_x_2k(fp, sup.degree()) + UPoly::x(sup);
        auto roots = split_linear(gcd(fp, h));
        if (roots.empty()) throw InternalInconsistency("defining polynomial has no root in target");
        e.gen_image_ = *std::min_element(roots.begin(), roots.end(), [](FFElem a, FFElem b) {
            return bit_reverse(a.bits) < bit_reverse(b.bits);
        });
    }
    FFElem p = sup.one();
    for (int i = 0; i < sub.degree(); ++i) {
        e.basis_images_.push_back(p);
        p = sup.mul(p, e.gen_image_);
    }
    return e;
}

FFElem Embedding::operator()(FFElem a) const {
    FFElem r{};
    for (std::size_t i = 0; i < basis_images_.size(); ++i)
        if ((a.bits >> i) & 1U) r += basis_images_[i];
    return r;
}

UPoly Embedding::operator()(const UPoly& p) const {
    if (p.field() != sub_) throw IncompatibleFields("polynomial field does not match embedding source");
    std::vector<FFElem> c;
    for (FFElem e : p.coeffs()) c.push_back((*this)(e));
    return UPoly(sup_, std::move(c));
}

}  // namespace ssk3
