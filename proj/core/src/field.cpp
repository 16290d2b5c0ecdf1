#include "ssk3/field.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "clmul.hpp"
#include "ssk3/errors.hpp"

namespace ssk3 {

using detail::clmul;
using detail::u128;

struct FieldCtx::Impl {
    GF2Poly def_poly;
    int m = 1;
    std::uint64_t mask = 1;  // low m bits
    std::uint64_t r = 0;     // f = t^m + r
    std::uint64_t mu = 0;    // floor(t^(2m) / f) = t^m + mu
};

namespace {

std::shared_ptr<const FieldCtx::Impl> make_impl(const GF2Poly& f) {
    auto impl = std::make_shared<FieldCtx::Impl>();
    impl->def_poly = f;
    impl->m = f.degree();
    impl->mask = impl->m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << impl->m) - 1;
    GF2Poly rest = f + GF2Poly::monomial(impl->m);
    impl->r = rest.low_word();
    GF2Poly mu = GF2Poly::monomial(2 * impl->m) / f;
    impl->mu = (mu + GF2Poly::monomial(impl->m)).low_word();
    return impl;
}

const std::shared_ptr<const FieldCtx::Impl>& prime_impl() {
    static const auto impl = make_impl(GF2Poly::parse("t+1"));
    return impl;
}

}  // namespace

FieldCtx::FieldCtx() : impl_(prime_impl()) {}

FieldCtx FieldCtx::create(const GF2Poly& def_poly) {
    int m = def_poly.degree();
    if (m > kMaxFieldDegree)
        throw FieldCapExceeded("field degree " + std::to_string(m) + " exceeds 64");
    if (!def_poly.is_irreducible())
        throw NotIrreducible("'" + def_poly.to_string() + "' is not irreducible over F_2");
    if (def_poly == prime_impl()->def_poly) return FieldCtx(prime_impl());
    return FieldCtx(make_impl(def_poly));
}

FieldCtx FieldCtx::standard(int degree) {
    if (degree > kMaxFieldDegree)
        throw FieldCapExceeded("field degree " + std::to_string(degree) + " exceeds 64");
    if (degree < 1) throw NotIrreducible("field degree must be positive");
    static std::mutex mu;
    static std::map<int, FieldCtx> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    FieldCtx f = degree == 1 ? FieldCtx() : create(smallest_irreducible(degree));
    cache.emplace(degree, f);
    return f;
}

int FieldCtx::degree() const { return impl_->m; }
const GF2Poly& FieldCtx::def_poly() const { return impl_->def_poly; }
std::uint64_t FieldCtx::size_minus_one() const { return impl_->mask; }

FFElem FieldCtx::generator() const {
    if (impl_->m == 1) return {impl_->r};  // root of t + r
    return {2};
}

FFElem FieldCtx::from_bits(std::uint64_t bits) const {
    if (bits & ~impl_->mask) throw std::out_of_range("element bits exceed field degree");
    return {bits};
}

FFElem FieldCtx::mul(FFElem a, FFElem b) const {
    const Impl& f = *impl_;
    u128 p = clmul(a.bits, b.bits);
    if (f.m == 1) return {static_cast<std::uint64_t>(p) & 1U};
    // Barrett reduction; exact for polynomials of degree < 2m.
    auto q = static_cast<std::uint64_t>(p >> f.m);
    std::uint64_t quot = q ^ static_cast<std::uint64_t>(clmul(q, f.mu) >> f.m);
    auto low = static_cast<std::uint64_t>(p) ^ static_cast<std::uint64_t>(clmul(quot, f.r));
    return {low & f.mask};
}

FFElem FieldCtx::pow(FFElem a, std::uint64_t e) const {
    FFElem result = one();
    FFElem base = a;
    while (e) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FFElem FieldCtx::inv(FFElem a) const {
    if (a.is_zero()) throw DivisionByZero("inverse of zero");
    // a^(2^m - 2)
    return pow(a, impl_->mask - 1);
}

FFElem FieldCtx::frobenius(FFElem a, int k) const {
    k %= impl_->m;
    if (k < 0) k += impl_->m;
    for (int i = 0; i < k; ++i) a = mul(a, a);
    return a;
}

FFElem FieldCtx::sqrt(FFElem a) const { return frobenius(a, impl_->m - 1); }

int FieldCtx::trace(FFElem a) const {
    FFElem t = a;
    FFElem s = a;
    for (int i = 1; i < impl_->m; ++i) {
        s = mul(s, s);
        t += s;
    }
    return static_cast<int>(t.bits & 1U);
}

std::string FieldCtx::format(FFElem a) const {
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = 63; i >= 0; --i) {
        if (!((a.bits >> i) & 1U)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'a';
        else
            out += "a^" + std::to_string(i);
    }
    return out;
}

FFElem FieldCtx::parse(std::string_view text) const {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    for (char& c : s)
        if (c == 'a') c = 't';
    GF2Poly p = GF2Poly::parse(s);
    // reduce alpha^k for large k
    p = p % impl_->def_poly;
    return {p.low_word()};
}

bool FieldCtx::operator==(const FieldCtx& o) const {
    return impl_ == o.impl_ || impl_->def_poly == o.impl_->def_poly;
}

}  // namespace ssk3
