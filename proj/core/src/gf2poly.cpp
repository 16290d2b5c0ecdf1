#include "ssk3/gf2poly.hpp"

#include <bit>
#include <cctype>

#include "ssk3/errors.hpp"

namespace ssk3 {

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

GF2Poly GF2Poly::from_bits(std::uint64_t low) {
    GF2Poly p;
    if (low) p.words_.push_back(low);
    return p;
}

GF2Poly GF2Poly::monomial(int degree) {
    GF2Poly p;
    p.set_coeff(degree, true);
    return p;
}

void GF2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int GF2Poly::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

bool GF2Poly::coeff(int i) const {
    if (i < 0) return false;
    std::size_t w = static_cast<std::size_t>(i) / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1U;
}

void GF2Poly::set_coeff(int i, bool v) {
    std::size_t w = static_cast<std::size_t>(i) / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v)
        words_[w] |= bit;
    else
        words_[w] &= ~bit;
    trim();
}

GF2Poly GF2Poly::operator+(const GF2Poly& o) const {
    GF2Poly r = words_.size() >= o.words_.size() ? *this : o;
    const GF2Poly& s = words_.size() >= o.words_.size() ? o : *this;
    for (std::size_t i = 0; i < s.words_.size(); ++i) r.words_[i] ^= s.words_[i];
    r.trim();
    return r;
}

GF2Poly GF2Poly::shifted(int k) const {
    if (is_zero()) return {};
    GF2Poly r;
    std::size_t ws = static_cast<std::size_t>(k) / 64;
    int bs = k % 64;
    r.words_.assign(words_.size() + ws + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + ws] ^= words_[i] << bs;
        if (bs) r.words_[i + ws + 1] ^= words_[i] >> (64 - bs);
    }
    r.trim();
    return r;
}

GF2Poly GF2Poly::operator*(const GF2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    GF2Poly r;
    r.words_.assign(words_.size() + o.words_.size() + 1, 0);
    for (int i = 0; i <= degree(); ++i) {
        if (!coeff(i)) continue;
        std::size_t ws = static_cast<std::size_t>(i) / 64;
        int bs = i % 64;
        for (std::size_t j = 0; j < o.words_.size(); ++j) {
            r.words_[j + ws] ^= o.words_[j] << bs;
            if (bs) r.words_[j + ws + 1] ^= o.words_[j] >> (64 - bs);
        }
    }
    r.trim();
    return r;
}

std::pair<GF2Poly, GF2Poly> GF2Poly::divmod(const GF2Poly& m) const {
    if (m.is_zero()) throw DivisionByZero("division by the zero polynomial");
    GF2Poly q, r = *this;
    int dm = m.degree();
    while (r.degree() >= dm) {
        int s = r.degree() - dm;
        q.set_coeff(s, true);
        r = r + m.shifted(s);
    }
    return {q, r};
}

GF2Poly GF2Poly::operator%(const GF2Poly& m) const { return divmod(m).second; }
GF2Poly GF2Poly::operator/(const GF2Poly& m) const { return divmod(m).first; }

std::strong_ordering GF2Poly::operator<=>(const GF2Poly& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

GF2Poly gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
        GF2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

GF2Poly mulmod(const GF2Poly& a, const GF2Poly& b, const GF2Poly& m) { return (a * b) % m; }

bool GF2Poly::is_irreducible() const {
    int n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!coeff(0)) return false;
    const GF2Poly x = monomial(1);
    // x^(2^k) mod f for k = 0..n
    std::vector<GF2Poly> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = x % *this;
    for (int k = 1; k <= n; ++k) frob[k] = mulmod(frob[k - 1], frob[k - 1], *this);
    if (frob[n] != frob[0]) return false;
    for (int p : prime_divisors(n)) {
        GF2Poly g = gcd(*this, frob[n / p] + frob[0]);
        if (g.degree() != 0) return false;
    }
    return true;
}

std::string GF2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 't';
        else
            out += "t^" + std::to_string(i);
    }
    return out;
}

GF2Poly GF2Poly::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty polynomial");
    GF2Poly out;
    std::size_t i = 0;
    auto read_int = [&](std::size_t& pos) {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected exponent in '" + s + "'");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 100000) throw ParseError("exponent too large");
        }
        return static_cast<int>(v);
    };
    while (true) {
        int e;
        if (i < s.size() && s[i] == 't') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = read_int(i);
            }
        } else if (i < s.size() && (s[i] == '0' || s[i] == '1')) {
            e = s[i] == '1' ? 0 : -1;
            ++i;
        } else {
            throw ParseError("unexpected token in '" + s + "'");
        }
        if (e >= 0) out.set_coeff(e, !out.coeff(e));
        if (i == s.size()) break;
        if (s[i] != '+') throw ParseError("expected '+' in '" + s + "'");
        ++i;
    }
    return out;
}

GF2Poly smallest_irreducible(int degree) {
    if (degree < 1) throw NotIrreducible("no irreducible polynomial of degree < 1");
    if (degree == 1) return GF2Poly::parse("t+1");
    GF2Poly base = GF2Poly::monomial(degree);
    for (std::uint64_t low = 1;; low += 2) {
        GF2Poly cand = base + GF2Poly::from_bits(low);
        if (cand.is_irreducible()) return cand;
    }
}

}  // namespace ssk3
