#include "ssk3/poly3.hpp"

#include <cctype>

#include "ssk3/errors.hpp"

namespace ssk3 {

bool GrevlexFirst::operator()(const Exponents& a, const Exponents& b) const {
    int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[1] != b[1]) return a[1] < b[1];
    return a[0] > b[0];
}

std::vector<Exponents> monomials(int degree) {
    std::vector<Exponents> out;
    for (int k = 0; k <= degree; ++k)
        for (int j = 0; j + k <= degree; ++j) out.push_back({degree - j - k, j, k});
    return out;
}

FFElem HomPoly3::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FFElem{} : it->second;
}

void HomPoly3::add_term(const Exponents& e, FFElem c) {
    if (e[0] + e[1] + e[2] != degree_) throw MixedDegree("monomial degree does not match polynomial degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomPoly3 HomPoly3::operator+(const HomPoly3& o) const {
    if (field_ != o.field_) throw IncompatibleFields("adding polynomials over different fields");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree_ != o.degree_) throw MixedDegree("adding polynomials of different degrees");
    HomPoly3 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

HomPoly3 HomPoly3::operator*(const HomPoly3& o) const {
    if (field_ != o.field_) throw IncompatibleFields("multiplying polynomials over different fields");
    HomPoly3 r(field_, degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, field_.mul(c1, c2));
    return r;
}

HomPoly3 HomPoly3::scaled(FFElem s) const {
    HomPoly3 r(field_, degree_);
    for (const auto& [e, c] : terms_) r.add_term(e, field_.mul(c, s));
    return r;
}

HomPoly3 HomPoly3::embedded(const Embedding& emb) const {
    if (emb.sub() != field_) throw IncompatibleFields("embedding source differs from coefficient field");
    HomPoly3 r(emb.sup(), degree_);
    for (const auto& [e, c] : terms_) r.add_term(e, emb(c));
    return r;
}

namespace {

FFElem eval_terms(const HomPoly3& g, const Point3& p, const FieldCtx& F, const Embedding* emb) {
    int d = g.degree();
    std::array<std::vector<FFElem>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(static_cast<std::size_t>(d) + 1);
        pw[v][0] = F.one();
        for (int i = 1; i <= d; ++i) pw[v][i] = F.mul(pw[v][i - 1], p[v]);
    }
    FFElem acc{};
    for (const auto& [e, c] : g.terms()) {
        FFElem m = F.mul(pw[0][e[0]], F.mul(pw[1][e[1]], pw[2][e[2]]));
        acc += F.mul(emb ? (*emb)(c) : c, m);
    }
    return acc;
}

}  // namespace

FFElem HomPoly3::evaluate(const Point3& p) const { return eval_terms(*this, p, field_, nullptr); }

FFElem HomPoly3::evaluate(const Point3& p, const Embedding& emb) const {
    if (emb.sub() != field_) throw IncompatibleFields("embedding source differs from coefficient field");
    return eval_terms(*this, p, emb.sup(), &emb);
}

bool HomPoly3::operator==(const HomPoly3& o) const {
    return field_ == o.field_ && terms_ == o.terms_ && (degree_ == o.degree_ || terms_.empty());
}

std::string HomPoly3::format() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string term;
        if (c != field_.one()) {
            std::string cs = field_.format(c);
            bool compound = cs.find('+') != std::string::npos;
            term = compound ? "(" + cs + ")" : cs;
        }
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!term.empty()) term += '*';
            term += "X" + std::to_string(v);
            if (e[v] > 1) term += "^" + std::to_string(e[v]);
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

HomPoly3 HomPoly3::parse(std::string_view text, const FieldCtx& field) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty polynomial");
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError(what + " at position " + std::to_string(pos) + " in '" + s + "'");
    };
    auto read_int = [&]() {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1000000) throw fail("exponent too large");
        }
        return static_cast<int>(v);
    };
    auto read_pow = [&]() {
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            return read_int();
        }
        return 1;
    };
    auto uses_alpha = [&]() {
        if (field.degree() == 1) throw fail("alpha is not available over F_2");
    };

    struct Term {
        Exponents e{0, 0, 0};
        FFElem c;
    };
    std::vector<Term> terms;
    while (true) {
        Term t{{0, 0, 0}, field.one()};
        while (true) {
            if (pos >= s.size()) throw fail("unexpected end");
            char ch = s[pos];
            if (ch == 'X') {
                ++pos;
                if (pos >= s.size() || s[pos] < '0' || s[pos] > '2') throw fail("expected variable index 0..2");
                int v = s[pos++] - '0';
                t.e[v] += read_pow();
            } else if (ch == 'a') {
                uses_alpha();
                ++pos;
                t.c = field.mul(t.c, field.pow(field.generator(), static_cast<std::uint64_t>(read_pow())));
            } else if (ch == '(') {
                std::size_t close = s.find(')', pos);
                if (close == std::string::npos) throw fail("unbalanced parenthesis");
                std::string inner = s.substr(pos + 1, close - pos - 1);
                if (inner.find('X') != std::string::npos || inner.find('(') != std::string::npos)
                    throw fail("parentheses are only allowed around coefficients");
                if (inner.find('a') != std::string::npos) uses_alpha();
                FFElem c;
                try {
                    c = field.parse(inner);
                } catch (const ParseError&) {
                    throw fail("bad coefficient");
                }
                t.c = field.mul(t.c, c);
                pos = close + 1;
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                int v = read_int();
                if (v % 2 == 0) t.c = field.zero();
            } else {
                throw fail("unexpected character");
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        terms.push_back(t);
        if (pos == s.size()) break;
        if (s[pos] != '+') throw fail("expected '+'");
        ++pos;
    }
    int degree = terms.front().e[0] + terms.front().e[1] + terms.front().e[2];
    HomPoly3 g(field, degree);
    for (const auto& t : terms) {
        if (t.e[0] + t.e[1] + t.e[2] != degree) throw MixedDegree("terms of different degrees in '" + s + "'");
        g.add_term(t.e, t.c);
    }
    return g;
}

HomPoly3 partial(const HomPoly3& g, int axis) {
    Exponents k{0, 0, 0};
    k[static_cast<std::size_t>(axis)] = 1;
    return hasse_derivative(g, k);
}

HomPoly3 hasse_derivative(const HomPoly3& g, const Exponents& orders) {
    int total = orders[0] + orders[1] + orders[2];
    HomPoly3 r(g.field(), std::max(0, g.degree() - total));
    for (const auto& [e, c] : g.terms()) {
        bool odd = true;
        for (int v = 0; v < 3; ++v) {
            // C(n, k) mod 2 is 1 iff k's bits are a subset of n's (Lucas)
            if (orders[v] > e[v] || (e[v] & orders[v]) != orders[v]) odd = false;
        }
        if (!odd) continue;
        r.add_term({e[0] - orders[0], e[1] - orders[1], e[2] - orders[2]}, c);
    }
    return r;
}

HomPoly3 hasse_mixed(const HomPoly3& g, int i, int j) {
    Exponents k{0, 0, 0};
    k[static_cast<std::size_t>(i)] += 1;
    k[static_cast<std::size_t>(j)] += 1;
    return hasse_derivative(g, k);
}

BarPoly bar_reduce(const HomPoly3& g) {
    HomPoly3 r(g.field(), g.degree());
    for (const auto& [e, c] : g.terms())
        if (e[0] % 2 || e[1] % 2 || e[2] % 2) r.add_term(e, c);
    return {r};
}

std::optional<FFElem> equiv_mod_squares(const HomPoly3& g1, const HomPoly3& g2) {
    if (g1.field() != g2.field()) throw IncompatibleFields("embed both polynomials into a common field first");
    const HomPoly3 b1 = bar_reduce(g1).poly;
    const HomPoly3 b2 = bar_reduce(g2).poly;
    if (b1.terms().size() != b2.terms().size()) return std::nullopt;
    if (b1.is_zero()) return g1.field().one();
    const FieldCtx& F = g1.field();
    auto it1 = b1.terms().begin();
    auto it2 = b2.terms().begin();
    if (it1->first != it2->first) return std::nullopt;
    FFElem c = F.div(it1->second, it2->second);
    for (; it1 != b1.terms().end(); ++it1, ++it2) {
        if (it1->first != it2->first) return std::nullopt;
        if (F.mul(c, it2->second) != it1->second) return std::nullopt;
    }
    return c;
}

}  // namespace ssk3
