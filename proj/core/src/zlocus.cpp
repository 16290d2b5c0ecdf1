#include "ssk3/zlocus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "linalg.hpp"
#include "ssk3/errors.hpp"

namespace ssk3 {

namespace {

// Polynomial in y whose coefficients are polynomials in x.
using BiPoly = std::vector<UPoly>;

void trim(BiPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Sets variable `chart` to 1 and maps variables vx, vy to x, y.
BiPoly dehomogenize(const HomPoly3& h, int vx, int vy) {
    BiPoly f(static_cast<std::size_t>(h.degree()) + 1, UPoly(h.field()));
    for (const auto& [e, c] : h.terms()) {
        auto& slot = f[static_cast<std::size_t>(e[vy])];
        slot = slot + UPoly::monomial(h.field(), e[vx], c);
    }
    trim(f);
    return f;
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw InternalInconsistency("inexact division in Bareiss elimination");
    return q;
}

// Sylvester resultant in y by fraction-free elimination over K[x].
UPoly resultant_y(const BiPoly& f, const BiPoly& g, const FieldCtx& K) {
    int p = static_cast<int>(f.size()) - 1, q = static_cast<int>(g.size()) - 1;
    int n = p + q;
    if (n == 0) return UPoly::constant(K, K.one());
    std::vector<std::vector<UPoly>> m(static_cast<std::size_t>(n),
                                      std::vector<UPoly>(static_cast<std::size_t>(n), UPoly(K)));
    for (int r = 0; r < q; ++r)
        for (int i = 0; i <= p; ++i) m[r][r + p - i] = f[static_cast<std::size_t>(i)];
    for (int r = 0; r < p; ++r)
        for (int i = 0; i <= q; ++i) m[q + r][r + q - i] = g[static_cast<std::size_t>(i)];
    UPoly prev = UPoly::constant(K, K.one());
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return UPoly(K);
        std::swap(m[piv], m[k]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[k][k] + m[i][k] * m[k][j], prev);
            m[i][k] = UPoly(K);
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

UPoly specialize_x(const BiPoly& f, FFElem x0, const Embedding& emb) {
    std::vector<FFElem> c;
    for (const auto& coef : f) c.push_back(emb(coef).eval(x0));
    return UPoly(emb.sup(), std::move(c));
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

struct NeedExtension {
    int factor_degree;
};

// Roots in the target field of a polynomial over it; reports the degree of
// any irreducible factor that does not split there.
std::vector<FFElem> split_or_extend(const UPoly& g) {
    std::vector<FFElem> roots;
    for (const auto& [h, mult] : factor_univariate(g)) {
        if (h.degree() > 1) throw NeedExtension{h.degree()};
        roots.push_back(h.coeff(0));  // monic linear x + c has root c
    }
    return roots;
}

// Affine points of V(f0, f1) in the chart, as (x, y) pairs.
std::vector<std::pair<FFElem, FFElem>> chart_points(const BiPoly& f0, const BiPoly& f1, const UPoly& res,
                                                     const Embedding& emb) {
    std::vector<std::pair<FFElem, FFElem>> out;
    if (f0.empty() && f1.empty()) throw NotInU("the partials vanish on a whole chart");
    for (FFElem x0 : roots_in(res, emb)) {
        UPoly g0 = specialize_x(f0, x0, emb);
        UPoly g1 = specialize_x(f1, x0, emb);
        if (g0.is_zero() && g1.is_zero()) throw NotInU("the partials share a vertical line component");
        UPoly g = gcd(g0, g1);
        if (g.degree() <= 0) continue;
        for (FFElem y0 : split_or_extend(g)) out.emplace_back(x0, y0);
    }
    return out;
}

// Resultant for one chart route, or nullopt if the chart has no points.
std::optional<UPoly> route_resultant(const BiPoly& f0, const BiPoly& f1, const FieldCtx& K) {
    auto is_const = [](const BiPoly& f) { return f.size() == 1 && f[0].degree() == 0; };
    if (f0.empty() && f1.empty()) throw NotInU("the partials vanish on a whole chart");
    if (f0.empty() || f1.empty()) {
        const BiPoly& other = f0.empty() ? f1 : f0;
        if (is_const(other)) return std::nullopt;
        throw NotInU("a single partial cuts out a curve in the chart");
    }
    if (f0.size() == 1 && f1.size() == 1) {
        // both free of y: common roots in x would give whole vertical lines
        if (gcd(f0[0], f1[0]).degree() > 0) throw NotInU("the partials share a vertical line component");
        return std::nullopt;
    }
    UPoly r = resultant_y(f0, f1, K);
    if (r.is_zero()) throw NotInU("the partials share a curve component");
    return r;
}

std::uint64_t point_key(const Point3& p, int v) { return p[static_cast<std::size_t>(v)].bits; }

}  // namespace

Point3 normalize(const FieldCtx& F, Point3 p) {
    for (int v = 2; v >= 0; --v) {
        if (p[v].is_zero()) continue;
        FFElem inv = F.inv(p[v]);
        for (auto& c : p) c = F.mul(c, inv);
        return p;
    }
    throw std::invalid_argument("the zero vector is not a projective point");
}

std::vector<std::array<int, 3>> collinear_triples(const FieldCtx& F, const std::vector<Point3>& pts) {
    std::vector<std::array<int, 3>> out;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Point3& a = pts[i];
            const Point3& b = pts[j];
            // line through a and b
            Point3 l{F.mul(a[1], b[2]) + F.mul(a[2], b[1]), F.mul(a[2], b[0]) + F.mul(a[0], b[2]),
                     F.mul(a[0], b[1]) + F.mul(a[1], b[0])};
            for (int k = j + 1; k < n; ++k) {
                const Point3& c = pts[k];
                if ((F.mul(l[0], c[0]) + F.mul(l[1], c[1]) + F.mul(l[2], c[2])).is_zero())
                    out.push_back({i, j, k});
            }
        }
    return out;
}

FFElem local_mixed_coefficient(const ZLocus& z, const Point3& p) {
    int c = 2;
    while (p[c].is_zero()) --c;
    int i = c == 0 ? 1 : 0;
    int j = c == 2 ? 1 : 2;
    return hasse_mixed(z.g, i, j).evaluate(p, z.coeff_embedding);
}

ZLocus compute_zlocus(const HomPoly3& g, const ZLocusOptions& opts) {
    const int b = g.degree();
    if (b < 4 || b % 2) throw std::invalid_argument("degree must be even and at least 4");
    const FieldCtx& K = g.field();
    const int mK = K.degree();
    std::array<HomPoly3, 3> d{partial(g, 0), partial(g, 1), partial(g, 2)};
    if (d[0].is_zero() && d[1].is_zero() && d[2].is_zero()) throw NotInU("all partials vanish identically");

    // route A: chart X2 = 1, eliminate X1; route B: eliminate X0
    BiPoly a0 = dehomogenize(d[0], 0, 1), a1 = dehomogenize(d[1], 0, 1);
    BiPoly b0 = dehomogenize(d[0], 1, 0), b1 = dehomogenize(d[1], 1, 0);
    auto resA = route_resultant(a0, a1, K);
    auto resB = route_resultant(b0, b1, K);

    // line X2 = 0: points [x, 1, 0]
    std::array<UPoly, 3> inf;
    for (int v = 0; v < 3; ++v) {
        std::vector<FFElem> c(static_cast<std::size_t>(b));
        for (const auto& [e, co] : d[v].terms())
            if (e[2] == 0) c[static_cast<std::size_t>(e[0])] += co;
        inf[v] = UPoly(K, c);
    }
    UPoly hinf = gcd(gcd(inf[0], inf[1]), inf[2]);
    if (inf[0].is_zero() && inf[1].is_zero() && inf[2].is_zero())
        throw NotInU("the partials vanish on the line X2 = 0");
    Point3 e0{K.one(), K.zero(), K.zero()};
    bool has_e0 = d[0].evaluate(e0).is_zero() && d[1].evaluate(e0).is_zero() && d[2].evaluate(e0).is_zero();

    int D = mK;
    auto absorb = [&](const std::optional<UPoly>& r) {
        if (!r) return;
        for (const auto& [h, mult] : factor_univariate(*r)) D = lcm_int(D, mK * h.degree());
    };
    absorb(resA);
    absorb(resB);
    if (hinf.degree() > 0) absorb(hinf);

    ZLocus z;
    z.b = b;
    z.g = g;
    std::set<std::array<std::uint64_t, 3>> seenA, seenB;
    for (;;) {
        if (D > kMaxFieldDegree)
            throw FieldCapExceeded("common field degree " + std::to_string(D) + " exceeds 64");
        FieldCtx M;
        if (opts.field_poly) {
            if (opts.field_poly->degree() != D)
                throw IncompatibleFields("requested common field has degree " +
                                         std::to_string(opts.field_poly->degree()) + " but the points need " +
                                         std::to_string(D));
            M = FieldCtx::create(*opts.field_poly);
        } else {
            M = D == mK ? K : FieldCtx::standard(D);
        }
        Embedding emb = Embedding::create(K, M);
        std::vector<Point3> pts;
        try {
            seenA.clear();
            seenB.clear();
            if (resA)
                for (auto [x, y] : chart_points(a0, a1, *resA, emb)) {
                    pts.push_back({x, y, M.one()});
                    seenA.insert({x.bits, y.bits, 1});
                }
            if (resB)
                for (auto [x, y] : chart_points(b0, b1, *resB, emb)) seenB.insert({y.bits, x.bits, 1});
            if (hinf.degree() > 0)
                for (FFElem x : split_or_extend(emb(hinf))) pts.push_back({x, M.one(), M.zero()});
        } catch (const NeedExtension& ext) {
            D = lcm_int(D, D * ext.factor_degree);
            continue;
        }
        if (seenA != seenB) throw DegenerateCharts("the two elimination orders disagree on the affine points");
        if (has_e0) pts.push_back({M.one(), M.zero(), M.zero()});
        z.common_field = M;
        z.coeff_embedding = emb;
        z.points = std::move(pts);
        break;
    }

    const FieldCtx& M = z.common_field;
    for (const auto& p : z.points) {
        for (const auto& dv : d)
            if (!dv.evaluate(p, z.coeff_embedding).is_zero())
                throw InternalInconsistency("a computed point is not a zero of every partial");
        if (local_mixed_coefficient(z, p).is_zero()) throw NotInU("Z(dG) is not reduced at a point");
    }
    int n = expected_point_count(b);
    if (z.size() < n)
        throw NotInU("Z(dG) has " + std::to_string(z.size()) + " points, fewer than " + std::to_string(n));
    if (z.size() > n) throw InternalInconsistency("Z(dG) has more points than its length");

    // order by orbit size, then coordinates
    auto frob = [&](const Point3& p) {
        return Point3{M.frobenius(p[0], mK), M.frobenius(p[1], mK), M.frobenius(p[2], mK)};
    };
    auto orbit_size = [&](const Point3& p) {
        int s = 1;
        for (Point3 q = frob(p); q != p; q = frob(q)) ++s;
        return s;
    };
    std::vector<std::pair<int, Point3>> keyed;
    for (const auto& p : z.points) keyed.emplace_back(orbit_size(p), p);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        for (int v = 0; v < 3; ++v)
            if (point_key(x.second, v) != point_key(y.second, v)) return point_key(x.second, v) < point_key(y.second, v);
        return false;
    });
    for (int i = 0; i < n; ++i) z.points[i] = keyed[i].second;
    z.frobenius_perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point3 q = frob(z.points[i]);
        auto it = std::find(z.points.begin(), z.points.end(), q);
        if (it == z.points.end()) throw InternalInconsistency("Z(dG) is not Frobenius stable");
        z.frobenius_perm[i] = static_cast<int>(it - z.points.begin());
    }
    z.collinear = collinear_triples(M, z.points);
    return z;
}

std::vector<std::vector<int>> frobenius_orbits(const ZLocus& z) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(z.points.size(), false);
    for (int i = 0; i < z.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orb;
        for (int j = i; !seen[j]; j = z.frobenius_perm[j]) {
            seen[j] = true;
            orb.push_back(j);
        }
        orbits.push_back(std::move(orb));
    }
    std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return orbits;
}

int evaluation_rank(const ZLocus& z, int degree) {
    const FieldCtx& M = z.common_field;
    auto mons = monomials(degree);
    std::vector<detail::Row> rows;
    for (const auto& p : z.points) {
        detail::Row r;
        for (const auto& e : mons) r.push_back(M.mul(M.pow(p[0], e[0]), M.mul(M.pow(p[1], e[1]), M.pow(p[2], e[2]))));
        rows.push_back(std::move(r));
    }
    return detail::rank(M, std::move(rows));
}

}  // namespace ssk3
