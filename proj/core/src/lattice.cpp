#include "ssk3/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "ssk3/errors.hpp"

namespace ssk3 {

namespace mp = boost::multiprecision;

std::int64_t pairing_twice(const DyadicVec& v, const DyadicVec& w) {
    std::size_t h = v.size() - 1;
    std::int64_t s = v[h] * w[h];
    for (std::size_t i = 0; i < h; ++i) s -= v[i] * w[i];
    return s;
}

DyadicVec lift(Mask word, int n) {
    DyadicVec v(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (word >> i) & 1U;
    v[static_cast<std::size_t>(n)] = std::popcount(word) % 2;
    return v;
}

namespace {

// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> egcd(std::int64_t a, std::int64_t b) {
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Mask lift_mask(Mask word, int n) {
    return word | (static_cast<Mask>(std::popcount(word) % 2) << n);
}

// Reduced echelon basis over F_2 (descending leading bit).
std::vector<Mask> f2_basis(const std::vector<Mask>& gens) {
    std::vector<Mask> b;
    for (Mask g : gens) {
        for (Mask x : b)
            if ((g >> (63 - std::countl_zero(x))) & 1U) g ^= x;
        if (!g) continue;
        int t = 63 - std::countl_zero(g);
        for (Mask& x : b)
            if ((x >> t) & 1U) x ^= g;
        b.push_back(g);
        std::sort(b.begin(), b.end(), std::greater<>());
    }
    return b;
}

Mask f2_reduce(Mask g, const std::vector<Mask>& basis) {
    for (Mask x : basis)
        if ((g >> (63 - std::countl_zero(x))) & 1U) g ^= x;
    return g;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    if (rows.empty()) return rows;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        // gather the gcd of column c (rows r..) into row r
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            auto [g, x, y] = egcd(rows[r][c], rows[i][c]);
            std::int64_t a = rows[r][c] / g, b = rows[i][c] / g;
            for (std::size_t j = c; j < ncols; ++j) {
                std::int64_t u = rows[r][j], v = rows[i][j];
                rows[r][j] = x * u + y * v;
                rows[i][j] = -b * u + a * v;
            }
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& e : rows[r]) e = -e;
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t q = floor_div(rows[i][c], rows[r][c]);
            if (q == 0) continue;
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

DyadicLattice lattice_from_code(const Code& code) {
    DyadicLattice lat;
    lat.n = code.length();
    lat.code = code;
    int dim = lat.n + 1;
    IntMatrix gens;
    for (Mask w : code.basis()) gens.push_back(lift(w, lat.n));
    for (int i = 0; i < dim; ++i) {
        DyadicVec v(static_cast<std::size_t>(dim), 0);
        v[static_cast<std::size_t>(i)] = 2;
        gens.push_back(v);
    }
    lat.basis = hermite_normal_form(gens);
    if (static_cast<int>(lat.basis.size()) != dim) throw InternalInconsistency("lattice basis is not of full rank");
    lat.gram.assign(static_cast<std::size_t>(dim), std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::int64_t t = pairing_twice(lat.basis[i], lat.basis[j]);
            if (t % 2 != 0) throw NotIntegral("a pairing of the lifted code is not an integer");
            lat.gram[i][j] = t / 2;
        }
    return lat;
}

DiscSign disc_and_signature(const DyadicLattice& lat) {
    std::size_t n = lat.gram.size();
    std::vector<std::vector<mp::cpp_int>> m(n, std::vector<mp::cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = lat.gram[i][j];
    mp::cpp_int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return {0, 0};
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mp::cpp_int det = sign * m[n - 1][n - 1];
    if (mp::abs(det) > mp::cpp_int(std::numeric_limits<std::int64_t>::max()))
        throw InternalInconsistency("determinant exceeds 64 bits");
    auto d = det.convert_to<std::int64_t>();
    return {d, d > 0 ? 1 : (d < 0 ? -1 : 0)};
}

bool is_even(const DyadicLattice& lat) {
    bool diag = true;
    for (std::size_t i = 0; i < lat.gram.size(); ++i)
        if (lat.gram[i][i] % 2 != 0) diag = false;
    bool weights = true;
    auto we = lat.code.weight_enumerator();
    for (std::size_t w = 0; w < we.size(); ++w)
        if (we[w] && w % 4 != 0 && w % 4 != 1) weights = false;
    if (diag != weights) throw InternalInconsistency("evenness tests disagree");
    return diag;
}

bool is_type_I(const DyadicLattice& lat) {
    std::size_t n = lat.gram.size();
    std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = lat.gram[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw InternalInconsistency("degenerate Gram matrix");
        std::swap(a[p], a[c]);
        mp::cpp_rational inv = 1 / a[c][c];
        for (auto& e : a[c]) e *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            mp::cpp_rational f = a[i][c];
            for (std::size_t j = c; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    // dual basis f_i = sum_j (G^-1)_ij b_j, so f_i . f_i = (G^-1)_ii
    for (std::size_t i = 0; i < n; ++i)
        if (mp::denominator(a[i][n + i]) != 1) return false;
    return true;
}

int DiscriminantForm::q_halves(Mask x) const {
    Mask pts = x & full_mask(n);
    int alpha = static_cast<int>((x >> n) & 1U);
    int k = -std::popcount(pts) + alpha;
    return ((k % 4) + 4) % 4;
}

int DiscriminantForm::b_halves(Mask x, Mask y) const {
    Mask both = x & y & full_mask(n);
    int a = static_cast<int>((x >> n) & (y >> n) & 1U);
    int k = -std::popcount(both) + a;
    return ((k % 2) + 2) % 2;
}

DiscriminantForm discriminant_form(const DyadicLattice& lat) {
    if (!is_even(lat)) throw NotEven("the discriminant quadratic form needs an even lattice");
    DiscriminantForm d;
    d.n = lat.n;
    int len = lat.n + 1;
    std::vector<Mask> lifted;
    for (Mask w : lat.code.basis()) lifted.push_back(lift_mask(w, lat.n));
    d.lifted_code = f2_basis(lifted);
    for (Mask a : d.lifted_code)
        for (Mask b : d.lifted_code)
            if (std::popcount(a & b) % 2) throw InternalInconsistency("lifted code is not self-orthogonal");
    // orthogonal complement by brute elimination over F_2
    std::vector<Mask> perp;
    {
        std::vector<Mask> rows = d.lifted_code;
        // solve rows * x = 0: free variables are non-leading positions
        std::vector<int> lead;
        for (Mask r : rows) lead.push_back(63 - std::countl_zero(r));
        for (int f = 0; f < len; ++f) {
            if (std::find(lead.begin(), lead.end(), f) != lead.end()) continue;
            Mask x = Mask{1} << f;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if ((rows[i] >> f) & 1U) x |= Mask{1} << lead[i];
            perp.push_back(x);
        }
    }
    // complete lifted code to a basis of perp
    std::vector<Mask> span = d.lifted_code;
    for (Mask p : perp) {
        if (f2_reduce(p, f2_basis(span)) == 0) continue;
        span.push_back(p);
        d.generators.push_back(p);
    }
    for (Mask a : d.lifted_code)
        if (d.q_halves(a) != 0) throw InternalInconsistency("lifted code is not isotropic");
    return d;
}

}  // namespace ssk3
