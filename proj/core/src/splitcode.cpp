#include "ssk3/splitcode.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "linalg.hpp"
#include "ssk3/errors.hpp"

namespace ssk3 {

namespace {

using detail::Row;

Row monomial_row(const FieldCtx& F, const Point3& p, const std::vector<Exponents>& mons) {
    Row r;
    r.reserve(mons.size());
    for (const auto& e : mons) r.push_back(F.mul(F.pow(p[0], e[0]), F.mul(F.pow(p[1], e[1]), F.pow(p[2], e[2]))));
    return r;
}

HomPoly3 form_from(const FieldCtx& F, int degree, const Row& coeffs) {
    HomPoly3 h(F, degree);
    auto mons = monomials(degree);
    for (std::size_t i = 0; i < mons.size(); ++i) h.add_term(mons[i], coeffs[i]);
    return h;
}

Mask triple_mask(const std::array<int, 3>& t) {
    return (Mask{1} << t[0]) | (Mask{1} << t[1]) | (Mask{1} << t[2]);
}

// coll[i][j]: points k with {i, j, k} collinear.
std::vector<std::vector<Mask>> collinear_table(const ZLocus& z) {
    std::size_t n = z.points.size();
    std::vector<std::vector<Mask>> t(n, std::vector<Mask>(n, 0));
    for (const auto& c : z.collinear) {
        t[c[0]][c[1]] |= Mask{1} << c[2];
        t[c[1]][c[0]] |= Mask{1} << c[2];
        t[c[0]][c[2]] |= Mask{1} << c[1];
        t[c[2]][c[0]] |= Mask{1} << c[1];
        t[c[1]][c[2]] |= Mask{1} << c[0];
        t[c[2]][c[1]] |= Mask{1} << c[0];
    }
    return t;
}

// Depth-first scan over k-subsets with no collinear triple whose evaluation
// rows have deficiency (size - rank) at most `max_deficiency`.
class SubsetScan {
public:
    SubsetScan(const ZLocus& z, int degree, int k, int max_deficiency)
        : z_(z), k_(k), max_def_(max_deficiency), coll_(collinear_table(z)),
          ech_(z.common_field, static_cast<int>(monomials(degree).size())) {
        auto mons = monomials(degree);
        for (const auto& p : z.points) rows_.push_back(monomial_row(z.common_field, p, mons));
    }

    template <class Leaf>
    void run(Leaf&& leaf) {
        chosen_.clear();
        dfs(0, 0, 0, leaf);
    }

    const std::vector<Row>& rows() const { return rows_; }

private:
    template <class Leaf>
    void dfs(int start, Mask chosen, Mask forbidden, Leaf& leaf) {
        int depth = static_cast<int>(chosen_.size());
        if (depth == k_) {
            leaf(chosen, ech_.rank());
            return;
        }
        int n = z_.size();
        for (int p = start; p + (k_ - depth) <= n; ++p) {
            if ((forbidden >> p) & 1U) continue;
            Mask f = forbidden;
            for (int i : chosen_) f |= coll_[i][p];
            bool added = ech_.add(rows_[p]);
            if (depth + 1 - ech_.rank() <= max_def_) {
                chosen_.push_back(p);
                dfs(p + 1, chosen | (Mask{1} << p), f, leaf);
                chosen_.pop_back();
            }
            if (added) ech_.pop();
        }
    }

    const ZLocus& z_;
    int k_, max_def_;
    std::vector<std::vector<Mask>> coll_;
    detail::Echelon ech_;
    std::vector<Row> rows_;
    std::vector<int> chosen_;
};

std::vector<Row> rows_of(const std::vector<Row>& all, Mask m) {
    std::vector<Row> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1U) out.push_back(all[static_cast<std::size_t>(i)]);
    return out;
}

bool has_collinear_triple(Mask w, const ZLocus& z) {
    for (const auto& t : z.collinear) {
        Mask tm = triple_mask(t);
        if ((w & tm) == tm) return true;
    }
    return false;
}

template <class T>
std::set<Mask> mask_set(const std::vector<T>& v) {
    std::set<Mask> s;
    for (const auto& x : v) s.insert(x.word.mask);
    return s;
}

}  // namespace

std::vector<LineWitness> find_lines(const ZLocus& z) {
    const FieldCtx& F = z.common_field;
    std::map<Mask, Point3> found;
    for (const auto& t : z.collinear) {
        const Point3& a = z.points[t[0]];
        const Point3& b = z.points[t[1]];
        Point3 l{F.mul(a[1], b[2]) + F.mul(a[2], b[1]), F.mul(a[2], b[0]) + F.mul(a[0], b[2]),
                 F.mul(a[0], b[1]) + F.mul(a[1], b[0])};
        l = normalize(F, l);
        Mask m = 0;
        for (int k = 0; k < z.size(); ++k) {
            const Point3& c = z.points[k];
            if ((F.mul(l[0], c[0]) + F.mul(l[1], c[1]) + F.mul(l[2], c[2])).is_zero()) m |= Mask{1} << k;
        }
        found.emplace(m, l);
    }
    std::vector<LineWitness> out;
    for (const auto& [m, l] : found) {
        if (std::popcount(m) != z.b - 1)
            throw InternalInconsistency("a line meets Z(dG) in " + std::to_string(std::popcount(m)) +
                                        " points; expected at most " + std::to_string((z.b - 2) / 2) + " or " +
                                        std::to_string(z.b - 1));
        out.push_back({Word{m}, l});
    }
    return out;
}

std::vector<ConicWitness> find_conics(const ZLocus& z) {
    const FieldCtx& F = z.common_field;
    SubsetScan scan(z, 2, 8, 3);
    std::vector<ConicWitness> out;
    scan.run([&](Mask chosen, int rank) {
        if (rank == 6) return;
        if (rank < 5) throw InternalInconsistency("eight points without collinear triple on a pencil of conics");
        auto ns = detail::nullspace(F, rows_of(scan.rows(), chosen), 6);
        out.push_back({Word{chosen}, form_from(F, 2, ns.at(0))});
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
    return out;
}

bool pencil_splits(const ZLocus& z, const HomPoly3& cubic1, const HomPoly3& cubic2) {
    HomPoly3 gm = z.g.embedded(z.coeff_embedding);
    return equiv_mod_squares(cubic1 * cubic2, gm).has_value();
}

std::vector<PencilWitness> find_pencils(const ZLocus& z) {
    const FieldCtx& F = z.common_field;
    SubsetScan scan(z, 3, 9, 1);
    std::vector<PencilWitness> out;
    scan.run([&](Mask chosen, int rank) {
        if (rank != 8) return;
        auto ns = detail::nullspace(F, rows_of(scan.rows(), chosen), 10);
        HomPoly3 c1 = form_from(F, 3, ns.at(0));
        HomPoly3 c2 = form_from(F, 3, ns.at(1));
        if (pencil_splits(z, c1, c2)) out.push_back({Word{chosen}, c1, c2});
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
    return out;
}

Code assemble_code(const ZLocus& z, const SplitCensus& s) {
    std::vector<Mask> gens{full_mask(z.size())};
    for (const auto& w : s.lines) gens.push_back(w.word.mask);
    for (const auto& w : s.conics) gens.push_back(w.word.mask);
    for (const auto& w : s.pencils) gens.push_back(w.word.mask);
    Code code(z.size(), gens);
    auto we = code.weight_enumerator();
    for (std::size_t w = 0; w < we.size(); ++w) {
        if (we[w] == 0) continue;
        if (std::find(kAllowedWeights.begin(), kAllowedWeights.end(), static_cast<int>(w)) == kAllowedWeights.end())
            throw WeightViolation("the code contains " + std::to_string(we[w]) + " words of weight " +
                                  std::to_string(w));
    }
    return code;
}

std::vector<Word> irreducible_words(const Code& code, const ZLocus& z, int weight) {
    std::vector<Word> out;
    for (Mask w : code.words())
        if (std::popcount(w) == weight && !has_collinear_triple(w, z)) out.push_back({w});
    std::sort(out.begin(), out.end());
    return out;
}

ClassifiedWords classify_words(const Code& code) {
    std::vector<Mask> all = code.words();
    std::vector<Mask> w5, w8all, w9all;
    for (Mask w : all) {
        int p = std::popcount(w);
        if (p == 5) w5.push_back(w);
        if (p == 8) w8all.push_back(w);
        if (p == 9) w9all.push_back(w);
    }
    std::unordered_set<Mask> red8, red9;
    for (std::size_t i = 0; i < w5.size(); ++i)
        for (std::size_t j = i + 1; j < w5.size(); ++j)
            if (std::popcount(w5[i] ^ w5[j]) == 8) red8.insert(w5[i] ^ w5[j]);
    for (Mask a : w5)
        for (Mask b : w8all)
            if (std::popcount(a ^ b) == 9) red9.insert(a ^ b);
    ClassifiedWords c;
    c.w5 = w5;
    for (Mask w : w8all)
        if (!red8.count(w)) c.w8.push_back(w);
    for (Mask w : w9all)
        if (!red9.count(w)) c.w9.push_back(w);
    std::sort(c.w5.begin(), c.w5.end());
    std::sort(c.w8.begin(), c.w8.end());
    std::sort(c.w9.begin(), c.w9.end());
    return c;
}

ConfigInvariants config_invariants(const Code& code) {
    ClassifiedWords c = classify_words(code);
    ConfigInvariants inv;
    inv.sigma = 11 - code.dim();
    inv.l = static_cast<int>(c.w5.size());
    inv.q = static_cast<int>(c.w8.size());
    inv.e = static_cast<int>(c.w9.size());
    auto pc = [](Mask m) { return std::popcount(m); };
    const auto& L = c.w5;
    const auto& Q = c.w8;
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j)
            for (std::size_t k = j + 1; k < L.size(); ++k)
                if (pc(L[i] & L[j] & L[k]) == 1) ++inv.tl;
    for (Mask a : L)
        for (Mask b : Q)
            if ((a & b) == 0) ++inv.lq;
    std::size_t nq = Q.size();
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = i + 1; j < nq; ++j) {
            int ij = pc(Q[i] & Q[j]);
            if (ij == 2) ++inv.qq;
            if (ij != 2 && ij != 4) continue;
            for (std::size_t k = j + 1; k < nq; ++k) {
                if (pc(Q[i] & Q[k]) != ij || pc(Q[j] & Q[k]) != ij) continue;
                if (ij == 2) ++inv.tq2;
                if (ij == 4 && pc(Q[i] & Q[j] & Q[k]) == 3) ++inv.tq1;
            }
        }
    return inv;
}

Mask apply_permutation(Mask w, const std::vector<int>& perm) {
    Mask r = 0;
    for (int i = 0; w; ++i, w >>= 1)
        if (w & 1U) r |= Mask{1} << perm[static_cast<std::size_t>(i)];
    return r;
}

std::vector<int> word_orbits(const std::vector<Word>& words, const ZLocus& z) {
    std::map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i].mask] = i;
    std::vector<int> id(words.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (id[i] >= 0) continue;
        Mask w = words[i].mask;
        do {
            auto it = index.find(w);
            if (it == index.end()) throw InternalInconsistency("word set is not Frobenius stable");
            id[it->second] = next;
            w = apply_permutation(w, z.frobenius_perm);
        } while (w != words[i].mask);
        ++next;
    }
    return id;
}

std::vector<int> orbit_sizes(const std::vector<int>& orbit_ids) {
    std::vector<int> sizes;
    for (int id : orbit_ids) {
        if (id >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(id) + 1, 0);
        ++sizes[static_cast<std::size_t>(id)];
    }
    return sizes;
}

Analysis analyze(const HomPoly3& g, const ZLocusOptions& opts) {
    if (g.degree() != 6) throw std::invalid_argument("code analysis needs a sextic");
    Analysis a;
    a.z = compute_zlocus(g, opts);
    a.split.lines = find_lines(a.z);
    a.split.conics = find_conics(a.z);
    a.split.pencils = find_pencils(a.z);
    a.code = assemble_code(a.z, a.split);
    a.invariants = config_invariants(a.code);

    ClassifiedWords c = classify_words(a.code);
    auto as_set = [](const std::vector<Mask>& v) { return std::set<Mask>(v.begin(), v.end()); };
    auto words_set = [](const std::vector<Word>& v) {
        std::set<Mask> s;
        for (auto w : v) s.insert(w.mask);
        return s;
    };
    if (as_set(c.w5) != mask_set(a.split.lines))
        throw InternalInconsistency("weight-5 code words differ from splitting lines");
    std::set<Mask> geo8 = words_set(irreducible_words(a.code, a.z, 8));
    if (geo8 != mask_set(a.split.conics) || geo8 != as_set(c.w8))
        throw InternalInconsistency("irreducible weight-8 words differ from splitting conics");
    std::set<Mask> geo9 = words_set(irreducible_words(a.code, a.z, 9));
    if (geo9 != mask_set(a.split.pencils) || geo9 != as_set(c.w9))
        throw InternalInconsistency("irreducible weight-9 words differ from splitting pencils");
    return a;
}

}  // namespace ssk3
