#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "reference_labels.hpp"
#include "ssk3/errors.hpp"
#include "ssk3/splitcode.hpp"

using namespace ssk3;

namespace {

std::multiset<int> sizes_of(const std::vector<int>& ids) {
    auto s = orbit_sizes(ids);
    return {s.begin(), s.end()};
}

template <class T>
std::vector<Word> words_of(const std::vector<T>& v) {
    std::vector<Word> out;
    for (auto& x : v) out.push_back(x.word);
    return out;
}

template <class T>
bool has_word(const std::vector<T>& v, Mask m) {
    return std::any_of(v.begin(), v.end(), [&](const T& x) { return x.word.mask == m; });
}

Point3 pt(const FieldCtx& F, const char* x, const char* y, const char* w = "1") {
    return {F.parse(x), F.parse(y), F.parse(w)};
}

// All lines of PG(2,4) as point masks over the computed locus.
std::set<Mask> pg24_lines(const ZLocus& z) {
    const FieldCtx& F = z.common_field;
    std::set<Mask> lines;
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b)
            for (std::uint64_t c = 0; c < 4; ++c) {
                if (!a && !b && !c) continue;
                Mask m = 0;
                for (int i = 0; i < z.size(); ++i) {
                    auto& p = z.points[i];
                    if ((F.mul({a}, p[0]) + F.mul({b}, p[1]) + F.mul({c}, p[2])).is_zero()) m |= Mask{1} << i;
                }
                lines.insert(m);
            }
    return lines;
}

}  // namespace

TEST(Code, EchelonAndEnumerator) {
    Code c(5, {0b11000, 0b01100, 0b10100});
    EXPECT_EQ(c.dim(), 2);
    EXPECT_TRUE(c.contains(0b10100));
    EXPECT_FALSE(c.contains(0b00001));
    EXPECT_EQ(c.weight_enumerator(), (std::vector<int>{1, 0, 3, 0, 0, 0}));
    EXPECT_EQ(c.words().size(), 4u);
}

TEST(SplitCode, Gdk) {
    Analysis a = analyze(HomPoly3::parse(fixtures::kGdk));
    EXPECT_EQ(a.split.lines.size(), 21u);
    EXPECT_TRUE(a.split.conics.empty());
    EXPECT_TRUE(a.split.pencils.empty());
    EXPECT_EQ(a.code.dim(), 10);
    EXPECT_EQ(a.invariants, (ConfigInvariants{1, 21, 0, 0, 210, 0, 0, 0, 0}));
    // brute force over the incidence structure of PG(2,4)
    std::set<Mask> expect = pg24_lines(a.z);
    std::set<Mask> got;
    for (auto& l : a.split.lines) got.insert(l.word.mask);
    EXPECT_EQ(got, expect);
    // line orbits under squaring: 7 rational lines and 7 conjugate pairs
    EXPECT_EQ(sizes_of(word_orbits(words_of(a.split.lines), a.z)),
              (std::multiset<int>{1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2}));
    EXPECT_TRUE(irreducible_words(a.code, a.z, 8).empty());
}

TEST(SplitCode, SevenLinesSevenConics) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kSevenField)};
    Analysis a = analyze(HomPoly3::parse(fixtures::kSeven), opts);
    const FieldCtx& F = a.z.common_field;
    LabelMap lm;
    lm.add_orbit(a.z, pt(F, fixtures::kSevenP0[0], fixtures::kSevenP0[1]), 7);
    lm.add_orbit(a.z, pt(F, fixtures::kSevenP7[0], fixtures::kSevenP7[1]), 14);
    EXPECT_EQ(a.split.lines.size(), 7u);
    EXPECT_EQ(a.split.conics.size(), 7u);
    EXPECT_TRUE(has_word(a.split.lines, lm.mask({0, 1, 3, 7, 14})));
    EXPECT_TRUE(has_word(a.split.conics, lm.mask({7, 8, 9, 11, 14, 15, 16, 18})));
    EXPECT_EQ(a.invariants.sigma, 4);
    EXPECT_EQ(a.invariants.l, 7);
    EXPECT_EQ(a.invariants.q, 7);
    EXPECT_EQ(a.invariants.e, 0);
}

TEST(SplitCode, TrivialCode) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kTrivialField)};
    Analysis a = analyze(HomPoly3::parse(fixtures::kTrivial), opts);
    EXPECT_EQ(a.code.dim(), 1);
    EXPECT_EQ(a.invariants, (ConfigInvariants{10, 0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_TRUE(a.split.lines.empty());
    EXPECT_TRUE(a.split.conics.empty());
    EXPECT_TRUE(a.split.pencils.empty());
}

TEST(SplitCode, SevenPencils) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kPencilsField)};
    Analysis a = analyze(HomPoly3::parse(fixtures::kPencils), opts);
    const FieldCtx& F = a.z.common_field;
    LabelMap lm;
    lm.add_orbit(a.z, pt(F, fixtures::kPencilsP0[0], fixtures::kPencilsP0[1]), 14);
    lm.add_orbit(a.z, pt(F, fixtures::kPencilsP14[0], fixtures::kPencilsP14[1]), 7);
    ASSERT_EQ(a.split.pencils.size(), 7u);
    Mask A = lm.mask({0, 1, 3, 7, 8, 10, 14, 18, 19});
    std::set<Mask> expect;
    for (int v = 0; v < 7; ++v) {
        expect.insert(A);
        A = apply_permutation(A, a.z.frobenius_perm);
    }
    std::set<Mask> got;
    for (auto& p : a.split.pencils) got.insert(p.word.mask);
    EXPECT_EQ(got, expect);
    EXPECT_EQ(a.invariants.sigma, 7);
    EXPECT_EQ(a.invariants.e, 7);
    for (auto& p : a.split.pencils) EXPECT_EQ(a.z.size() - p.word.weight(), 12);
}

TEST(SplitCode, PencilDecisionIsBasisIndependent) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kPencilsField)};
    Analysis a = analyze(HomPoly3::parse(fixtures::kPencils), opts);
    const FieldCtx& F = a.z.common_field;
    std::mt19937_64 rng(1);
    for (auto& p : a.split.pencils) {
        for (int it = 0; it < 5; ++it) {
            FFElem c[4];
            for (auto& x : c) x = {rng() & F.size_minus_one()};
            if ((F.mul(c[0], c[3]) + F.mul(c[1], c[2])).is_zero()) continue;
            HomPoly3 e1 = p.cubic1.scaled(c[0]) + p.cubic2.scaled(c[1]);
            HomPoly3 e2 = p.cubic1.scaled(c[2]) + p.cubic2.scaled(c[3]);
            EXPECT_TRUE(pencil_splits(a.z, e1, e2));
        }
    }
}

TEST(SplitCode, FortyFiveConics) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kConics45Field)};
    Analysis a = analyze(HomPoly3::parse(fixtures::kConics45), opts);
    const FieldCtx& F = a.z.common_field;
    LabelMap lm;
    lm.add_orbit(a.z, pt(F, "a^5+a^3+a+1", "a^3+a^2+a+1"), 6);
    lm.add_orbit(a.z, pt(F, "1", "1"), 1);
    lm.add_orbit(a.z, pt(F, "1", "0"), 1);
    lm.add_orbit(a.z, pt(F, "a^4+a^3+a^2+a", "a+1"), 6);
    lm.add_orbit(a.z, pt(F, "0", "0"), 1);
    lm.add_orbit(a.z, pt(F, "a^5+a^4+a^3+a^2+1", "a^5+a^4+a^3+a^2+a"), 6);
    std::set<Mask> lines;
    for (auto& l : a.split.lines) lines.insert(l.word.mask);
    EXPECT_EQ(lines, (std::set<Mask>{lm.mask({0, 3, 6, 16, 19}), lm.mask({1, 4, 6, 17, 20}),
                                     lm.mask({2, 5, 6, 15, 18})}));
    EXPECT_EQ(a.split.conics.size(), 45u);
    EXPECT_EQ(irreducible_words(a.code, a.z, 8).size(), 45u);
    EXPECT_TRUE(irreducible_words(a.code, a.z, 9).empty());
    EXPECT_EQ(sizes_of(word_orbits(words_of(a.split.conics), a.z)),
              (std::multiset<int>{1, 6, 6, 2, 2, 6, 6, 3, 6, 6, 1}));
    EXPECT_EQ(a.invariants.sigma, 3);
    EXPECT_EQ(a.invariants.l, 3);
    EXPECT_EQ(a.invariants.q, 45);
    EXPECT_EQ(a.invariants.e, 0);

    // nullity 2 but the product test fails
    Mask B = lm.mask({0, 1, 2, 3, 7, 8, 9, 15, 20});
    EXPECT_FALSE(has_word(a.split.pencils, B));
    std::vector<std::vector<FFElem>> rows;
    auto mons = monomials(3);
    for (int i = 0; i < a.z.size(); ++i) {
        if (!((B >> i) & 1U)) continue;
        std::vector<FFElem> r;
        for (auto& e : mons) {
            auto& p = a.z.points[i];
            r.push_back(F.mul(F.pow(p[0], e[0]), F.mul(F.pow(p[1], e[1]), F.pow(p[2], e[2]))));
        }
        rows.push_back(r);
    }
    // rank 8 by brute elimination
    int rank = 0;
    for (int c = 0; c < 10 && rank < 9; ++c) {
        int piv = rank;
        while (piv < 9 && rows[piv][c].is_zero()) ++piv;
        if (piv == 9) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < 9; ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            FFElem f = F.div(rows[r][c], rows[rank][c]);
            for (int j = 0; j < 10; ++j) rows[r][j] += F.mul(f, rows[rank][j]);
        }
        ++rank;
    }
    EXPECT_EQ(rank, 8);
}

TEST(SplitCode, Sigma2) {
    Analysis a = analyze(HomPoly3::parse(fixtures::kSigma2));
    EXPECT_EQ(a.invariants.sigma, 2);
}

TEST(SplitCode, TwinOrbitsAndDistinctInvariants) {
    Analysis a = analyze(HomPoly3::parse(fixtures::kSevenTwin));
    EXPECT_EQ(sizes_of(word_orbits(words_of(a.split.lines), a.z)), (std::multiset<int>{1, 1, 1, 4}));
    EXPECT_EQ(sizes_of(word_orbits(words_of(a.split.conics), a.z)), (std::multiset<int>{1, 2, 4}));
    ZLocusOptions opts{GF2Poly::parse(fixtures::kSevenField)};
    Analysis b = analyze(HomPoly3::parse(fixtures::kSeven), opts);
    EXPECT_EQ(a.invariants.sigma, b.invariants.sigma);
    EXPECT_EQ(a.invariants.l, b.invariants.l);
    EXPECT_EQ(a.invariants.q, b.invariants.q);
    EXPECT_EQ(a.invariants.e, b.invariants.e);
    EXPECT_NE(a.invariants, b.invariants);
}

TEST(SplitCode, StructuralProperties) {
    for (const char* g : {fixtures::kGdk, fixtures::kSigma2, fixtures::kSevenTwin}) {
        Analysis a = analyze(HomPoly3::parse(g));
        for (std::size_t i = 0; i < a.split.lines.size(); ++i)
            for (std::size_t j = i + 1; j < a.split.lines.size(); ++j)
                EXPECT_EQ((a.split.lines[i].word & a.split.lines[j].word).weight(), 1);
        for (auto& l : a.split.lines) EXPECT_EQ(l.word.weight(), 1 * 5);
        for (auto& c : a.split.conics) EXPECT_EQ(c.word.weight(), 2 * 4);
        for (auto& t : a.z.collinear) {
            Mask tm = (Mask{1} << t[0]) | (Mask{1} << t[1]) | (Mask{1} << t[2]);
            EXPECT_TRUE(std::any_of(a.split.lines.begin(), a.split.lines.end(),
                                    [&](auto& l) { return (l.word.mask & tm) == tm; }));
        }
        auto words = a.code.words();
        for (Mask x : words)
            for (Mask y : words) {
                int w = std::popcount(x ^ y);
                EXPECT_NE(std::find(kAllowedWeights.begin(), kAllowedWeights.end(), w), kAllowedWeights.end());
            }
    }
}

TEST(SplitCode, WeightViolationIsReported) {
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kGdk));
    SplitCensus bogus;
    bogus.lines.push_back({Word{0b111}, {}});
    EXPECT_THROW(assemble_code(z, bogus), WeightViolation);
}

TEST(SplitCode, UnionOfTwoLinesIsReducible) {
    Analysis a = analyze(HomPoly3::parse(fixtures::kGdk));
    Word u = a.split.lines[0].word + a.split.lines[1].word;
    EXPECT_EQ(u.weight(), 8);
    auto irr = irreducible_words(a.code, a.z, 8);
    EXPECT_EQ(std::find(irr.begin(), irr.end(), u), irr.end());
}
