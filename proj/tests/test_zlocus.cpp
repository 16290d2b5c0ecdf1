#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "ssk3/errors.hpp"
#include "ssk3/zlocus.hpp"

using namespace ssk3;

namespace {

using Key = std::array<std::uint64_t, 3>;

Key key(const Point3& p) { return {p[0].bits, p[1].bits, p[2].bits}; }

// Exhaustive search for common zeros of the partials over P^2(F).
std::set<Key> brute_force_locus(const HomPoly3& g, const FieldCtx& F) {
    Embedding emb = Embedding::create(g.field(), F);
    std::array<HomPoly3, 3> d{partial(g, 0), partial(g, 1), partial(g, 2)};
    std::set<Key> out;
    std::uint64_t q = F.size_minus_one() + 1;
    auto test = [&](Point3 p) {
        for (auto& dv : d)
            if (!dv.evaluate(p, emb).is_zero()) return;
        out.insert(key(p));
    };
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y) test({FFElem{x}, FFElem{y}, F.one()});
    for (std::uint64_t x = 0; x < q; ++x) test({FFElem{x}, F.one(), F.zero()});
    test({F.one(), F.zero(), F.zero()});
    return out;
}

std::set<Key> keys(const ZLocus& z) {
    std::set<Key> s;
    for (auto& p : z.points) s.insert(key(p));
    return s;
}

std::multiset<int> orbit_sizes(const ZLocus& z) {
    std::multiset<int> s;
    for (auto& o : frobenius_orbits(z)) s.insert(static_cast<int>(o.size()));
    return s;
}

int index_of(const ZLocus& z, const Point3& p) {
    auto it = std::find(z.points.begin(), z.points.end(), p);
    return it == z.points.end() ? -1 : static_cast<int>(it - z.points.begin());
}

void check_invariants(const ZLocus& z) {
    ASSERT_EQ(z.size(), expected_point_count(z.b));
    for (int v = 0; v < 3; ++v) {
        HomPoly3 d = partial(z.g, v);
        for (auto& p : z.points) EXPECT_TRUE(d.evaluate(p, z.coeff_embedding).is_zero());
    }
    for (auto& p : z.points) {
        EXPECT_FALSE(local_mixed_coefficient(z, p).is_zero());
        EXPECT_EQ(normalize(z.common_field, p), p);
    }
    // Frobenius^(m/mK) = identity
    int steps = z.common_field.degree() / z.g.field().degree();
    for (int i = 0; i < z.size(); ++i) {
        int j = i;
        for (int s = 0; s < steps; ++s) j = z.frobenius_perm[j];
        EXPECT_EQ(j, i);
    }
}

}  // namespace

TEST(ZLocus, GdkIsPG24) {
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kGdk));
    check_invariants(z);
    EXPECT_EQ(z.common_field.degree(), 2);
    EXPECT_EQ(keys(z), brute_force_locus(z.g, z.common_field));
    EXPECT_EQ(z.collinear.size(), 210u);
    EXPECT_EQ(evaluation_rank(z, 5), 18);
    // 7 rational points fixed, 14 swapped in pairs
    std::multiset<int> expect;
    for (int i = 0; i < 7; ++i) expect.insert(1);
    for (int i = 0; i < 7; ++i) expect.insert(2);
    EXPECT_EQ(orbit_sizes(z), expect);
}

TEST(ZLocus, SquareSexticIsNotInU) {
    EXPECT_THROW(compute_zlocus(HomPoly3::parse("X0^6")), NotInU);
    EXPECT_THROW(compute_zlocus(HomPoly3::parse("X0^3*X1^3")), NotInU);
    EXPECT_THROW(compute_zlocus(HomPoly3::parse("X0^5*X1")), NotInU);
}

TEST(ZLocus, ConicsExampleMatchesBruteForce) {
    FieldCtx F = FieldCtx::create(fixtures::kConics45Field);
    ZLocusOptions opts{GF2Poly::parse(fixtures::kConics45Field)};
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kConics45), opts);
    check_invariants(z);
    EXPECT_EQ(keys(z), brute_force_locus(z.g, F));
    const FieldCtx& M = z.common_field;
    auto pt = [&](const char* x, const char* y, const char* w) { return Point3{M.parse(x), M.parse(y), M.parse(w)}; };
    EXPECT_GE(index_of(z, pt("a^5+a^3+a+1", "a^3+a^2+a+1", "1")), 0);
    EXPECT_GE(index_of(z, pt("1", "1", "1")), 0);
    EXPECT_GE(index_of(z, pt("1", "0", "1")), 0);
    EXPECT_GE(index_of(z, pt("a^4+a^3+a^2+a", "a+1", "1")), 0);
    EXPECT_GE(index_of(z, pt("0", "0", "1")), 0);
    EXPECT_GE(index_of(z, pt("a^5+a^4+a^3+a^2+1", "a^5+a^4+a^3+a^2+a", "1")), 0);
    EXPECT_EQ(orbit_sizes(z), (std::multiset<int>{1, 1, 1, 6, 6, 6}));
    EXPECT_EQ(evaluation_rank(z, 5), 18);
}

TEST(ZLocus, Sigma2OverF16MatchesBruteForce) {
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kSigma2));
    check_invariants(z);
    EXPECT_EQ(z.common_field.degree(), 4);
    EXPECT_EQ(keys(z), brute_force_locus(z.g, z.common_field));
}

TEST(ZLocus, SevenLinesExampleOrbits) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kSevenField)};
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kSeven), opts);
    check_invariants(z);
    EXPECT_EQ(orbit_sizes(z), (std::multiset<int>{7, 14}));
    const FieldCtx& M = z.common_field;
    Point3 p0{M.parse(fixtures::kSevenP0[0]), M.parse(fixtures::kSevenP0[1]), M.one()};
    Point3 p7{M.parse(fixtures::kSevenP7[0]), M.parse(fixtures::kSevenP7[1]), M.one()};
    EXPECT_GE(index_of(z, p0), 0);
    EXPECT_GE(index_of(z, p7), 0);
    EXPECT_EQ(evaluation_rank(z, 5), 18);
}

TEST(ZLocus, TrivialCodeExample) {
    ZLocusOptions opts{GF2Poly::parse(fixtures::kTrivialField)};
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kTrivial), opts);
    check_invariants(z);
    EXPECT_EQ(orbit_sizes(z), (std::multiset<int>{1, 20}));
    const FieldCtx& M = z.common_field;
    EXPECT_EQ(z.points[0], (Point3{M.zero(), M.zero(), M.one()}));
    Point3 p{M.parse(fixtures::kTrivialP[0]), M.parse(fixtures::kTrivialP[1]), M.one()};
    EXPECT_GE(index_of(z, p), 0);
    EXPECT_TRUE(z.collinear.empty());
}

TEST(ZLocus, TwinExampleOrbits) {
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kSevenTwin));
    check_invariants(z);
    EXPECT_EQ(z.common_field.degree(), 24);
    EXPECT_EQ(orbit_sizes(z), (std::multiset<int>{1, 1, 3, 4, 4, 8}));
}

TEST(ZLocus, DefaultFieldAgreesWithRequestedField) {
    ZLocus a = compute_zlocus(HomPoly3::parse(fixtures::kPencils));
    ZLocusOptions opts{GF2Poly::parse(fixtures::kPencilsField)};
    ZLocus b = compute_zlocus(HomPoly3::parse(fixtures::kPencils), opts);
    EXPECT_EQ(a.common_field.degree(), 14);
    EXPECT_EQ(orbit_sizes(a), orbit_sizes(b));
    EXPECT_EQ(a.collinear.size(), b.collinear.size());
    EXPECT_THROW(compute_zlocus(HomPoly3::parse(fixtures::kPencils), ZLocusOptions{GF2Poly::parse("t^7+t+1")}),
                 IncompatibleFields);
}

TEST(ZLocus, CollinearTriplesByDeterminant) {
    FieldCtx F2;
    std::vector<Point3> pts{{F2.one(), F2.zero(), F2.zero()}, {F2.zero(), F2.one(), F2.zero()},
                            {F2.one(), F2.one(), F2.zero()}, {F2.zero(), F2.zero(), F2.one()}};
    auto t = collinear_triples(F2, pts);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0], (std::array<int, 3>{0, 1, 2}));
}

TEST(ZLocus, DegreeTenGdk) {
    ZLocus z = compute_zlocus(HomPoly3::parse(fixtures::kGdk8));
    check_invariants(z);
    EXPECT_EQ(z.size(), 73);
    EXPECT_EQ(z.common_field.degree(), 3);
    EXPECT_EQ(keys(z), brute_force_locus(z.g, z.common_field));
}
