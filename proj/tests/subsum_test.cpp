#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rang/subsum.hpp"

using namespace rang;

namespace {

// Exponent of Z^3/M computed inside (Z/D)^3 for a multiple D of the index: BFS the
// subgroup generated by the rows, then find the least e with e·e_i in it for every i.
i64 exponent_by_enumeration(const IntMatrix& rows, i64 D) {
    auto key = [D](i64 a, i64 b, i64 c) { return (mod(a, D) * D + mod(b, D)) * D + mod(c, D); };
    std::vector<char> seen(static_cast<std::size_t>(D * D * D), 0);
    std::vector<i64> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        i64 k = queue[h];
        i64 a = k / (D * D), b = (k / D) % D, c = k % D;
        for (auto& r : rows) {
            i64 n = key(a + r[0], b + r[1], c + r[2]);
            if (!seen[n]) {
                seen[n] = 1;
                queue.push_back(n);
            }
        }
    }
    for (i64 e = 1; e <= D; ++e)
        if (seen[key(e, 0, 0)] && seen[key(0, e, 0)] && seen[key(0, 0, e)]) return e;
    return 0;
}

i64 det3(const Vec3& u, const Vec3& v, const Vec3& w) {
    Vec3 c = cross(v, w);
    return u[0] * c[0] + u[1] * c[1] + u[2] * c[2];
}

std::vector<int> random_subset(std::mt19937& rng, int n, int k) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

TEST(TermSets, SizesAndRange) {
    EXPECT_EQ(term_set("main").size(), 27u);
    EXPECT_EQ(term_set("3plus2").size(), 14u);
    EXPECT_EQ(term_set("abcd").size(), 8u);
    for (auto id : {"main", "3plus2", "abcd"})
        for (auto& v : term_set(id).exponents)
            for (auto x : v) EXPECT_TRUE(0 <= x && x <= 2);
}

TEST(Smith, Examples) {
    auto a = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(a.diagonal, (std::vector<i64>{1, 1, 1}));
    EXPECT_EQ(a.rank, 3);
    auto b = smith_normal_form({{2, 0}, {0, 3}});
    EXPECT_EQ(b.diagonal, (std::vector<i64>{1, 6}));
    auto c = smith_normal_form({{2, 4}, {6, 8}});
    EXPECT_EQ(c.diagonal, (std::vector<i64>{2, 4}));
    EXPECT_EQ(c.rank, 2);
    EXPECT_EQ(smith_normal_form({{0, 0, 0}}).rank, 0);
}

TEST(Smith, DiagonalDividesAndDeterminantMatches) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int it = 0; it < 500; ++it) {
        Vec3 u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)}, w{d(rng), d(rng), d(rng)};
        auto s = smith_normal_form({{u[0], u[1], u[2]}, {v[0], v[1], v[2]}, {w[0], w[1], w[2]}});
        for (std::size_t i = 1; i < s.diagonal.size(); ++i) EXPECT_EQ(s.diagonal[i] % s.diagonal[i - 1], 0);
        i64 det = std::abs(det3(u, v, w));
        if (det) {
            ASSERT_EQ(s.rank, 3);
            EXPECT_EQ(s.diagonal[0] * s.diagonal[1] * s.diagonal[2], det);
            EXPECT_EQ(s.diagonal[2], triple_exponent(u, v, w));
        } else {
            EXPECT_LT(s.rank, 3);
            EXPECT_EQ(triple_exponent(u, v, w), 0);
        }
    }
}

TEST(DifferenceModule, Examples) {
    TermSet t{"t", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}}};
    auto full = smith_normal_form(difference_module(t, {0, 1, 2, 3}));
    EXPECT_EQ(full.diagonal, (std::vector<i64>{1, 1, 1}));
    auto two = smith_normal_form(difference_module(t, {0, 4}));
    EXPECT_EQ(two.rank, 1);
    EXPECT_EQ(two.diagonal, (std::vector<i64>{2}));
    EXPECT_EQ(smith_normal_form(difference_module(t, {3})).rank, 0);
    EXPECT_THROW(difference_module(t, {}), EmptySubset);
}

TEST(DifferenceModule, IndependentOfBase) {
    auto t = term_set("main");
    std::mt19937 rng(5);
    for (int it = 0; it < 300; ++it) {
        auto s = random_subset(rng, 27, 2 + it % 6);
        auto ref = smith_normal_form(difference_module(t, s, 0));
        for (std::size_t b = 1; b < s.size(); ++b) {
            auto other = smith_normal_form(difference_module(t, s, b));
            EXPECT_EQ(other.diagonal, ref.diagonal);
        }
    }
}

TEST(Classify, Examples) {
    auto t = term_set("main");
    std::vector<int> all(27);
    std::iota(all.begin(), all.end(), 0);
    auto r = classify_subset(t, all);
    EXPECT_TRUE(r.finite);
    EXPECT_EQ(r.exponent, 1);

    TermSet plane{"plane", {{0, 0, 0}, {1, 1, 0}, {0, 0, 1}, {2, 2, 1}}};
    auto p = classify_subset(plane, {0, 1, 2, 3});
    EXPECT_FALSE(p.finite);
    EXPECT_EQ(p.direction, (Vec3{1, -1, 0}));

    auto one = classify_subset(t, {4});
    EXPECT_FALSE(one.finite);
    EXPECT_NE(one.direction, (Vec3{0, 0, 0}));
}

TEST(Classify, DirectionIsOrthogonalAndPrimitive) {
    auto t = term_set("main");
    std::mt19937 rng(7);
    int infinite = 0;
    for (int it = 0; it < 2000; ++it) {
        auto s = random_subset(rng, 27, 1 + it % 4);
        auto r = classify_subset(t, s);
        auto rows = difference_module(t, s);
        EXPECT_EQ(!r.finite, smith_normal_form(rows).rank < 3);
        if (r.finite) continue;
        ++infinite;
        auto a = r.direction;
        EXPECT_EQ(std::gcd(std::gcd(a[0], a[1]), a[2]), 1);
        for (auto x : a)
            if (x != 0) {
                EXPECT_GT(x, 0);
                break;
            }
        for (auto& row : rows) EXPECT_EQ(a[0] * row[0] + a[1] * row[1] + a[2] * row[2], 0);
    }
    EXPECT_GT(infinite, 500);
}

TEST(Classify, ExponentMatchesEnumerationOracle) {
    for (auto id : {"main", "3plus2", "abcd"}) {
        auto t = term_set(id);
        std::mt19937 rng(13);
        int checked = 0;
        for (int it = 0; it < 3000 && checked < 300; ++it) {
            auto s = random_subset(rng, static_cast<int>(t.size()), 4);
            auto rows = difference_module(t, s);
            i64 det = std::abs(det3({rows[0][0], rows[0][1], rows[0][2]}, {rows[1][0], rows[1][1], rows[1][2]},
                                    {rows[2][0], rows[2][1], rows[2][2]}));
            if (det == 0) continue;
            auto r = classify_subset(t, s);
            ASSERT_TRUE(r.finite);
            EXPECT_EQ(r.exponent, exponent_by_enumeration(rows, det)) << id;
            ++checked;
        }
        EXPECT_GT(checked, 50) << id;
    }
}

TEST(Classify, MonotoneUnderInclusion) {
    auto t = term_set("main");
    std::mt19937 rng(17);
    int pairs = 0;
    for (int it = 0; it < 3000; ++it) {
        auto big = random_subset(rng, 27, 4 + it % 8);
        std::vector<int> small(big.begin(), big.begin() + 3 + (it % (big.size() - 3)));
        auto rs = classify_subset(t, small), rb = classify_subset(t, big);
        if (rs.finite) {
            ASSERT_TRUE(rb.finite);
            EXPECT_EQ(rs.exponent % rb.exponent, 0);
            ++pairs;
        }
    }
    EXPECT_GT(pairs, 100);
}

TEST(Sweep, AgreesWithClassifyOnSmallK) {
    for (auto id : {"3plus2", "abcd"}) {
        auto t = term_set(id);
        const int n = static_cast<int>(t.size());
        for (int k = 1; k <= 5; ++k) {
            auto sw = sweep_subsets(t, k, {}, 1);
            std::map<i64, std::uint64_t> hist;
            std::uint64_t count = 0;
            std::vector<int> s(k);
            std::function<void(int, int)> rec = [&](int pos, int from) {
                if (pos == k) {
                    ++count;
                    auto r = classify_subset(t, s);
                    if (r.finite) ++hist[r.exponent];
                    return;
                }
                for (int i = from; i < n; ++i) {
                    s[pos] = i;
                    rec(pos + 1, i + 1);
                }
            };
            rec(0, 0);
            EXPECT_EQ(sw.subsets, count);
            EXPECT_EQ(sw.subsets, binomial(n, k));
            EXPECT_EQ(sw.exponent_counts, hist) << id << " k=" << k;
        }
    }
}

TEST(Sweep, ThreePlusTwoNineSubsets) {
    auto sw = sweep_subsets(term_set("3plus2"), 9);
    EXPECT_EQ(sw.subsets, 2002u);
    EXPECT_TRUE(sw.all_full_rank);
    EXPECT_TRUE(sw.all_trivial);
    EXPECT_EQ(sw.max_exponent, 1);
    auto ten = sweep_subsets(term_set("3plus2"), 10);
    EXPECT_TRUE(ten.all_trivial);
}

TEST(Sweep, ThreePlusTwoEightSubsetsAreNotAllTrivial) {
    // the threshold 9 is sharp: some 8-subsets have a nontrivial or infinite quotient
    auto sw = sweep_subsets(term_set("3plus2"), 8);
    EXPECT_FALSE(sw.all_trivial);
}

TEST(Sweep, AbcdFiveSubsets) {
    auto sw = sweep_subsets(term_set("abcd"), 5);
    EXPECT_EQ(sw.subsets, 56u);
    EXPECT_TRUE(sw.all_trivial);
}

TEST(Sweep, DeterministicAcrossJobCounts) {
    auto t = term_set("main");
    auto pred = [](const QuotientShape& q) { return q.rank == 3 && q.exponent <= 3; };
    auto a = sweep_subsets(t, 6, pred, 1);
    auto b = sweep_subsets(t, 6, pred, 4);
    EXPECT_EQ(a.subsets, binomial(27, 6));
    EXPECT_EQ(a.subsets, b.subsets);
    EXPECT_EQ(a.exponent_counts, b.exponent_counts);
    EXPECT_EQ(a.predicate_failures, b.predicate_failures);
    ASSERT_TRUE(a.first_failure && b.first_failure);
    EXPECT_EQ(*a.first_failure, *b.first_failure);
    auto r = classify_subset(t, *a.first_failure);
    EXPECT_FALSE(r.finite && r.exponent <= 3);
}

TEST(Catalogue, MaximaAndExactSet) {
    auto c14 = exponent_catalogue(term_set("3plus2"));
    EXPECT_EQ(*c14.rbegin(), 10);
    auto c8 = exponent_catalogue(term_set("abcd"));
    EXPECT_EQ(*c8.rbegin(), 4);
    std::set<i64> expected;
    for (i64 e = 1; e <= 22; ++e) expected.insert(e);
    expected.insert({24, 26, 30});
    EXPECT_EQ(exponent_catalogue(term_set("main")), expected);
    EXPECT_EQ(difference_set(term_set("main")).size(), 124u);
}

TEST(ConwayJones, Examples) {
    EXPECT_EQ(conway_jones_orders(2), (std::vector<i64>{1, 2}));
    EXPECT_EQ(conway_jones_orders(3), (std::vector<i64>{1, 2, 3, 6}));
    auto l14 = conway_jones_orders(14);
    EXPECT_TRUE(std::binary_search(l14.begin(), l14.end(), 78));
    EXPECT_FALSE(std::binary_search(l14.begin(), l14.end(), 5 * 13));
}

TEST(ConwayJones, NestedAndSquarefree) {
    for (int l = 2; l < 30; ++l) {
        auto a = conway_jones_orders(l), b = conway_jones_orders(l + 1);
        EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        for (i64 n : a) {
            i64 s = 0;
            for (auto [p, e] : factorize(n)) {
                EXPECT_EQ(e, 1);
                s += p - 2;
            }
            EXPECT_LE(s, l - 2);
        }
    }
}

TEST(DivisorBound, ThreePlusTwo) {
    auto p = bound_parameters("3plus2");
    auto b = divisor_bound(term_set("3plus2"), p.threshold, p.long_factor);
    EXPECT_EQ(b.modulus, 16LL * 27 * 25 * 49 * 11 * 13);
    EXPECT_TRUE(std::find(b.excluded.begin(), b.excluded.end(), 72) != b.excluded.end());
}

TEST(DivisorBound, Abcd) {
    auto p = bound_parameters("abcd");
    auto b = divisor_bound(term_set("abcd"), p.threshold, p.long_factor);
    std::set<i64> got(b.maximal.begin(), b.maximal.end());
    EXPECT_EQ(got, (std::set<i64>{30, 42, 24, 18}));
}

TEST(DivisorBound, Main) {
    auto p = bound_parameters("main");
    auto b = divisor_bound(term_set("main"), p.threshold, p.long_factor);
    EXPECT_EQ(b.modulus, 32LL * 27 * 25 * 49 * 11 * 13 * 17 * 19 * 23);
}

TEST(Sweep, MainTenSubsets) {
    auto sw = sweep_subsets(term_set("main"), 10, [](const QuotientShape& q) { return q.rank == 3 && q.exponent <= 2; });
    EXPECT_EQ(sw.subsets, 8436285u);
    EXPECT_EQ(sw.predicate_failures, 0u);
    EXPECT_TRUE(sw.all_full_rank);
    EXPECT_EQ(sw.max_exponent, 2);
}
