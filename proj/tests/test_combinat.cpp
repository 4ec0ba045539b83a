#include <doctest.h>

#include <oddsym/combinat.hpp>

#include <map>
#include <algorithm>
#include <set>
#include <stdexcept>

using namespace oddsym;

namespace {

// p(n) via Euler's recurrence on generalized pentagonal numbers.
long partition_count(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                s += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

// Count of box pairs with one strictly south-west of the other, straight
// from the definition on box coordinates.
long sw_ne_pairs(const Partition &lambda)
{
    std::vector<std::pair<int, int>> boxes;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            boxes.emplace_back(static_cast<int>(r), c);
    long n = 0;
    for (auto [r1, c1] : boxes)
        for (auto [r2, c2] : boxes)
            if (r1 > r2 && c1 < c2)
                ++n;
    return n;
}

} // namespace

TEST_CASE("partition and composition validation")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
    CHECK(Partition::from_parts({1, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition::rectangle(2, 3) == Partition{2, 2, 2});
    CHECK(Partition{}.degree() == 0);
}

TEST_CASE("transpose")
{
    CHECK(transpose(Partition{4, 4, 2, 1}) == Partition{4, 3, 2, 2});
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition{5}) == Partition{1, 1, 1, 1, 1});
    for (int n = 0; n <= 10; ++n)
        for (const auto &l : partitions(n))
            CHECK(transpose(transpose(l)) == l);
}

TEST_CASE("angle")
{
    CHECK(angle(2) == 3);
    CHECK(angle(0) == 0);
    CHECK(angle(Composition{2, 1}) == 4);
    for (long k = 0; k < 12; ++k)
        for (long l = 0; l < 12; ++l)
            CHECK(angle(k + l) == angle(k) + angle(l) + k * l);
}

TEST_CASE("parity identity relating angle and even columns")
{
    for (int n = 0; n <= 10; ++n)
        for (const auto &l : partitions(n)) {
            const long s = angle(l) + even_rows_sum(transpose(l));
            CHECK((s - n) % 2 == 0);
        }
}

TEST_CASE("south-west/north-east length")
{
    CHECK(sw_ne_length(Partition{1}) == 0);
    CHECK(sw_ne_length(Partition{2, 1}) == 1);
    CHECK(sw_ne_length(Partition{2, 2}) == 1);
    // Box labels 0000 / 3210 / 64 / 7 add up to 23.
    CHECK(sw_ne_length(Partition{4, 4, 2, 1}) == 23);
    for (int n = 0; n <= 10; ++n)
        for (const auto &l : partitions(n)) {
            CHECK(sw_ne_length(l) == sw_ne_pairs(l));
            CHECK(sw_ne_length(l) == sw_ne_length(transpose(l)));
        }
}

TEST_CASE("tableau sign")
{
    CHECK(Tableau({{1, 3}, {2, 4}, {5}}).sign() == -1);
    CHECK(Tableau({{1, 2, 3}}).sign() == 1);
    CHECK(Tableau({{1, 1, 2}, {3}, {4}}).sign() == -1);
    CHECK(Tableau({{1, 1}, {2}}).sign() == 1);
    CHECK(Tableau({{1, 3}, {2, 4}, {5}}).row_word() == std::vector<int>{5, 2, 4, 1, 3});
}

TEST_CASE("eta sign")
{
    CHECK(eta_sign(Partition{2, 1}) == -1);
    CHECK(eta_sign(Partition{5}) == 1);
    CHECK(eta_sign(Partition{2, 2}) == 1);
    CHECK(eta_sign(Partition{2, 1, 1}) == 1);
    CHECK(eta_sign(Partition{4, 3, 1}) == 1);
    CHECK(eta_sign(Partition{3, 2}) == 1);
    CHECK(eta_sign(Partition{4, 1}) == -1);
}

TEST_CASE("shape sign equals the angle form")
{
    for (int n = 0; n <= 10; ++n)
        for (const auto &l : partitions(n)) {
            const long e = angle(transpose(l)) + n;
            CHECK(shape_sign(l) == (e % 2 == 0 ? 1 : -1));
        }
}

TEST_CASE("dominance and refinement")
{
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK(refines(Composition{1, 1, 2}, Composition{2, 2}));
    CHECK_FALSE(refines(Composition{1, 2, 1}, Composition{2, 2}));
    CHECK(refines(Composition{3}, Composition{3}));
}

TEST_CASE("enumeration counts and order")
{
    CHECK(partitions(4).size() == 5);
    for (int n = 0; n <= 12; ++n) {
        const auto ps = partitions(n);
        CHECK(static_cast<long>(ps.size()) == partition_count(n));
        CHECK(std::is_sorted(ps.begin(), ps.end()));
        CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
        const auto cs = compositions(n);
        CHECK(cs.size() == (n == 0 ? 1u : (1u << (n - 1))));
        CHECK(std::is_sorted(cs.begin(), cs.end()));
        for (const auto &c : cs)
            CHECK(c.degree() == n);
    }
}

TEST_CASE("margin matrices")
{
    const auto ms = nat_matrices({2, 2}, {2, 1, 1});
    REQUIRE(ms.size() == 4);
    CHECK(ms[0] == IntMatrix{{2, 0, 0}, {0, 1, 1}});
    CHECK(ms[3] == IntMatrix{{0, 1, 1}, {2, 0, 0}});
    for (const auto &m : ms) {
        CHECK(row_sums(m) == std::vector<int>{2, 2});
        CHECK(col_sums(m) == std::vector<int>{2, 1, 1});
    }
    CHECK_THROWS_AS(nat_matrices({2}, {1}), std::invalid_argument);
    CHECK(binary_matrices({2, 1}, {1, 1, 1}).size() == 3);
    CHECK(binary_matrices({2}, {2}).empty());
    CHECK(sw_ne_weight({{0, 1}, {1, 0}}) == 1);
    CHECK(sw_ne_weight({{0, 2}, {3, 0}}) == 6);
    CHECK(cable_weight({{3, 1}, {0, 2}}) == 4);
}

TEST_CASE("semistandard tableaux")
{
    CHECK(ssyt(Partition{2, 2, 1}, {1, 1, 1, 1, 1}).size() == 5);
    for (int n = 1; n <= 7; ++n)
        for (const auto &l : partitions(n)) {
            const auto ts = ssyt(l, std::vector<int>(l.begin(), l.end()));
            REQUIRE(ts.size() == 1);
            CHECK(ts[0] == Tableau::superstandard(l));
        }
    for (const auto &t : ssyt(Partition{3, 2, 1}, {2, 2, 1, 1})) {
        CHECK(t.is_semistandard());
        CHECK(t.content() == std::vector<int>{2, 2, 1, 1});
        CHECK(Tableau::from_row_word(t.row_word()) == t);
    }
    // Standard tableaux of shape (3,2): hook length formula gives 5.
    CHECK(ssyt(Partition{3, 2}, {1, 1, 1, 1, 1}).size() == 5);
}
