#include <doctest.h>

#include <oddsym/bases.hpp>
#include <oddsym/io.hpp>

#include <algorithm>

using namespace oddsym;

namespace {

OddElt elt(std::initializer_list<std::pair<Partition, long>> terms)
{
    OddElt x;
    for (const auto &[p, c] : terms)
        x.add(p, Int(c));
    return x;
}

// Every filling of the shape by the multiset with content mu, kept when
// semistandard; the sign is counted from strict inversions of the row word.
Int kostka_brute(const Partition &lambda, const Partition &mu)
{
    std::vector<int> letters;
    for (std::size_t i = 0; i < mu.length(); ++i)
        letters.insert(letters.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i) + 1);
    auto sign_of_word = [](const std::vector<int> &w) {
        int s = 1;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j])
                    s = -s;
        return s;
    };
    auto fill = [&](const std::vector<int> &v) {
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        for (int len : lambda.parts()) {
            rows.emplace_back(v.begin() + static_cast<long>(pos), v.begin() + static_cast<long>(pos + len));
            pos += static_cast<std::size_t>(len);
        }
        return rows;
    };
    auto row_word = [](const std::vector<std::vector<int>> &rows) {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    };
    std::vector<int> base;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        base.insert(base.end(), static_cast<std::size_t>(lambda[i]), static_cast<int>(i) + 1);
    const int sign_lambda = sign_of_word(row_word(fill(base)));

    Int total = 0;
    std::sort(letters.begin(), letters.end());
    do {
        const auto rows = fill(letters);
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r)
            for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
                if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1])
                    ok = false;
                if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
                    ok = false;
            }
        if (ok)
            total += sign_of_word(row_word(rows));
    } while (std::next_permutation(letters.begin(), letters.end()));
    return total * sign_lambda;
}

} // namespace

TEST_CASE("Kostka examples and tables")
{
    CHECK(kostka({2, 2, 1}, {1, 1, 1, 1, 1}) == -1);
    CHECK(kostka({3, 1, 1}, {2, 1, 1, 1}) == 1);
    for (int n = 1; n <= 6; ++n)
        for (const auto &l : partitions(n))
            for (const auto &m : partitions(n))
                REQUIRE(kostka(l, m) == kostka_brute(l, m));

    const long deg4[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {1, 0, -1, 1, 0}, {1, 1, 1, 1, 1}};
    const long deg5[7][7] = {{1, 0, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0, 0}, {-1, 0, 1, 0, 0, 0, 0},
                             {2, 1, -1, 1, 0, 0, 0}, {1, 1, 0, 1, 1, 0, 0}, {0, 1, 2, 0, -1, 1, 0},
                             {1, 1, 1, 1, 1, 1, 1}};
    const IntMat &k4 = kostka_matrix(4);
    const IntMat &k5 = kostka_matrix(5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(k4(i, j) == deg4[i][j]);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            CHECK(k5(i, j) == deg5[i][j]);
    for (int n = 1; n <= 7; ++n)
        CHECK(kostka_check(n).ok);
}

TEST_CASE("M, M', M'' entries")
{
    const Partition a{3, 2}, b{2, 2, 1};
    CHECK(basis_entry(BasisKind::M, a, b) == -1);
    CHECK(basis_entry(BasisKind::MPrime, a, b) == 3);
    CHECK(basis_entry(BasisKind::MDoublePrime, a, b) == -1);
    CHECK(basis_entry(BasisKind::MPrime, {4}, {4}) == 1);
    for (const auto &l : partitions(5))
        CHECK(basis_entry(BasisKind::M, l, transpose(l)) == (sw_ne_length(l) % 2 ? -1 : 1));
    for (int n = 1; n <= 6; ++n)
        CHECK(basis_matrix_check(n).ok);
    CHECK(parse_basis_kind("M''") == BasisKind::MDoublePrime);
    CHECK_THROWS_AS(parse_basis_kind("N"), std::invalid_argument);
    CHECK_THROWS_AS(basis_matrix(BasisKind::M, basis_degree_bound + 1), std::invalid_argument);
}

TEST_CASE("det M")
{
    CHECK(det_M(1).value == 1);
    CHECK(det_M(3).value == -1);
    CHECK(det_M(4).value == -1);
    for (int n = 1; n <= 7; ++n) {
        const DetM d = det_M(n);
        CHECK(d.value == d.product_formula);
        CHECK(d.lexicographic == det(basis_matrix(BasisKind::M, n).entries));
        CHECK(d.lexicographic == d.transpose_sign * d.value);
    }
}

TEST_CASE("monomial and forgotten functions")
{
    CHECK(monomial({1}) == h(1));
    CHECK(monomial({1, 1}) == elt({{{1, 1}, -1}, {{2}, 1}}));
    CHECK(monomial({2}) == elt({{{1, 1}, 1}}));
    CHECK(monomial({1, 1, 1}) == elt({{{1, 1, 1}, -1}, {{3}, 1}}));
    CHECK(monomial({2, 1}) == elt({{{2, 1}, -1}, {{3}, 1}}));
    CHECK(monomial({3}) == elt({{{1, 1, 1}, 1}, {{2, 1}, 1}, {{3}, -1}}));
    CHECK(monomial({1, 1, 1, 1}) == elt({{{1, 1, 1, 1}, 1}, {{2, 1, 1}, -1}, {{2, 2}, 1}, {{4}, -1}}));
    CHECK(monomial({2, 1, 1}) == elt({{{1, 1, 1, 1}, -1}, {{3, 1}, 1}}));
    CHECK(monomial({2, 2}) == elt({{{1, 1, 1, 1}, 1}, {{2, 2}, 1}, {{4}, -2}}));
    CHECK(monomial({3, 1}) == elt({{{2, 1, 1}, 1}, {{3, 1}, -1}}));
    CHECK(monomial({4}) == elt({{{1, 1, 1, 1}, -1}, {{2, 2}, -2}, {{4}, 4}}));

    CHECK(forgotten({1}) == h(1));
    CHECK(forgotten({1, 1}) == h(2));
    CHECK(forgotten({2}) == elt({{{1, 1}, 1}}));
    CHECK(forgotten({1, 1, 1}) == h(3));
    CHECK(forgotten({2, 1}) == elt({{{2, 1}, -1}, {{3}, 1}}));
    CHECK(forgotten({3}) == elt({{{1, 1, 1}, 1}, {{2, 1}, 1}, {{3}, -1}}));
    CHECK(forgotten({1, 1, 1, 1}) == h(4));
    CHECK(forgotten({2, 1, 1}) == elt({{{3, 1}, 1}}));
    CHECK(forgotten({2, 2}) == elt({{{2, 2}, -1}, {{4}, 2}}));
    CHECK(forgotten({3, 1}) == elt({{{2, 1, 1}, 1}, {{3, 1}, -1}}));
    // The appendix prints a stray e_22 here; the dual basis gives h_22.
    CHECK(forgotten({4}) == elt({{{1, 1, 1, 1}, 1}, {{2, 2}, 2}, {{4}, -4}}));
    CHECK(forgotten({4}) == -1 * monomial({4}));

    for (int n = 1; n <= 8; ++n)
        if (n != 7)
            CHECK(dual_basis_check(n).ok);

    // f_n = +-m_n breaks in degree 7: h_7 has coefficient 5 in e_7 and the
    // two duals are not proportional. Only that sub-check fails.
    CHECK(e(7).coeff(Partition{7}) == 5);
    const Report r7 = dual_basis_check(7);
    CHECK_FALSE(r7.ok);
    REQUIRE(r7.witnesses.size() == 1);
    CHECK(r7.witnesses[0]["check"] == "f_n = c m_n");
    const OddElt f7 = forgotten({7}), m7 = monomial({7});
    CHECK(f7.coeff({1, 1, 1, 1, 1, 1, 1}) == 1);
    CHECK(m7.coeff({1, 1, 1, 1, 1, 1, 1}) == 5);
    CHECK(f7.coeff({7}) == -33);
    CHECK(m7.coeff({7}) == -65);
}

TEST_CASE("Schur functions")
{
    CHECK(schur({1}) == h(1));
    CHECK(schur({1, 1}) == elt({{{1, 1}, 1}, {{2}, -1}}));
    CHECK(schur({2}) == h(2));
    CHECK(schur({1, 1, 1}) == elt({{{1, 1, 1}, 1}, {{3}, -1}}));
    CHECK(schur({2, 1}) == elt({{{2, 1}, 1}, {{3}, -1}}));
    CHECK(schur({3}) == h(3));
    CHECK(schur({1, 1, 1, 1}) == elt({{{1, 1, 1, 1}, 1}, {{2, 1, 1}, -1}, {{2, 2}, 1}, {{4}, -1}}));
    CHECK(schur({2, 1, 1}) == elt({{{2, 1, 1}, 1}, {{2, 2}, -1}, {{3, 1}, -1}, {{4}, 1}}));
    CHECK(schur({2, 2}) == elt({{{2, 2}, 1}, {{3, 1}, 1}, {{4}, -2}}));
    CHECK(schur({3, 1}) == elt({{{3, 1}, 1}, {{4}, -1}}));
    CHECK(schur({4}) == h(4));
    CHECK(schur({1, 1, 1, 1, 1}) ==
          elt({{{1, 1, 1, 1, 1}, 1}, {{2, 2, 1}, 1}, {{3, 1, 1}, -1}, {{4, 1}, -2}, {{5}, 1}}));
    CHECK(schur({2, 1, 1, 1}) == elt({{{2, 1, 1, 1}, 1}, {{3, 1, 1}, -1}, {{4, 1}, -1}, {{5}, 1}}));
    CHECK(schur({2, 2, 1}) == elt({{{2, 2, 1}, 1}, {{3, 1, 1}, 1}, {{3, 2}, -1}, {{4, 1}, -3}, {{5}, 2}}));
    CHECK(schur({3, 1, 1}) == elt({{{3, 1, 1}, 1}, {{3, 2}, -1}, {{4, 1}, -1}, {{5}, 1}}));
    CHECK(schur({3, 2}) == elt({{{3, 2}, 1}, {{4, 1}, 1}, {{5}, -2}}));
    CHECK(schur({4, 1}) == elt({{{4, 1}, 1}, {{5}, -1}}));
    CHECK(schur({5}) == h(5));

    CHECK(pair(schur({2, 1}), schur({2, 1})) == -1);
    CHECK(pair(schur({2, 2}), schur({3, 1})) == 0);
    CHECK(pair(schur({1}), schur({1})) == 1);
    for (int n = 1; n <= 4; ++n)
        CHECK(schur_prime(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == e(n));

    for (int n = 1; n <= 7; ++n) {
        CHECK(schur_orthonormality(n).ok);
        for (const auto &l : partitions(n))
            CHECK(schur_alt_routes(l).ok);
    }
}

TEST_CASE("aggregate RSK identities")
{
    for (int n = 1; n <= 7; ++n)
        CHECK(rsk_aggregate_check(n).ok);
}
