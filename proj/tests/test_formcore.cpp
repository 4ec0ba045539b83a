#include <doctest.h>

#include <oddsym/formcore.hpp>

#include <algorithm>
#include <numeric>

using namespace oddsym;

namespace {

std::vector<int> block_ids(const Composition &c)
{
    std::vector<int> ids;
    for (std::size_t b = 0; b < c.length(); ++b)
        for (int k = 0; k < c[b]; ++k)
            ids.push_back(static_cast<int>(b));
    return ids;
}

// Sum of q^{len} over minimal double coset representatives, found by
// scanning all of S_n: sigma is minimal iff it is increasing on every
// bottom block of alpha and sigma^{-1} is increasing on every top block
// of beta.
QPoly double_coset_oracle(const Composition &beta, const Composition &alpha)
{
    const int n = alpha.degree();
    const auto bottom = block_ids(alpha), top = block_ids(beta);
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    QPoly total;
    do {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i)
            if (bottom[i] == bottom[i + 1] && s[i] > s[i + 1])
                ok = false;
        const auto inv = inverse_permutation(s);
        for (int i = 0; ok && i + 1 < n; ++i)
            if (top[i] == top[i + 1] && inv[i] > inv[i + 1])
                ok = false;
        if (ok)
            total += QPoly::monomial(1, static_cast<int>(strict_inversions(s)));
    } while (std::next_permutation(s.begin(), s.end()));
    return total;
}

// (h~_beta, h~_alpha) by inclusion-exclusion over coarsenings.
QPoly htilde_inclusion_exclusion(const Composition &beta, const Composition &alpha)
{
    QPoly total;
    const int n = alpha.degree();
    for (const auto &b : compositions(n)) {
        if (!refines(beta, b))
            continue;
        for (const auto &a : compositions(n)) {
            if (!refines(alpha, a))
                continue;
            const long sign = static_cast<long>(beta.length() - b.length() + alpha.length() - a.length());
            QPoly p = pair_hh_generic(b, a);
            p *= Int(neg_one_pow(sign));
            total += p;
        }
    }
    return total;
}

Int matrix_count(const Composition &beta, const Composition &alpha)
{
    return Int(static_cast<long>(nat_matrices(beta.parts(), alpha.parts()).size()));
}

} // namespace

TEST_CASE("generic pairing examples")
{
    CHECK(pair_hh_generic({2, 2}, {1, 2, 1}) == QPoly{1, 0, 2, 1});
    CHECK(pair_hh_generic({4}, {4}) == QPoly(1));
    CHECK(pair_hh_generic({3, 1}, {2, 2}) == QPoly{1, 0, 1});
    CHECK(pair_hh_generic({1, 1}, {1, 1}) == qint(2));
    CHECK(pair_hh_generic({1, 1, 1}, {1, 1, 1}) == qfactorial(3));
    CHECK(pair_hh_generic({2}, {1, 2}).is_zero());
}

TEST_CASE("matrix statistic equals double coset lengths")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto &b : compositions(n))
            for (const auto &a : compositions(n))
                REQUIRE(pair_hh_generic(b, a) == double_coset_oracle(b, a));
}

TEST_CASE("generic form is symmetric and counts matrices at q=1")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto &b : compositions(n))
            for (const auto &a : compositions(n)) {
                const QPoly p = pair_hh_generic(b, a);
                CHECK(p == pair_hh_generic(a, b));
                CHECK(p.evaluate(1) == matrix_count(b, a));
            }
}

TEST_CASE("e expansion")
{
    CHECK(expand_e_to_h(0) == FreeWordZ::basis({}));
    CHECK(expand_e_to_h(1) == FreeWordZ{{h_word({1}), 1}});
    for (int n = 1; n <= 8; ++n)
        CHECK(expand_e_to_h(n).size() == (1u << (n - 1)));
    // The defining recursion sum_k (-1)^<k> e_k h_{n-k} = 0 holds in the
    // free algebra.
    for (int n = 1; n <= 7; ++n) {
        FreeWordZ acc;
        for (int k = 0; k <= n; ++k) {
            FreeWordZ hk = n - k == 0 ? FreeWordZ::basis({}) : FreeWordZ::basis(h_word({n - k}));
            acc.add(concat(expand_e_to_h(k), hk), Int(neg_one_pow(angle(k))));
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("odd pairing of mixed words")
{
    const Word y = parse_word("e2h1h2"), x = parse_word("h2e3");
    CHECK(pair_words_odd(y, x) == -1);
    CHECK(pair_words_odd_expanded(y, x) == -1);
    const Word z = parse_word("e2h2");
    CHECK(pair_words_odd(z, z) == -2);
    CHECK(pair_words_odd_expanded(z, z) == -2);
    for (int n = 1; n <= 7; ++n) {
        const Word en = e_word({n});
        CHECK(pair_words_odd(en, en) == neg_one_pow(angle(n - 1)));
        CHECK(pair_words_odd_expanded(en, en) == neg_one_pow(angle(n - 1)));
    }
}

TEST_CASE("colored rule agrees with expansion")
{
    for (int n = 1; n <= 5; ++n) {
        const auto comps = compositions(n);
        for (const auto &b : comps)
            for (const auto &a : comps) {
                // alternate colors along the word to mix both kinds
                Word y = h_word(b), x = e_word(a);
                for (std::size_t i = 0; i < y.size(); i += 2)
                    y[i].color = Color::Black;
                for (std::size_t i = 1; i < x.size(); i += 2)
                    x[i].color = Color::White;
                REQUIRE(pair_words_odd(y, x) == pair_words_odd_expanded(y, x));
                REQUIRE(pair_words_odd(e_word(b), e_word(a)) == pair_words_odd_expanded(e_word(b), e_word(a)));
                REQUIRE(pair_words_odd(h_word(b), e_word(a)) == pair_words_odd_expanded(h_word(b), e_word(a)));
            }
    }
}

TEST_CASE("h-words at q=-1 match the generic form")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto &b : compositions(n))
            for (const auto &a : compositions(n))
                REQUIRE(pair_words_odd(h_word(b), h_word(a)) == pair_hh_generic(b, a).evaluate(-1));
}

TEST_CASE("pairing of h-words with e_n")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto &a : compositions(n)) {
            const bool ones = a.length() == static_cast<std::size_t>(n);
            CHECK(pair_words_odd(h_word(a), e_word({n})) == (ones ? 1 : 0));
        }
}

TEST_CASE("generic mixed pairing specializes correctly")
{
    const Word y = parse_word("e2h1h2"), x = parse_word("h2e3");
    CHECK(pair_words_generic(y, x).evaluate(-1) == -1);
    CHECK(pair_words_generic(parse_word("e2"), parse_word("e2")).evaluate(1) == 1);
}

TEST_CASE("adjointness of product and coproduct")
{
    for (int n = 0; n <= 6; ++n)
        for (const auto &x : compositions(n)) {
            const TensorQ dx = coproduct(x);
            for (int k = 0; k <= n; ++k)
                for (const auto &y1 : compositions(k))
                    for (const auto &y2 : compositions(n - k)) {
                        std::vector<int> cat = y1.parts();
                        cat.insert(cat.end(), y2.begin(), y2.end());
                        REQUIRE(pair_tensor(y1, y2, dx) == pair_hh_generic(Composition(cat), x));
                    }
        }
}

TEST_CASE("descent compositions")
{
    CHECK(descent_composition({1, 2, 3, 4}) == Composition{4});
    CHECK(descent_composition({2, 1, 4, 3}) == Composition{1, 2, 1});
    CHECK(descent_composition({3, 2, 1}) == Composition{1, 1, 1});
}

TEST_CASE("h~ pairing")
{
    CHECK(pair_htilde({3, 1}, {2, 2}) == QPoly::monomial(1, 2));
    CHECK(pair_htilde({5}, {5}) == QPoly(1));
    CHECK(pair_htilde({1, 1}, {2}).is_zero());
    CHECK_THROWS_AS(pair_htilde({10}, {10}), std::invalid_argument);
    for (int n = 1; n <= 5; ++n) {
        const auto comps = compositions(n);
        const auto table = htilde_gram(n);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = 0; j < comps.size(); ++j) {
                const QPoly v = pair_htilde(comps[i], comps[j]);
                CHECK(v == table[i][j]);
                CHECK(v == htilde_inclusion_exclusion(comps[i], comps[j]));
            }
    }
}
