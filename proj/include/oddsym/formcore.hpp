#pragma once

#include <oddsym/bigint.hpp>
#include <oddsym/combinat.hpp>
#include <oddsym/combination.hpp>
#include <oddsym/qpoly.hpp>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace oddsym {

// White letters are complete functions h_n, black letters elementary e_n.
enum class Color { White, Black };

struct Letter
{
    int n = 0;
    Color color = Color::White;

    friend auto operator<=>(const Letter &, const Letter &) = default;
    friend bool operator==(const Letter &, const Letter &) = default;
};

using Word = std::vector<Letter>;

Word h_word(const Composition &a);
Word e_word(const Composition &a);
int degree(const Word &w);
bool is_pure(const Word &w, Color c);
// Subscripts of a word, ignoring colors.
Composition subscripts(const Word &w);
// "h2e1h3"; "1" for the empty word.
std::string to_string(const Word &w);
// Inverse of to_string; throws std::invalid_argument on bad syntax.
Word parse_word(const std::string &s);

// Linear combinations of words (elements of the free algebra).
using FreeWordZ = Combination<Word, Int>;
using FreeWordQ = Combination<Word, QPoly>;

FreeWordZ concat(const FreeWordZ &a, const FreeWordZ &b);

// e_n as a signed sum over all compositions of n of h-words.
FreeWordZ expand_e_to_h(int n);
// Replace every black letter by its h-expansion.
FreeWordZ expand_to_h(const Word &w);
FreeWordZ expand_to_h(const FreeWordZ &x);

// --- the bilinear form ---------------------------------------------------

// (h_beta, h_alpha) at generic q: sum over N-matrices with row sums beta and
// column sums alpha of q^{SW-NE weight}.
QPoly pair_hh_generic(const Composition &beta, const Composition &alpha);
Int pair_hh_odd(const Composition &beta, const Composition &alpha);

// (y, x) at q = -1 by the colored matrix rule: a cell joining letters of
// different colors holds at most one strand, and a cell joining two black
// letters with k strands carries (-1)^{<k-1>}.
Int pair_words_odd(const Word &y, const Word &x);
Int pair_words_odd(const FreeWordZ &y, const FreeWordZ &x);
// Same value, computed by expanding every black letter into h-words first.
Int pair_words_odd_expanded(const Word &y, const Word &x);
// (y, x) at generic q with e-letters expanded into h-words.
QPoly pair_words_generic(const Word &y, const Word &x);

// Gram matrix of the composition basis in degree n, rows and columns in
// lexicographic order.
std::vector<std::vector<QPoly>> composition_gram(int n);

// --- coproduct -----------------------------------------------------------

using Tensor = std::pair<Composition, Composition>;
using TensorQ = Combination<Tensor, QPoly>;

// Coproduct of an h-word at generic q.
TensorQ coproduct(const Composition &a);
// (y1 (x) y2, t) = sum c (y1, x1)(y2, x2).
QPoly pair_tensor(const Composition &y1, const Composition &y2, const TensorQ &t);

// --- descent form --------------------------------------------------------

// Permutations are given in one-line notation on {1..n}.
Composition descent_composition(const std::vector<int> &sigma);
std::vector<int> inverse_permutation(const std::vector<int> &sigma);

inline constexpr int htilde_degree_bound = 9;

// (h~_beta, h~_alpha) by summing q^{inv} over permutations with
// C(sigma) = alpha and C(sigma^{-1}) = beta.
QPoly pair_htilde_permutations(const Composition &beta, const Composition &alpha);
// Same value from double-coset diagrams whose adjacent strands on
// neighbouring platforms always cross.
QPoly pair_htilde_diagrams(const Composition &beta, const Composition &alpha);
// Both routes; throws std::logic_error if they disagree and
// std::invalid_argument above the degree bound.
QPoly pair_htilde(const Composition &beta, const Composition &alpha);
// Whole table in one pass over S_n, indexed like composition_gram.
std::vector<std::vector<QPoly>> htilde_gram(int n);

} // namespace oddsym
