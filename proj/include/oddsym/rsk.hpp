#pragma once

#include <oddsym/combinat.hpp>
#include <oddsym/report.hpp>

#include <cstddef>
#include <vector>

namespace oddsym {

// Matrix entries read like a book, an entry k counted k times.
struct TwoLineArray
{
    std::vector<int> u; // row indices, 1-based, non-decreasing
    std::vector<int> v; // column indices, 1-based
};

TwoLineArray two_line_array(const IntMatrix &a);

struct Insertion
{
    Tableau tableau;
    std::size_t row = 0; // 0-based position of the new box
    std::size_t col = 0;
    // Elementary Knuth transformations carrying w_r(t) x to the new row
    // word: (row length - 1) for every row in which a bump happens.
    long knuth_moves = 0;
};

// Schensted row insertion: x bumps the leftmost entry strictly greater than x.
Insertion row_insert(const Tableau &t, int x);

struct RskPair
{
    Tableau P; // insertion tableau of the column indices
    Tableau Q; // recording tableau of the row indices
};

RskPair rsk(const IntMatrix &a);
// Inverse of rsk on pairs of equal-shape semistandard tableaux.
IntMatrix rsk_inverse(const RskPair &pq);

struct KnuthNormal
{
    Tableau tableau;
    long moves = 0; // number of elementary Knuth transformations used
    int parity() const { return static_cast<int>(moves % 2); }
};

// The unique tableau whose row word is Knuth equivalent to w, with the
// number of moves accumulated by successive row insertions. Throws on an
// empty word.
KnuthNormal knuth_normalize(const std::vector<int> &w);

enum class KnuthMove { KPrime, KDoublePrime };

struct KnuthStep
{
    KnuthMove kind;
    std::size_t pos; // the move rewrites letters pos, pos+1, pos+2
    std::vector<int> after;
};

// True when a and b differ by one elementary Knuth transformation:
// y z x <-> y x z (x < y <= z) or x z y <-> z x y (x <= y < z).
bool is_knuth_move(const std::vector<int> &a, const std::vector<int> &b);

// Explicit sequence of elementary moves realizing the insertions of
// knuth_normalize, ending at the row word of the result.
std::vector<KnuthStep> knuth_path(const std::vector<int> &w);

// All words one elementary Knuth transformation away from w.
std::vector<std::vector<int>> knuth_neighbours(const std::vector<int> &w);

struct SignedWord
{
    int sign = 1;
    std::vector<int> word;
};

// Image in the odd plactic ring: (-1)^{Kn(w)} times the canonical row word.
SignedWord odd_plactic_reduce(const std::vector<int> &w);

// For every N-matrix with row sums mu and column sums rho:
// sign(A) = (-1)^{lambda_2 + lambda_4 + ...} sign(P) sign(Q), with the
// per-box bookkeeping checked at each insertion step. Details hold one
// entry per matrix and the aggregate signed count.
Report odd_rsk_check(const Partition &mu, const Partition &rho);

// Bijectivity onto equal-shape SSYT pairs with contents (rho, mu), and
// N_{mu rho} = sum over lambda of unsigned Kostka products.
Report rsk_bijection_check(const Partition &mu, const Partition &rho);

// odd_rsk_check and rsk_bijection_check over all margin pairs of degree n,
// plus equality of the aggregated signed counts with (h_mu, h_rho).
Report odd_rsk_sweep(int n);

inline constexpr int rsk_degree_bound = 8;

} // namespace oddsym
