#pragma once

#include <oddsym/combinat.hpp>
#include <oddsym/matrix.hpp>
#include <oddsym/report.hpp>

#include <map>
#include <string>
#include <vector>

namespace oddsym {

enum class GramBasis { Compositions, Partitions };

std::string to_string(GramBasis b);
GramBasis parse_gram_basis(const std::string &s);

inline constexpr int gram_degree_bound = 8;
// Largest degree for which the generic determinant is computed (64 x 64 at 7).
inline constexpr int gram_det_bound = 7;

// Row and column labels of the Gram matrix, lexicographic order.
std::vector<Composition> gram_labels(int n, GramBasis basis = GramBasis::Compositions);

// (h_alpha, h_beta) over all labels of degree n; every entry computed on its own.
PolyMat gram_matrix(int n, GramBasis basis = GramBasis::Compositions);
IntMat gram_matrix(int n, const Int &q, GramBasis basis = GramBasis::Compositions);

// Determinant of the generic composition Gram matrix, lexicographic order. Cached.
const QPoly &gram_determinant(int n);

// 2^{n-2}(n^2 - 3n + 4) - 1 for n >= 2, 0 for n <= 1.
long det_degree_formula(int n);
// Same degree from the sum over compositions of binom(n,2) - sum binom(alpha_i, 2).
long det_degree_by_sum(int n);

// deg det = D(n), leading coefficient +-1, and det(gram(n))(2) = det(gram(n, 2)).
Report det_degree_check(int n);

// A minimal polynomial of a degenerate value of q, with its multiplicity in
// the determinant of each degree.
struct LocusFactor
{
    int degree_introduced = 0;
    QPoly poly;
    std::map<int, int> multiplicities;

    int multiplicity(int n) const;
};

// The tabulated factors through degree 7, in listed order.
const std::vector<LocusFactor> &degenerate_loci();
std::vector<LocusFactor> parse_degenerate_loci(const std::string &json_text);

// Every tabulated factor divides the sign-normalized determinant exactly to
// the listed multiplicity (0 when not listed), and the cofactor left after
// removing them all is 1. Details carry the observed multiplicities.
Report factor_multiplicity_check(int n);

// Rank of gram_matrix(n, q) over Q.
std::size_t radical_rank(int n, const Int &q, GramBasis basis = GramBasis::Compositions);

// Rank at q = -1 is p(n), the radical has dimension 2^{n-1} - p(n), and the
// Gram matrix is symmetric; at q = 1 the rank is p(n) as well, at q = 0 it is 1.
Report radical_rank_check(int n);

} // namespace oddsym
