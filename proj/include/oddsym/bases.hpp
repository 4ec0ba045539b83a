#pragma once

#include <oddsym/combinat.hpp>
#include <oddsym/matrix.hpp>
#include <oddsym/oddring.hpp>
#include <oddsym/report.hpp>

#include <string>
#include <vector>

namespace oddsym {

// Largest degree accepted by the functions below. Matrix enumeration for
// M' in degree n visits at least n! matrices.
inline constexpr int basis_degree_bound = 8;

// sign(T_lambda) * sum of sign(T) over SSYT of shape lambda, content mu.
Int kostka(const Partition &lambda, const Partition &mu);
// Rows lambda, columns mu, both lexicographic.
const IntMat &kostka_matrix(int n);

enum class BasisKind { M, MPrime, MDoublePrime };

std::string to_string(BasisKind kind);
BasisKind parse_basis_kind(const std::string &s);

struct BasisMatrix
{
    BasisKind kind;
    int degree;
    std::vector<Partition> index; // lexicographic
    IntMat entries;
};

// M = (e_lambda, h_mu): signed count of {0,1}-matrices, SW-NE sign.
// M' = (h_lambda, h_mu): N-matrices, SW-NE sign.
// M'' = (e_lambda, e_mu): N-matrices, SW-NE and cable signs.
// Entries are counted by matrix enumeration.
Int basis_entry(BasisKind kind, const Partition &lambda, const Partition &mu);
BasisMatrix basis_matrix(BasisKind kind, int n);
// Same matrices from the bilinear form on words.
BasisMatrix basis_matrix_by_pairing(BasisKind kind, int n);

// Dual bases: (h_lambda, m_mu) = delta, (e_lambda, f_mu) = delta.
OddElt monomial(const Partition &mu);
OddElt forgotten(const Partition &mu);

// Defined by h_mu = sum_lambda K_{lambda mu} s_lambda.
OddElt schur(const Partition &lambda);
// s_lambda = h_lambda + (higher h_mu) with (s_lambda, h_nu) = 0 for nu > lambda.
OddElt schur_by_orthogonality(const Partition &lambda);
// s'_lambda = e_{lambda^T} + (higher e_mu) with (s'_lambda, e_nu) = 0 for nu > lambda^T.
OddElt schur_prime(const Partition &lambda);

// (-1)^{<lambda^T> + |lambda|}, the norm of s_lambda.
int schur_norm_sign(const Partition &lambda);

// (s_lambda, s_mu) = (-1)^{<lambda^T>+|lambda|} delta over degree n.
Report schur_orthonormality(int n);
// Kostka route against the orthogonality characterization, the monomial
// expansion, s'_lambda, and the two expansions through e_mu and f_mu.
Report schur_alt_routes(const Partition &lambda);

struct DetM
{
    Int value;           // columns ordered by lambda^T: the diagonal product
    Int lexicographic;   // rows and columns both lexicographic
    int transpose_sign;  // sign of lambda -> lambda^T as a permutation of the lex order
    Int product_formula; // product of (-1)^{sw_ne_length} over self-transpose lambda
};

DetM det_M(int n);

// Kostka invariants: K_{(n)mu} = 1, K_{(1^n)mu} = delta, K_{lambda lambda} = 1,
// lower unitriangular in lexicographic order.
Report kostka_check(int n);
// Enumeration equals pairing for M, M', M''; M' and M'' symmetric with det +-1;
// M vanishes above the anti-diagonal; det_M agrees with the product formula.
Report basis_matrix_check(int n);
// M' = K^T D K and the elementary analogue, with D = diag((-1)^{lambda_2+lambda_4+...}).
Report rsk_aggregate_check(int n);
// Bi-orthogonality, f_n = +-m_n, and the form in the f-basis equals M^-1 M' M^-T.
Report dual_basis_check(int n);

} // namespace oddsym
