#pragma once

#include <oddsym/combinat.hpp>
#include <oddsym/combination.hpp>
#include <oddsym/formcore.hpp>
#include <oddsym/matrix.hpp>
#include <oddsym/report.hpp>

#include <utility>
#include <vector>

namespace oddsym {

// Element of the odd quotient (q = -1), in coordinates of the basis h_lambda.
using OddElt = Combination<Partition, Int>;
using OddTensor = Combination<std::pair<Partition, Partition>, Int>;

OddElt unit();
OddElt h(const Partition &lambda);
OddElt h(int n);
OddElt e(const Partition &lambda);
OddElt e(int n);

// Straightening of an h-word into the partition basis. The leftmost ascent
// h_a h_b (a < b) is replaced by h_b h_a when a + b is even, and by the
// odd relation solved for the ascending product otherwise. Results are
// cached; the cache is safe for concurrent use.
OddElt normalize(const Composition &word);
// Black letters are expanded into h-words first.
OddElt normalize(const Word &word);
OddElt normalize(const FreeWordZ &x);

// Independent route: coordinates c solve M' c = [(h_mu, x)]_mu in each
// degree, M' being the partition Gram matrix.
OddElt normalize_via_gram(const FreeWordZ &x);

OddElt multiply(const OddElt &x, const OddElt &y);
OddTensor comultiply(const OddElt &x);
OddElt tensor_multiply(const OddTensor &t); // m(x (x) y) = xy
Int pair(const OddElt &x, const OddElt &y);
Int pair(const OddTensor &a, const OddTensor &b);

// Homogeneous component of degree n.
OddElt component(const OddElt &x, int n);

// Coordinates of x in the basis e_lambda.
OddElt e_basis(const OddElt &x);
// Inverse of e_basis: element with the given e-coordinates.
OddElt from_e_basis(const OddElt &coords);

// Partition Gram matrix (h_lambda, h_mu), lexicographic order.
const IntMat &partition_gram(int n);
// Columns are e_mu in h-coordinates, lexicographic order.
const IntMat &e_to_h_matrix(int n);

// (h_lambda, e_{lambda^T}) = (-1)^{sw_ne_length(lambda)} and
// (h_lambda, e_alpha) = (e_lambda, h_alpha) = 0 for compositions
// alpha > lambda^T, over all lambda of degree n.
Report semiorthogonality_check(int n);
// The Gram matrix restricted to span{h_mu : mu >= lambda} and to
// span{e_mu : mu > lambda^T} has determinant +-1, for all lambda of degree n.
Report restricted_gram_check(int n);
// The h-, e- and mixed commutation relations in normal form for a + b <= max_total.
Report relations_check(int max_total);

} // namespace oddsym
