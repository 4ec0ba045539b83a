#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace oddsym {

// Finite sequence of positive integers. Order matters; indexes words
// h_{a_1} h_{a_2} ... in the free algebra.
class Composition
{
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int> &parts() const { return m_parts; }
    std::size_t length() const { return m_parts.size(); }
    int degree() const { return m_degree; }
    bool empty() const { return m_parts.empty(); }
    int operator[](std::size_t i) const { return m_parts[i]; }
    auto begin() const { return m_parts.begin(); }
    auto end() const { return m_parts.end(); }

    Composition reversed() const;

    // Lexicographic ("dictionary") order.
    friend auto operator<=>(const Composition &a, const Composition &b) { return a.m_parts <=> b.m_parts; }
    friend bool operator==(const Composition &a, const Composition &b) { return a.m_parts == b.m_parts; }

private:
    std::vector<int> m_parts;
    int m_degree = 0;
};

// Weakly decreasing sequence of positive integers (a Young diagram, English
// convention: row 1 on top).
class Partition
{
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts arbitrary positive parts into a partition.
    static Partition from_parts(std::vector<int> parts);
    // (k, k, ..., k) with m copies.
    static Partition rectangle(int k, int m);

    const std::vector<int> &parts() const { return m_parts; }
    std::size_t length() const { return m_parts.size(); }
    int degree() const { return m_degree; }
    bool empty() const { return m_parts.empty(); }
    // Row length, zero past the last row.
    int operator[](std::size_t i) const { return i < m_parts.size() ? m_parts[i] : 0; }
    auto begin() const { return m_parts.begin(); }
    auto end() const { return m_parts.end(); }

    Composition as_composition() const { return Composition(m_parts); }

    friend auto operator<=>(const Partition &a, const Partition &b) { return a.m_parts <=> b.m_parts; }
    friend bool operator==(const Partition &a, const Partition &b) { return a.m_parts == b.m_parts; }

private:
    std::vector<int> m_parts;
    int m_degree = 0;
};

std::string to_string(const Composition &a);
std::string to_string(const Partition &a);

Partition transpose(const Partition &lambda);

// Triangular number <k> = k(k+1)/2, extended additively to sequences.
long angle(long k);
long angle(const Composition &a);
long angle(const Partition &a);

// Number of pairs of boxes with one strictly south-west of the other.
long sw_ne_length(const Partition &lambda);

// lambda_2 + lambda_4 + lambda_6 + ...
long even_rows_sum(const Partition &lambda);

// (-1)^{lambda_2 + lambda_4 + ...}, the sign attached to an RSK shape.
int shape_sign(const Partition &lambda);

// Sign of the leading h_lambda term of the word h_{lambda^rev} after
// straightening: one -1 per odd part transposed past a larger even part.
int eta_sign(const Partition &lambda);

// Dominance order: lambda >= mu.
bool dominates(const Partition &lambda, const Partition &mu);

// True if `fine` refines `coarse` (every partial sum of coarse is a partial
// sum of fine).
bool refines(const Composition &fine, const Composition &coarse);

// Sign of the shortest permutation sorting `word` into non-decreasing
// order, i.e. (-1)^{#strict inversions}.
int word_sign(const std::vector<int> &word);
long strict_inversions(const std::vector<int> &word);

// Semistandard Young tableau stored row by row (row 0 on top).
class Tableau
{
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    // The unique SSYT with shape and content both lambda.
    static Tableau superstandard(const Partition &lambda);
    // Rebuild from a row word (rows separated at each strict descent).
    static Tableau from_row_word(const std::vector<int> &word);

    const std::vector<std::vector<int>> &rows() const { return m_rows; }
    Partition shape() const;
    std::size_t size() const;
    // Multiplicity of i at index i-1, trailing zeros trimmed.
    std::vector<int> content() const;
    // Left to right, bottom row to top row.
    std::vector<int> row_word() const;
    int sign() const { return word_sign(row_word()); }
    bool is_semistandard() const;

    std::vector<std::vector<int>> &mutable_rows() { return m_rows; }

    friend auto operator<=>(const Tableau &, const Tableau &) = default;
    friend bool operator==(const Tableau &, const Tableau &) = default;

private:
    std::vector<std::vector<int>> m_rows;
};

std::string to_string(const Tableau &t);

using IntMatrix = std::vector<std::vector<int>>;

// Sum over pairs of entries, a_{kl} strictly below and left of a_{ij}, of
// a_{kl} * a_{ij}.
long sw_ne_weight(const IntMatrix &a);
// Sum of <a-1> over entries a >= 1.
long cable_weight(const IntMatrix &a);

std::vector<int> row_sums(const IntMatrix &a);
std::vector<int> col_sums(const IntMatrix &a);

// --- enumeration ---------------------------------------------------------

// Partitions of n in increasing lexicographic order.
std::vector<Partition> partitions(int n);
// Compositions of n in increasing lexicographic order.
std::vector<Composition> compositions(int n);
// Semistandard tableaux of the given shape whose content is `content`
// (content[i] = multiplicity of i+1).
std::vector<Tableau> ssyt(const Partition &shape, const std::vector<int> &content);
// Matrices with non-negative entries and given margins, in decreasing
// lexicographic order of the row-major entry list. Throws if the margins
// have different weights.
std::vector<IntMatrix> nat_matrices(const std::vector<int> &rows, const std::vector<int> &cols);
std::vector<IntMatrix> binary_matrices(const std::vector<int> &rows, const std::vector<int> &cols);

} // namespace oddsym
