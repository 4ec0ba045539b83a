#pragma once

#include <oddsym/bigint.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace oddsym {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients. coeffs()[k] is the coefficient of q^k; no trailing zeros.
class QPoly
{
public:
    QPoly() = default;
    QPoly(long c);
    QPoly(const Int &c);
    explicit QPoly(std::vector<Int> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    static QPoly monomial(const Int &c, int degree);
    static QPoly q() { return monomial(1, 1); }

    const std::vector<Int> &coeffs() const { return m_c; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(m_c.size()) - 1; }
    bool is_zero() const { return m_c.empty(); }
    Int coeff(int k) const;
    Int leading() const { return m_c.empty() ? Int(0) : m_c.back(); }
    // Lowest power with a nonzero coefficient (0 for the zero polynomial).
    int valuation() const;

    Int evaluate(const Int &x) const;
    bool is_palindromic() const;

    QPoly &operator+=(const QPoly &o);
    QPoly &operator-=(const QPoly &o);
    QPoly &operator*=(const QPoly &o);
    QPoly &operator*=(const Int &s);

    friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
    friend QPoly operator*(const QPoly &a, const QPoly &b);
    friend QPoly operator-(QPoly a) { return a *= Int(-1); }
    friend bool operator==(const QPoly &a, const QPoly &b) { return a.m_c == b.m_c; }
    friend bool operator==(const QPoly &a, long b) { return a == QPoly(b); }

    // Integer long division; returns {quotient, remainder} if every step
    // divides exactly, otherwise throws std::domain_error.
    std::pair<QPoly, QPoly> divmod(const QPoly &d) const;
    // a / d when d | a in Z[q]; throws std::domain_error otherwise.
    QPoly exact_div(const QPoly &d) const;
    bool divisible_by(const QPoly &d) const;

private:
    void trim();
    std::vector<Int> m_c;
};

// [n] = 1 + q + ... + q^{n-1}.
QPoly qint(int n);
// [n]! = [1][2]...[n].
QPoly qfactorial(int n);
QPoly pow(const QPoly &p, int k);

// Largest k with f^k | p, and p / f^k. Throws for f == 0 or p == 0.
std::pair<int, QPoly> divide_out(const QPoly &p, const QPoly &f);

// "1+2q^2+q^3"; "0" for the zero polynomial.
std::string to_string(const QPoly &p);

} // namespace oddsym
