#include <oddsym/matrix.hpp>

#include <numeric>

namespace oddsym {

namespace {

Int exact_quotient(const Int &a, const Int &b)
{
    Int r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

QPoly exact_quotient(const QPoly &a, const QPoly &b) { return a.exact_div(b); }

bool is_zero(const Int &v) { return v == 0; }
bool is_zero(const QPoly &v) { return v.is_zero(); }

template <class T>
T bareiss(Matrix<T> a)
{
    if (!a.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return T(1);
    int sign = 1;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(a(p, k)))
                ++p;
            if (p == n)
                return T(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = exact_quotient(num, prev);
            }
            a(i, k) = T(0);
        }
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    if (sign < 0)
        d = -d;
    return d;
}

template <class T>
T cofactor(const Matrix<T> &a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return T(1);
    if (n == 1)
        return a(0, 0);
    T total(0);
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<T> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c)
                    continue;
                minor(i - 1, jj++) = a(i, j);
            }
        T term = a(0, c) * cofactor(minor);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMat &a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a(r, j), a(p, j));
        const mpq_class inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            const mpq_class f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMat to_rational(const IntMat &m)
{
    return m.map<mpq_class>([](const Int &v) { return mpq_class(v); });
}

} // namespace

Int det(const IntMat &m) { return bareiss(m); }
QPoly det(const PolyMat &m) { return bareiss(m); }
Int det_cofactor(const IntMat &m) { return cofactor(m); }
QPoly det_cofactor(const PolyMat &m) { return cofactor(m); }

std::size_t rank(const IntMat &m)
{
    RatMat a = to_rational(m);
    return rref(a).size();
}

IntMat unimodular_inverse(const IntMat &m)
{
    if (!m.square())
        throw std::domain_error("unimodular_inverse: matrix is not square");
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw std::domain_error("unimodular_inverse: determinant is " + d.get_str() + ", not +-1");
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    rref(aug);
    IntMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const mpq_class &v = aug(i, n + j);
            if (v.get_den() != 1)
                throw std::domain_error("unimodular_inverse: non-integral inverse");
            inv(i, j) = v.get_num();
        }
    return inv;
}

std::vector<std::vector<Int>> kernel(const IntMat &m)
{
    RatMat a = to_rational(m);
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<mpq_class> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -a(r, f);
        Int den = 1;
        for (const auto &x : v)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Int> iv(v.size());
        Int g = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpq_class s = v[i] * den;
            iv[i] = s.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[i].get_mpz_t());
        }
        for (auto &x : iv)
            x /= g;
        basis.push_back(std::move(iv));
    }
    return basis;
}

std::vector<mpq_class> solve(const IntMat &m, const std::vector<Int> &b)
{
    if (!m.square() || b.size() != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = m.rows();
    RatMat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("solve: singular system");
    std::vector<mpq_class> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = aug(i, n);
    return x;
}

IntMat specialize(const PolyMat &m, const Int &q)
{
    return m.map<Int>([&](const QPoly &p) { return p.evaluate(q); });
}

} // namespace oddsym
