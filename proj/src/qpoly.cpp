#include <oddsym/qpoly.hpp>

#include <sstream>
#include <stdexcept>

namespace oddsym {

QPoly::QPoly(long c)
{
    if (c != 0)
        m_c.emplace_back(c);
}

QPoly::QPoly(const Int &c)
{
    if (c != 0)
        m_c.push_back(c);
}

QPoly::QPoly(std::vector<Int> coeffs) : m_c(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        m_c.emplace_back(c);
    trim();
}

QPoly QPoly::monomial(const Int &c, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    QPoly r;
    if (c != 0) {
        r.m_c.assign(static_cast<std::size_t>(degree) + 1, Int(0));
        r.m_c.back() = c;
    }
    return r;
}

void QPoly::trim()
{
    while (!m_c.empty() && m_c.back() == 0)
        m_c.pop_back();
}

Int QPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(m_c.size()))
        return 0;
    return m_c[static_cast<std::size_t>(k)];
}

int QPoly::valuation() const
{
    for (std::size_t i = 0; i < m_c.size(); ++i)
        if (m_c[i] != 0)
            return static_cast<int>(i);
    return 0;
}

Int QPoly::evaluate(const Int &x) const
{
    Int acc = 0;
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

bool QPoly::is_palindromic() const
{
    const int lo = valuation(), hi = degree();
    for (int i = lo, j = hi; i < j; ++i, --j)
        if (coeff(i) != coeff(j))
            return false;
    return true;
}

QPoly &QPoly::operator+=(const QPoly &o)
{
    if (o.m_c.size() > m_c.size())
        m_c.resize(o.m_c.size(), Int(0));
    for (std::size_t i = 0; i < o.m_c.size(); ++i)
        m_c[i] += o.m_c[i];
    trim();
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &o)
{
    if (o.m_c.size() > m_c.size())
        m_c.resize(o.m_c.size(), Int(0));
    for (std::size_t i = 0; i < o.m_c.size(); ++i)
        m_c[i] -= o.m_c[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly &a, const QPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Int> r(a.m_c.size() + b.m_c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i) {
        if (a.m_c[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.m_c.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.m_c[i].get_mpz_t(), b.m_c[j].get_mpz_t());
    }
    return QPoly(std::move(r));
}

QPoly &QPoly::operator*=(const QPoly &o) { return *this = *this * o; }

QPoly &QPoly::operator*=(const Int &s)
{
    if (s == 0) {
        m_c.clear();
        return *this;
    }
    for (auto &c : m_c)
        c *= s;
    return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly &d) const
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    std::vector<Int> rem = m_c;
    const int dd = d.degree();
    const Int &lc = d.m_c.back();
    std::vector<Int> quo(rem.size() >= d.m_c.size() ? rem.size() - d.m_c.size() + 1 : 0, Int(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        Int &top = rem[static_cast<std::size_t>(k)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t()))
            throw std::domain_error("inexact integer polynomial division");
        Int t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        const int shift = k - dd;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(shift + j)] -= t * d.m_c[static_cast<std::size_t>(j)];
        quo[static_cast<std::size_t>(shift)] = t;
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly &d) const
{
    auto [q, r] = divmod(d);
    if (!r.is_zero())
        throw std::domain_error("polynomial division leaves a remainder");
    return q;
}

bool QPoly::divisible_by(const QPoly &d) const
{
    try {
        return divmod(d).second.is_zero();
    } catch (const std::domain_error &) {
        return false;
    }
}

QPoly qint(int n)
{
    if (n < 0)
        throw std::invalid_argument("qint: negative argument");
    return QPoly(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

QPoly qfactorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("qfactorial: negative argument");
    QPoly r(1);
    for (int k = 2; k <= n; ++k)
        r *= qint(k);
    return r;
}

QPoly pow(const QPoly &p, int k)
{
    QPoly r(1);
    for (int i = 0; i < k; ++i)
        r *= p;
    return r;
}

std::pair<int, QPoly> divide_out(const QPoly &p, const QPoly &f)
{
    if (f.is_zero())
        throw std::domain_error("divide_out: zero factor");
    if (p.is_zero())
        throw std::domain_error("divide_out: zero polynomial has unbounded multiplicity");
    if (f.degree() == 0) {
        if (f.leading() == 1 || f.leading() == -1)
            throw std::domain_error("divide_out: unit factor");
    }
    int k = 0;
    QPoly cur = p;
    while (true) {
        QPoly q, r;
        try {
            std::tie(q, r) = cur.divmod(f);
        } catch (const std::domain_error &) {
            break;
        }
        if (!r.is_zero())
            break;
        cur = std::move(q);
        ++k;
    }
    return {k, cur};
}

std::string to_string(const QPoly &p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Int c = p.coeff(k);
        if (c == 0)
            continue;
        if (c < 0) {
            os << '-';
            c = -c;
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str();
        os << 'q';
        if (k > 1)
            os << '^' << k;
    }
    return os.str();
}

} // namespace oddsym
