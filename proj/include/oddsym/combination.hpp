#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

namespace oddsym {

// Sparse formal linear combination of keys. Zero coefficients are never
// stored, so two combinations are equal iff their maps are equal.
template <class Key, class Coef>
class Combination
{
public:
    using key_type = Key;
    using coef_type = Coef;
    using map_type = std::map<Key, Coef>;
    using const_iterator = typename map_type::const_iterator;

    Combination() = default;
    Combination(std::initializer_list<std::pair<const Key, Coef>> init)
    {
        for (const auto &[k, c] : init)
            add(k, c);
    }

    static Combination basis(const Key &k)
    {
        Combination r;
        r.m_terms.emplace(k, Coef(1));
        return r;
    }

    void add(const Key &k, const Coef &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = m_terms.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                m_terms.erase(it);
        }
    }

    void add(const Combination &o, const Coef &scale = Coef(1))
    {
        if (scale == 0)
            return;
        for (const auto &[k, c] : o.m_terms)
            add(k, c * scale);
    }

    Coef coeff(const Key &k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? Coef(0) : it->second;
    }

    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }
    const map_type &terms() const { return m_terms; }
    const_iterator begin() const { return m_terms.begin(); }
    const_iterator end() const { return m_terms.end(); }

    Combination &operator+=(const Combination &o)
    {
        add(o);
        return *this;
    }
    Combination &operator-=(const Combination &o)
    {
        add(o, Coef(-1));
        return *this;
    }
    Combination &operator*=(const Coef &s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto &kv : m_terms)
            kv.second *= s;
        return *this;
    }

    friend Combination operator+(Combination a, const Combination &b) { return a += b; }
    friend Combination operator-(Combination a, const Combination &b) { return a -= b; }
    friend Combination operator*(Combination a, const Coef &s) { return a *= s; }
    friend Combination operator*(const Coef &s, Combination a) { return a *= s; }
    friend Combination operator-(Combination a) { return a *= Coef(-1); }
    friend bool operator==(const Combination &a, const Combination &b) { return a.m_terms == b.m_terms; }

    // Apply a linear map given on keys.
    template <class Out, class F>
    Out map_linear(F &&f) const
    {
        Out r;
        for (const auto &[k, c] : m_terms)
            r.add(f(k), c);
        return r;
    }

private:
    map_type m_terms;
};

} // namespace oddsym
