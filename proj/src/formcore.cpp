#include <oddsym/formcore.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddsym {

Word h_word(const Composition &a)
{
    Word w;
    for (int p : a)
        w.push_back({p, Color::White});
    return w;
}

Word e_word(const Composition &a)
{
    Word w;
    for (int p : a)
        w.push_back({p, Color::Black});
    return w;
}

int degree(const Word &w)
{
    int d = 0;
    for (const auto &l : w)
        d += l.n;
    return d;
}

bool is_pure(const Word &w, Color c)
{
    return std::all_of(w.begin(), w.end(), [c](const Letter &l) { return l.color == c; });
}

Composition subscripts(const Word &w)
{
    std::vector<int> p;
    for (const auto &l : w)
        p.push_back(l.n);
    return Composition(std::move(p));
}

std::string to_string(const Word &w)
{
    if (w.empty())
        return "1";
    std::ostringstream os;
    for (const auto &l : w)
        os << (l.color == Color::White ? 'h' : 'e') << l.n;
    return os.str();
}

Word parse_word(const std::string &s)
{
    if (s == "1" || s.empty())
        return {};
    Word w;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i++];
        if (c != 'h' && c != 'e')
            throw std::invalid_argument("word letters must be h<n> or e<n>: " + s);
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i)
            throw std::invalid_argument("missing subscript in word: " + s);
        const int n = std::stoi(s.substr(i, j - i));
        if (n < 1)
            throw std::invalid_argument("word subscripts must be positive: " + s);
        w.push_back({n, c == 'h' ? Color::White : Color::Black});
        i = j;
    }
    return w;
}

FreeWordZ concat(const FreeWordZ &a, const FreeWordZ &b)
{
    FreeWordZ r;
    for (const auto &[wa, ca] : a)
        for (const auto &[wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

FreeWordZ expand_e_to_h(int n)
{
    if (n < 0)
        throw std::invalid_argument("expand_e_to_h: negative degree");
    if (n == 0)
        return FreeWordZ::basis({});
    FreeWordZ r;
    for (const auto &a : compositions(n))
        r.add(h_word(a), Int(neg_one_pow(angle(n) + static_cast<long>(a.length()))));
    return r;
}

FreeWordZ expand_to_h(const Word &w)
{
    FreeWordZ r = FreeWordZ::basis({});
    for (const auto &l : w) {
        if (l.color == Color::White)
            r = concat(r, FreeWordZ::basis({l}));
        else
            r = concat(r, expand_e_to_h(l.n));
    }
    return r;
}

FreeWordZ expand_to_h(const FreeWordZ &x)
{
    FreeWordZ r;
    for (const auto &[w, c] : x)
        r.add(expand_to_h(w), c);
    return r;
}

namespace {

// Sums a weight over all N-matrices with prescribed margins, row by row.
// Row k placing r_l strands in column l contributes r_l * (strands already
// placed in columns > l) to the SW-NE exponent. Partial results are
// memoized on the remaining column margins.
template <class R, class Mono>
class MarginSum
{
public:
    MarginSum(const Word &rows, const Word &cols, bool colored, Mono mono)
        : m_rows(rows), m_cols(cols), m_colored(colored), m_mono(mono)
    {
    }

    R run()
    {
        std::vector<int> remaining;
        for (const auto &l : m_cols)
            remaining.push_back(l.n);
        return solve(0, remaining);
    }

private:
    R solve(std::size_t k, const std::vector<int> &remaining)
    {
        if (k == m_rows.size()) {
            for (int v : remaining)
                if (v != 0)
                    return R(0);
            return R(1);
        }
        std::vector<int> key(remaining);
        key.push_back(static_cast<int>(k));
        if (auto it = m_memo.find(key); it != m_memo.end())
            return it->second;

        std::vector<int> used(m_cols.size());
        for (std::size_t l = 0; l < m_cols.size(); ++l)
            used[l] = m_cols[l].n - remaining[l];
        // above_right[l] = strands already placed in columns > l
        std::vector<long> above_right(m_cols.size(), 0);
        for (std::size_t l = m_cols.size(); l-- > 1;)
            above_right[l - 1] = above_right[l] + used[l];

        R total(0);
        std::vector<int> next(remaining);
        const bool last = k + 1 == m_rows.size();
        std::function<void(std::size_t, int, long, int)> fill = [&](std::size_t l, int left, long expo, int sign) {
            if (l == m_cols.size()) {
                if (left != 0)
                    return;
                R sub = solve(k + 1, next);
                if (!(sub == 0))
                    total += m_mono(sign, expo) * sub;
                return;
            }
            int hi = std::min(left, remaining[l]);
            int lo = 0;
            if (last)
                lo = hi = remaining[l];
            if (m_colored && m_rows[k].color != m_cols[l].color)
                hi = std::min(hi, 1);
            for (int r = lo; r <= hi; ++r) {
                int s = sign;
                if (m_colored && r > 0 && m_rows[k].color == Color::Black && m_cols[l].color == Color::Black)
                    s *= neg_one_pow(angle(r - 1));
                next[l] = remaining[l] - r;
                fill(l + 1, left - r, expo + static_cast<long>(r) * above_right[l], s);
            }
            next[l] = remaining[l];
        };
        fill(0, m_rows[k].n, 0, 1);
        m_memo.emplace(std::move(key), total);
        return total;
    }

    const Word &m_rows;
    const Word &m_cols;
    bool m_colored;
    Mono m_mono;
    std::map<std::vector<int>, R> m_memo;
};

QPoly generic_sum(const Word &rows, const Word &cols)
{
    if (degree(rows) != degree(cols))
        return {};
    auto mono = [](int sign, long e) { return QPoly::monomial(Int(sign), static_cast<int>(e)); };
    MarginSum<QPoly, decltype(mono)> engine(rows, cols, false, mono);
    return engine.run();
}

Int odd_sum(const Word &rows, const Word &cols, bool colored)
{
    if (degree(rows) != degree(cols))
        return 0;
    auto mono = [](int sign, long e) { return Int(sign * neg_one_pow(e)); };
    MarginSum<Int, decltype(mono)> engine(rows, cols, colored, mono);
    return engine.run();
}

} // namespace

QPoly pair_hh_generic(const Composition &beta, const Composition &alpha)
{
    return generic_sum(h_word(beta), h_word(alpha));
}

Int pair_hh_odd(const Composition &beta, const Composition &alpha)
{
    return odd_sum(h_word(beta), h_word(alpha), false);
}

Int pair_words_odd(const Word &y, const Word &x) { return odd_sum(y, x, true); }

Int pair_words_odd(const FreeWordZ &y, const FreeWordZ &x)
{
    Int total = 0;
    for (const auto &[wy, cy] : y)
        for (const auto &[wx, cx] : x)
            total += cy * cx * pair_words_odd(wy, wx);
    return total;
}

Int pair_words_odd_expanded(const Word &y, const Word &x)
{
    if (degree(y) != degree(x))
        return 0;
    const FreeWordZ ey = expand_to_h(y), ex = expand_to_h(x);
    Int total = 0;
    for (const auto &[wy, cy] : ey)
        for (const auto &[wx, cx] : ex)
            total += cy * cx * pair_hh_odd(subscripts(wy), subscripts(wx));
    return total;
}

QPoly pair_words_generic(const Word &y, const Word &x)
{
    if (degree(y) != degree(x))
        return {};
    const FreeWordZ ey = expand_to_h(y), ex = expand_to_h(x);
    QPoly total;
    for (const auto &[wy, cy] : ey)
        for (const auto &[wx, cx] : ex) {
            QPoly p = generic_sum(wy, wx);
            p *= Int(cy * cx);
            total += p;
        }
    return total;
}

std::vector<std::vector<QPoly>> composition_gram(int n)
{
    const auto comps = compositions(n);
    std::vector<std::vector<QPoly>> g(comps.size(), std::vector<QPoly>(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i; j < comps.size(); ++j) {
            g[i][j] = pair_hh_generic(comps[i], comps[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

TensorQ coproduct(const Composition &a)
{
    TensorQ r;
    const std::size_t k = a.length();
    std::vector<int> m(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            long e = 0;
            long rest_before = 0;
            for (std::size_t j = 0; j < k; ++j) {
                e += rest_before * m[j];
                rest_before += a[j] - m[j];
            }
            std::vector<int> left, right;
            for (std::size_t j = 0; j < k; ++j) {
                if (m[j] > 0)
                    left.push_back(m[j]);
                if (a[j] - m[j] > 0)
                    right.push_back(a[j] - m[j]);
            }
            r.add({Composition(left), Composition(right)}, QPoly::monomial(1, static_cast<int>(e)));
            return;
        }
        for (int v = 0; v <= a[i]; ++v) {
            m[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return r;
}

QPoly pair_tensor(const Composition &y1, const Composition &y2, const TensorQ &t)
{
    QPoly total;
    for (const auto &[key, c] : t) {
        const QPoly a = pair_hh_generic(y1, key.first);
        if (a.is_zero())
            continue;
        total += c * a * pair_hh_generic(y2, key.second);
    }
    return total;
}

Composition descent_composition(const std::vector<int> &sigma)
{
    std::vector<int> parts;
    int run = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        ++run;
        if (i + 1 == sigma.size() || sigma[i] > sigma[i + 1]) {
            parts.push_back(run);
            run = 0;
        }
    }
    return Composition(std::move(parts));
}

std::vector<int> inverse_permutation(const std::vector<int> &sigma)
{
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int v = sigma[i];
        if (v < 1 || static_cast<std::size_t>(v) > sigma.size() || inv[static_cast<std::size_t>(v) - 1] != 0)
            throw std::invalid_argument("not a permutation");
        inv[static_cast<std::size_t>(v) - 1] = static_cast<int>(i) + 1;
    }
    return inv;
}

namespace {

void check_htilde_args(const Composition &beta, const Composition &alpha)
{
    if (alpha.degree() > htilde_degree_bound || beta.degree() > htilde_degree_bound)
        throw std::invalid_argument("h~ pairing is limited to degree " + std::to_string(htilde_degree_bound));
}

std::vector<int> identity_permutation(int n)
{
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    return s;
}

// Minimal double coset representative attached to a margin matrix whose
// rows are the top platforms and columns the bottom platforms.
std::vector<int> coset_representative(const IntMatrix &a, const Composition &beta, const Composition &alpha)
{
    std::vector<int> top_off(beta.length(), 0);
    for (std::size_t i = 1; i < beta.length(); ++i)
        top_off[i] = top_off[i - 1] + beta[i - 1];
    std::vector<int> fill(beta.length(), 0);
    std::vector<int> sigma;
    for (std::size_t j = 0; j < alpha.length(); ++j)
        for (std::size_t i = 0; i < beta.length(); ++i)
            for (int k = 0; k < a[i][j]; ++k)
                sigma.push_back(top_off[i] + fill[i]++ + 1);
    return sigma;
}

} // namespace

QPoly pair_htilde_permutations(const Composition &beta, const Composition &alpha)
{
    check_htilde_args(beta, alpha);
    if (alpha.degree() != beta.degree())
        return {};
    std::vector<int> sigma = identity_permutation(alpha.degree());
    std::vector<Int> acc;
    do {
        if (descent_composition(sigma) != alpha)
            continue;
        if (descent_composition(inverse_permutation(sigma)) != beta)
            continue;
        const auto inv = static_cast<std::size_t>(strict_inversions(sigma));
        if (acc.size() <= inv)
            acc.resize(inv + 1, Int(0));
        acc[inv] += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return QPoly(std::move(acc));
}

QPoly pair_htilde_diagrams(const Composition &beta, const Composition &alpha)
{
    check_htilde_args(beta, alpha);
    if (alpha.degree() != beta.degree())
        return {};
    QPoly total;
    for (const auto &a : nat_matrices(beta.parts(), alpha.parts())) {
        const auto sigma = coset_representative(a, beta, alpha);
        const auto inv = inverse_permutation(sigma);
        bool ok = true;
        // neighbouring bottom platforms: last strand of one, first of next
        for (int p = 0, pos = 0; ok && p + 1 < static_cast<int>(alpha.length()); ++p) {
            pos += alpha[static_cast<std::size_t>(p)];
            ok = sigma[static_cast<std::size_t>(pos) - 1] > sigma[static_cast<std::size_t>(pos)];
        }
        for (int p = 0, pos = 0; ok && p + 1 < static_cast<int>(beta.length()); ++p) {
            pos += beta[static_cast<std::size_t>(p)];
            ok = inv[static_cast<std::size_t>(pos) - 1] > inv[static_cast<std::size_t>(pos)];
        }
        if (ok)
            total += QPoly::monomial(1, static_cast<int>(sw_ne_weight(a)));
    }
    return total;
}

QPoly pair_htilde(const Composition &beta, const Composition &alpha)
{
    QPoly a = pair_htilde_permutations(beta, alpha);
    QPoly b = pair_htilde_diagrams(beta, alpha);
    if (!(a == b))
        throw std::logic_error("h~ pairing routes disagree for " + to_string(beta) + ", " + to_string(alpha));
    return a;
}

std::vector<std::vector<QPoly>> htilde_gram(int n)
{
    if (n > htilde_degree_bound)
        throw std::invalid_argument("h~ pairing is limited to degree " + std::to_string(htilde_degree_bound));
    const auto comps = compositions(n);
    std::map<Composition, std::size_t> index;
    for (std::size_t i = 0; i < comps.size(); ++i)
        index.emplace(comps[i], i);
    std::vector<std::vector<QPoly>> g(comps.size(), std::vector<QPoly>(comps.size()));
    std::vector<int> sigma = identity_permutation(n);
    do {
        const std::size_t a = index.at(descent_composition(sigma));
        const std::size_t b = index.at(descent_composition(inverse_permutation(sigma)));
        g[b][a] += QPoly::monomial(1, static_cast<int>(strict_inversions(sigma)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return g;
}

} // namespace oddsym
