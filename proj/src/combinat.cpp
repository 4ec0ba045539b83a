#include <oddsym/combinat.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddsym {

Composition::Composition(std::vector<int> parts) : m_parts(std::move(parts))
{
    for (int p : m_parts) {
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive");
        m_degree += p;
    }
}

Composition Composition::reversed() const
{
    std::vector<int> r(m_parts.rbegin(), m_parts.rend());
    return Composition(std::move(r));
}

Partition::Partition(std::vector<int> parts) : m_parts(std::move(parts))
{
    for (std::size_t i = 0; i < m_parts.size(); ++i) {
        if (m_parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && m_parts[i] > m_parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        m_degree += m_parts[i];
    }
}

Partition Partition::from_parts(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int k, int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), k)); }

namespace {

std::string join(const std::vector<int> &v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace

std::string to_string(const Composition &a) { return join(a.parts()); }
std::string to_string(const Partition &a) { return join(a.parts()); }

Partition transpose(const Partition &lambda)
{
    std::vector<int> cols;
    if (!lambda.empty()) {
        cols.assign(static_cast<std::size_t>(lambda[0]), 0);
        for (int row : lambda)
            for (int j = 0; j < row; ++j)
                ++cols[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(cols));
}

long angle(long k) { return k * (k + 1) / 2; }

long angle(const Composition &a)
{
    long s = 0;
    for (int p : a)
        s += angle(p);
    return s;
}

long angle(const Partition &a)
{
    long s = 0;
    for (int p : a)
        s += angle(p);
    return s;
}

long sw_ne_length(const Partition &lambda)
{
    // Box (r, c) sees lambda_i - c boxes strictly north-east in each row i < r.
    long total = 0;
    for (std::size_t r = 1; r < lambda.length(); ++r)
        for (int c = 1; c <= lambda[r]; ++c)
            for (std::size_t i = 0; i < r; ++i)
                total += lambda[i] - c;
    return total;
}

long even_rows_sum(const Partition &lambda)
{
    long s = 0;
    for (std::size_t i = 1; i < lambda.length(); i += 2)
        s += lambda[i];
    return s;
}

int shape_sign(const Partition &lambda) { return even_rows_sum(lambda) % 2 == 0 ? 1 : -1; }

int eta_sign(const Partition &lambda)
{
    const std::vector<int> rev(lambda.parts().rbegin(), lambda.parts().rend());
    long flips = 0;
    for (std::size_t i = 0; i < rev.size(); ++i)
        for (std::size_t j = i + 1; j < rev.size(); ++j)
            if (rev[i] < rev[j] && rev[i] % 2 == 1 && rev[j] % 2 == 0)
                ++flips;
    return flips % 2 == 0 ? 1 : -1;
}

bool dominates(const Partition &lambda, const Partition &mu)
{
    long a = 0, b = 0;
    const std::size_t len = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b)
            return false;
    }
    return a == b;
}

bool refines(const Composition &fine, const Composition &coarse)
{
    if (fine.degree() != coarse.degree())
        return false;
    std::size_t i = 0;
    for (int part : coarse) {
        int acc = 0;
        while (acc < part && i < fine.length())
            acc += fine[i++];
        if (acc != part)
            return false;
    }
    return i == fine.length();
}

long strict_inversions(const std::vector<int> &word)
{
    long inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j])
                ++inv;
    return inv;
}

int word_sign(const std::vector<int> &word) { return strict_inversions(word) % 2 == 0 ? 1 : -1; }

Tableau::Tableau(std::vector<std::vector<int>> rows) : m_rows(std::move(rows))
{
    for (std::size_t i = 0; i < m_rows.size(); ++i) {
        if (m_rows[i].empty())
            throw std::invalid_argument("tableau rows must be non-empty");
        if (i > 0 && m_rows[i].size() > m_rows[i - 1].size())
            throw std::invalid_argument("tableau row lengths must be weakly decreasing");
        for (int v : m_rows[i])
            if (v < 1)
                throw std::invalid_argument("tableau entries must be positive");
    }
}

Tableau Tableau::superstandard(const Partition &lambda)
{
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        rows.emplace_back(static_cast<std::size_t>(lambda[i]), static_cast<int>(i) + 1);
    return Tableau(std::move(rows));
}

Tableau Tableau::from_row_word(const std::vector<int> &word)
{
    std::vector<std::vector<int>> bottom_up;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i == 0 || word[i] < word[i - 1])
            bottom_up.emplace_back();
        bottom_up.back().push_back(word[i]);
    }
    std::reverse(bottom_up.begin(), bottom_up.end());
    return Tableau(std::move(bottom_up));
}

Partition Tableau::shape() const
{
    std::vector<int> s;
    for (const auto &r : m_rows)
        s.push_back(static_cast<int>(r.size()));
    return Partition(std::move(s));
}

std::size_t Tableau::size() const
{
    std::size_t n = 0;
    for (const auto &r : m_rows)
        n += r.size();
    return n;
}

std::vector<int> Tableau::content() const
{
    std::vector<int> c;
    for (const auto &r : m_rows)
        for (int v : r) {
            if (static_cast<std::size_t>(v) > c.size())
                c.resize(static_cast<std::size_t>(v), 0);
            ++c[static_cast<std::size_t>(v) - 1];
        }
    return c;
}

std::vector<int> Tableau::row_word() const
{
    std::vector<int> w;
    for (auto it = m_rows.rbegin(); it != m_rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

bool Tableau::is_semistandard() const
{
    for (std::size_t i = 0; i < m_rows.size(); ++i) {
        for (std::size_t j = 0; j < m_rows[i].size(); ++j) {
            if (j > 0 && m_rows[i][j] < m_rows[i][j - 1])
                return false;
            if (i > 0 && m_rows[i][j] <= m_rows[i - 1][j])
                return false;
        }
    }
    return true;
}

std::string to_string(const Tableau &t)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < t.rows().size(); ++i)
        os << (i ? "," : "") << join(t.rows()[i]);
    os << ']';
    return os.str();
}

long sw_ne_weight(const IntMatrix &a)
{
    // above[j] = sum of entries in rows < i with column > j, maintained per row
    long total = 0;
    if (a.empty())
        return 0;
    const std::size_t ncols = a[0].size();
    std::vector<long> colsum(ncols, 0);
    for (const auto &row : a) {
        long right = 0;
        for (std::size_t j = ncols; j-- > 0;) {
            total += static_cast<long>(row[j]) * right;
            right += colsum[j];
        }
        for (std::size_t j = 0; j < ncols; ++j)
            colsum[j] += row[j];
    }
    return total;
}

long cable_weight(const IntMatrix &a)
{
    long total = 0;
    for (const auto &row : a)
        for (int v : row)
            if (v >= 1)
                total += angle(v - 1);
    return total;
}

std::vector<int> row_sums(const IntMatrix &a)
{
    std::vector<int> r;
    for (const auto &row : a)
        r.push_back(std::accumulate(row.begin(), row.end(), 0));
    return r;
}

std::vector<int> col_sums(const IntMatrix &a)
{
    std::vector<int> c(a.empty() ? 0 : a[0].size(), 0);
    for (const auto &row : a)
        for (std::size_t j = 0; j < row.size(); ++j)
            c[j] += row[j];
    return c;
}

// --- enumeration ---------------------------------------------------------

std::vector<Partition> partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions: negative degree");
    // Generate in decreasing lex order, then reverse.
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions(int n)
{
    if (n < 0)
        throw std::invalid_argument("compositions: negative degree");
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            rec(remaining - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Tableau> ssyt(const Partition &shape, const std::vector<int> &content)
{
    for (int c : content)
        if (c < 0)
            throw std::invalid_argument("ssyt: negative content");
    if (std::accumulate(content.begin(), content.end(), 0) != shape.degree())
        return {};

    std::vector<Tableau> out;
    const std::size_t nrows = shape.length();
    std::vector<std::vector<int>> rows(nrows);

    // Place the letter v as a horizontal strip of size content[v-1].
    std::function<void(std::size_t)> place = [&](std::size_t letter_idx) {
        if (letter_idx == content.size()) {
            out.emplace_back(rows);
            return;
        }
        const int value = static_cast<int>(letter_idx) + 1;
        // Old row lengths bound the strip: row r may grow up to the old
        // length of row r-1 and up to the target shape.
        std::vector<int> old(nrows);
        for (std::size_t r = 0; r < nrows; ++r)
            old[r] = static_cast<int>(rows[r].size());
        std::function<void(std::size_t, int)> strip = [&](std::size_t r, int left) {
            if (r == nrows) {
                if (left == 0)
                    place(letter_idx + 1);
                return;
            }
            const int cap_above = r == 0 ? shape[0] : old[r - 1];
            const int cap = std::min(cap_above, shape[r]) - old[r];
            for (int k = std::min(cap, left); k >= 0; --k) {
                rows[r].insert(rows[r].end(), static_cast<std::size_t>(k), value);
                strip(r + 1, left - k);
                rows[r].resize(static_cast<std::size_t>(old[r]));
            }
        };
        strip(0, content[letter_idx]);
    };
    place(0);
    return out;
}

namespace {

std::vector<IntMatrix> margin_matrices(const std::vector<int> &rows, const std::vector<int> &cols, int cap)
{
    const int rs = std::accumulate(rows.begin(), rows.end(), 0);
    const int cs = std::accumulate(cols.begin(), cols.end(), 0);
    if (rs != cs)
        throw std::invalid_argument("margin weights differ");
    for (int v : rows)
        if (v < 0)
            throw std::invalid_argument("negative margin");
    for (int v : cols)
        if (v < 0)
            throw std::invalid_argument("negative margin");

    std::vector<IntMatrix> out;
    IntMatrix cur(rows.size(), std::vector<int>(cols.size(), 0));
    std::vector<int> remaining = cols;
    std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int left) {
        if (i == rows.size()) {
            out.push_back(cur);
            return;
        }
        if (j == cols.size()) {
            if (left == 0)
                rec(i + 1, 0, i + 1 < rows.size() ? rows[i + 1] : 0);
            return;
        }
        int hi = std::min(left, remaining[j]);
        if (cap > 0)
            hi = std::min(hi, cap);
        // The last row must exhaust every column.
        for (int v = hi; v >= 0; --v) {
            if (i + 1 == rows.size() && v != remaining[j])
                continue;
            cur[i][j] = v;
            remaining[j] -= v;
            rec(i, j + 1, left - v);
            remaining[j] += v;
        }
        cur[i][j] = 0;
    };
    if (rows.empty()) {
        if (cs == 0)
            out.emplace_back();
        return out;
    }
    rec(0, 0, rows[0]);
    return out;
}

} // namespace

std::vector<IntMatrix> nat_matrices(const std::vector<int> &rows, const std::vector<int> &cols)
{
    return margin_matrices(rows, cols, 0);
}

std::vector<IntMatrix> binary_matrices(const std::vector<int> &rows, const std::vector<int> &cols)
{
    return margin_matrices(rows, cols, 1);
}

} // namespace oddsym
