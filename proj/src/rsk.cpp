#include <oddsym/rsk.hpp>

#include <oddsym/bases.hpp>
#include <oddsym/io.hpp>
#include <oddsym/oddring.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oddsym {

namespace {

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

std::size_t row_start(const std::vector<std::vector<int>> &rows, std::size_t r)
{
    std::size_t s = 0;
    for (std::size_t i = r + 1; i < rows.size(); ++i)
        s += rows[i].size();
    return s;
}

void check_margins(const Partition &mu, const Partition &rho)
{
    if (mu.degree() != rho.degree())
        throw std::invalid_argument("margins of different weight");
    if (mu.degree() > rsk_degree_bound)
        throw std::invalid_argument("degree " + std::to_string(mu.degree()) + " exceeds " +
                                    std::to_string(rsk_degree_bound));
}

json matrix_json(const IntMatrix &a) { return json(a); }

} // namespace

TwoLineArray two_line_array(const IntMatrix &a)
{
    TwoLineArray t;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] < 0)
                throw std::invalid_argument("two_line_array: negative entry");
            for (int k = 0; k < a[i][j]; ++k) {
                t.u.push_back(static_cast<int>(i) + 1);
                t.v.push_back(static_cast<int>(j) + 1);
            }
        }
    return t;
}

Insertion row_insert(const Tableau &t, int x)
{
    Insertion ins;
    auto rows = t.rows();
    std::size_t r = 0;
    for (;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            ins.row = r;
            ins.col = 0;
            break;
        }
        auto &row = rows[r];
        const auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            ins.row = r;
            ins.col = row.size() - 1;
            break;
        }
        ins.knuth_moves += static_cast<long>(row.size()) - 1;
        std::swap(*it, x);
    }
    ins.tableau = Tableau(std::move(rows));
    return ins;
}

RskPair rsk(const IntMatrix &a)
{
    const TwoLineArray tl = two_line_array(a);
    RskPair pq;
    std::vector<std::vector<int>> q;
    for (std::size_t k = 0; k < tl.v.size(); ++k) {
        const Insertion ins = row_insert(pq.P, tl.v[k]);
        pq.P = ins.tableau;
        if (ins.row == q.size())
            q.emplace_back();
        q[ins.row].push_back(tl.u[k]);
    }
    pq.Q = Tableau(std::move(q));
    return pq;
}

IntMatrix rsk_inverse(const RskPair &pq)
{
    if (!(pq.P.shape() == pq.Q.shape()))
        throw std::invalid_argument("rsk_inverse: shapes differ");
    auto p = pq.P.rows();
    auto q = pq.Q.rows();
    const std::size_t nrows = pq.Q.content().size(), ncols = pq.P.content().size();
    IntMatrix a(nrows, std::vector<int>(ncols, 0));
    while (!q.empty()) {
        // Largest entry of Q, rightmost among ties: always at the end of a row.
        std::size_t r = 0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i].back() > q[r].back() || (q[i].back() == q[r].back() && q[i].size() > q[r].size()))
                r = i;
        const int u = q[r].back();
        q[r].pop_back();
        int y = p[r].back();
        p[r].pop_back();
        if (q[r].empty()) {
            q.pop_back();
            p.pop_back();
        }
        for (std::size_t i = r; i-- > 0;) {
            auto &row = p[i];
            auto it = std::lower_bound(row.begin(), row.end(), y);
            --it; // rightmost entry strictly less than y
            std::swap(*it, y);
        }
        a[static_cast<std::size_t>(u) - 1][static_cast<std::size_t>(y) - 1] += 1;
    }
    return a;
}

KnuthNormal knuth_normalize(const std::vector<int> &w)
{
    if (w.empty())
        throw std::invalid_argument("knuth_normalize: empty word");
    KnuthNormal kn;
    for (int x : w) {
        if (x < 1)
            throw std::invalid_argument("knuth_normalize: letters must be positive");
        const Insertion ins = row_insert(kn.tableau, x);
        kn.tableau = ins.tableau;
        kn.moves += ins.knuth_moves;
    }
    return kn;
}

std::vector<std::vector<int>> knuth_neighbours(const std::vector<int> &w)
{
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        const int a = w[i], b = w[i + 1], c = w[i + 2];
        // K': y z x <-> y x z, x < y <= z (swap of the last two letters)
        if ((c < a && a <= b) || (b < a && a <= c)) {
            auto n = w;
            std::swap(n[i + 1], n[i + 2]);
            out.push_back(std::move(n));
        }
        // K'': x z y <-> z x y, x <= y < z (swap of the first two letters)
        if ((a <= c && c < b) || (b <= c && c < a)) {
            auto n = w;
            std::swap(n[i], n[i + 1]);
            out.push_back(std::move(n));
        }
    }
    return out;
}

bool is_knuth_move(const std::vector<int> &a, const std::vector<int> &b)
{
    const auto ns = knuth_neighbours(a);
    return std::find(ns.begin(), ns.end(), b) != ns.end();
}

std::vector<KnuthStep> knuth_path(const std::vector<int> &w)
{
    std::vector<KnuthStep> steps;
    std::vector<std::vector<int>> rows;
    std::vector<int> word = w;
    for (std::size_t k = 0; k < w.size(); ++k) {
        int x = w[k];
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto &row = rows[r];
            const auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            const std::size_t len = row.size();
            const std::size_t p = static_cast<std::size_t>(it - row.begin());
            const std::size_t s = row_start(rows, r);
            // x sits at s + len, right after this row in the word.
            for (std::size_t j = len - 1; j > p; --j) {
                std::swap(word[s + j], word[s + j + 1]);
                steps.push_back({KnuthMove::KPrime, s + j - 1, word});
            }
            for (std::size_t j = p; j > 0; --j) {
                std::swap(word[s + j - 1], word[s + j]);
                steps.push_back({KnuthMove::KDoublePrime, s + j - 1, word});
            }
            std::swap(*it, x);
        }
    }
    return steps;
}

SignedWord odd_plactic_reduce(const std::vector<int> &w)
{
    if (w.empty())
        return {};
    const KnuthNormal kn = knuth_normalize(w);
    return {sign_of(kn.moves), kn.tableau.row_word()};
}

Report odd_rsk_check(const Partition &mu, const Partition &rho)
{
    check_margins(mu, rho);
    Report rep("odd RSK signs, mu = " + to_string(mu) + ", rho = " + to_string(rho));
    json entries = json::array();
    long aggregate = 0;
    for (const auto &a : nat_matrices(mu.parts(), rho.parts())) {
        const TwoLineArray tl = two_line_array(a);
        Tableau p;
        std::vector<std::vector<int>> q;
        long kn = 0;
        bool steps_ok = true;
        std::vector<int> prefix;
        for (std::size_t k = 0; k < tl.v.size(); ++k) {
            const Insertion ins = row_insert(p, tl.v[k]);
            p = ins.tableau;
            kn += ins.knuth_moves;
            if (ins.row == q.size())
                q.emplace_back();
            q[ins.row].push_back(tl.u[k]);
            prefix.push_back(tl.v[k]);
            const Tableau qk(q);
            steps_ok = steps_ok && sign_of(kn) == shape_sign(p.shape()) * qk.sign() &&
                       word_sign(prefix) == sign_of(kn) * p.sign();
        }
        const Tableau qt(std::move(q));
        const int sa = sign_of(sw_ne_weight(a));
        const int ss = shape_sign(p.shape());
        const bool ok = steps_ok && sa == word_sign(tl.v) && sa == ss * p.sign() * qt.sign();
        aggregate += ss * p.sign() * qt.sign();
        const json entry{{"matrix", matrix_json(a)}, {"P", p},  {"Q", qt},           {"sign_A", sa},
                         {"sign_P", p.sign()},        {"sign_Q", qt.sign()}, {"shape_sign", ss}, {"ok", ok}};
        rep.record(ok, entry);
        entries.push_back(entry);
    }
    rep.details["entries"] = entries;
    rep.details["aggregate"] = aggregate;
    return rep;
}

Report rsk_bijection_check(const Partition &mu, const Partition &rho)
{
    check_margins(mu, rho);
    Report rep("RSK bijection, mu = " + to_string(mu) + ", rho = " + to_string(rho));
    std::set<std::pair<Tableau, Tableau>> image;
    long count = 0;
    for (const auto &a : nat_matrices(mu.parts(), rho.parts())) {
        ++count;
        const RskPair pq = rsk(a);
        const bool valid = pq.P.is_semistandard() && pq.Q.is_semistandard() && pq.P.shape() == pq.Q.shape() &&
                           pq.P.content() == rho.parts() && pq.Q.content() == mu.parts();
        const bool fresh = image.insert({pq.P, pq.Q}).second;
        const bool inverts = rsk_inverse(pq) == a;
        rep.record(valid && fresh && inverts,
                   {{"matrix", matrix_json(a)}, {"P", pq.P}, {"Q", pq.Q}, {"valid", valid}, {"injective", fresh},
                    {"inverse", inverts}});
    }
    long pairs = 0;
    for (const auto &lam : partitions(mu.degree())) {
        const auto ps = ssyt(lam, rho.parts());
        const auto qs = ssyt(lam, mu.parts());
        pairs += static_cast<long>(ps.size() * qs.size());
        for (const auto &p : ps)
            for (const auto &q : qs)
                if (!image.count({p, q}))
                    rep.record(false, {{"missing", {{"P", p}, {"Q", q}}}});
    }
    rep.record(pairs == count, {{"matrices", count}, {"tableau_pairs", pairs}});
    rep.details["matrices"] = count;
    rep.details["tableau_pairs"] = pairs;
    return rep;
}

Report odd_rsk_sweep(int n)
{
    if (n < 0 || n > rsk_degree_bound)
        throw std::invalid_argument("odd_rsk_sweep: degree out of range");
    Report rep("odd RSK sweep, degree " + std::to_string(n));
    const auto ps = partitions(n);
    const IntMat &gram = partition_gram(n);
    const IntMat &k = kostka_matrix(n);
    long matrices = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            Report signs = odd_rsk_check(ps[i], ps[j]);
            const long agg = signs.details["aggregate"].get<long>();
            matrices += signs.checked;
            signs.details = json::object();
            rep.merge(signs);
            rep.merge(rsk_bijection_check(ps[i], ps[j]));
            Int kk = 0;
            for (std::size_t l = 0; l < ps.size(); ++l)
                kk += shape_sign(ps[l]) * k(l, i) * k(l, j);
            rep.record(gram(i, j) == agg && kk == agg, {{"mu", ps[i]},
                                                        {"rho", ps[j]},
                                                        {"signed_count", agg},
                                                        {"pairing", int_to_json(gram(i, j))},
                                                        {"kostka_sum", int_to_json(kk)}});
        }
    rep.details["matrices"] = matrices;
    return rep;
}

} // namespace oddsym
