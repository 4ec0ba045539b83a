#include <oddsym/bases.hpp>

#include <oddsym/cache.hpp>
#include <oddsym/io.hpp>

#include <algorithm>
#include <stdexcept>

namespace oddsym {

namespace {

void check_degree(int n, const char *what)
{
    if (n < 0 || n > basis_degree_bound)
        throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(n) + " outside 0.." +
                                    std::to_string(basis_degree_bound));
}

std::size_t index_of(const std::vector<Partition> &ps, const Partition &p)
{
    const auto it = std::lower_bound(ps.begin(), ps.end(), p);
    if (it == ps.end() || !(*it == p))
        throw std::invalid_argument("partition " + to_string(p) + " not in index");
    return static_cast<std::size_t>(it - ps.begin());
}

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

Int e_pair(const Partition &a, const Partition &b)
{
    return pair_words_odd(e_word(a.as_composition()), e_word(b.as_composition()));
}

Int eh_pair(const Partition &a, const Partition &b)
{
    return pair_words_odd(e_word(a.as_composition()), h_word(b.as_composition()));
}

const IntMat &kostka_inverse(int n)
{
    static SharedCache<int, IntMat> cache;
    return cache.get(n, [&] { return unimodular_inverse(kostka_matrix(n)); });
}

const IntMat &pairing_matrix(BasisKind kind, int n)
{
    static SharedCache<std::pair<int, int>, IntMat> cache;
    return cache.get({static_cast<int>(kind), n}, [&] {
        if (kind == BasisKind::MPrime)
            return partition_gram(n);
        const auto ps = partitions(n);
        IntMat m(ps.size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j)
                m(i, j) = kind == BasisKind::M ? eh_pair(ps[i], ps[j]) : e_pair(ps[i], ps[j]);
        return m;
    });
}

const IntMat &pairing_inverse(BasisKind kind, int n)
{
    static SharedCache<std::pair<int, int>, IntMat> cache;
    return cache.get({static_cast<int>(kind), n}, [&] { return unimodular_inverse(pairing_matrix(kind, n)); });
}

// Solves G a = -g over Q and insists on an integral answer.
std::vector<Int> integral_solve(const IntMat &g, const std::vector<Int> &rhs)
{
    std::vector<Int> out;
    for (const auto &x : solve(g, rhs)) {
        if (x.get_den() != 1)
            throw std::logic_error("expected an integral solution");
        out.push_back(x.get_num());
    }
    return out;
}

// x = b_0 + sum_{mu in higher} c_mu b_mu with (x, t_nu) = 0 for nu in higher,
// where form(a, b) = (b_a, t_b).
template <class Form>
std::vector<Int> triangular_solve(const Partition &lead, const std::vector<Partition> &higher, Form &&form)
{
    if (higher.empty())
        return {};
    IntMat g(higher.size(), higher.size());
    std::vector<Int> rhs(higher.size());
    for (std::size_t i = 0; i < higher.size(); ++i) {
        rhs[i] = -form(lead, higher[i]);
        for (std::size_t j = 0; j < higher.size(); ++j)
            g(i, j) = form(higher[j], higher[i]);
    }
    return integral_solve(g, rhs);
}

std::vector<Partition> strictly_above(const Partition &p)
{
    std::vector<Partition> out;
    for (const auto &mu : partitions(p.degree()))
        if (mu > p)
            out.push_back(mu);
    return out;
}

} // namespace

Int kostka(const Partition &lambda, const Partition &mu)
{
    if (lambda.degree() != mu.degree())
        throw std::invalid_argument("kostka: partitions of different size");
    Int total = 0;
    for (const auto &t : ssyt(lambda, mu.parts()))
        total += t.sign();
    return total * Tableau::superstandard(lambda).sign();
}

const IntMat &kostka_matrix(int n)
{
    check_degree(n, "kostka_matrix");
    static SharedCache<int, IntMat> cache;
    return cache.get(n, [&] {
        const auto ps = partitions(n);
        IntMat k(ps.size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j)
                k(i, j) = kostka(ps[i], ps[j]);
        return k;
    });
}

std::string to_string(BasisKind kind)
{
    switch (kind) {
    case BasisKind::M:
        return "M";
    case BasisKind::MPrime:
        return "M'";
    case BasisKind::MDoublePrime:
        return "M''";
    }
    return "?";
}

BasisKind parse_basis_kind(const std::string &s)
{
    if (s == "M")
        return BasisKind::M;
    if (s == "M'" || s == "Mp" || s == "MPrime")
        return BasisKind::MPrime;
    if (s == "M''" || s == "Mpp" || s == "MDoublePrime")
        return BasisKind::MDoublePrime;
    throw std::invalid_argument("unknown matrix kind '" + s + "' (expected M, M', M'')");
}

Int basis_entry(BasisKind kind, const Partition &lambda, const Partition &mu)
{
    if (lambda.degree() != mu.degree())
        throw std::invalid_argument("basis_entry: partitions of different size");
    check_degree(lambda.degree(), "basis_entry");
    const auto mats = kind == BasisKind::M ? binary_matrices(lambda.parts(), mu.parts())
                                           : nat_matrices(lambda.parts(), mu.parts());
    Int total = 0;
    for (const auto &a : mats) {
        long e = sw_ne_weight(a);
        if (kind == BasisKind::MDoublePrime)
            e += cable_weight(a);
        total += sign_of(e);
    }
    return total;
}

BasisMatrix basis_matrix(BasisKind kind, int n)
{
    check_degree(n, "basis_matrix");
    BasisMatrix b{kind, n, partitions(n), {}};
    b.entries = IntMat(b.index.size(), b.index.size());
    for (std::size_t i = 0; i < b.index.size(); ++i)
        for (std::size_t j = 0; j < b.index.size(); ++j)
            b.entries(i, j) = basis_entry(kind, b.index[i], b.index[j]);
    return b;
}

BasisMatrix basis_matrix_by_pairing(BasisKind kind, int n)
{
    check_degree(n, "basis_matrix_by_pairing");
    return {kind, n, partitions(n), pairing_matrix(kind, n)};
}

OddElt monomial(const Partition &mu)
{
    const int n = mu.degree();
    check_degree(n, "monomial");
    const auto ps = partitions(n);
    const std::size_t j = index_of(ps, mu);
    const IntMat &inv = pairing_inverse(BasisKind::MPrime, n);
    OddElt r;
    for (std::size_t i = 0; i < ps.size(); ++i)
        r.add(ps[i], inv(i, j));
    return r;
}

OddElt forgotten(const Partition &mu)
{
    // f_mu = sum_nu c_nu h_nu with sum_nu (e_lambda, h_nu) c_nu = delta_{lambda mu}.
    const int n = mu.degree();
    check_degree(n, "forgotten");
    const auto ps = partitions(n);
    const std::size_t j = index_of(ps, mu);
    const IntMat &inv = pairing_inverse(BasisKind::M, n);
    OddElt r;
    for (std::size_t i = 0; i < ps.size(); ++i)
        r.add(ps[i], inv(i, j));
    return r;
}

OddElt schur(const Partition &lambda)
{
    const int n = lambda.degree();
    check_degree(n, "schur");
    const auto ps = partitions(n);
    const std::size_t j = index_of(ps, lambda);
    const IntMat &inv = kostka_inverse(n);
    OddElt r;
    for (std::size_t i = 0; i < ps.size(); ++i)
        r.add(ps[i], inv(i, j));
    return r;
}

OddElt schur_by_orthogonality(const Partition &lambda)
{
    check_degree(lambda.degree(), "schur_by_orthogonality");
    const auto higher = strictly_above(lambda);
    const auto a = triangular_solve(lambda, higher, [](const Partition &x, const Partition &y) {
        return pair_hh_odd(x.as_composition(), y.as_composition());
    });
    OddElt r = h(lambda);
    for (std::size_t i = 0; i < higher.size(); ++i)
        r.add(higher[i], a[i]);
    return r;
}

OddElt schur_prime(const Partition &lambda)
{
    check_degree(lambda.degree(), "schur_prime");
    const Partition lt = transpose(lambda);
    const auto higher = strictly_above(lt);
    const auto b = triangular_solve(lt, higher, e_pair);
    OddElt coords = OddElt::basis(lt);
    for (std::size_t i = 0; i < higher.size(); ++i)
        coords.add(higher[i], b[i]);
    return from_e_basis(coords);
}

int schur_norm_sign(const Partition &lambda) { return sign_of(angle(transpose(lambda)) + lambda.degree()); }

Report schur_orthonormality(int n)
{
    check_degree(n, "schur_orthonormality");
    Report rep("Schur signed orthonormality, degree " + std::to_string(n));
    const auto ps = partitions(n);
    std::vector<OddElt> s;
    for (const auto &p : ps)
        s.push_back(schur(p));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const Int v = pair(s[i], s[j]);
            const int expect = i == j ? schur_norm_sign(ps[i]) : 0;
            rep.record(v == expect, {{"lambda", ps[i]}, {"mu", ps[j]}, {"pairing", int_to_json(v)}, {"expected", expect}});
        }
    return rep;
}

Report schur_alt_routes(const Partition &lambda)
{
    const int n = lambda.degree();
    check_degree(n, "schur_alt_routes");
    Report rep("Schur alternative routes, lambda = " + to_string(lambda));
    const auto ps = partitions(n);
    const IntMat &k = kostka_matrix(n);
    const std::size_t li = index_of(ps, lambda);
    const Partition lt = transpose(lambda);
    const std::size_t lti = index_of(ps, lt);
    const OddElt s = schur(lambda);
    const int norm = schur_norm_sign(lambda);
    const int wsign = sign_of(sw_ne_length(lambda));

    const auto note = [&](const char *route, bool ok, const OddElt &got, const OddElt &want) {
        rep.record(ok, {{"route", route}, {"got", odd_to_json(got)}, {"expected", odd_to_json(want)}});
    };

    note("leading term", s.coeff(lambda) == 1, s, h(lambda));

    const OddElt orth = schur_by_orthogonality(lambda);
    note("orthogonality", orth == s, orth, s);

    OddElt via_m;
    for (std::size_t j = 0; j < ps.size(); ++j)
        via_m.add(monomial(ps[j]), k(li, j));
    note("monomial", via_m == norm * s, via_m, norm * s);

    const OddElt sp = schur_prime(lambda);
    note("s prime", sp == wsign * norm * s, sp, wsign * norm * s);

    OddElt via_f;
    for (std::size_t j = 0; j < ps.size(); ++j)
        via_f.add(forgotten(ps[j]), sign_of(angle(ps[j])) * k(lti, j));
    const int fsign = sign_of(sw_ne_length(lambda) + angle(lt));
    note("forgotten", via_f == fsign * s, via_f, fsign * s);

    // (-1)^{<lambda>} e_lambda = sum_nu (-1)^{l(w_nu)+|nu|} K_{nu^T lambda} s_nu
    OddElt via_s;
    for (const auto &nu : ps) {
        const Int c = k(index_of(ps, transpose(nu)), li);
        if (c != 0)
            via_s.add(schur(nu), sign_of(sw_ne_length(nu) + n) * c);
    }
    const OddElt el = sign_of(angle(lambda)) * e(lambda);
    note("elementary", via_s == el, via_s, el);
    return rep;
}

DetM det_M(int n)
{
    check_degree(n, "det_M");
    const auto b = basis_matrix(BasisKind::M, n);
    const auto &ps = b.index;
    std::vector<std::size_t> perm(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        perm[i] = index_of(ps, transpose(ps[i]));
    IntMat permuted(ps.size(), ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            permuted(i, j) = b.entries(i, perm[j]);
    long inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            inv += perm[i] > perm[j];
    Int product = 1;
    for (const auto &p : ps)
        if (transpose(p) == p)
            product *= sign_of(sw_ne_length(p));
    return {det(permuted), det(b.entries), sign_of(inv), product};
}

Report kostka_check(int n)
{
    check_degree(n, "kostka_check");
    Report rep("Kostka invariants, degree " + std::to_string(n));
    const auto ps = partitions(n);
    const IntMat &k = kostka_matrix(n);
    const Partition top{n};
    const Partition column = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            bool ok = true;
            if (ps[i] == top)
                ok = ok && k(i, j) == 1;
            if (ps[i] == column)
                ok = ok && k(i, j) == (ps[j] == column ? 1 : 0);
            if (i == j)
                ok = ok && k(i, j) == 1;
            if (j > i)
                ok = ok && k(i, j) == 0;
            rep.record(ok, {{"lambda", ps[i]}, {"mu", ps[j]}, {"K", int_to_json(k(i, j))}});
        }
    return rep;
}

Report basis_matrix_check(int n)
{
    check_degree(n, "basis_matrix_check");
    Report rep("M, M', M'' matrices, degree " + std::to_string(n));
    const auto ps = partitions(n);
    for (auto kind : {BasisKind::M, BasisKind::MPrime, BasisKind::MDoublePrime}) {
        const auto en = basis_matrix(kind, n);
        const auto pr = basis_matrix_by_pairing(kind, n);
        rep.record(en.entries == pr.entries, {{"kind", to_string(kind)}, {"check", "enumeration equals pairing"}});
        const Int d = det(en.entries);
        rep.record(d == 1 || d == -1, {{"kind", to_string(kind)}, {"check", "unimodular"}, {"det", int_to_json(d)}});
        if (kind != BasisKind::M)
            rep.record(en.entries.is_symmetric(), {{"kind", to_string(kind)}, {"check", "symmetric"}});
    }
    const IntMat &m = pairing_matrix(BasisKind::M, n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Partition lt = transpose(ps[i]);
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (ps[j] > lt)
                rep.record(m(i, j) == 0, {{"check", "M vanishes above lambda^T"}, {"lambda", ps[i]}, {"mu", ps[j]}});
            else if (ps[j] == lt)
                rep.record(m(i, j) == sign_of(sw_ne_length(ps[i])),
                           {{"check", "M anti-diagonal"}, {"lambda", ps[i]}, {"value", int_to_json(m(i, j))}});
        }
    }
    const DetM d = det_M(n);
    rep.record(d.value == d.product_formula && d.lexicographic == d.transpose_sign * d.value,
               {{"check", "det M"},
                {"value", int_to_json(d.value)},
                {"product", int_to_json(d.product_formula)},
                {"lexicographic", int_to_json(d.lexicographic)}});
    return rep;
}

Report rsk_aggregate_check(int n)
{
    check_degree(n, "rsk_aggregate_check");
    Report rep("aggregate odd RSK identities, degree " + std::to_string(n));
    const auto ps = partitions(n);
    const IntMat &k = kostka_matrix(n);
    const IntMat &mp = pairing_matrix(BasisKind::MPrime, n);
    const IntMat &mpp = pairing_matrix(BasisKind::MDoublePrime, n);
    std::vector<std::size_t> tr(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        tr[i] = index_of(ps, transpose(ps[i]));
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = 0; b < ps.size(); ++b) {
            Int first = 0, second = 0;
            for (std::size_t l = 0; l < ps.size(); ++l) {
                const int d = shape_sign(ps[l]);
                first += d * k(l, a) * k(l, b);
                second += d * k(tr[l], a) * k(tr[l], b);
            }
            rep.record(first == mp(a, b), {{"identity", "h"}, {"mu", ps[a]}, {"rho", ps[b]},
                                           {"sum", int_to_json(first)}, {"entry", int_to_json(mp(a, b))}});
            const Int lhs = sign_of(angle(ps[a]) + angle(ps[b])) * mpp(a, b);
            rep.record(second == lhs, {{"identity", "e"}, {"mu", ps[a]}, {"rho", ps[b]},
                                       {"sum", int_to_json(second)}, {"entry", int_to_json(lhs)}});
        }
    return rep;
}

Report dual_basis_check(int n)
{
    check_degree(n, "dual_basis_check");
    Report rep("dual bases, degree " + std::to_string(n));
    const auto ps = partitions(n);
    std::vector<OddElt> m, f;
    for (const auto &p : ps) {
        m.push_back(monomial(p));
        f.push_back(forgotten(p));
    }
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const int delta = i == j ? 1 : 0;
            const Int hm = pair(h(ps[i]), m[j]);
            const Int ef = pair(e(ps[i]), f[j]);
            rep.record(hm == delta && ef == delta,
                       {{"lambda", ps[i]}, {"mu", ps[j]}, {"h_m", int_to_json(hm)}, {"e_f", int_to_json(ef)}});
        }
    if (n >= 1) {
        const Int c = e(n).coeff(Partition{n});
        const OddElt fn = f.back(), mn = m.back();
        rep.record(fn == c * mn, {{"check", "f_n = c m_n"}, {"f", odd_to_json(fn)}, {"m", odd_to_json(mn)},
                                  {"c", int_to_json(c)}});
    }
    // Form in the f-basis: h = M^T f, so F = M^-T M' M^-1.
    const IntMat &minv = pairing_inverse(BasisKind::M, n);
    const IntMat form = minv.transposed() * pairing_matrix(BasisKind::MPrime, n) * minv;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const Int v = pair(f[i], f[j]);
            rep.record(v == form(i, j), {{"check", "f-basis form"}, {"lambda", ps[i]}, {"mu", ps[j]},
                                         {"pairing", int_to_json(v)}, {"matrix", int_to_json(form(i, j))}});
        }
    return rep;
}

} // namespace oddsym
