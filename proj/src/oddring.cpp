#include <oddsym/oddring.hpp>

#include <oddsym/cache.hpp>
#include <oddsym/io.hpp>

#include <map>
#include <stdexcept>

namespace oddsym {

namespace {

using Seq = std::vector<int>;
using SeqComb = Combination<Seq, Int>;

// h_a h_b for a < b with a + b odd, as a combination of non-increasing
// words of length <= 2:
// h_a h_b = (-1)^a h_b h_a + h_{b+1} h_{a-1} - (-1)^a h_{a-1} h_{b+1}.
SeqComb odd_ascent(int a, int b)
{
    if (a == 0)
        return SeqComb::basis({b});
    const Int s = neg_one_pow(a);
    SeqComb r;
    r.add(Seq{b, a}, s);
    r.add(a - 1 > 0 ? Seq{b + 1, a - 1} : Seq{b + 1}, Int(1));
    r.add(odd_ascent(a - 1, b + 1), -s);
    return r;
}

OddElt straighten(const Composition &w);

const OddElt &normalize_cached(const Composition &w)
{
    static SharedCache<Composition, OddElt> cache;
    return cache.get(w, [&] { return straighten(w); });
}

OddElt straighten(const Composition &w)
{
    const auto &p = w.parts();
    std::size_t i = 0;
    while (i + 1 < p.size() && p[i] >= p[i + 1])
        ++i;
    if (i + 1 >= p.size())
        return OddElt::basis(Partition(p));

    const int a = p[i], b = p[i + 1];
    const SeqComb local = (a + b) % 2 == 0 ? SeqComb::basis({b, a}) : odd_ascent(a, b);
    OddElt r;
    for (const auto &[seq, c] : local) {
        Seq next(p.begin(), p.begin() + static_cast<long>(i));
        next.insert(next.end(), seq.begin(), seq.end());
        next.insert(next.end(), p.begin() + static_cast<long>(i) + 2, p.end());
        r.add(normalize_cached(Composition(std::move(next))), c);
    }
    return r;
}

const IntMat &gram_inverse(int n)
{
    static SharedCache<int, IntMat> cache;
    return cache.get(n, [&] { return unimodular_inverse(partition_gram(n)); });
}

const IntMat &e_to_h_inverse(int n)
{
    static SharedCache<int, IntMat> cache;
    return cache.get(n, [&] { return unimodular_inverse(e_to_h_matrix(n)); });
}

std::map<int, OddElt> by_degree(const OddElt &x)
{
    std::map<int, OddElt> parts;
    for (const auto &[lam, c] : x)
        parts[lam.degree()].add(lam, c);
    return parts;
}

// Applies a per-degree square matrix to h-coordinates (or e-coordinates).
OddElt apply_matrix(const OddElt &x, const IntMat &(*matrix_for)(int))
{
    OddElt r;
    for (const auto &[n, part] : by_degree(x)) {
        const auto ps = partitions(n);
        const IntMat &m = matrix_for(n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            Int v = 0;
            for (std::size_t j = 0; j < ps.size(); ++j)
                v += m(i, j) * part.coeff(ps[j]);
            r.add(ps[i], v);
        }
    }
    return r;
}

Word two_letters(int a, Color ca, int b, Color cb)
{
    Word w;
    if (a > 0)
        w.push_back({a, ca});
    if (b > 0)
        w.push_back({b, cb});
    return w;
}

} // namespace

OddElt unit() { return OddElt::basis(Partition{}); }
OddElt h(const Partition &lambda) { return OddElt::basis(lambda); }
OddElt h(int n) { return n == 0 ? unit() : OddElt::basis(Partition{n}); }
OddElt e(const Partition &lambda) { return normalize(e_word(lambda.as_composition())); }
OddElt e(int n) { return n == 0 ? unit() : e(Partition{n}); }

OddElt normalize(const Composition &word) { return normalize_cached(word); }

OddElt normalize(const Word &word)
{
    if (is_pure(word, Color::White))
        return normalize_cached(subscripts(word));
    return normalize(expand_to_h(word));
}

OddElt normalize(const FreeWordZ &x)
{
    OddElt r;
    for (const auto &[w, c] : x) {
        if (is_pure(w, Color::White))
            r.add(normalize_cached(subscripts(w)), c);
        else
            r.add(normalize(expand_to_h(w)), c);
    }
    return r;
}

OddElt normalize_via_gram(const FreeWordZ &x)
{
    std::map<int, FreeWordZ> parts;
    for (const auto &[w, c] : x)
        parts[degree(w)].add(w, c);
    OddElt r;
    for (const auto &[n, part] : parts) {
        const auto ps = partitions(n);
        std::vector<Int> rhs(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const Word hm = h_word(ps[i].as_composition());
            for (const auto &[w, c] : part)
                rhs[i] += c * pair_words_odd(hm, w);
        }
        const IntMat &inv = gram_inverse(n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            Int v = 0;
            for (std::size_t j = 0; j < ps.size(); ++j)
                v += inv(i, j) * rhs[j];
            r.add(ps[i], v);
        }
    }
    return r;
}

OddElt multiply(const OddElt &x, const OddElt &y)
{
    OddElt r;
    for (const auto &[a, ca] : x)
        for (const auto &[b, cb] : y) {
            std::vector<int> w = a.parts();
            w.insert(w.end(), b.begin(), b.end());
            r.add(normalize_cached(Composition(std::move(w))), ca * cb);
        }
    return r;
}

OddTensor comultiply(const OddElt &x)
{
    OddTensor r;
    for (const auto &[lam, c] : x)
        for (const auto &[key, poly] : coproduct(lam.as_composition())) {
            const Int s = c * poly.evaluate(-1);
            const OddElt &l = normalize_cached(key.first);
            const OddElt &rr = normalize_cached(key.second);
            for (const auto &[p1, c1] : l)
                for (const auto &[p2, c2] : rr)
                    r.add({p1, p2}, s * c1 * c2);
        }
    return r;
}

OddElt tensor_multiply(const OddTensor &t)
{
    OddElt r;
    for (const auto &[key, c] : t)
        r.add(multiply(h(key.first), h(key.second)), c);
    return r;
}

Int pair(const OddElt &x, const OddElt &y)
{
    Int total = 0;
    for (const auto &[a, ca] : x)
        for (const auto &[b, cb] : y)
            if (a.degree() == b.degree())
                total += ca * cb * pair_hh_odd(a.as_composition(), b.as_composition());
    return total;
}

Int pair(const OddTensor &a, const OddTensor &b)
{
    Int total = 0;
    for (const auto &[ka, ca] : a)
        for (const auto &[kb, cb] : b) {
            if (ka.first.degree() != kb.first.degree() || ka.second.degree() != kb.second.degree())
                continue;
            total += ca * cb * pair_hh_odd(ka.first.as_composition(), kb.first.as_composition()) *
                     pair_hh_odd(ka.second.as_composition(), kb.second.as_composition());
        }
    return total;
}

OddElt component(const OddElt &x, int n)
{
    OddElt r;
    for (const auto &[lam, c] : x)
        if (lam.degree() == n)
            r.add(lam, c);
    return r;
}

const IntMat &partition_gram(int n)
{
    static SharedCache<int, IntMat> cache;
    return cache.get(n, [&] {
        const auto ps = partitions(n);
        IntMat g(ps.size(), ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i; j < ps.size(); ++j) {
                g(i, j) = pair_hh_odd(ps[i].as_composition(), ps[j].as_composition());
                g(j, i) = g(i, j);
            }
        return g;
    });
}

const IntMat &e_to_h_matrix(int n)
{
    static SharedCache<int, IntMat> cache;
    return cache.get(n, [&] {
        const auto ps = partitions(n);
        IntMat m(ps.size(), ps.size());
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const OddElt ej = e(ps[j]);
            for (std::size_t i = 0; i < ps.size(); ++i)
                m(i, j) = ej.coeff(ps[i]);
        }
        return m;
    });
}

OddElt e_basis(const OddElt &x) { return apply_matrix(x, e_to_h_inverse); }
OddElt from_e_basis(const OddElt &coords) { return apply_matrix(coords, e_to_h_matrix); }

Report semiorthogonality_check(int n)
{
    Report rep("semi-orthogonality, degree " + std::to_string(n));
    for (const auto &lam : partitions(n)) {
        const Partition lt = transpose(lam);
        const Word hl = h_word(lam.as_composition()), el = e_word(lam.as_composition());
        const Int v = pair_words_odd(hl, e_word(lt.as_composition()));
        const int expect = neg_one_pow(sw_ne_length(lam));
        rep.record(v == expect, {{"lambda", lam}, {"pairing", int_to_json(v)}, {"expected", expect}});
        for (const auto &alpha : compositions(n)) {
            if (!(alpha.parts() > lt.parts()))
                continue;
            const Int a = pair_words_odd(hl, e_word(alpha));
            const Int b = pair_words_odd(el, h_word(alpha));
            rep.record(a == 0 && b == 0,
                       {{"lambda", lam}, {"alpha", alpha}, {"h_e", int_to_json(a)}, {"e_h", int_to_json(b)}});
        }
    }
    return rep;
}

Report restricted_gram_check(int n)
{
    Report rep("restricted Gram determinants, degree " + std::to_string(n));
    const auto ps = partitions(n);
    for (const auto &lam : ps) {
        std::vector<Partition> hs, es;
        const Partition lt = transpose(lam);
        for (const auto &mu : ps) {
            if (mu >= lam)
                hs.push_back(mu);
            if (mu > lt)
                es.push_back(mu);
        }
        IntMat gh(hs.size(), hs.size()), ge(es.size(), es.size());
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = 0; j < hs.size(); ++j)
                gh(i, j) = pair_hh_odd(hs[i].as_composition(), hs[j].as_composition());
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < es.size(); ++j)
                ge(i, j) = pair_words_odd(e_word(es[i].as_composition()), e_word(es[j].as_composition()));
        const Int dh = det(gh), de = det(ge);
        const bool ok = (dh == 1 || dh == -1) && (de == 1 || de == -1);
        rep.record(ok, {{"lambda", lam}, {"det_h", int_to_json(dh)}, {"det_e", int_to_json(de)}});
    }
    return rep;
}

Report relations_check(int max_total)
{
    Report rep("commutation relations up to degree " + std::to_string(max_total));
    const std::pair<Color, Color> kinds[] = {
        {Color::White, Color::White}, {Color::Black, Color::Black}, {Color::White, Color::Black}};
    const char *names[] = {"hh", "ee", "he"};
    for (int k = 0; k < 3; ++k) {
        const auto [ca, cb] = kinds[k];
        for (int a = 1; a < max_total; ++a)
            for (int b = 1; a + b <= max_total; ++b) {
                OddElt lhs = normalize(two_letters(a, ca, b, cb));
                OddElt rhs;
                if ((a + b) % 2 == 0) {
                    rhs = normalize(two_letters(b, cb, a, ca));
                } else {
                    const Int s = neg_one_pow(a);
                    lhs.add(normalize(two_letters(b, cb, a, ca)), s);
                    rhs.add(normalize(two_letters(a + 1, ca, b - 1, cb)), s);
                    rhs.add(normalize(two_letters(b - 1, cb, a + 1, ca)), Int(1));
                }
                rep.record(lhs == rhs, {{"kind", names[k]}, {"a", a}, {"b", b}});
            }
    }
    return rep;
}

} // namespace oddsym
