#include <oddsym/hopf.hpp>

#include <oddsym/bases.hpp>
#include <oddsym/cache.hpp>
#include <oddsym/io.hpp>

#include <algorithm>
#include <stdexcept>

namespace oddsym {

namespace {

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

OddElt generator_image(RingMap m, int n)
{
    switch (m) {
    case RingMap::Psi1:
        return e(n);
    case RingMap::Psi1Inverse: {
        // h_n = sum c_lambda e_lambda, and e_lambda -> h_lambda.
        return e_basis(h(n));
    }
    case RingMap::Psi2:
        return sign_of(angle(static_cast<long>(n))) * h(n);
    case RingMap::Psi3:
        return h(n);
    case RingMap::Antipode:
    case RingMap::BraidedAntipode:
        break;
    }
    throw std::logic_error("generator_image: composite map");
}

const OddElt &cached_generator(RingMap m, int n)
{
    static SharedCache<std::pair<int, int>, OddElt> cache;
    return cache.get({static_cast<int>(m), n}, [&] { return generator_image(m, n); });
}

const OddElt &image_of_basis(RingMap m, const Partition &lambda)
{
    static SharedCache<std::pair<int, Partition>, OddElt> cache;
    return cache.get({static_cast<int>(m), lambda}, [&] {
        if (m == RingMap::Antipode)
            return apply(RingMap::Psi1, apply(RingMap::Psi2, apply(RingMap::Psi3, h(lambda))));
        if (m == RingMap::BraidedAntipode) {
            long twist = 0;
            for (std::size_t i = 0; i < lambda.length(); ++i)
                for (std::size_t j = i + 1; j < lambda.length(); ++j)
                    twist += static_cast<long>(lambda[i]) * lambda[j];
            return sign_of(twist) * image_of_basis(RingMap::Antipode, lambda);
        }
        OddElt r = unit();
        for (int part : lambda) {
            const OddElt &g = cached_generator(m, part);
            r = is_anti(m) ? multiply(g, r) : multiply(r, g);
        }
        return r;
    });
}

OddElt reversed_e(const Partition &lambda)
{
    auto parts = lambda.parts();
    std::reverse(parts.begin(), parts.end());
    return normalize(e_word(Composition(parts)));
}

OddElt reversed_h(const Partition &lambda)
{
    auto parts = lambda.parts();
    std::reverse(parts.begin(), parts.end());
    return normalize(Composition(parts));
}

json elt_json(const OddElt &x) { return odd_to_json(x); }

} // namespace

std::string to_string(RingMap m)
{
    switch (m) {
    case RingMap::Psi1:
        return "psi1";
    case RingMap::Psi1Inverse:
        return "psi1inv";
    case RingMap::Psi2:
        return "psi2";
    case RingMap::Psi3:
        return "psi3";
    case RingMap::Antipode:
        return "S";
    case RingMap::BraidedAntipode:
        return "Sb";
    }
    return "?";
}

RingMap parse_ring_map(const std::string &s)
{
    for (auto m : {RingMap::Psi1, RingMap::Psi1Inverse, RingMap::Psi2, RingMap::Psi3, RingMap::Antipode,
                   RingMap::BraidedAntipode})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown map '" + s + "' (expected psi1, psi1inv, psi2, psi3, S, Sb)");
}

bool is_anti(RingMap m) { return m == RingMap::Psi3 || m == RingMap::Antipode || m == RingMap::BraidedAntipode; }

OddElt apply(RingMap m, const OddElt &x)
{
    OddElt r;
    for (const auto &[lam, c] : x)
        r.add(image_of_basis(m, lam), c);
    return r;
}

OddElt apply(const std::vector<RingMap> &maps, const OddElt &x)
{
    OddElt r = x;
    for (auto it = maps.rbegin(); it != maps.rend(); ++it)
        r = apply(*it, r);
    return r;
}

OddElt psi1_power(int m, const OddElt &x)
{
    OddElt r = x;
    const RingMap step = m >= 0 ? RingMap::Psi1 : RingMap::Psi1Inverse;
    for (int i = 0; i < std::abs(m); ++i)
        r = apply(step, r);
    return r;
}

Report antipode_axiom_check(int n, RingMap s)
{
    if (s != RingMap::Antipode && s != RingMap::BraidedAntipode)
        throw std::invalid_argument("antipode_axiom_check: not an antipode candidate");
    Report rep("antipode axiom for " + to_string(s) + ", degree " + std::to_string(n));
    json axiom_failures = json::array(), square_failures = json::array();
    for (const auto &lam : partitions(n)) {
        OddElt left, right;
        for (const auto &[k, c] : comultiply(h(lam))) {
            left.add(multiply(apply(s, h(k.first)), h(k.second)), c);
            right.add(multiply(h(k.first), apply(s, h(k.second))), c);
        }
        const OddElt expect = n == 0 ? unit() : OddElt{};
        if (!(left == expect && right == expect))
            axiom_failures.push_back(lam);
        rep.record(left == expect && right == expect, {{"lambda", lam},
                                                       {"identity", "m(S x 1)D = m(1 x S)D = eta eps"},
                                                       {"m(S x 1)D", elt_json(left)},
                                                       {"m(1 x S)D", elt_json(right)}});
        const OddElt s2 = apply(s, apply(s, h(lam)));
        if (!(s2 == h(lam)))
            square_failures.push_back(lam);
        rep.record(s2 == h(lam), {{"lambda", lam}, {"identity", "S^2 = 1"}, {"S^2", elt_json(s2)}});
    }
    rep.details["axiom_failures"] = axiom_failures;
    rep.details["square_failures"] = square_failures;
    return rep;
}

Report group_relations_check(int n)
{
    using enum RingMap;
    Report rep("psi relations, degree " + std::to_string(n));
    for (const auto &lam : partitions(n)) {
        const OddElt x = h(lam);
        const auto same = [&](const char *what, const OddElt &a, const OddElt &b) {
            rep.record(a == b, {{"lambda", lam}, {"relation", what}, {"lhs", elt_json(a)}, {"rhs", elt_json(b)}});
        };
        same("(psi1 psi2)^2 = 1", apply({Psi1, Psi2, Psi1, Psi2}, x), x);
        same("psi2^2 = 1", apply({Psi2, Psi2}, x), x);
        same("psi3^2 = 1", apply({Psi3, Psi3}, x), x);
        same("S^2 = 1", apply({Antipode, Antipode}, x), x);
        same("psi1 psi1inv = 1", apply({Psi1, Psi1Inverse}, x), x);
        same("psi2 psi1 psi2 = psi1inv", apply({Psi2, Psi1, Psi2}, x), apply(Psi1Inverse, x));
        same("psi1 psi2 psi1 = psi2", apply({Psi1, Psi2, Psi1}, x), apply(Psi2, x));
        same("psi3 psi1 = psi1 psi3", apply({Psi3, Psi1}, x), apply({Psi1, Psi3}, x));
        same("psi3 psi2 = psi2 psi3", apply({Psi3, Psi2}, x), apply({Psi2, Psi3}, x));
        same("(psi1 psi2 psi3)^2 = 1", apply({Psi1, Psi2, Psi3, Psi1, Psi2, Psi3}, x), x);
    }
    return rep;
}

Report antipode_action_check(int n)
{
    using enum RingMap;
    Report rep("psi1 psi2 and S on h and e, degree " + std::to_string(n));
    for (const auto &lam : partitions(n)) {
        const int s = sign_of(angle(lam));
        const auto same = [&](const char *what, const OddElt &a, const OddElt &b) {
            rep.record(a == b, {{"lambda", lam}, {"identity", what}, {"lhs", elt_json(a)}, {"rhs", elt_json(b)}});
        };
        same("psi1 psi2 (h)", apply({Psi1, Psi2}, h(lam)), s * e(lam));
        same("psi1 psi2 (e)", apply({Psi1, Psi2}, e(lam)), s * h(lam));
        same("S (h)", apply(Antipode, h(lam)), s * reversed_e(lam));
        same("S (e)", apply(Antipode, e(lam)), s * reversed_h(lam));
    }
    return rep;
}

Report psi3_isometry_check(int n)
{
    Report rep("psi3 preserves the form, degree " + std::to_string(n));
    const auto ps = partitions(n);
    std::vector<OddElt> img;
    for (const auto &p : ps)
        img.push_back(apply(RingMap::Psi3, h(p)));
    const IntMat &g = partition_gram(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const Int v = pair(img[i], img[j]);
            rep.record(v == g(i, j), {{"lambda", ps[i]}, {"mu", ps[j]}, {"image", int_to_json(v)},
                                      {"original", int_to_json(g(i, j))}});
        }
    return rep;
}

Report schur_symmetry_check(int n)
{
    using enum RingMap;
    Report rep("psi3 and psi1 psi2 on Schur functions, degree " + std::to_string(n));
    for (const auto &lam : partitions(n)) {
        const OddElt s = schur(lam);
        const OddElt st = schur(transpose(lam));
        const int eta = eta_sign(lam);
        const int t = sign_of(sw_ne_length(lam) + n);
        const auto same = [&](const char *what, const OddElt &a, const OddElt &b) {
            rep.record(a == b, {{"lambda", lam}, {"identity", what}, {"lhs", elt_json(a)}, {"rhs", elt_json(b)}});
        };
        same("psi3", apply(Psi3, s), eta * s);
        same("psi1 psi2", apply({Psi1, Psi2}, s), t * st);
        same("S", apply(Antipode, s), eta * t * st);
    }
    return rep;
}

Report generating_function_check(int n)
{
    Report rep("psi2(E(t)) H(t) = 1, degree " + std::to_string(n));
    OddElt sum;
    for (int k = 0; k <= n; ++k)
        sum.add(multiply(apply(RingMap::Psi2, e(n - k)), h(k)), sign_of(static_cast<long>(k) * (n - k)));
    const OddElt expect = n == 0 ? unit() : OddElt{};
    rep.record(sum == expect, {{"n", n}, {"sum", elt_json(sum)}});
    return rep;
}

Report adjointness_check(int n)
{
    Report rep("adjointness of product and coproduct, degree " + std::to_string(n));
    for (const auto &x : partitions(n)) {
        const OddTensor dx = comultiply(h(x));
        for (int k = 0; k <= n; ++k)
            for (const auto &y1 : partitions(k))
                for (const auto &y2 : partitions(n - k)) {
                    OddTensor y;
                    y.add({y1, y2}, 1);
                    const Int a = pair(y, dx), b = pair(multiply(h(y1), h(y2)), h(x));
                    rep.record(a == b, {{"x", x}, {"y1", y1}, {"y2", y2}, {"tensor", int_to_json(a)},
                                        {"product", int_to_json(b)}});
                }
    }
    return rep;
}

std::vector<OddElt> primitives(int n)
{
    if (n < 1)
        throw std::invalid_argument("primitives: degree must be positive");
    const auto ps = partitions(n);
    const IntMat &g = partition_gram(n);
    std::vector<OddElt> products;
    for (int k = 1; k < n; ++k)
        for (const auto &a : partitions(k))
            for (const auto &b : partitions(n - k))
                products.push_back(multiply(h(a), h(b)));
    IntMat a(products.size(), ps.size());
    for (std::size_t r = 0; r < products.size(); ++r)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            Int v = 0;
            for (std::size_t i = 0; i < ps.size(); ++i)
                v += products[r].coeff(ps[i]) * g(i, j);
            a(r, j) = v;
        }
    std::vector<std::vector<Int>> basis;
    if (products.empty()) {
        for (std::size_t j = 0; j < ps.size(); ++j) {
            std::vector<Int> v(ps.size(), 0);
            v[j] = 1;
            basis.push_back(v);
        }
    } else {
        basis = kernel(a);
    }
    std::vector<OddElt> out;
    for (const auto &v : basis) {
        OddElt x;
        for (std::size_t j = 0; j < ps.size(); ++j)
            x.add(ps[j], v[j]);
        if (pair(x, h(n)) < 0)
            x *= Int(-1);
        out.push_back(x);
    }
    return out;
}

bool is_primitive(const OddElt &x)
{
    OddTensor expect;
    for (const auto &[lam, c] : x) {
        expect.add({lam, Partition{}}, c);
        expect.add({Partition{}, lam}, c);
    }
    return comultiply(x) == expect;
}

Report primitives_check(int n)
{
    Report rep("primitive elements, degree " + std::to_string(n));
    const auto basis = primitives(n);
    const std::size_t expect = (n == 1 || n % 2 == 0) ? 1 : 0;
    rep.details["dimension"] = basis.size();
    rep.record(basis.size() == expect, {{"dimension", basis.size()}, {"expected", expect}});
    for (const auto &x : basis) {
        rep.record(is_primitive(x), {{"element", elt_json(x)}, {"check", "coproduct"}});
        const OddElt p = power_sum(n);
        rep.record(x == p || x == -1 * p, {{"element", elt_json(x)}, {"power_sum", elt_json(p)}});
    }
    return rep;
}

OddElt power_sum(int n)
{
    if (n < 1)
        throw std::invalid_argument("power_sum: degree must be positive");
    return monomial(Partition{n});
}

OddElt commutator(const OddElt &x, const OddElt &y) { return multiply(x, y) - multiply(y, x); }

Report centrality_check(int k, int bound)
{
    Report rep("centrality of p_" + std::to_string(k));
    const OddElt p = power_sum(k);
    json nonzero = json::array();
    for (int m = 1; k + m <= bound; ++m) {
        const OddElt c = commutator(p, h(m));
        if (!c.is_zero())
            nonzero.push_back({{"m", m}, {"commutator", elt_json(c)}});
        if (k % 2 == 0)
            rep.record(c.is_zero(), {{"m", m}, {"commutator", elt_json(c)}});
    }
    if (k % 2 == 1 && k + 1 <= bound)
        rep.record(!nonzero.empty(), {{"k", k}, {"check", "expected a nonzero commutator"}});
    rep.details["nonzero"] = nonzero;
    return rep;
}

} // namespace oddsym
