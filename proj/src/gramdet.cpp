#include <oddsym/gramdet.hpp>

#include <oddsym/cache.hpp>
#include <oddsym/degenerate_loci_data.hpp>
#include <oddsym/formcore.hpp>
#include <oddsym/io.hpp>

#include <stdexcept>

namespace oddsym {

namespace {

void check_degree(int n, int bound, const char *what)
{
    if (n < 0 || n > bound)
        throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(n) + " outside 0.." +
                                    std::to_string(bound));
}

long binom2(long k) { return k * (k - 1) / 2; }

} // namespace

std::string to_string(GramBasis b) { return b == GramBasis::Compositions ? "compositions" : "partitions"; }

GramBasis parse_gram_basis(const std::string &s)
{
    if (s == "compositions")
        return GramBasis::Compositions;
    if (s == "partitions")
        return GramBasis::Partitions;
    throw std::invalid_argument("unknown basis '" + s + "' (expected compositions or partitions)");
}

std::vector<Composition> gram_labels(int n, GramBasis basis)
{
    check_degree(n, gram_degree_bound, "gram_labels");
    if (basis == GramBasis::Compositions)
        return compositions(n);
    std::vector<Composition> out;
    for (const auto &p : partitions(n))
        out.push_back(p.as_composition());
    return out;
}

PolyMat gram_matrix(int n, GramBasis basis)
{
    const auto labels = gram_labels(n, basis);
    PolyMat g(labels.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            g(i, j) = pair_hh_generic(labels[i], labels[j]);
    return g;
}

IntMat gram_matrix(int n, const Int &q, GramBasis basis)
{
    if (q == -1) {
        const auto labels = gram_labels(n, basis);
        IntMat g(labels.size(), labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j)
                g(i, j) = pair_hh_odd(labels[i], labels[j]);
        return g;
    }
    return specialize(gram_matrix(n, basis), q);
}

const QPoly &gram_determinant(int n)
{
    check_degree(n, gram_det_bound, "gram_determinant");
    static SharedCache<int, QPoly> cache;
    return cache.get(n, [&] { return det(gram_matrix(n)); });
}

long det_degree_formula(int n)
{
    if (n <= 1)
        return 0;
    return (1L << (n - 2)) * (static_cast<long>(n) * n - 3L * n + 4) - 1;
}

long det_degree_by_sum(int n)
{
    long d = 0;
    for (const auto &a : compositions(n)) {
        long s = binom2(n);
        for (int part : a.parts())
            s -= binom2(part);
        d += s;
    }
    return d;
}

Report det_degree_check(int n)
{
    check_degree(n, gram_det_bound, "det_degree_check");
    Report rep("Gram determinant degree, degree " + std::to_string(n));
    const QPoly &d = gram_determinant(n);
    const long formula = det_degree_formula(n);
    rep.record(d.degree() == formula && det_degree_by_sum(n) == formula,
               {{"degree", d.degree()}, {"formula", formula}, {"sum", det_degree_by_sum(n)}});
    rep.record(d.leading() == 1 || d.leading() == -1, {{"leading", int_to_json(d.leading())}});
    const Int at2 = det(gram_matrix(n, Int(2)));
    rep.record(d.evaluate(2) == at2, {{"det_at_2", int_to_json(d.evaluate(2))}, {"det_of_specialized", int_to_json(at2)}});
    rep.details["degree"] = d.degree();
    rep.details["formula"] = formula;
    rep.details["leading"] = int_to_json(d.leading());
    return rep;
}

int LocusFactor::multiplicity(int n) const
{
    const auto it = multiplicities.find(n);
    return it == multiplicities.end() ? 0 : it->second;
}

std::vector<LocusFactor> parse_degenerate_loci(const std::string &json_text)
{
    std::vector<LocusFactor> out;
    for (const auto &j : json::parse(json_text)) {
        LocusFactor f;
        f.degree_introduced = j.at("degree_introduced").get<int>();
        f.poly = j.at("coeffs").get<QPoly>();
        for (const auto &m : j.at("multiplicities"))
            f.multiplicities[m.at(0).get<int>()] = m.at(1).get<int>();
        out.push_back(std::move(f));
    }
    return out;
}

const std::vector<LocusFactor> &degenerate_loci()
{
    static const std::vector<LocusFactor> loci = parse_degenerate_loci(detail::degenerate_loci_json);
    return loci;
}

Report factor_multiplicity_check(int n)
{
    check_degree(n, gram_det_bound, "factor_multiplicity_check");
    Report rep("degenerate factor multiplicities, degree " + std::to_string(n));
    QPoly rest = gram_determinant(n);
    if (rest.leading() < 0)
        rest *= Int(-1);
    json observed = json::array();
    long listed_degree = 0;
    for (const auto &f : degenerate_loci()) {
        const auto [m, quotient] = divide_out(rest, f.poly);
        rest = quotient;
        const int expected = f.multiplicity(n);
        listed_degree += static_cast<long>(expected) * f.poly.degree();
        const json w{{"factor", to_string(f.poly)}, {"multiplicity", m}, {"expected", expected}};
        rep.record(m == expected, w);
        if (m > 0 || expected > 0)
            observed.push_back(w);
        if (f.poly.degree() >= 2)
            rep.record(f.poly.is_palindromic(), {{"factor", to_string(f.poly)}, {"check", "palindromic"}});
    }
    rep.record(rest == 1, {{"cofactor", to_string(rest)}});
    rep.record(listed_degree == det_degree_formula(n), {{"listed_degree", listed_degree},
                                                        {"formula", det_degree_formula(n)}});
    rep.details["factors"] = observed;
    rep.details["cofactor"] = to_string(rest);
    return rep;
}

std::size_t radical_rank(int n, const Int &q, GramBasis basis) { return rank(gram_matrix(n, q, basis)); }

Report radical_rank_check(int n)
{
    check_degree(n, gram_degree_bound, "radical_rank_check");
    Report rep("Gram rank at q = -1, 0, 1, degree " + std::to_string(n));
    const IntMat g = gram_matrix(n, Int(-1));
    const std::size_t dim = g.rows();
    const std::size_t p = partitions(n).size();
    const std::size_t r = rank(g);
    rep.record(g.is_symmetric(), {{"check", "symmetric"}});
    rep.record(r == p, {{"q", -1}, {"rank", r}, {"partitions", p}});
    const std::size_t radical = kernel(g).size();
    const std::size_t expect_radical = n == 0 ? 0 : (std::size_t{1} << (n - 1)) - p;
    rep.record(dim == (n == 0 ? 1 : std::size_t{1} << (n - 1)) && radical == expect_radical,
               {{"radical_dimension", radical}, {"expected", expect_radical}});
    rep.record(rank(gram_matrix(n, Int(-1), GramBasis::Partitions)) == p, {{"q", -1}, {"basis", "partitions"}});
    rep.record(radical_rank(n, Int(1)) == p, {{"q", 1}, {"rank", radical_rank(n, Int(1))}, {"partitions", p}});
    rep.record(radical_rank(n, Int(0)) == 1, {{"q", 0}, {"rank", radical_rank(n, Int(0))}});
    rep.details["rank"] = r;
    rep.details["radical_dimension"] = radical;
    return rep;
}

} // namespace oddsym
