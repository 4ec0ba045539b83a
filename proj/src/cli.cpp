#include <oddsym/cli.hpp>

#include <oddsym/bases.hpp>
#include <oddsym/formcore.hpp>
#include <oddsym/gramdet.hpp>
#include <oddsym/hopf.hpp>
#include <oddsym/io.hpp>
#include <oddsym/oddring.hpp>
#include <oddsym/rsk.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oddsym {

namespace {

enum class Format { Plain, Csv, Json };

Format parse_format(const std::string &s)
{
    if (s == "plain")
        return Format::Plain;
    if (s == "csv")
        return Format::Csv;
    if (s == "json")
        return Format::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected plain, csv, json)");
}

std::string extension(Format f)
{
    switch (f) {
    case Format::Plain:
        return ".txt";
    case Format::Csv:
        return ".csv";
    case Format::Json:
        return ".json";
    }
    return "";
}

// Thrown for bad option values; reported with exit code 2.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string label(char letter, const std::vector<int> &parts)
{
    std::string s(1, letter);
    const bool wide = std::any_of(parts.begin(), parts.end(), [](int p) { return p >= 10; });
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (wide && i ? "," : "") + std::to_string(parts[i]);
    return s;
}

std::string paren(const std::vector<int> &parts) { return "(" + key_string(parts) + ")"; }

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// A labelled matrix of values, each with a display string and a JSON value.
struct Table
{
    std::string title;
    std::vector<std::string> row_labels, col_labels;
    json row_keys = json::array(), col_keys = json::array();
    std::vector<std::vector<std::string>> cells;
    json values = json::array();
    json extra = json::object();

    void render(std::ostream &os, Format f) const
    {
        if (f == Format::Json) {
            json j{{"title", title}, {"rows", row_keys}, {"cols", col_keys}, {"entries", values}};
            for (const auto &[k, v] : extra.items())
                j[k] = v;
            os << j.dump() << '\n';
            return;
        }
        if (f == Format::Csv) {
            os << csv_field(title);
            for (const auto &c : col_labels)
                os << ',' << csv_field(c);
            os << '\n';
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << csv_field(row_labels[i]);
                for (const auto &c : cells[i])
                    os << ',' << csv_field(c);
                os << '\n';
            }
            return;
        }
        std::vector<std::size_t> width(col_labels.size() + 1, 0);
        width[0] = title.size();
        for (const auto &r : row_labels)
            width[0] = std::max(width[0], r.size());
        for (std::size_t j = 0; j < col_labels.size(); ++j) {
            width[j + 1] = col_labels[j].size();
            for (const auto &row : cells)
                width[j + 1] = std::max(width[j + 1], row[j].size());
        }
        const auto line = [&](const std::string &head, const std::vector<std::string> &items) {
            os << head << std::string(width[0] - head.size(), ' ');
            for (std::size_t j = 0; j < items.size(); ++j)
                os << "  " << std::string(width[j + 1] - items[j].size(), ' ') << items[j];
            os << '\n';
        };
        line(title, col_labels);
        for (std::size_t i = 0; i < cells.size(); ++i)
            line(row_labels[i], cells[i]);
    }
};

Table int_table(std::string title, const std::vector<std::vector<int>> &rows, const std::vector<std::vector<int>> &cols,
                char letter, const IntMat &m)
{
    Table t;
    t.title = std::move(title);
    for (const auto &r : rows) {
        t.row_labels.push_back(letter ? label(letter, r) : paren(r));
        t.row_keys.push_back(r);
    }
    for (const auto &c : cols) {
        t.col_labels.push_back(letter ? label(letter, c) : paren(c));
        t.col_keys.push_back(c);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        json jrow = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).get_str());
            jrow.push_back(int_to_json(m(i, j)));
        }
        t.cells.push_back(std::move(row));
        t.values.push_back(std::move(jrow));
    }
    return t;
}

Table poly_table(std::string title, const std::vector<std::vector<int>> &labels, const PolyMat &m)
{
    Table t;
    t.title = std::move(title);
    for (const auto &r : labels) {
        t.row_labels.push_back(label('h', r));
        t.col_labels.push_back(label('h', r));
        t.row_keys.push_back(r);
        t.col_keys.push_back(r);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row;
        json jrow = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_string(m(i, j)));
            jrow.push_back(m(i, j));
        }
        t.cells.push_back(std::move(row));
        t.values.push_back(std::move(jrow));
    }
    return t;
}

std::vector<std::vector<int>> parts_of(const std::vector<Partition> &ps)
{
    std::vector<std::vector<int>> out;
    for (const auto &p : ps)
        out.push_back(p.parts());
    return out;
}

std::vector<std::vector<int>> parts_of(const std::vector<Composition> &cs)
{
    std::vector<std::vector<int>> out;
    for (const auto &c : cs)
        out.push_back(c.parts());
    return out;
}

void require_degree(int n, int lo, int hi, const std::string &what)
{
    if (n < lo || n > hi)
        throw UsageError(what + ": degree " + std::to_string(n) + " outside " + std::to_string(lo) + ".." +
                         std::to_string(hi));
}

// --- expansions ------------------------------------------------------------

// A named list of expansions, rendered one per line.
struct ExpansionList
{
    struct Item
    {
        std::string name;
        json index;
        std::string text;
        json terms;
    };
    std::string basis;
    std::vector<Item> items;

    void add(const std::string &name, const json &index, const OddElt &x, char letter)
    {
        items.push_back({name, index, to_string(x, letter), odd_to_json(x)});
    }

    void render(std::ostream &os, Format f) const
    {
        if (f == Format::Json) {
            json arr = json::array();
            for (const auto &it : items)
                arr.push_back({{"name", it.name}, {"index", it.index}, {"basis", basis}, {"terms", it.terms}});
            os << (arr.size() == 1 ? arr[0] : arr).dump() << '\n';
            return;
        }
        if (f == Format::Csv) {
            os << "name,basis,term,coefficient\n";
            for (const auto &it : items)
                for (const auto &[k, v] : it.terms.items())
                    os << csv_field(it.name) << ',' << basis << ',' << csv_field(k) << ','
                       << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            return;
        }
        for (const auto &it : items)
            os << it.name << " = " << it.text << '\n';
    }
};

OddElt power_sum_product(const Partition &lambda)
{
    OddElt x = unit();
    for (int part : lambda)
        x = multiply(x, power_sum(part));
    return x;
}

OddElt expansion(const std::string &what, const Partition &lambda)
{
    if (what == "e")
        return e(lambda);
    if (what == "m")
        return monomial(lambda);
    if (what == "f")
        return forgotten(lambda);
    if (what == "s")
        return schur(lambda);
    if (what == "p")
        return power_sum_product(lambda);
    if (what == "h")
        return h(lambda);
    throw UsageError("unknown function '" + what + "'");
}

// h~_alpha = sum over coarsenings beta of alpha of (-1)^{l(alpha)-l(beta)} h_beta.
std::vector<std::pair<Composition, int>> htilde_terms(const Composition &alpha)
{
    std::vector<std::pair<Composition, int>> out;
    for (const auto &beta : compositions(alpha.degree()))
        if (refines(alpha, beta))
            out.push_back({beta, (alpha.length() - beta.length()) % 2 == 0 ? 1 : -1});
    return out;
}

// --- reports ---------------------------------------------------------------

struct Suite
{
    std::vector<Report> reports;
    bool ok() const
    {
        return std::all_of(reports.begin(), reports.end(), [](const Report &r) { return r.ok; });
    }

    void render(std::ostream &os, Format f) const
    {
        if (f == Format::Json) {
            json arr = json::array();
            for (const auto &r : reports)
                arr.push_back(r.to_json());
            os << json{{"ok", ok()}, {"reports", arr}}.dump() << '\n';
            return;
        }
        if (f == Format::Csv) {
            os << "name,ok,checked\n";
            for (const auto &r : reports)
                os << csv_field(r.name) << ',' << (r.ok ? "true" : "false") << ',' << r.checked << '\n';
            return;
        }
        for (const auto &r : reports) {
            os << (r.ok ? "PASS  " : "FAIL  ") << r.name << " (" << r.checked << " checked)\n";
            if (!r.ok)
                for (const auto &w : r.witnesses)
                    os << "      " << w.dump() << '\n';
        }
        os << (ok() ? "all checks passed" : "some checks FAILED") << '\n';
    }
};

Suite run_suite(const std::string &name, int max_degree)
{
    Suite s;
    const bool all = name == "all";
    if (all || name == "hopf")
        for (int n = 0; n <= max_degree; ++n) {
            s.reports.push_back(adjointness_check(n));
            s.reports.push_back(antipode_axiom_check(n, RingMap::Antipode));
            s.reports.push_back(group_relations_check(n));
            s.reports.push_back(antipode_action_check(n));
            s.reports.push_back(psi3_isometry_check(n));
            s.reports.push_back(schur_symmetry_check(n));
            s.reports.push_back(generating_function_check(n));
        }
    if (all || name == "schur")
        for (int n = 1; n <= max_degree; ++n) {
            s.reports.push_back(kostka_check(n));
            s.reports.push_back(schur_orthonormality(n));
            Report routes("Schur alternative routes, degree " + std::to_string(n));
            for (const auto &lam : partitions(n))
                routes.merge(schur_alt_routes(lam));
            s.reports.push_back(routes);
        }
    if (all || name == "rsk")
        for (int n = 1; n <= std::min(max_degree, rsk_degree_bound); ++n)
            s.reports.push_back(odd_rsk_sweep(n));
    if (all || name == "semiorth")
        for (int n = 1; n <= max_degree; ++n) {
            s.reports.push_back(semiorthogonality_check(n));
            s.reports.push_back(restricted_gram_check(n));
        }
    if (all || name == "primitives") {
        for (int n = 1; n <= max_degree; ++n)
            s.reports.push_back(primitives_check(n));
        for (int k = 1; k < max_degree; ++k)
            s.reports.push_back(centrality_check(k, max_degree));
    }
    return s;
}

// --- appendix ----------------------------------------------------------------

struct Output
{
    std::string name;
    std::string body;
};

std::vector<Output> appendix(Format f)
{
    std::vector<Output> files;
    const auto emit = [&](const std::string &name, const std::function<void(std::ostream &)> &write) {
        std::ostringstream os;
        write(os);
        files.push_back({name + extension(f), os.str()});
    };
    for (int n = 1; n <= 4; ++n) {
        const auto labels = gram_labels(n);
        emit("gram_generic_deg" + std::to_string(n), [&](std::ostream &os) {
            poly_table("deg. " + std::to_string(n), parts_of(labels), gram_matrix(n)).render(os, f);
        });
    }
    for (int n = 1; n <= 6; ++n) {
        const auto ps = parts_of(partitions(n));
        emit("gram_odd_deg" + std::to_string(n), [&](std::ostream &os) {
            int_table("deg. " + std::to_string(n), ps, ps, 'h', gram_matrix(n, Int(-1), GramBasis::Partitions))
                .render(os, f);
        });
    }
    for (int n = 1; n <= 5; ++n) {
        const auto ps = parts_of(partitions(n));
        emit("kostka_deg" + std::to_string(n), [&](std::ostream &os) {
            int_table("deg. " + std::to_string(n), ps, ps, 0, kostka_matrix(n)).render(os, f);
        });
    }
    const auto bases = [&](const std::string &what, int top) {
        emit("basis_" + what, [&](std::ostream &os) {
            ExpansionList list;
            list.basis = "h";
            for (int n = 1; n <= top; ++n)
                for (const auto &lam : partitions(n))
                    list.add(label(what[0], lam.parts()), lam, expansion(what, lam), 'h');
            list.render(os, f);
        });
    };
    bases("m", 4);
    bases("f", 4);
    bases("s", 5);
    emit("degenerate_loci", [&](std::ostream &os) {
        const auto &loci = degenerate_loci();
        if (f == Format::Json) {
            json arr = json::array();
            for (const auto &l : loci) {
                json m = json::array();
                for (const auto &[n, k] : l.multiplicities)
                    m.push_back({n, k});
                arr.push_back({{"degree_introduced", l.degree_introduced}, {"coeffs", l.poly}, {"multiplicities", m}});
            }
            os << arr.dump() << '\n';
            return;
        }
        if (f == Format::Csv)
            os << "degree_introduced,polynomial,multiplicities\n";
        for (const auto &l : loci) {
            std::string m;
            for (const auto &[n, k] : l.multiplicities)
                m += (m.empty() ? "" : ",") + ("(" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (f == Format::Csv)
                os << l.degree_introduced << ',' << csv_field(to_string(l.poly)) << ',' << csv_field(m) << '\n';
            else
                os << "degree " << l.degree_introduced << ": " << to_string(l.poly) << "  (" << m << ")\n";
        }
    });
    return files;
}

// --- argument parsing helpers ------------------------------------------------

struct QChoice
{
    bool generic = true;
    Int value = 0;
};

QChoice parse_q(const std::string &s)
{
    if (s == "generic")
        return {};
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size())
            throw std::invalid_argument("trailing characters");
        return {false, Int(v)};
    } catch (const std::exception &) {
        throw UsageError("invalid --q value '" + s + "' (expected generic or an integer)");
    }
}

IntMatrix parse_matrix(const std::string &s)
{
    IntMatrix a;
    try {
        a = json::parse(s).get<IntMatrix>();
    } catch (const std::exception &) {
        throw UsageError("invalid --matrix '" + s + "' (expected JSON such as [[1,0],[0,1]])");
    }
    if (a.empty() || a[0].empty())
        throw UsageError("--matrix must be non-empty");
    for (const auto &row : a) {
        if (row.size() != a[0].size())
            throw UsageError("--matrix rows differ in length");
        for (int x : row)
            if (x < 0)
                throw UsageError("--matrix entries must be non-negative");
    }
    return a;
}

template <class F>
auto parsed(const std::string &what, F &&f) -> decltype(f())
{
    try {
        return f();
    } catch (const std::invalid_argument &ex) {
        throw UsageError(what + ": " + ex.what());
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact arithmetic for odd symmetric functions and the q-deformed algebra of words", "oddsym-cli"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "Output format: plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    // pair
    auto *pair_cmd = app.add_subcommand("pair", "Bilinear form of two words");
    std::string pair_basis = "h", left, right, qarg = "generic";
    pair_cmd->add_option("--basis", pair_basis, "h, e, or mixed (h on the left, e on the right)")
        ->check(CLI::IsMember({"h", "e", "mixed"}));
    pair_cmd->add_option("--left", left, "Composition, e.g. 2,2 or 1^3")->required();
    pair_cmd->add_option("--right", right, "Composition")->required();
    pair_cmd->add_option("--q", qarg, "generic or an integer");

    // expand
    auto *expand_cmd = app.add_subcommand("expand", "Expansion of a basis element");
    std::string what, index, in_basis = "h";
    expand_cmd->add_option("--what", what, "e, m, f, s, p or htilde")
        ->required()
        ->check(CLI::IsMember({"e", "m", "f", "s", "p", "htilde"}));
    expand_cmd->add_option("--index", index, "Partition (composition for htilde)")->required();
    expand_cmd->add_option("--in-basis", in_basis, "h or e")->check(CLI::IsMember({"h", "e"}));

    // kostka
    auto *kostka_cmd = app.add_subcommand("kostka", "Odd Kostka table");
    int kostka_degree = 0;
    kostka_cmd->add_option("--degree", kostka_degree, "Degree")->required();

    // gram
    auto *gram_cmd = app.add_subcommand("gram", "Gram matrix of the h-basis");
    int gram_degree = 0;
    std::string gram_q = "generic", gram_basis = "compositions";
    gram_cmd->add_option("--degree", gram_degree, "Degree")->required();
    gram_cmd->add_option("--q", gram_q, "generic or an integer");
    gram_cmd->add_option("--basis", gram_basis, "compositions or partitions")
        ->check(CLI::IsMember({"compositions", "partitions"}));

    // rsk
    auto *rsk_cmd = app.add_subcommand("rsk", "Odd RSK correspondence");
    std::string matrix;
    bool rsk_verify = false;
    int rsk_degree = 0;
    auto *matrix_opt = rsk_cmd->add_option("--matrix", matrix, "JSON matrix, e.g. [[1,0],[0,1]]");
    auto *verify_flag = rsk_cmd->add_flag("--verify", rsk_verify, "Exhaustive sign check");
    rsk_cmd->add_option("--degree", rsk_degree, "Degree for --verify");
    matrix_opt->excludes(verify_flag);

    // det
    auto *det_cmd = app.add_subcommand("det", "Determinant of the generic Gram matrix");
    int det_degree = 0;
    bool det_factors = false;
    det_cmd->add_option("--degree", det_degree, "Degree")->required();
    det_cmd->add_flag("--factors", det_factors, "Check the tabulated degenerate factors");

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    int max_degree = 6;
    verify_cmd->add_option("--suite", suite, "hopf, schur, rsk, semiorth, primitives or all")
        ->check(CLI::IsMember({"hopf", "schur", "rsk", "semiorth", "primitives", "all"}));
    verify_cmd->add_option("--max-degree", max_degree, "Largest degree");

    // tables
    auto *tables_cmd = app.add_subcommand("tables", "Regenerate the appendix tables");
    bool appendix_flag = false;
    std::string out_dir;
    tables_cmd->add_flag("--appendix", appendix_flag, "All appendix tables")->required();
    tables_cmd->add_option("--out", out_dir, "Directory to write; standard output when omitted");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        const Format f = parse_format(format);

        if (*pair_cmd) {
            const Composition a = parsed("--left", [&] { return parse_composition(left); });
            const Composition b = parsed("--right", [&] { return parse_composition(right); });
            require_degree(std::max(a.degree(), b.degree()), 0, gram_degree_bound, "pair");
            const QChoice q = parse_q(qarg);
            const Word wl = pair_basis == "e" ? e_word(a) : h_word(a);
            const Word wr = pair_basis == "h" ? h_word(b) : e_word(b);
            const QPoly v = pair_words_generic(wl, wr);
            const std::string text = q.generic ? to_string(v) : v.evaluate(q.value).get_str();
            if (f == Format::Json) {
                json j{{"basis", pair_basis}, {"left", a}, {"right", b}, {"q", qarg}};
                j["value"] = q.generic ? json(v) : int_to_json(v.evaluate(q.value));
                out << j.dump() << '\n';
            } else if (f == Format::Csv) {
                out << "basis,left,right,q,value\n"
                    << pair_basis << ',' << csv_field(key_string(a.parts())) << ','
                    << csv_field(key_string(b.parts())) << ',' << qarg << ',' << csv_field(text) << '\n';
            } else {
                out << text << '\n';
            }
            return exit_ok;
        }

        if (*expand_cmd) {
            ExpansionList list;
            list.basis = in_basis;
            if (what == "htilde") {
                const Composition alpha = parsed("--index", [&] { return parse_composition(index); });
                require_degree(alpha.degree(), 1, htilde_degree_bound, "expand");
                if (in_basis != "h")
                    throw UsageError("htilde lives in the word algebra; only --in-basis h is available");
                const auto terms = htilde_terms(alpha);
                if (f == Format::Json) {
                    json t = json::object();
                    for (const auto &[beta, c] : terms)
                        t[key_string(beta.parts())] = c;
                    out << json{{"name", label('H', alpha.parts())}, {"index", alpha}, {"basis", "h"}, {"terms", t}}
                               .dump()
                        << '\n';
                } else if (f == Format::Csv) {
                    out << "name,basis,term,coefficient\n";
                    for (const auto &[beta, c] : terms)
                        out << csv_field("htilde" + paren(alpha.parts())) << ",h," << csv_field(key_string(beta.parts()))
                            << ',' << c << '\n';
                } else {
                    std::string s;
                    for (const auto &[beta, c] : terms)
                        s += (s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) +
                             label('h', beta.parts());
                    out << "htilde" << paren(alpha.parts()) << " = " << s << '\n';
                }
                return exit_ok;
            }
            const Partition lambda = parsed("--index", [&] { return parse_partition(index); });
            require_degree(lambda.degree(), 0, basis_degree_bound, "expand");
            OddElt x = expansion(what, lambda);
            if (in_basis == "e")
                x = e_basis(x);
            list.add(label(what[0], lambda.parts()), lambda, x, in_basis[0]);
            list.render(out, f);
            return exit_ok;
        }

        if (*kostka_cmd) {
            require_degree(kostka_degree, 1, basis_degree_bound, "kostka");
            const auto ps = parts_of(partitions(kostka_degree));
            int_table("deg. " + std::to_string(kostka_degree), ps, ps, 0, kostka_matrix(kostka_degree)).render(out, f);
            return exit_ok;
        }

        if (*gram_cmd) {
            require_degree(gram_degree, 1, gram_degree_bound, "gram");
            const QChoice q = parse_q(gram_q);
            const GramBasis basis = parse_gram_basis(gram_basis);
            const auto labels = parts_of(gram_labels(gram_degree, basis));
            const std::string title = "deg. " + std::to_string(gram_degree);
            if (q.generic)
                poly_table(title, labels, gram_matrix(gram_degree, basis)).render(out, f);
            else
                int_table(title, labels, labels, 'h', gram_matrix(gram_degree, q.value, basis)).render(out, f);
            return exit_ok;
        }

        if (*rsk_cmd) {
            if (rsk_verify) {
                require_degree(rsk_degree, 1, rsk_degree_bound, "rsk --verify");
                Suite s;
                s.reports.push_back(odd_rsk_sweep(rsk_degree));
                s.render(out, f);
                return s.ok() ? exit_ok : exit_check_failed;
            }
            if (matrix.empty())
                throw UsageError("rsk needs --matrix or --verify");
            const IntMatrix a = parse_matrix(matrix);
            long weight = 0;
            for (const auto &row : a)
                for (int x : row)
                    weight += x;
            require_degree(static_cast<int>(weight), 1, rsk_degree_bound, "rsk");
            const RskPair pq = rsk(a);
            const int sa = sw_ne_weight(a) % 2 == 0 ? 1 : -1;
            const int ss = shape_sign(pq.P.shape());
            const bool ok = sa == ss * pq.P.sign() * pq.Q.sign();
            if (f == Format::Json) {
                out << json{{"matrix", a},           {"P", pq.P},
                            {"Q", pq.Q},             {"sign_A", sa},
                            {"sign_P", pq.P.sign()}, {"sign_Q", pq.Q.sign()},
                            {"shape_sign", ss},      {"ok", ok}}
                           .dump()
                    << '\n';
            } else if (f == Format::Csv) {
                out << "P,Q,sign_A,sign_P,sign_Q,shape_sign,ok\n"
                    << csv_field(json(pq.P).dump()) << ',' << csv_field(json(pq.Q).dump()) << ',' << sa << ','
                    << pq.P.sign() << ',' << pq.Q.sign() << ',' << ss << ',' << (ok ? "true" : "false") << '\n';
            } else {
                out << "P = " << to_string(pq.P) << "\nQ = " << to_string(pq.Q) << "\nsign(A) = " << sa
                    << "\nsign(P) = " << pq.P.sign() << "\nsign(Q) = " << pq.Q.sign() << "\nshape sign = " << ss
                    << "\nsign(A) = shape sign * sign(P) * sign(Q): " << (ok ? "yes" : "NO") << '\n';
            }
            return ok ? exit_ok : exit_check_failed;
        }

        if (*det_cmd) {
            require_degree(det_degree, 1, gram_det_bound, "det");
            Suite s;
            if (det_degree >= 2)
                s.reports.push_back(det_degree_check(det_degree));
            if (det_factors)
                s.reports.push_back(factor_multiplicity_check(det_degree));
            const QPoly &d = gram_determinant(det_degree);
            if (f == Format::Json) {
                json reports = json::array();
                for (const auto &r : s.reports)
                    reports.push_back(r.to_json());
                out << json{{"degree", det_degree},
                            {"determinant", d},
                            {"determinant_degree", d.degree()},
                            {"formula", det_degree_formula(det_degree)},
                            {"ok", s.ok()},
                            {"reports", reports}}
                           .dump()
                    << '\n';
            } else if (f == Format::Csv) {
                out << "degree,determinant_degree,formula,leading,ok\n"
                    << det_degree << ',' << d.degree() << ',' << det_degree_formula(det_degree) << ','
                    << d.leading().get_str() << ',' << (s.ok() ? "true" : "false") << '\n';
            } else {
                out << "det = " << to_string(d) << '\n'
                    << "degree " << d.degree() << ", formula " << det_degree_formula(det_degree) << ", leading "
                    << d.leading().get_str() << '\n';
                if (det_factors)
                    for (const auto &w : s.reports.back().details["factors"])
                        out << "  " << w["factor"].get<std::string>() << "  multiplicity " << w["multiplicity"]
                            << " (listed " << w["expected"] << ")\n";
                s.render(out, f);
            }
            return s.ok() ? exit_ok : exit_check_failed;
        }

        if (*verify_cmd) {
            require_degree(max_degree, 1, basis_degree_bound, "verify");
            const Suite s = run_suite(suite, max_degree);
            s.render(out, f);
            return s.ok() ? exit_ok : exit_check_failed;
        }

        if (*tables_cmd) {
            const auto files = appendix(f);
            if (out_dir.empty()) {
                for (const auto &file : files)
                    out << "== " << file.name << '\n' << file.body;
                return exit_ok;
            }
            std::filesystem::create_directories(out_dir);
            for (const auto &file : files) {
                const auto path = std::filesystem::path(out_dir) / file.name;
                std::ofstream os(path, std::ios::binary);
                os << file.body;
                if (!os)
                    throw std::runtime_error("cannot write " + path.string());
                out << path.string() << '\n';
            }
            return exit_ok;
        }
    } catch (const UsageError &ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << '\n';
        return exit_check_failed;
    }
    return exit_usage;
}

} // namespace oddsym
