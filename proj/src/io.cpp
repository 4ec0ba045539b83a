#include <oddsym/io.hpp>

#include <sstream>
#include <stdexcept>

namespace oddsym {

std::vector<int> parse_int_list(const std::string &raw)
{
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '(' && c != ')')
            s.push_back(c);
    std::vector<int> out;
    if (s.empty() || s == "0")
        return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("empty entry in integer list: '" + raw + "'");
        int base = 0, count = 1;
        std::size_t used = 0;
        try {
            const auto caret = item.find('^');
            if (caret == std::string::npos) {
                base = std::stoi(item, &used);
                if (used != item.size())
                    throw std::invalid_argument("trailing characters");
            } else {
                const std::string b = item.substr(0, caret), e = item.substr(caret + 1);
                base = std::stoi(b, &used);
                if (used != b.size())
                    throw std::invalid_argument("trailing characters");
                count = std::stoi(e, &used);
                if (used != e.size())
                    throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw std::invalid_argument("cannot parse '" + item + "' in '" + raw + "'");
        }
        if (base < 1 || count < 0)
            throw std::invalid_argument("parts must be positive in '" + raw + "'");
        out.insert(out.end(), static_cast<std::size_t>(count), base);
    }
    return out;
}

Partition parse_partition(const std::string &s) { return Partition(parse_int_list(s)); }
Composition parse_composition(const std::string &s) { return Composition(parse_int_list(s)); }

std::string key_string(const std::vector<int> &parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

json int_to_json(const Int &v)
{
    if (fits_int64(v))
        return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json &j)
{
    if (j.is_string())
        return Int(j.get<std::string>());
    return Int(j.get<long>());
}

void to_json(json &j, const Composition &c) { j = c.parts(); }
void to_json(json &j, const Partition &p) { j = p.parts(); }
void to_json(json &j, const Tableau &t) { j = t.rows(); }

void to_json(json &j, const QPoly &p)
{
    j = json::array();
    for (const auto &c : p.coeffs())
        j.push_back(int_to_json(c));
}

void from_json(const json &j, Composition &c) { c = Composition(j.get<std::vector<int>>()); }
void from_json(const json &j, Partition &p) { p = Partition(j.get<std::vector<int>>()); }
void from_json(const json &j, Tableau &t) { t = Tableau(j.get<std::vector<std::vector<int>>>()); }

void from_json(const json &j, QPoly &p)
{
    std::vector<Int> c;
    for (const auto &x : j)
        c.push_back(int_from_json(x));
    p = QPoly(std::move(c));
}

json odd_to_json(const OddElt &x)
{
    json j = json::object();
    for (const auto &[lam, c] : x)
        j[key_string(lam.parts())] = int_to_json(c);
    return j;
}

OddElt odd_from_json(const json &j)
{
    OddElt x;
    for (const auto &[k, v] : j.items())
        x.add(Partition(parse_int_list(k)), int_from_json(v));
    return x;
}

json tensor_to_json(const OddTensor &t)
{
    json j = json::array();
    for (const auto &[k, c] : t)
        j.push_back({{"left", k.first}, {"right", k.second}, {"coeff", int_to_json(c)}});
    return j;
}

std::string to_string(const OddElt &x, char letter)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest partitions first, the way expansions are usually written.
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        Int c = it->second;
        if (c < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        const auto &parts = it->first.parts();
        if (parts.empty()) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str();
        os << letter;
        bool wide = false;
        for (int p : parts)
            wide = wide || p >= 10;
        for (std::size_t i = 0; i < parts.size(); ++i)
            os << (wide && i ? "," : "") << parts[i];
    }
    return os.str();
}

} // namespace oddsym
