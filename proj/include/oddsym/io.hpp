#pragma once

#include <oddsym/bigint.hpp>
#include <oddsym/combinat.hpp>
#include <oddsym/formcore.hpp>
#include <oddsym/oddring.hpp>
#include <oddsym/qpoly.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace oddsym {

using nlohmann::json;

// "2,2,1", "1^5", "3,1^2"; "" and "0" denote the empty sequence.
std::vector<int> parse_int_list(const std::string &s);
Partition parse_partition(const std::string &s);
Composition parse_composition(const std::string &s);

// "2,1" style key used for partitions in JSON objects and CSV headers.
std::string key_string(const std::vector<int> &parts);

// Integers that do not fit in 64 bits are written as decimal strings.
json int_to_json(const Int &v);
Int int_from_json(const json &j);

void to_json(json &j, const Composition &c);
void to_json(json &j, const Partition &p);
void to_json(json &j, const Tableau &t);
void to_json(json &j, const QPoly &p);
void from_json(const json &j, Composition &c);
void from_json(const json &j, Partition &p);
void from_json(const json &j, Tableau &t);
void from_json(const json &j, QPoly &p);

json odd_to_json(const OddElt &x);
OddElt odd_from_json(const json &j);
json tensor_to_json(const OddTensor &t);

// Human-readable form, e.g. "2h3 - h21" or "h4 + 2e22" for a given letter.
std::string to_string(const OddElt &x, char letter = 'h');

} // namespace oddsym
