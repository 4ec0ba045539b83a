#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>

namespace oddsym {

// Outcome of an exhaustive check: how many instances were examined and the
// first few counterexamples.
struct Report
{
    std::string name;
    bool ok = true;
    long checked = 0;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json details = nlohmann::json::object();

    static constexpr std::size_t max_witnesses = 8;

    explicit Report(std::string n = {}) : name(std::move(n)) {}

    void record(bool pass, const nlohmann::json &witness = {})
    {
        ++checked;
        if (pass)
            return;
        ok = false;
        if (witnesses.size() < max_witnesses)
            witnesses.push_back(witness);
    }

    void merge(const Report &o)
    {
        checked += o.checked;
        if (!o.ok)
            ok = false;
        for (const auto &w : o.witnesses)
            if (witnesses.size() < max_witnesses)
                witnesses.push_back(w);
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j{{"name", name}, {"ok", ok}, {"checked", checked}, {"witnesses", witnesses}};
        if (!details.empty())
            j["details"] = details;
        return j;
    }
};

} // namespace oddsym
