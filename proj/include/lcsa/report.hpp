#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <vector>

namespace lcsa {

struct Report {
    std::string algebra;
    std::string check;
    bool pass = true;
    std::vector<std::string> witnesses;
    std::map<std::string, std::string> dims;
    std::map<std::string, std::string> characters;
    std::vector<std::string> notes;

    void fail(std::string witness) {
        pass = false;
        if (witnesses.size() < 50) witnesses.push_back(std::move(witness));
    }
    void merge(const Report& o) {
        if (!o.pass) pass = false;
        for (auto& w : o.witnesses)
            if (witnesses.size() < 50) witnesses.push_back(w);
        for (auto& [k, v] : o.dims) dims[k] = v;
        for (auto& [k, v] : o.characters) characters[k] = v;
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

// integer keys (degrees) numerically first, the rest alphabetically
inline std::vector<std::pair<std::string, std::string>> ordered_entries(const std::map<std::string, std::string>& m) {
    auto num = [](const std::string& k, long& v) {
        auto [p, ec] = std::from_chars(k.data(), k.data() + k.size(), v);
        return ec == std::errc() && p == k.data() + k.size();
    };
    std::vector<std::pair<std::string, std::string>> out(m.begin(), m.end());
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        long x = 0, y = 0;
        bool na = num(a.first, x), nb = num(b.first, y);
        if (na != nb) return na;
        return na && x < y;
    });
    return out;
}

}  // namespace lcsa
