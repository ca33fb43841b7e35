#pragma once

#include "lcsa/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lcsa {

template <class K>
using SparseRow = std::map<K, Rational>;

template <class K>
void row_axpy(SparseRow<K>& acc, const SparseRow<K>& x, const Rational& c) {
    if (c.is_zero()) return;
    for (auto& [k, v] : x) {
        auto [it, fresh] = acc.try_emplace(k, v * c);
        if (!fresh) {
            it->second += v * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

// Semi-echelon form over an ordered key set: each stored row has leading
// key (its smallest) equal to its pivot, with coefficient 1. Reduction
// modulo the span gives a unique representative supported off the pivots.
template <class K>
class SparseEchelon {
public:
    void reduce(SparseRow<K>& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto r = rows_.find(it->first);
            if (r == rows_.end()) {
                ++it;
                continue;
            }
            K key = it->first;
            Rational c = -it->second;
            row_axpy(v, r->second, c);
            it = v.upper_bound(key);
        }
    }

    bool insert(SparseRow<K> v) {
        reduce(v);
        if (v.empty()) return false;
        Rational lead = v.begin()->second;
        for (auto& [k, x] : v) x /= lead;
        K key = v.begin()->first;
        rows_.emplace(key, std::move(v));
        return true;
    }

    bool is_pivot(const K& k) const { return rows_.count(k) > 0; }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<K, SparseRow<K>> rows_;
};

using Matrix = std::vector<std::vector<Rational>>;

int rank(Matrix m);
// some x with A x = b, or nullopt
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);
// basis of {x : m x = 0}; `cols` is needed when m has no rows
std::vector<std::vector<Rational>> nullspace(Matrix m, int cols);

}  // namespace lcsa
