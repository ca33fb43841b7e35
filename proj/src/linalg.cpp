#include "lcsa/linalg.hpp"

namespace lcsa {

namespace {

// in-place row reduction; returns pivot columns
std::vector<int> eliminate(Matrix& m, int cols) {
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < cols && row < int(m.size()); ++c) {
        int p = -1;
        for (int i = row; i < int(m.size()); ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        Rational inv = Rational(1) / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (int i = 0; i < int(m.size()); ++i) {
            if (i == row || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j < int(m[i].size()); ++j)
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

}  // namespace

int rank(Matrix m) {
    if (m.empty()) return 0;
    int cols = int(m[0].size());
    return int(eliminate(m, cols).size());
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    int n = a.empty() ? 0 : int(a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    auto piv = eliminate(a, n + 1);
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == n) return std::nullopt;
        x[piv[r]] = a[r][n];
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(Matrix m, int cols) {
    for (auto& r : m) r.resize(cols);
    auto piv = eliminate(m, cols);
    std::vector<bool> is_piv(cols);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> x(cols);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace lcsa
