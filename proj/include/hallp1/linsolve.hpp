#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hallp1/coeff.hpp"

namespace hallp1 {

// Dense exact linear algebra over the coefficient field Q[v]/(v^2 - q).
// Solves A x = b by Gaussian elimination; the systems that arise here are
// overdetermined with a unique solution when consistent.
struct LinearSystem {
    // rows[i] is one equation: sum_j rows[i][j] * x_j = rhs[i].
    std::vector<std::vector<Coeff>> rows;
    std::vector<Coeff> rhs;

    std::size_t num_cols() const { return rows.empty() ? 0 : rows[0].size(); }

    void add_equation(std::vector<Coeff> row, Coeff value) {
        if (!rows.empty() && row.size() != rows[0].size())
            throw std::invalid_argument("LinearSystem: inconsistent row width");
        rows.push_back(std::move(row));
        rhs.push_back(std::move(value));
    }

    // Returns the unique solution, or nullopt if the system is inconsistent
    // or the coefficient matrix does not have full column rank.
    std::optional<std::vector<Coeff>> solve() const {
        std::size_t m = rows.size();
        std::size_t n = num_cols();
        std::vector<std::vector<Coeff>> a = rows;
        std::vector<Coeff> b = rhs;

        std::vector<std::size_t> pivot_row(n, m);
        std::size_t next_row = 0;
        for (std::size_t col = 0; col < n && next_row < m; ++col) {
            std::size_t src = m;
            for (std::size_t i = next_row; i < m; ++i) {
                if (!a[i][col].is_zero()) {
                    src = i;
                    break;
                }
            }
            if (src == m) continue;  // column has no pivot below next_row
            std::swap(a[src], a[next_row]);
            std::swap(b[src], b[next_row]);
            Coeff inv = a[next_row][col].inv();
            for (std::size_t j = col; j < n; ++j) a[next_row][j] = a[next_row][j] * inv;
            b[next_row] = b[next_row] * inv;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == next_row || a[i][col].is_zero()) continue;
                Coeff f = a[i][col];
                for (std::size_t j = col; j < n; ++j)
                    a[i][j] = a[i][j] - f * a[next_row][j];
                b[i] = b[i] - f * b[next_row];
            }
            pivot_row[col] = next_row;
            ++next_row;
        }

        for (std::size_t col = 0; col < n; ++col)
            if (pivot_row[col] == m) return std::nullopt;  // rank-deficient
        for (std::size_t i = next_row; i < m; ++i)
            if (!b[i].is_zero()) return std::nullopt;  // inconsistent

        std::vector<Coeff> x;
        x.reserve(n);
        for (std::size_t col = 0; col < n; ++col) x.push_back(b[pivot_row[col]]);
        return x;
    }
};

}  // namespace hallp1
