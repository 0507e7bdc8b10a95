#pragma once

// Exact null spaces over a FieldSpec by Gauss-Jordan elimination.
// Columns are given as sparse maps from an ordered row key to a coefficient.

#include <map>
#include <set>
#include <vector>

#include "field.hpp"

namespace sjp {

using Vector = std::vector<FieldElement>;

/**
 * Basis of {v : sum_j v_j * column_j = 0}.
 *
 * The basis is the canonical one read off the reduced row echelon form:
 * one vector per free column j, with v_j = 1 and zero on the other free
 * columns. Vectors come out ordered by their free column.
 */
template <class RowKey>
std::vector<Vector> nullspace(const FieldSpec& spec, const std::vector<std::map<RowKey, FieldElement>>& columns) {
    const std::size_t ncols = columns.size();
    std::set<RowKey> keys;
    for (const auto& col : columns)
        for (const auto& [k, c] : col) keys.insert(k);
    std::map<RowKey, std::size_t> row_of;
    for (const auto& k : keys) row_of.emplace(k, row_of.size());

    std::vector<Vector> mat(keys.size(), Vector(ncols, FieldElement::zero(spec)));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [k, c] : columns[j]) mat[row_of.at(k)][j] = c;

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < ncols && r < mat.size(); ++j) {
        std::size_t sel = r;
        while (sel < mat.size() && mat[sel][j].is_zero()) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[sel], mat[r]);
        const FieldElement inv = mat[r][j].inv();
        for (auto& e : mat[r]) e *= inv;
        for (std::size_t i = 0; i < mat.size(); ++i) {
            if (i == r || mat[i][j].is_zero()) continue;
            const FieldElement f = mat[i][j];
            for (std::size_t k = j; k < ncols; ++k)
                if (!mat[r][k].is_zero()) mat[i][k] -= f * mat[r][k];
        }
        pivot_col.push_back(j);
        ++r;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (auto j : pivot_col) is_pivot[j] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(ncols, FieldElement::zero(spec));
        v[free] = FieldElement::one(spec);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -mat[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sjp
