#pragma once

#include "deriva/scalars.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace deriva {

using Row = std::vector<Scalar>;

struct RaggedInput : std::invalid_argument {
    RaggedInput() : std::invalid_argument("rows have inconsistent lengths") {}
};

// Canonical subspace representation: the reduced row-echelon basis of the
// space, pivots normalised to 1, rows ordered by pivot column.  Two
// SubspaceBasis values describe the same subspace iff they compare equal.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Row> rows;

    std::size_t dimension() const { return rows.size(); }
    bool operator==(const SubspaceBasis &o) const = default;
};

// canonical basis of the row space of `rows`
SubspaceBasis rref_span(const Field &f, std::vector<Row> rows, std::size_t ambient);

// canonical basis of {v : Av = 0}; every row must have length `ambient`
SubspaceBasis nullspace(const Field &f, const std::vector<Row> &rows, std::size_t ambient);

bool subspace_contains(const Field &f, const SubspaceBasis &basis, Row v);

// rank of a set of vectors (not necessarily independent)
std::size_t rank_of(const Field &f, const std::vector<Row> &rows, std::size_t ambient);

// --- sparse elimination ----------------------------------------------------
//
// Rows are sorted (column, coefficient) lists with nonzero coefficients.
// Intended for the large structured systems where a dense matrix would be
// mostly zeros; results are canonicalised through rref_span.

struct SparseTerm {
    std::size_t col;
    Scalar coeff;
    bool operator==(const SparseTerm &o) const = default;
};
using SparseRow = std::vector<SparseTerm>;

// collapses duplicate columns, drops zero coefficients, sorts by column
SparseRow normalize_sparse_row(const Field &f, SparseRow row);

SubspaceBasis sparse_nullspace(const Field &f, std::size_t ncols, std::vector<SparseRow> rows);

// A x = b; returns the canonical particular solution (free variables zero)
// or nullopt when inconsistent
std::optional<Row> solve_affine(const Field &f, std::size_t ncols, std::vector<SparseRow> rows,
                                std::vector<Scalar> rhs);

}  // namespace deriva
