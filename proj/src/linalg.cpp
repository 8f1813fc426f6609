#include "deriva/linalg.hpp"

#include <algorithm>
#include <queue>

namespace deriva {

namespace {

// target -= c * source, dense
void row_axpy(const Field &f, Row &target, const Scalar &c, const Row &source) {
    for (std::size_t j = 0; j < target.size(); ++j)
        target[j] = f.sub(target[j], f.mul(c, source[j]));
}

}  // namespace

SubspaceBasis rref_span(const Field &f, std::vector<Row> rows, std::size_t ambient) {
    for (const auto &r : rows)
        if (r.size() != ambient)
            throw RaggedInput();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ambient && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar t = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < ambient; ++j)
            rows[rank][j] = f.mul(rows[rank][j], t);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero())
                continue;
            Scalar c = rows[i][col];
            row_axpy(f, rows[i], c, rows[rank]);
        }
        ++rank;
    }
    rows.resize(rank, Row());
    return SubspaceBasis{ambient, std::move(rows)};
}

bool subspace_contains(const Field &f, const SubspaceBasis &basis, Row v) {
    if (v.size() != basis.ambient_dim)
        throw RaggedInput();
    for (const auto &row : basis.rows) {
        std::size_t p = 0;
        while (p < row.size() && row[p].is_zero())
            ++p;
        if (p == row.size())
            continue;
        if (!v[p].is_zero()) {
            Scalar c = v[p];  // copy: row_axpy writes v[p] mid-loop
            row_axpy(f, v, c, row);
        }
    }
    return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

std::size_t rank_of(const Field &f, const std::vector<Row> &rows, std::size_t ambient) {
    return rref_span(f, rows, ambient).dimension();
}

SparseRow normalize_sparse_row(const Field &f, SparseRow row) {
    std::sort(row.begin(), row.end(),
              [](const SparseTerm &a, const SparseTerm &b) { return a.col < b.col; });
    SparseRow out;
    out.reserve(row.size());
    for (auto &term : row) {
        if (!out.empty() && out.back().col == term.col)
            out.back().coeff = f.add(out.back().coeff, term.coeff);
        else
            out.push_back(std::move(term));
        if (!out.empty() && out.back().coeff.is_zero())
            out.pop_back();
    }
    return out;
}

namespace {

// Gauss-Jordan on sparse rows.  Invariant: once a column is chosen as a
// pivot it appears in exactly one row, so finished rows carry their pivot
// (coefficient 1) plus free columns only.
struct SparseElim {
    const Field &f;
    std::size_t ncols;
    std::vector<SparseRow> rows;
    std::vector<Scalar> rhs;  // empty when homogeneous
    std::vector<long> pivot_col_of_row;
    std::vector<long> pivot_row_of_col;

    SparseElim(const Field &field, std::size_t cols, std::vector<SparseRow> in,
               std::vector<Scalar> in_rhs)
        : f(field), ncols(cols), rows(std::move(in)), rhs(std::move(in_rhs)) {
        for (auto &r : rows) {
            r = normalize_sparse_row(f, std::move(r));
            for (const auto &t : r)
                if (t.col >= ncols)
                    throw RaggedInput();
        }
        pivot_col_of_row.assign(rows.size(), -1);
        pivot_row_of_col.assign(ncols, -1);
        run();
    }

    void run() {
        std::vector<std::vector<std::size_t>> col_rows(ncols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto &t : rows[i])
                col_rows[t.col].push_back(i);

        using Entry = std::pair<std::size_t, std::size_t>;  // (nnz, row)
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].empty())
                heap.emplace(rows[i].size(), i);

        while (!heap.empty()) {
            auto [nnz, r] = heap.top();
            heap.pop();
            if (pivot_col_of_row[r] >= 0 || rows[r].empty() || rows[r].size() != nnz)
                continue;  // stale entry

            std::size_t c = rows[r].front().col;
            Scalar t = f.inv(rows[r].front().coeff);
            for (auto &term : rows[r])
                term.coeff = f.mul(term.coeff, t);
            if (!rhs.empty())
                rhs[r] = f.mul(rhs[r], t);
            pivot_col_of_row[r] = (long)c;
            pivot_row_of_col[c] = (long)r;

            auto victims = std::move(col_rows[c]);
            col_rows[c].clear();
            for (std::size_t r2 : victims) {
                if (r2 == r)
                    continue;
                auto it = std::lower_bound(
                    rows[r2].begin(), rows[r2].end(), c,
                    [](const SparseTerm &term, std::size_t col) { return term.col < col; });
                if (it == rows[r2].end() || it->col != c)
                    continue;  // stale
                Scalar coeff = it->coeff;
                subtract_scaled(r2, coeff, rows[r], col_rows);
                if (!rhs.empty())
                    rhs[r2] = f.sub(rhs[r2], f.mul(coeff, rhs[r]));
                if (pivot_col_of_row[r2] < 0 && !rows[r2].empty())
                    heap.emplace(rows[r2].size(), r2);
            }
        }
    }

    // rows[r2] -= coeff * pivot_row, registering newly occupied columns
    void subtract_scaled(std::size_t r2, const Scalar &coeff, const SparseRow &pivot_row,
                         std::vector<std::vector<std::size_t>> &col_rows) {
        SparseRow out;
        out.reserve(rows[r2].size() + pivot_row.size());
        auto a = rows[r2].begin(), ae = rows[r2].end();
        auto b = pivot_row.begin(), be = pivot_row.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->col < b->col)) {
                out.push_back(*a++);
            } else if (a == ae || b->col < a->col) {
                Scalar v = f.neg(f.mul(coeff, b->coeff));
                if (!v.is_zero()) {
                    col_rows[b->col].push_back(r2);
                    out.push_back({b->col, std::move(v)});
                }
                ++b;
            } else {
                Scalar v = f.sub(a->coeff, f.mul(coeff, b->coeff));
                if (!v.is_zero())
                    out.push_back({a->col, std::move(v)});
                ++a;
                ++b;
            }
        }
        rows[r2] = std::move(out);
    }
};

}  // namespace

SubspaceBasis sparse_nullspace(const Field &f, std::size_t ncols, std::vector<SparseRow> in) {
    SparseElim elim(f, ncols, std::move(in), {});
    std::vector<Row> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (elim.pivot_row_of_col[fc] >= 0)
            continue;
        Row v(ncols, f.zero());
        v[fc] = f.one();
        for (std::size_t r = 0; r < elim.rows.size(); ++r) {
            if (elim.pivot_col_of_row[r] < 0)
                continue;
            const auto &row = elim.rows[r];
            auto it = std::lower_bound(
                row.begin(), row.end(), fc,
                [](const SparseTerm &term, std::size_t col) { return term.col < col; });
            if (it != row.end() && it->col == fc)
                v[(std::size_t)elim.pivot_col_of_row[r]] = f.neg(it->coeff);
        }
        basis.push_back(std::move(v));
    }
    return rref_span(f, std::move(basis), ncols);
}

std::optional<Row> solve_affine(const Field &f, std::size_t ncols, std::vector<SparseRow> rows,
                                std::vector<Scalar> rhs) {
    if (rhs.size() != rows.size())
        throw RaggedInput();
    SparseElim elim(f, ncols, std::move(rows), std::move(rhs));
    for (std::size_t r = 0; r < elim.rows.size(); ++r)
        if (elim.rows[r].empty() && !elim.rhs[r].is_zero())
            return std::nullopt;
    Row x(ncols, f.zero());
    for (std::size_t r = 0; r < elim.rows.size(); ++r)
        if (elim.pivot_col_of_row[r] >= 0)
            x[(std::size_t)elim.pivot_col_of_row[r]] = elim.rhs[r];
    return x;
}

SubspaceBasis nullspace(const Field &f, const std::vector<Row> &rows, std::size_t ambient) {
    std::vector<SparseRow> sparse;
    sparse.reserve(rows.size());
    for (const auto &r : rows) {
        if (r.size() != ambient)
            throw RaggedInput();
        SparseRow s;
        for (std::size_t j = 0; j < ambient; ++j)
            if (!r[j].is_zero())
                s.push_back({j, r[j]});
        sparse.push_back(std::move(s));
    }
    return sparse_nullspace(f, ambient, std::move(sparse));
}

}  // namespace deriva
