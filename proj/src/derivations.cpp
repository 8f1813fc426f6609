#include "deriva/derivations.hpp"

namespace deriva {

AlgebraElement DerivationMatrix::image(int g) const {
    AlgebraElement x(*group_, field_);
    for (int h = 0; h < group_->order(); ++h)
        x[h] = cols_[(std::size_t)g][(std::size_t)h];
    return x;
}

Row DerivationMatrix::flatten() const {
    Row flat;
    flat.reserve(cols_.size() * cols_.size());
    for (const auto &col : cols_)
        flat.insert(flat.end(), col.begin(), col.end());
    return flat;
}

DerivationMatrix DerivationMatrix::from_flat(const FiniteGroup &g, const Field &f,
                                             const Row &flat) {
    std::size_t n = (std::size_t)g.order();
    if (flat.size() != n * n)
        throw RaggedInput();
    DerivationMatrix d(g, f);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            d.cols_[c][r] = flat[c * n + r];
    return d;
}

Row flatten_assignment(const GeneratorAssignment &f) {
    Row flat;
    for (const auto &img : f.images)
        flat.insert(flat.end(), img.coeffs().begin(), img.coeffs().end());
    return flat;
}

GeneratorAssignment assignment_from_flat(const FiniteGroup &g, const Field &f, const Row &flat) {
    std::size_t n = (std::size_t)g.order();
    std::size_t k = g.generators().size();
    if (flat.size() != k * n)
        throw RaggedInput();
    GeneratorAssignment out;
    for (std::size_t t = 0; t < k; ++t) {
        AlgebraElement img(g, f);
        for (std::size_t h = 0; h < n; ++h)
            img[(int)h] = flat[t * n + h];
        out.images.push_back(std::move(img));
    }
    return out;
}

bool leibniz_check(const DerivationMatrix &d) {
    const FiniteGroup &grp = d.group();
    const Field &f = d.field();
    int n = grp.order();
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            const Row &dg = d.column(g);
            const Row &dh = d.column(h);
            const Row &dgh = d.column(grp.mul(g, h));
            // compare coordinatewise: dgh[k] == dg[k h^-1] + dh[g^-1 k]
            for (int k = 0; k < n; ++k) {
                Scalar expect = f.add(dg[(std::size_t)grp.mul(k, grp.inv(h))],
                                      dh[(std::size_t)grp.mul(grp.inv(g), k)]);
                if (!(dgh[(std::size_t)k] == expect))
                    return false;
            }
        }
    }
    return true;
}

SubspaceBasis derivation_space(const FiniteGroup &g, const Field &f) {
    std::size_t n = (std::size_t)g.order();
    // unknown (column c, coordinate k) lives at c*n + k
    std::vector<SparseRow> rows;
    rows.reserve(2 * n * g.generators().size());
    for (int x : g.generators()) {
        int xinv = g.inv(x);
        for (int a = 0; a < (int)n; ++a) {
            int ax = g.mul(a, x);
            int ainv = g.inv(a);
            for (int k = 0; k < (int)n; ++k) {
                // d(ax)[k] - (d(a) x)[k] - (a d(x))[k] = 0
                SparseRow row{{(std::size_t)ax * n + k, f.one()},
                              {(std::size_t)a * n + g.mul(k, xinv), f.from_long(-1)},
                              {(std::size_t)x * n + g.mul(ainv, k), f.from_long(-1)}};
                rows.push_back(normalize_sparse_row(f, std::move(row)));
            }
        }
    }
    SubspaceBasis basis = sparse_nullspace(f, n * n, std::move(rows));
    for (const auto &vec : basis.rows)
        if (!leibniz_check(DerivationMatrix::from_flat(g, f, vec)))
            throw std::logic_error("derivation solver produced a non-derivation");
    return basis;
}

DerivationMatrix inner_derivation(const AlgebraElement &beta) {
    const FiniteGroup &grp = beta.group();
    const Field &f = beta.field();
    int n = grp.order();
    DerivationMatrix d(grp, f);
    for (int g = 0; g < n; ++g) {
        Row &col = d.column(g);
        for (int h = 0; h < n; ++h) {
            if (beta[h].is_zero())
                continue;
            std::size_t gh = (std::size_t)grp.mul(g, h);
            std::size_t hg = (std::size_t)grp.mul(h, g);
            col[gh] = f.add(col[gh], beta[h]);
            col[hg] = f.sub(col[hg], beta[h]);
        }
    }
    return d;
}

InnerSpace inner_derivation_space(const FiniteGroup &g, const Field &f) {
    int n = g.order();
    std::vector<Row> flats;
    flats.reserve((std::size_t)n);
    for (int x = 0; x < n; ++x)
        flats.push_back(inner_derivation(AlgebraElement::unit(g, f, x)).flatten());
    InnerSpace out;
    out.basis = rref_span(f, std::move(flats), (std::size_t)n * n);
    ConjugacyClasses classes = conjugacy_classes(g);
    for (const auto &cls : classes.classes)
        for (std::size_t i = 1; i < cls.size(); ++i)
            out.witnesses.push_back(cls[i]);
    return out;
}

AlgebraElement word_derivative(const GeneratorAssignment &f, const GroupWord &w) {
    if (f.images.empty())
        throw std::invalid_argument("generator assignment is empty");
    const FiniteGroup &grp = f.images.front().group();
    const Field &fld = f.images.front().field();
    // left-to-right cocycle accumulation:
    //   d(v y) = d(v) y + v d(y),  d(x^-1) = -x^-1 d(x) x^-1
    AlgebraElement val(grp, fld);
    int elem = grp.identity();
    for (auto [gen, exp] : w.letters) {
        if (gen < 0 || gen >= (int)f.images.size())
            throw WordSyntax("word references generator " + std::to_string(gen) +
                             " outside the assignment");
        int x = grp.generators()[(std::size_t)gen];
        const AlgebraElement &fx = f.images[(std::size_t)gen];
        if (exp > 0) {
            val = add(right_translate(val, x), left_translate(elem, fx));
            elem = grp.mul(elem, x);
        } else {
            int xinv = grp.inv(x);
            AlgebraElement step = neg(left_translate(xinv, right_translate(fx, xinv)));
            val = add(right_translate(val, xinv), left_translate(elem, step));
            elem = grp.mul(elem, xinv);
        }
    }
    return val;
}

SubspaceBasis generator_derivation_space(const FiniteGroup &g, const Field &f) {
    if (g.relators().empty())
        throw NoRelators();
    std::size_t n = (std::size_t)g.order();
    std::size_t k = g.generators().size();
    // columns of the relator-derivative map, one per unknown coefficient
    std::vector<Row> cols;
    cols.reserve(k * n);
    std::size_t eqs = g.relators().size() * n;
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t h = 0; h < n; ++h) {
            GeneratorAssignment probe;
            for (std::size_t s = 0; s < k; ++s)
                probe.images.push_back(s == t ? AlgebraElement::unit(g, f, (int)h)
                                              : AlgebraElement(g, f));
            Row col;
            col.reserve(eqs);
            for (const auto &rel : g.relators()) {
                AlgebraElement v = word_derivative(probe, rel);
                col.insert(col.end(), v.coeffs().begin(), v.coeffs().end());
            }
            cols.push_back(std::move(col));
        }
    }
    std::vector<SparseRow> rows((std::size_t)eqs);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < eqs; ++r)
            if (!cols[c][r].is_zero())
                rows[r].push_back({c, cols[c][r]});
    return sparse_nullspace(f, k * n, std::move(rows));
}

std::variant<DerivationMatrix, ExtensionFailure> extend_generator_map(
    const GeneratorAssignment &f) {
    if (f.images.empty())
        throw std::invalid_argument("generator assignment is empty");
    const FiniteGroup &grp = f.images.front().group();
    const Field &fld = f.images.front().field();
    if (f.images.size() != grp.generators().size())
        throw std::invalid_argument("assignment must cover every generator");
    if (grp.relators().empty())
        throw NoRelators();
    ExtensionFailure fail;
    for (const auto &rel : grp.relators()) {
        AlgebraElement v = word_derivative(f, rel);
        if (!v.is_zero())
            fail.violations.emplace_back(rel, std::move(v));
    }
    if (!fail.violations.empty())
        return fail;
    DerivationMatrix d(grp, fld);
    for (int x = 0; x < grp.order(); ++x) {
        AlgebraElement v = word_derivative(f, grp.element_word(x));
        d.column(x) = v.coeffs();
    }
    return d;
}

std::optional<AlgebraElement> innerness_witness(const DerivationMatrix &d) {
    if (!leibniz_check(d))
        throw NotADerivation();
    const FiniteGroup &grp = d.group();
    const Field &f = d.field();
    std::size_t n = (std::size_t)grp.order();
    // beta[h^-1 k] - beta[k h^-1] = d(h)[k]
    std::vector<SparseRow> rows;
    std::vector<Scalar> rhs;
    rows.reserve(n * n);
    rhs.reserve(n * n);
    for (int h = 0; h < (int)n; ++h) {
        int hinv = grp.inv(h);
        for (int k = 0; k < (int)n; ++k) {
            SparseRow row{{(std::size_t)grp.mul(hinv, k), f.one()},
                          {(std::size_t)grp.mul(k, hinv), f.from_long(-1)}};
            rows.push_back(normalize_sparse_row(f, std::move(row)));
            rhs.push_back(d.column(h)[(std::size_t)k]);
        }
    }
    auto sol = solve_affine(f, n, std::move(rows), std::move(rhs));
    if (!sol)
        return std::nullopt;
    AlgebraElement beta(grp, f);
    for (std::size_t i = 0; i < n; ++i)
        beta[(int)i] = (*sol)[i];
    return beta;
}

nlohmann::ordered_json matrix_to_json(const DerivationMatrix &d) {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (int g = 0; g < d.group().order(); ++g) {
        nlohmann::ordered_json col = nlohmann::ordered_json::array();
        for (const Scalar &s : d.column(g)) {
            if (d.field().is_rational_field())
                col.push_back(d.field().to_string(s));
            else
                col.push_back(s.res());
        }
        cols.push_back(std::move(col));
    }
    return {{"columns", std::move(cols)}};
}

DerivationMatrix matrix_from_json(const FiniteGroup &g, const Field &f,
                                  const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("columns") || !j["columns"].is_array())
        throw std::invalid_argument("matrix json must be {\"columns\": [...]}");
    const auto &cols = j["columns"];
    if ((int)cols.size() != g.order())
        throw std::invalid_argument("matrix has " + std::to_string(cols.size()) +
                                    " columns, expected " + std::to_string(g.order()));
    DerivationMatrix d(g, f);
    for (int c = 0; c < g.order(); ++c) {
        AlgebraElement img = element_from_json(g, f, nlohmann::json{{"coeffs", cols[(std::size_t)c]}});
        d.column(c) = img.coeffs();
    }
    return d;
}

}  // namespace deriva
