#include "deriva/algebra.hpp"

#include <algorithm>

namespace deriva {

namespace {

void require_compatible(const AlgebraElement &x, const AlgebraElement &y) {
    if (!(x.field() == y.field()))
        throw FieldMismatch();
    if (&x.group() != &y.group() && x.group().table() != y.group().table())
        throw GroupMismatch();
}

}  // namespace

bool AlgebraElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar &s) { return s.is_zero(); });
}

bool AlgebraElement::operator==(const AlgebraElement &o) const {
    require_compatible(*this, o);
    return c_ == o.c_;
}

AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y) {
    require_compatible(x, y);
    AlgebraElement out(x.group(), x.field());
    for (int g = 0; g < x.group().order(); ++g)
        out[g] = x.field().add(x[g], y[g]);
    return out;
}

AlgebraElement sub(const AlgebraElement &x, const AlgebraElement &y) {
    require_compatible(x, y);
    AlgebraElement out(x.group(), x.field());
    for (int g = 0; g < x.group().order(); ++g)
        out[g] = x.field().sub(x[g], y[g]);
    return out;
}

AlgebraElement neg(const AlgebraElement &x) {
    AlgebraElement out(x.group(), x.field());
    for (int g = 0; g < x.group().order(); ++g)
        out[g] = x.field().neg(x[g]);
    return out;
}

AlgebraElement scale(const Scalar &c, const AlgebraElement &x) {
    AlgebraElement out(x.group(), x.field());
    for (int g = 0; g < x.group().order(); ++g)
        out[g] = x.field().mul(c, x[g]);
    return out;
}

AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y) {
    require_compatible(x, y);
    const Field &f = x.field();
    const FiniteGroup &grp = x.group();
    AlgebraElement out(grp, f);
    for (int g = 0; g < grp.order(); ++g) {
        if (x[g].is_zero())
            continue;
        for (int h = 0; h < grp.order(); ++h) {
            if (y[h].is_zero())
                continue;
            int gh = grp.mul(g, h);
            out[gh] = f.add(out[gh], f.mul(x[g], y[h]));
        }
    }
    return out;
}

AlgebraElement left_translate(int g, const AlgebraElement &x) {
    AlgebraElement out(x.group(), x.field());
    for (int h = 0; h < x.group().order(); ++h)
        out[x.group().mul(g, h)] = x[h];
    return out;
}

AlgebraElement right_translate(const AlgebraElement &x, int g) {
    AlgebraElement out(x.group(), x.field());
    for (int h = 0; h < x.group().order(); ++h)
        out[x.group().mul(h, g)] = x[h];
    return out;
}

Scalar augmentation(const AlgebraElement &x) {
    Scalar s = x.field().zero();
    for (int g = 0; g < x.group().order(); ++g)
        s = x.field().add(s, x[g]);
    return s;
}

std::vector<AlgebraElement> class_sums(const FiniteGroup &g, const Field &f,
                                       const ConjugacyClasses &classes) {
    std::vector<AlgebraElement> sums;
    sums.reserve(classes.classes.size());
    for (const auto &cls : classes.classes) {
        AlgebraElement s(g, f);
        for (int x : cls)
            s[x] = f.one();
        sums.push_back(std::move(s));
    }
    return sums;
}

std::vector<AlgebraElement> class_sums(const FiniteGroup &g, const Field &f) {
    return class_sums(g, f, conjugacy_classes(g));
}

SubspaceBasis center_basis(const FiniteGroup &g, const Field &f) {
    int n = g.order();
    std::vector<SparseRow> rows;
    for (int t : g.generators()) {
        // z*t - t*z = 0, coordinatewise: z[k t^-1] - z[t^-1 k] = 0
        for (int k = 0; k < n; ++k) {
            std::size_t left = (std::size_t)g.mul(k, g.inv(t));
            std::size_t right = (std::size_t)g.mul(g.inv(t), k);
            rows.push_back(normalize_sparse_row(
                f, {{left, f.one()}, {right, f.from_long(-1)}}));
        }
    }
    return sparse_nullspace(f, (std::size_t)n, std::move(rows));
}

SubspaceBasis delta_prime_basis(const FiniteGroup &g, const Field &f,
                                const std::vector<int> &ambient, const std::vector<int> &part) {
    if (part.empty())
        throw EmptySubgroup();
    std::vector<bool> in_ambient((std::size_t)g.order(), false);
    for (int x : ambient) {
        if (x < 0 || x >= g.order())
            throw NotContained();
        in_ambient[(std::size_t)x] = true;
    }
    for (int x : part)
        if (x < 0 || x >= g.order() || !in_ambient[(std::size_t)x])
            throw NotContained();
    std::vector<bool> in_part((std::size_t)g.order(), false);
    for (int x : part)
        in_part[(std::size_t)x] = true;

    std::vector<SparseRow> rows;
    for (int x = 0; x < g.order(); ++x)
        if (!in_ambient[(std::size_t)x])
            rows.push_back({{(std::size_t)x, f.one()}});
    SparseRow part_sum, rest_sum;
    for (int x : ambient) {
        if (in_part[(std::size_t)x])
            part_sum.push_back({(std::size_t)x, f.one()});
        else
            rest_sum.push_back({(std::size_t)x, f.one()});
    }
    rows.push_back(normalize_sparse_row(f, std::move(part_sum)));
    if (!rest_sum.empty())
        rows.push_back(normalize_sparse_row(f, std::move(rest_sum)));
    return sparse_nullspace(f, (std::size_t)g.order(), std::move(rows));
}

SubspaceBasis anti_centralizer(const AlgebraElement &beta) {
    const FiniteGroup &grp = beta.group();
    const Field &f = beta.field();
    int n = grp.order();
    // coefficient of alpha_g in (alpha*beta + beta*alpha)[k]
    std::vector<Row> rows;
    rows.reserve((std::size_t)n);
    for (int k = 0; k < n; ++k) {
        Row row((std::size_t)n, f.zero());
        for (int g = 0; g < n; ++g) {
            Scalar c = f.add(beta[grp.mul(grp.inv(g), k)], beta[grp.mul(k, grp.inv(g))]);
            row[(std::size_t)g] = c;
        }
        rows.push_back(std::move(row));
    }
    return nullspace(f, rows, (std::size_t)n);
}

nlohmann::ordered_json element_to_json(const AlgebraElement &x) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int g = 0; g < x.group().order(); ++g) {
        if (x.field().is_rational_field())
            coeffs.push_back(x.field().to_string(x[g]));
        else
            coeffs.push_back(x[g].res());
    }
    return {{"coeffs", std::move(coeffs)}};
}

AlgebraElement element_from_json(const FiniteGroup &g, const Field &f,
                                 const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("element json must be {\"coeffs\": [...]}");
    const auto &coeffs = j["coeffs"];
    if ((int)coeffs.size() != g.order())
        throw std::invalid_argument("coefficient list has length " +
                                    std::to_string(coeffs.size()) + ", expected " +
                                    std::to_string(g.order()));
    AlgebraElement x(g, f);
    for (int i = 0; i < g.order(); ++i) {
        const auto &v = coeffs[(std::size_t)i];
        if (v.is_string())
            x[i] = f.from_string(v.get<std::string>());
        else if (v.is_number_integer())
            x[i] = f.from_long(v.get<long>());
        else
            throw std::invalid_argument("coefficients must be integers or strings");
    }
    return x;
}

std::string element_to_text(const AlgebraElement &x) {
    const Field &f = x.field();
    std::string out;
    for (int g = 0; g < x.group().order(); ++g) {
        if (x[g].is_zero())
            continue;
        Scalar c = x[g];
        bool negative = f.is_rational_field() && sgn(c.rat()) < 0;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (negative)
            c = f.neg(c);
        std::string mag = f.to_string(c);
        if (mag.find('/') != std::string::npos)
            mag = "(" + mag + ")";
        const std::string &name = x.group().name(g);
        if (mag == "1")
            out += name == "1" ? mag : name;
        else if (name == "1")
            out += mag;
        else
            out += mag + name;
    }
    return out.empty() ? "0" : out;
}

}  // namespace deriva
