#pragma once

#include "deriva/groups.hpp"
#include "deriva/linalg.hpp"
#include "deriva/scalars.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace deriva {

struct GroupMismatch : std::invalid_argument {
    GroupMismatch() : std::invalid_argument("operands live over different groups") {}
};

struct EmptySubgroup : std::invalid_argument {
    EmptySubgroup() : std::invalid_argument("subgroup part must be nonempty") {}
};

struct NotContained : std::invalid_argument {
    NotContained() : std::invalid_argument("subgroup part is not contained in the ambient set") {}
};

// Element of the group algebra FG: one coefficient per group element.
class AlgebraElement {
  public:
    AlgebraElement(const FiniteGroup &g, const Field &f)
        : group_(&g), field_(f), c_((std::size_t)g.order(), f.zero()) {}

    static AlgebraElement unit(const FiniteGroup &g, const Field &f, int elem) {
        AlgebraElement x(g, f);
        x.c_[(std::size_t)elem] = f.one();
        return x;
    }

    const FiniteGroup &group() const { return *group_; }
    const Field &field() const { return field_; }
    const Row &coeffs() const { return c_; }
    Scalar &operator[](int g) { return c_[(std::size_t)g]; }
    const Scalar &operator[](int g) const { return c_[(std::size_t)g]; }

    bool is_zero() const;
    bool operator==(const AlgebraElement &o) const;

  private:
    const FiniteGroup *group_;
    Field field_;
    Row c_;
};

AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y);
AlgebraElement sub(const AlgebraElement &x, const AlgebraElement &y);
AlgebraElement neg(const AlgebraElement &x);
AlgebraElement scale(const Scalar &c, const AlgebraElement &x);
AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y);

// x translated by a group element: g * x and x * g
AlgebraElement left_translate(int g, const AlgebraElement &x);
AlgebraElement right_translate(const AlgebraElement &x, int g);

Scalar augmentation(const AlgebraElement &x);

// sums over conjugacy classes, in class order
std::vector<AlgebraElement> class_sums(const FiniteGroup &g, const Field &f);
std::vector<AlgebraElement> class_sums(const FiniteGroup &g, const Field &f,
                                       const ConjugacyClasses &classes);

// {z : zg = gz for all generators g}, canonical basis
SubspaceBasis center_basis(const FiniteGroup &g, const Field &f);

// span of the ambient set with both partial coefficient sums zero: the sum
// over `part` and the sum over the rest of `ambient` each vanish
SubspaceBasis delta_prime_basis(const FiniteGroup &g, const Field &f,
                                const std::vector<int> &ambient, const std::vector<int> &part);

// {alpha : alpha*beta = -beta*alpha}, canonical basis
SubspaceBasis anti_centralizer(const AlgebraElement &beta);

nlohmann::ordered_json element_to_json(const AlgebraElement &x);
AlgebraElement element_from_json(const FiniteGroup &g, const Field &f,
                                 const nlohmann::json &j);

// human-readable rendering, e.g. "a - a^2" or "2a^2b + b"
std::string element_to_text(const AlgebraElement &x);

}  // namespace deriva
