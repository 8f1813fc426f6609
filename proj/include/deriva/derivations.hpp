#pragma once

#include "deriva/algebra.hpp"
#include "deriva/groups.hpp"
#include "deriva/linalg.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace deriva {

struct NoRelators : std::invalid_argument {
    NoRelators() : std::invalid_argument("the group carries no relators") {}
};

struct NotADerivation : std::invalid_argument {
    NotADerivation() : std::invalid_argument("matrix violates the product rule") {}
};

// F-linear map FG -> FG stored column-wise: column g holds the coefficients
// of the image of the group element g.
class DerivationMatrix {
  public:
    DerivationMatrix(const FiniteGroup &g, const Field &f)
        : group_(&g), field_(f), cols_((std::size_t)g.order(), Row((std::size_t)g.order(), f.zero())) {}

    const FiniteGroup &group() const { return *group_; }
    const Field &field() const { return field_; }
    const Row &column(int g) const { return cols_[(std::size_t)g]; }
    Row &column(int g) { return cols_[(std::size_t)g]; }
    AlgebraElement image(int g) const;

    // column-major concatenation, the coordinate convention used by
    // derivation_space and inner_derivation_space
    Row flatten() const;
    static DerivationMatrix from_flat(const FiniteGroup &g, const Field &f, const Row &flat);

    bool operator==(const DerivationMatrix &o) const { return cols_ == o.cols_; }

  private:
    const FiniteGroup *group_;
    Field field_;
    std::vector<Row> cols_;
};

// images of the group generators, in generator order
struct GeneratorAssignment {
    std::vector<AlgebraElement> images;
};

Row flatten_assignment(const GeneratorAssignment &f);
GeneratorAssignment assignment_from_flat(const FiniteGroup &g, const Field &f, const Row &flat);

// d(xy) = d(x) y + x d(y) over all pairs of group elements
bool leibniz_check(const DerivationMatrix &d);

// all derivations of FG, canonical basis in the flattened coordinates;
// every basis vector is re-checked against the full product rule
SubspaceBasis derivation_space(const FiniteGroup &g, const Field &f);

// d(x) = x*beta - beta*x
DerivationMatrix inner_derivation(const AlgebraElement &beta);

struct InnerSpace {
    SubspaceBasis basis;
    // group elements whose inner derivations form a basis: the non-central
    // classes with their representatives removed
    std::vector<int> witnesses;
};
InnerSpace inner_derivation_space(const FiniteGroup &g, const Field &f);

// formal derivative of a word under the product rule, linear in the
// generator images; inverse letters contribute -x^-1 f(x) x^-1
AlgebraElement word_derivative(const GeneratorAssignment &f, const GroupWord &w);

// generator images that kill every relator derivative, canonical basis in
// the concatenated generator-image coordinates (first generator first)
SubspaceBasis generator_derivation_space(const FiniteGroup &g, const Field &f);

struct ExtensionFailure {
    // relators whose word derivative is nonzero, with the offending values
    std::vector<std::pair<GroupWord, AlgebraElement>> violations;
};

// propagate generator images to the whole group along each element's word;
// fails exactly when some relator derivative is nonzero
std::variant<DerivationMatrix, ExtensionFailure> extend_generator_map(const GeneratorAssignment &f);

// canonical beta with d = inner_derivation(beta), or nullopt for an outer d
std::optional<AlgebraElement> innerness_witness(const DerivationMatrix &d);

nlohmann::ordered_json matrix_to_json(const DerivationMatrix &d);
DerivationMatrix matrix_from_json(const FiniteGroup &g, const Field &f, const nlohmann::json &j);

}  // namespace deriva
