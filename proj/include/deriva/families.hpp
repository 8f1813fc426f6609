#pragma once

#include "deriva/derivations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deriva {

struct CharTwoUnsupported : std::invalid_argument {
    CharTwoUnsupported()
        : std::invalid_argument(
              "claimed family bases require characteristic zero or an odd prime") {}
};

struct UnsupportedTag : std::invalid_argument {
    explicit UnsupportedTag(const std::string &tag)
        : std::invalid_argument("no catalogued anti-centralizer basis for conjugator '" + tag +
                                "'") {}
};

enum class Family { dihedral, dicyclic, semidihedral };

const char *family_name(Family f);
std::optional<Family> family_from_name(const std::string &name);

struct FamilySpec {
    Family family;
    int n = 0;
    unsigned long characteristic = 0;
};

enum class Regime { regular, modular };

// modular exactly when the characteristic divides the family parameter
Regime regime_of(const FamilySpec &spec);

FiniteGroup build_group(const FamilySpec &spec, bool allow_degenerate = false);

// parameter values whose group degenerates to an abelian one
bool is_degenerate(Family family, int n);

// Catalogued derivation bases, one generator assignment per basis vector.
// Each catalogued pair is checked against the relators; when the catalogued
// form fails, sign/b-factor variants of the b-image are tried and the
// accepted variant is described in `notes`.  The group must come from the
// matching factory and must outlive the returned assignments.
std::vector<GeneratorAssignment> dihedral_basis(const FiniteGroup &g, const Field &f,
                                                std::vector<std::string> *notes = nullptr);
std::vector<GeneratorAssignment> dicyclic_basis(const FiniteGroup &g, const Field &f,
                                                std::vector<std::string> *notes = nullptr);
std::vector<GeneratorAssignment> semidihedral_basis(const FiniteGroup &g, const Field &f,
                                                    std::vector<std::string> *notes = nullptr);
std::vector<GeneratorAssignment> family_basis(const FiniteGroup &g, Family family, const Field &f,
                                              std::vector<std::string> *notes = nullptr);

// group elements whose inner derivations are claimed to form a basis of the
// inner-derivation space; valid in every characteristic
std::vector<int> family_inner_basis(Family family, int n);

// catalogued anti-centralizer bases; `tag` names the conjugating element
enum class ConjugatorTag { b, ab, a_n_plus_1_b };
std::string conjugator_tag_name(Family family, ConjugatorTag tag);
int conjugator_element(const FiniteGroup &g, Family family, ConjugatorTag tag);
std::vector<AlgebraElement> family_anticentralizer_basis(const FiniteGroup &g, Family family,
                                                         const Field &f, ConjugatorTag tag);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    FamilySpec spec;
    Regime regime = Regime::regular;
    int order = 0;
    bool degenerate = false;
    int class_count_expected = 0, class_count_computed = 0;
    int der_expected = 0, der_computed = 0;
    int inner_expected = 0, inner_computed = 0;
    int outer_expected = 0, outer_computed = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> variant_notes;
    bool pass = false;
    std::string first_divergence;  // name of the first failing check
};

int expected_class_count(Family family, int n);
int expected_der_dim(Family family, int n, Regime regime);

// run the whole battery for one (family, n, field) cell
VerificationReport verify_family(const FamilySpec &spec, bool allow_degenerate = false);

}  // namespace deriva
