#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deriva {

struct ParameterTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAGroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RelatorViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonGeneratingSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WordSyntax : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A word in the generators: letters are (generator index, +1/-1).
struct GroupWord {
    std::vector<std::pair<int, int>> letters;
    bool operator==(const GroupWord &o) const = default;
};

// "aBab" -> a b^-1 a b; lowercase = generator, uppercase = its inverse
GroupWord parse_word(const std::string &s);
std::string word_to_string(const GroupWord &w);

// Finite group as a validated multiplication table.  Family constructors
// index a^i b^j as i + m*j where m is the order of a.
class FiniteGroup {
  public:
    int order() const { return n_; }
    int mul(int g, int h) const { return cayley_[(std::size_t)g * n_ + h]; }
    int inv(int g) const { return inverse_[g]; }
    int identity() const { return identity_; }
    const std::vector<int> &generators() const { return generators_; }
    const std::vector<GroupWord> &relators() const { return relators_; }
    const std::string &name(int g) const { return names_[g]; }
    const std::vector<int> &table() const { return cayley_; }

    // order of the distinguished cyclic generator for family groups, 0 otherwise
    int cyclic_order() const { return cyclic_order_; }
    bool is_abelian() const;

    // positive word in the generators evaluating to g
    const GroupWord &element_word(int g) const { return element_words_[g]; }

    // <a, b | a^n, b^2, (ab)^2>, order 2n, n >= 3
    static FiniteGroup dihedral(int n);
    // <a, b | a^(2n), a^n b^2, a b^-1 a b>, order 4n, n >= 2 unless degenerate allowed
    static FiniteGroup dicyclic(int n, bool allow_degenerate = false);
    // <a, b | a^(4n), b^2, a^(2n+1) b a b>, order 8n, n >= 1
    static FiniteGroup semidihedral(int n);
    static FiniteGroup from_cayley(const std::vector<std::vector<int>> &table,
                                   std::vector<int> generators, std::vector<GroupWord> relators);

  private:
    FiniteGroup() = default;
    static FiniteGroup make_family(int m, const std::vector<GroupWord> &relators,
                                   const std::function<int(int, int, int, int)> &mul_index);
    void finish(bool full_assoc_check);
    void build_element_words();
    void check_relators() const;

    int n_ = 0;
    std::vector<int> cayley_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::vector<int> generators_;
    std::vector<GroupWord> relators_;
    std::vector<std::string> names_;
    std::vector<GroupWord> element_words_;
    int cyclic_order_ = 0;
};

int evaluate_word(const FiniteGroup &g, const GroupWord &w);

struct ConjugacyClasses {
    std::vector<std::vector<int>> classes;  // members sorted; singleton classes first
    std::vector<int> representatives;       // minimal member of each class
    int central_count = 0;

    int class_count() const { return (int)classes.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup &g);

// sorted element indices of <g>
std::vector<int> cyclic_part(const FiniteGroup &g, int elem);

}  // namespace deriva
