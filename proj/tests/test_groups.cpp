#include "deriva/groups.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

using namespace deriva;

namespace {

// D_6 built independently as the symmetries of a triangle: permutations of
// {0,1,2} under composition, indexed in discovery order
struct PermGroup {
    std::vector<std::array<int, 3>> elems;
    std::vector<std::vector<int>> table;
    int rot = 0, refl = 0;
};

PermGroup triangle_symmetries() {
    std::array<int, 3> id{0, 1, 2}, r{1, 2, 0}, s{0, 2, 1};
    auto compose = [](std::array<int, 3> f, std::array<int, 3> g) {
        return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]};
    };
    PermGroup pg;
    pg.elems = {id, r, compose(r, r), s, compose(r, s), compose(compose(r, r), s)};
    auto index_of = [&](const std::array<int, 3> &p) {
        return (int)(std::find(pg.elems.begin(), pg.elems.end(), p) - pg.elems.begin());
    };
    pg.table.assign(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            pg.table[i][j] = index_of(compose(pg.elems[i], pg.elems[j]));
    pg.rot = index_of(r);
    pg.refl = index_of(s);
    return pg;
}

}  // namespace

TEST_CASE("word parsing round-trips and rejects junk") {
    GroupWord w = parse_word("aBab");
    REQUIRE(w.letters.size() == 4);
    CHECK(w.letters[0] == std::pair<int, int>{0, 1});
    CHECK(w.letters[1] == std::pair<int, int>{1, -1});
    CHECK(word_to_string(w) == "aBab");
    CHECK(parse_word("").letters.empty());
    CHECK_THROWS_AS(parse_word("a b"), WordSyntax);
    CHECK_THROWS_AS(parse_word("a2"), WordSyntax);
}

TEST_CASE("dihedral groups satisfy their defining relations") {
    FiniteGroup g = FiniteGroup::dihedral(3);
    CHECK(g.order() == 6);
    CHECK(evaluate_word(g, parse_word("aaa")) == g.identity());
    CHECK(evaluate_word(g, parse_word("bb")) == g.identity());
    // ba = a^2 b, with a^i b^j indexed as i + 3j
    CHECK(g.mul(3, 1) == 5);
    CHECK(evaluate_word(g, parse_word("ba")) == 5);
    CHECK(!g.is_abelian());

    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK_THROWS_AS(FiniteGroup::dihedral(2), ParameterTooSmall);
}

TEST_CASE("the smallest dicyclic group is the quaternion group") {
    FiniteGroup g = FiniteGroup::dicyclic(2);
    CHECK(g.order() == 8);
    int a = g.generators()[0], b = g.generators()[1];
    // b^2 = a^n and bab^-1 = a^-1
    CHECK(g.mul(b, b) == g.mul(a, a));
    CHECK(g.mul(g.mul(b, a), g.inv(b)) == g.inv(a));
    // b has order 4
    int b2 = g.mul(b, b);
    CHECK(b2 != g.identity());
    CHECK(g.mul(b2, b2) == g.identity());

    CHECK(FiniteGroup::dicyclic(3).order() == 12);
    CHECK_THROWS_AS(FiniteGroup::dicyclic(1), ParameterTooSmall);
    FiniteGroup c4 = FiniteGroup::dicyclic(1, true);
    CHECK(c4.order() == 4);
    CHECK(c4.is_abelian());
}

TEST_CASE("semidihedral groups twist by 2n-1") {
    FiniteGroup sd1 = FiniteGroup::semidihedral(1);
    CHECK(sd1.order() == 8);
    CHECK(sd1.is_abelian());

    CHECK(FiniteGroup::semidihedral(2).order() == 16);

    FiniteGroup g = FiniteGroup::semidihedral(3);
    CHECK(g.order() == 24);
    // ba = a^5 b, with a^i b^j indexed as i + 12j
    CHECK(g.mul(12, 1) == 17);
    // a^(2n+1) b a b collapses to a^(4n) = 1
    CHECK(evaluate_word(g, parse_word("aaaaaaabab")) == g.identity());
}

TEST_CASE("word evaluation handles empty words and inverses") {
    FiniteGroup g = FiniteGroup::dihedral(3);
    CHECK(evaluate_word(g, GroupWord{}) == g.identity());
    CHECK(evaluate_word(g, parse_word("aA")) == g.identity());
    CHECK(evaluate_word(g, parse_word("A")) == g.inv(1));
    for (int x = 0; x < g.order(); ++x)
        CHECK(evaluate_word(g, g.element_word(x)) == x);
}

TEST_CASE("conjugacy classes partition the group with singletons first") {
    ConjugacyClasses cc = conjugacy_classes(FiniteGroup::dihedral(3));
    REQUIRE(cc.class_count() == 3);
    CHECK(cc.central_count == 1);
    CHECK(cc.classes[0] == std::vector<int>{0});
    CHECK(cc.classes[1] == std::vector<int>{1, 2});
    CHECK(cc.classes[2] == std::vector<int>{3, 4, 5});
    CHECK(cc.representatives == std::vector<int>{0, 1, 3});

    CHECK(conjugacy_classes(FiniteGroup::dicyclic(2)).class_count() == 5);
    CHECK(conjugacy_classes(FiniteGroup::semidihedral(3)).class_count() == 12);
}

TEST_CASE("class counts follow the family formulas") {
    for (int n = 3; n <= 12; ++n) {
        int expected = (n % 2 == 0) ? n / 2 + 3 : (n + 3) / 2;
        CHECK(conjugacy_classes(FiniteGroup::dihedral(n)).class_count() == expected);
    }
    for (int n = 2; n <= 6; ++n)
        CHECK(conjugacy_classes(FiniteGroup::dicyclic(n)).class_count() == n + 3);
    for (int n = 1; n <= 4; ++n) {
        int expected = (n % 2 == 0) ? 2 * n + 3 : 2 * n + 6;
        CHECK(conjugacy_classes(FiniteGroup::semidihedral(n)).class_count() == expected);
    }
}

TEST_CASE("cyclic parts") {
    FiniteGroup g = FiniteGroup::dihedral(3);
    CHECK(cyclic_part(g, 1) == std::vector<int>{0, 1, 2});
    CHECK(cyclic_part(g, g.identity()) == std::vector<int>{0});

    // in the quaternion group b generates {1, b, a^2, a^2 b}
    FiniteGroup t8 = FiniteGroup::dicyclic(2);
    CHECK(cyclic_part(t8, 4) == std::vector<int>{0, 2, 4, 6});
}

TEST_CASE("cayley table ingestion validates the axioms") {
    std::vector<std::vector<int>> c2{{0, 1}, {1, 0}};
    FiniteGroup g = FiniteGroup::from_cayley(c2, {1}, {});
    CHECK(g.order() == 2);
    CHECK(g.inv(1) == 1);

    // a loop of order 5 with an element of order two: latin square with
    // identity, but (1*1)*2 = 2 while 1*(1*2) = 4
    std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 3, 4, 0, 1},
                                       {3, 4, 1, 2, 0},
                                       {4, 2, 0, 1, 3}};
    CHECK_THROWS_AS(FiniteGroup::from_cayley(loop, {1}, {}), NotAGroup);

    // ragged and out-of-range tables
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1}}, {1}, {}), NotAGroup);
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1, 5}}, {1}, {}), NotAGroup);

    // a relator that does not hold
    CHECK_THROWS_AS(FiniteGroup::from_cayley(c2, {1}, {parse_word("a")}), RelatorViolation);
    // generators that only reach a proper subgroup
    PermGroup pg = triangle_symmetries();
    CHECK_THROWS_AS(FiniteGroup::from_cayley(pg.table, {pg.rot}, {}), NonGeneratingSet);
}

TEST_CASE("an externally built symmetry table matches the dihedral factory") {
    PermGroup pg = triangle_symmetries();
    FiniteGroup g = FiniteGroup::from_cayley(pg.table, {pg.rot, pg.refl}, {});
    CHECK(g.order() == 6);
    CHECK(!g.is_abelian());
    ConjugacyClasses cc = conjugacy_classes(g);
    CHECK(cc.class_count() == 3);
    std::vector<std::size_t> sizes;
    for (const auto &c : cc.classes)
        sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
}
