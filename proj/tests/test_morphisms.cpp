#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fquandle/classify.hpp"
#include "fquandle/core.hpp"
#include "fquandle/morphisms.hpp"

using namespace fq;

TEST_CASE("is_homomorphism accepts the identity and rejects a broken map") {
    FTable t = make_alexander(3, 1, 1);
    CHECK(is_homomorphism(t, t, {0, 1, 2}));
    CHECK(!is_homomorphism(t, t, {0, 1, 0}));
    CHECK_THROWS_AS(is_homomorphism(t, t, {0, 1}), input_error);
}

TEST_CASE("automorphism group of the dihedral quandle R3 has order 6") {
    FTable r3 = make_f_dihedral(3, 1, 0);  // x*y = 2y - x, f = id
    auto aut = automorphism_group(r3);
    CHECK(aut.size() == 6);
    // Sorted lexicographically and containing the identity first.
    CHECK(aut.front().map == std::vector<int>{0, 1, 2});
    CHECK(std::is_sorted(aut.begin(), aut.end(),
                         [](const Morphism& a, const Morphism& b) { return a.map < b.map; }));
}

TEST_CASE("automorphism group of the affine Z2 structure is trivial") {
    FTable t = make_alexander(2, 1, 1);
    auto aut = automorphism_group(t);
    REQUIRE(aut.size() == 1);
    CHECK(aut.front().map == std::vector<int>{0, 1});
}

TEST_CASE("twisting the trivial order-2 structure by the swap") {
    FTable t = make_trivial(2, {0, 1});
    FTable tw = twist(t, Morphism{2, 2, {1, 0}});
    CHECK(tw == FTable{2, {{1, 1}, {0, 0}}});
    // The twist stays inside the order-2 census.
    auto all = enumerate_all(2);
    CHECK(std::find(all.begin(), all.end(), tw) != all.end());
}

TEST_CASE("twist rejects a non-automorphism with a witness") {
    FTable r3 = make_f_dihedral(3, 1, 0);
    CHECK_THROWS_AS(twist(r3, Morphism{3, 3, {0, 0, 1}}), input_error);
}

TEST_CASE("find_isomorphism recovers a relabeling") {
    FTable t = make_alexander(5, 2, 3);
    std::vector<int> sigma = {2, 0, 4, 1, 3};
    FTable r = relabel(t, sigma);
    auto iso = find_isomorphism(t, r);
    REQUIRE(iso);
    CHECK(is_homomorphism(t, r, iso->map));
    CHECK(!find_isomorphism(t, make_trivial(5, {0, 1, 2, 3, 4})));
}

TEST_CASE("twisted_isomorphic identifies a structure with its own twist") {
    FTable r3 = make_f_dihedral(3, 1, 0);
    for (const Morphism& phi : automorphism_group(r3)) {
        auto w = twisted_isomorphic(r3, twist(r3, phi));
        REQUIRE(w);
        CHECK(is_homomorphism(twist(r3, w->first), twist(r3, phi), w->second.map));
    }
}

TEST_CASE("canonical_form is a relabeling invariant") {
    FTable t = make_alexander(4, 3, 2);
    FTable c = canonical_form(t);
    CHECK(canonical_form(relabel(t, {3, 1, 0, 2})) == c);
    CHECK(canonical_form(c) == c);
    // Canonical form is the lex-least relabeling, so it compares <= t.
    CHECK(!(t < c));
}

TEST_CASE("relabel round-trips through the inverse permutation") {
    FTable t = make_alexander(4, 1, 1);
    std::vector<int> sigma = {1, 3, 0, 2};
    std::vector<int> inv(4);
    for (int i = 0; i < 4; ++i) inv[sigma[i]] = i;
    CHECK(relabel(relabel(t, sigma), inv) == t);
}
