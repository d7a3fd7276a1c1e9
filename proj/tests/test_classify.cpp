#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fquandle/classify.hpp"
#include "fquandle/core.hpp"
#include "fquandle/morphisms.hpp"

using namespace fq;

TEST_CASE("census sizes at orders 1..4") {
    CHECK(enumerate_all(1).size() == 1);
    CHECK(enumerate_all(2).size() == 4);
    CHECK(enumerate_all(3).size() == 24);
    CHECK(enumerate_all(4).size() == 288);
}

TEST_CASE("every enumerated table validates at quandle level") {
    for (int n = 1; n <= 3; ++n)
        for (const FTable& t : enumerate_all(n)) CHECK(validate(t, Level::Quandle).passed);
}

TEST_CASE("order cap is enforced") {
    CHECK_THROWS_AS(enumerate_all(6), input_error);           // above the default cap
    CHECK_THROWS_AS(enumerate_all(7, kMaxOrderCap), input_error);  // above the hard cap
}

TEST_CASE("isomorphism class counts at orders 1..4") {
    CHECK(classify(1).iso_class_count == 1);
    CHECK(classify(2).iso_class_count == 3);
    CHECK(classify(3).iso_class_count == 10);
    CHECK(classify(4).iso_class_count == 37);
}

TEST_CASE("order-2 no-quandle filter finds exactly the affine Z2 class") {
    Catalog c = filter_no_quandle(classify(2));
    REQUIRE(c.classes.size() == 1);
    const CatalogClass& cls = c.classes.front();
    bool found = false;
    for (int m : cls.members)
        if (find_isomorphism(c.tables[m], make_alexander(2, 1, 1))) found = true;
    CHECK(found);
}

TEST_CASE("order-3 no-quandle filter: one class, contrary to the literature claim") {
    // The class of the affine structure over Z_3 with T = 2, S = 1 has f = 0,
    // which is non-bijective, so the no-quandle count at order 3 is 1, not 0.
    Catalog c = filter_no_quandle(classify(3));
    REQUIRE(c.classes.size() == 1);
    bool found = false;
    for (int m : c.classes.front().members)
        if (find_isomorphism(c.tables[m], make_alexander(3, 2, 1))) found = true;
    CHECK(found);
}

TEST_CASE("order-4 no-quandle classes: five, including the four named structures") {
    Catalog c = filter_no_quandle(classify(4));
    CHECK(c.classes.size() == 5);

    auto class_containing = [&](const FTable& probe) -> int {
        for (size_t k = 0; k < c.classes.size(); ++k)
            for (int m : c.classes[k].members)
                if (find_isomorphism(c.tables[m], probe)) return static_cast<int>(k);
        return -1;
    };

    // The two abelian-group addition tables land in two distinct classes.
    auto groups = abelian_group_tables(4);
    int z4 = class_containing(groups[0]);
    int k4 = class_containing(groups[1]);
    CHECK(z4 >= 0);
    CHECK(k4 >= 0);
    CHECK(z4 != k4);

    // The two printed order-4 Cayley tables occupy two further classes.
    FTable paper_a{4, {{0, 1, 3, 2}, {1, 0, 2, 3}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    FTable paper_b{4, {{0, 1, 3, 2}, {1, 0, 2, 3}, {2, 3, 1, 0}, {3, 2, 0, 1}}};
    int a = class_containing(paper_a);
    int b = class_containing(paper_b);
    CHECK(a >= 0);
    CHECK(b >= 0);
    std::vector<int> ids = {z4, k4, a, b};
    std::sort(ids.begin(), ids.end());
    CHECK(std::unique(ids.begin(), ids.end()) == ids.end());

    // The fifth class: a non-latin structure not twisted-isomorphic to any of
    // the four named ones.
    FTable extra{4, {{0, 0, 2, 2}, {1, 1, 3, 3}, {2, 2, 0, 0}, {3, 3, 1, 1}}};
    int e = class_containing(extra);
    CHECK(e >= 0);
    CHECK(std::find(ids.begin(), ids.end(), e) == ids.end());
}

TEST_CASE("f-bijectivity and latinness are twisted-class invariants") {
    Catalog c = classify(3);
    for (const CatalogClass& cls : c.classes)
        for (int m : cls.members) {
            CHECK(f_bijective(c.tables[m]) == cls.contains_quandle);
            CHECK(is_latin(c.tables[m]) == cls.is_latin);
        }
}

TEST_CASE("abelian group tables") {
    CHECK(abelian_group_tables(3).size() == 1);
    CHECK(abelian_group_tables(4).size() == 2);
    CHECK(!find_isomorphism(abelian_group_tables(4)[0], abelian_group_tables(4)[1]));
}
