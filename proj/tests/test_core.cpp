#include <catch2/catch_amalgamated.hpp>

#include "fiblie/core.hpp"

using namespace fiblie;

namespace {

BasisMonomial mono(std::initializer_list<int> tail, int pivot) {
    Tail t;
    for (int i : tail)
        t = Tail::from_bits(t.bits() | Tail::single(i).bits());
    return BasisMonomial{t, pivot};
}

Element el(std::initializer_list<int> tail, int pivot) { return Element{mono(tail, pivot)}; }

}  // namespace

TEST_CASE("multiply_tails") {
    auto p = multiply_tails(Tail::single(0), Tail::single(1));
    REQUIRE(p.has_value());
    CHECK(p->bits() == 0b11);
    CHECK_FALSE(multiply_tails(Tail::single(0), Tail::single(0)).has_value());
    auto q = multiply_tails(Tail{}, Tail::single(2));
    REQUIRE(q.has_value());
    CHECK(*q == Tail::single(2));
}

TEST_CASE("pivot_on_variable") {
    auto one = pivot_on_variable(2, 2);
    REQUIRE(one.has_value());
    CHECK(one->empty());
    CHECK_FALSE(pivot_on_variable(1, 0).has_value());
    auto run = pivot_on_variable(2, 4);
    REQUIRE(run.has_value());
    CHECK(run->indices() == std::vector<int>{1, 2});
}

TEST_CASE("apply_pivot_to_tail") {
    // v_2(t_0) = 0
    CHECK(apply_pivot_to_tail(2, Tail::single(0)).empty());
    // v_1(t_1) = 1
    auto unit = apply_pivot_to_tail(1, Tail::single(1));
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].empty());
    // v_2(t_2 t_4) = t_4 (the t_2 term survives, the t_4 term repeats t_2)
    auto mixed = apply_pivot_to_tail(2, Tail::from_bits(0b10100));
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0] == Tail::single(4));
    // v_2(t_1 t_4) = 0: v_2(t_1) = 0 and t_1 v_2(t_4) repeats t_1
    CHECK(apply_pivot_to_tail(2, Tail::from_bits(0b10010)).empty());
}

TEST_CASE("bracket_pivots") {
    CHECK(bracket_pivots(1, 2) == el({}, 3));
    CHECK(bracket_pivots(2, 4) == el({1}, 5));
    CHECK(bracket_pivots(5, 5) == Element{});
    CHECK(bracket_pivots(1, 5) == el({0, 1, 2}, 6));
    CHECK(bracket_pivots(4, 2) == bracket_pivots(2, 4));
}

TEST_CASE("bracket reproduces the derived-subalgebra table") {
    Element v1 = el({}, 1), v2 = el({}, 2), v3 = el({}, 3);
    CHECK(bracket(v3, v1) == el({0}, 4));            // a_{1,0}
    CHECK(bracket(v3, v2) == el({}, 4));             // a_{0,1}
    CHECK(bracket(v1, el({0}, 4)) == Element{});     // a_{2,0}
    CHECK(bracket(v2, el({}, 4)) == el({1}, 5));     // a_{0,2}
    CHECK(bracket(v2, el({0}, 4)) == el({0, 1}, 5)); // a_{1,1}
    CHECK(bracket(v2, el({1}, 5)) == Element{});     // a_{0,3}
    CHECK(bracket(v2, el({0, 1}, 5)) == Element{});  // a_{1,2}
}

TEST_CASE("weights") {
    CHECK(mono({}, 1).weight() == 1);
    CHECK(mono({}, 2).weight() == 1);
    CHECK(mono({0}, 4).weight() == 3);
    CHECK(mono({0, 1}, 5).weight() == 4);
}

TEST_CASE("enumerate_basis small degrees") {
    CHECK(enumerate_basis(1) == std::vector<BasisMonomial>{mono({}, 1), mono({}, 2)});
    CHECK(enumerate_basis(3) == std::vector<BasisMonomial>{mono({}, 4), mono({0}, 4)});
    CHECK(enumerate_basis(4) == std::vector<BasisMonomial>{mono({1}, 5), mono({0, 1}, 5)});
    CHECK(enumerate_basis(5) == std::vector<BasisMonomial>{mono({}, 5), mono({0}, 5)});
}

TEST_CASE("shift") {
    CHECK(shift(el({}, 1)) == el({}, 2));
    CHECK(shift(el({0}, 4)) == el({1}, 5));
    CHECK(shift(el({}, 3) + el({0}, 4)) == el({}, 4) + el({1}, 5));
}

TEST_CASE("grading oracle agrees with enumeration") {
    const int D = 12;
    std::vector<ElementSpan> spans = grading_oracle(D);
    CHECK(spans[1].dim() == 1);
    CHECK(spans[1].contains(el({}, 3)));
    CHECK(spans[2].dim() == 2);
    CHECK(spans[2].contains(el({}, 4)));
    CHECK(spans[2].contains(el({0}, 4)));
    for (int d = 1; d <= D; ++d) {
        CHECK(spans[static_cast<std::size_t>(d - 1)].dim() == enumerate_basis(d).size());
        for (const BasisMonomial& m : enumerate_basis(d))
            CHECK(spans[static_cast<std::size_t>(d - 1)].contains(Element{m}));
    }
}

TEST_CASE("bracket closure and degree additivity") {
    std::vector<BasisMonomial> pool;
    for (int d = 1; d <= 9; ++d)
        for (const BasisMonomial& m : enumerate_basis(d))
            pool.push_back(m);
    for (const BasisMonomial& x : pool)
        for (const BasisMonomial& y : pool) {
            Element br = bracket(Element{x}, Element{y});
            for (const BasisMonomial& m : br.monomials()) {
                CHECK(m.valid());
                CHECK(m.weight() == x.weight() + y.weight());
            }
        }
}

TEST_CASE("jacobi on small weights") {
    std::vector<BasisMonomial> pool;
    for (int d = 1; d <= 7; ++d)
        for (const BasisMonomial& m : enumerate_basis(d))
            pool.push_back(m);
    for (const BasisMonomial& x : pool)
        for (const BasisMonomial& y : pool)
            for (const BasisMonomial& z : pool) {
                if (x.weight() + y.weight() + z.weight() > 9)
                    continue;
                Element ex{x}, ey{y}, ez{z};
                Element sum = bracket(bracket(ex, ey), ez) + bracket(bracket(ey, ez), ex) +
                              bracket(bracket(ez, ex), ey);
                CHECK(sum.is_zero());
            }
}

TEST_CASE("monomial encoding round trip") {
    CHECK(encode(mono({0, 1}, 5)) == "t0.t1.v5");
    CHECK(encode(mono({}, 3)) == "v3");
    CHECK(parse_monomial("t0.t1.v5") == mono({0, 1}, 5));
    CHECK(parse_monomial("v3") == mono({}, 3));
    CHECK_THROWS_AS(parse_monomial("t2.v5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("t1.t0.v5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("v0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("t0.v4."), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial(""), std::invalid_argument);
    for (int d = 1; d <= 10; ++d)
        for (const BasisMonomial& m : enumerate_basis(d))
            CHECK(parse_monomial(encode(m)) == m);
}
