#include <catch2/catch_amalgamated.hpp>

#include "fiblie/subquotients.hpp"

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

TEST_CASE("algebra names parse") {
    CHECK(parse_algebra("L") == AlgebraId::full());
    CHECK(parse_algebra("Ltilde") == AlgebraId::Ltilde());
    CHECK(parse_algebra("A1") == AlgebraId::A(1));
    CHECK(parse_algebra("M2") == AlgebraId::M(2));
    CHECK(parse_algebra("Q1") == AlgebraId::Q(1));
    CHECK_THROWS_AS(parse_algebra("B3"), UnknownAlgebra);
    CHECK_THROWS_AS(parse_algebra("L0"), UnknownAlgebra);
    CHECK_THROWS_AS(parse_algebra(""), UnknownAlgebra);
}

TEST_CASE("member_basis examples") {
    CHECK(member_basis(AlgebraId::A(1), 3) == std::vector<BasisMonomial>{mono({0}, 4)});
    CHECK(member_basis(AlgebraId::Q(1), 1) == std::vector<BasisMonomial>{mono({}, 1)});
    CHECK(member_basis(AlgebraId::Q(1), 2).empty());
    CHECK(member_basis(AlgebraId::Lsub(1), 2) == std::vector<BasisMonomial>{mono({}, 3)});
    CHECK(member_basis(AlgebraId::Ltilde(), 1) ==
          std::vector<BasisMonomial>{mono({}, 1), mono({}, 2)});
    // M2 = A2 + L2 misses t0-monomials and anything touching t0/t1 wrongly
    CHECK(member_basis(AlgebraId::M(2), 3) == std::vector<BasisMonomial>{mono({}, 4)});
    CHECK(member_basis(AlgebraId::M(2), 4) == std::vector<BasisMonomial>{mono({1}, 5)});
}

TEST_CASE("decompose splits along X_A, X_0, v1") {
    Decomposition d = decompose(el({}, 1) + el({0}, 4));
    CHECK(d.a == el({0}, 4));
    CHECK(d.l1 == Element{});
    CHECK(d.q1 == el({}, 1));

    Decomposition v3 = decompose(el({}, 3));
    CHECK(v3.a == Element{});
    CHECK(v3.l1 == el({}, 3));
    CHECK(v3.q1 == Element{});

    Decomposition zero = decompose(Element{});
    CHECK((zero.a == Element{} && zero.l1 == Element{} && zero.q1 == Element{}));
}

TEST_CASE("project_mod_A") {
    CHECK(project_mod_A(el({0}, 4)) == Element{});
    CHECK(project_mod_A(el({}, 1)) == el({}, 1));
    CHECK(project_mod_A(el({}, 2)) == el({}, 2));
}

TEST_CASE("bracket_ltilde") {
    CHECK(bracket_ltilde(el({}, 1), el({}, 2)) == el({}, 3));
    CHECK(bracket_ltilde(el({}, 1), el({}, 3)) == Element{});
    CHECK(bracket_ltilde(el({}, 2), el({}, 3)) == el({}, 4));
    CHECK_THROWS_AS(bracket_ltilde(el({0}, 4), el({}, 2)), InvalidSupport);
}

TEST_CASE("theta") {
    CHECK(theta(el({}, 2)) == el({}, 3));
    CHECK(theta(el({}, 3)) == Element{});
    CHECK(theta(el({1}, 5)) == el({}, 5));
    CHECK_THROWS_AS(theta(el({}, 1)), InvalidSupport);
    CHECK_THROWS_AS(theta(el({0}, 4)), InvalidSupport);
}

TEST_CASE("theta is a derivation of L1") {
    const int D = 10;
    std::vector<BasisMonomial> pool;
    for (int d = 1; d < D; ++d)
        for (const BasisMonomial& m : member_basis(AlgebraId::Lsub(1), d))
            pool.push_back(m);
    for (const BasisMonomial& x : pool)
        for (const BasisMonomial& y : pool) {
            if (x.weight() + y.weight() > D - 1)
                continue;
            Element ex{x}, ey{y};
            CHECK(theta(bracket(ex, ey)) ==
                  bracket(theta(ex), ey) + bracket(ex, theta(ey)));
        }
}

TEST_CASE("ideal closure of v2 is M1") {
    GradedBasis m1 = ideal_closure({el({}, 2)}, AlgebraId::full(), 3);
    CHECK(m1.dims() == std::vector<std::size_t>{1, 1, 2});
    for (int d = 1; d <= 3; ++d)
        CHECK(m1.dim(d) == member_basis(AlgebraId::M(1), d).size());
}

TEST_CASE("ideal closure edge cases") {
    GradedBasis empty = ideal_closure({}, AlgebraId::full(), 4);
    CHECK(empty.dims() == std::vector<std::size_t>{0, 0, 0, 0});

    GradedBasis t0v4 = ideal_closure({el({0}, 4)}, AlgebraId::Lsub(1), 4);
    CHECK(t0v4.contains(4, el({0, 1}, 5)));
}

TEST_CASE("derived subalgebra of L") {
    GradedBasis derived = derived_subalgebra(AlgebraId::full(), 6);
    CHECK(derived.dim(1) == 0);
    CHECK(derived.dim(2) == 1);
    CHECK(derived.contains(2, el({}, 3)));
}

TEST_CASE("A is an abelian ideal") {
    const int D = 10;
    for (int d1 = 1; d1 < D; ++d1)
        for (const BasisMonomial& a : member_basis(AlgebraId::A(1), d1))
            for (int d2 = 1; d1 + d2 <= D; ++d2) {
                for (const BasisMonomial& b : member_basis(AlgebraId::A(1), d2))
                    CHECK(bracket(Element{a}, Element{b}).is_zero());
                for (const BasisMonomial& x : enumerate_basis(d2))
                    CHECK(supported_on(AlgebraId::A(1), bracket(Element{a}, Element{x})));
            }
}

TEST_CASE("degree-wise direct sum") {
    for (int d = 1; d <= 14; ++d) {
        std::size_t total = enumerate_basis(d).size();
        std::size_t split = member_basis(AlgebraId::A(1), d).size() +
                            member_basis(AlgebraId::Lsub(1), d).size() +
                            member_basis(AlgebraId::Q(1), d).size();
        CHECK(total == split);
        std::size_t m_split = member_basis(AlgebraId::A(2), d).size() +
                              member_basis(AlgebraId::Lsub(2), d).size();
        CHECK(member_basis(AlgebraId::M(2), d).size() == m_split);
    }
}

TEST_CASE("L1 is generated by v2 and v3") {
    const int D = 10;
    GradedBasis closure = subalgebra_closure({el({}, 2), el({}, 3)}, AlgebraId::full(), D);
    for (int d = 1; d <= D; ++d) {
        std::vector<BasisMonomial> x0 = member_basis(AlgebraId::Lsub(1), d);
        CHECK(closure.dim(d) == x0.size());
        for (const BasisMonomial& m : x0)
            CHECK(closure.contains(d, Element{m}));
    }
}
