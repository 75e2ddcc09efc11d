#include <catch2/catch_amalgamated.hpp>

#include "fiblie/homology.hpp"

using namespace fiblie;

namespace {

BasisMonomial mono(std::initializer_list<int> tail, int pivot) {
    Tail t;
    for (int i : tail)
        t = Tail::from_bits(t.bits() | Tail::single(i).bits());
    return BasisMonomial{t, pivot};
}

Chain wedge(std::initializer_list<BasisMonomial> ms) {
    auto w = ChainMonomial::wedge(std::vector<BasisMonomial>(ms));
    REQUIRE(w.has_value());
    return Chain{*w};
}

const BasisMonomial v1 = mono({}, 1);
const BasisMonomial v2 = mono({}, 2);
const BasisMonomial v3 = mono({}, 3);
const BasisMonomial v4 = mono({}, 4);
const BasisMonomial v5 = mono({}, 5);
const BasisMonomial t0v4 = mono({0}, 4);
const BasisMonomial w2 = mono({1}, 5);

}  // namespace

TEST_CASE("chain_basis examples") {
    auto pairs2 = chain_basis(AlgebraId::full(), 2, 2);
    REQUIRE(pairs2.size() == 1);
    CHECK(pairs2[0].entries == std::vector<BasisMonomial>{v1, v2});

    auto pairs3 = chain_basis(AlgebraId::full(), 2, 3);
    REQUIRE(pairs3.size() == 2);
    CHECK(pairs3[0].entries == std::vector<BasisMonomial>{v1, v3});
    CHECK(pairs3[1].entries == std::vector<BasisMonomial>{v2, v3});

    for (std::int64_t d = 2; d <= 8; ++d)
        CHECK(chain_basis(AlgebraId::Q(1), 2, d).empty());
}

TEST_CASE("d2 examples") {
    AlgebraId L = AlgebraId::full();
    CHECK(d2(L, wedge({v1, v2})) == Chain::from_element(Element{v3}));
    CHECK(d2(AlgebraId::Lsub(1), wedge({w2, v2})).is_zero());
    CHECK(d2(L, wedge({v3, v1})) == Chain::from_element(Element{t0v4}));
}

TEST_CASE("d3 examples") {
    AlgebraId L1 = AlgebraId::Lsub(1);
    Chain got = d3(L1, wedge({v4, v2, v3}));
    Chain want = wedge({w2, v3}) + wedge({v5, v2});
    CHECK(got == want);

    AlgebraId L = AlgebraId::full();
    Chain triple = d3(L, wedge({v1, v2, v3}));
    CHECK(triple == wedge({t0v4, v2}) + wedge({v4, v1}));

    // pairwise-commuting entries: three monomials of A
    Chain abelian = d3(L, wedge({t0v4, mono({0}, 5), mono({0, 1}, 5)}));
    CHECK(abelian.is_zero());
}

TEST_CASE("d2 after d3 vanishes") {
    for (const AlgebraId& a : {AlgebraId::full(), AlgebraId::Ltilde(), AlgebraId::Lsub(1)})
        for (std::int64_t d = 3; d <= 10; ++d)
            for (const ChainMonomial& t : chain_basis(a, 3, d))
                CHECK(d2(a, d3(a, Chain{t})).is_zero());
}

TEST_CASE("H1 of L") {
    CHECK(homology(AlgebraId::full(), 1, 1).dim == 2);
    for (std::int64_t d = 2; d <= 10; ++d)
        CHECK(homology(AlgebraId::full(), 1, d).dim == 0);
}

TEST_CASE("H1 of M2 matches the short list") {
    std::size_t total = 0;
    for (std::int64_t d = 1; d <= 10; ++d) {
        HomologySpace h = homology(AlgebraId::M(2), 1, d);
        total += h.dim;
        if (d == 2 || d == 3 || d == 4)
            CHECK(h.dim == 1);
        else
            CHECK(h.dim == 0);
    }
    CHECK(total == 3);
}

TEST_CASE("H2 of L at degree 4") {
    HomologySpace h = homology(AlgebraId::full(), 2, 4);
    CHECK(h.dim == 1);
    REQUIRE(h.representatives.size() == 1);
    CHECK(d2(AlgebraId::full(), h.representatives[0]).is_zero());
}

TEST_CASE("H2 of the one-dimensional algebra vanishes") {
    for (std::int64_t d = 1; d <= 6; ++d)
        CHECK(homology(AlgebraId::Q(1), 2, d).dim == 0);
}

TEST_CASE("derivation action on H2") {
    AlgebraId l1 = AlgebraId::Lsub(1);
    Derivation th{1, [](const BasisMonomial& m) { return theta(Element{m}); }};

    SECTION("theta kills the step-1 class") {
        gf2::BitMatrix action = induced_action_on_h2(l1, th, 5, 8);
        ComplexSlice five(l1, 5);
        auto r = ChainMonomial::wedge({w2, v2});
        auto cls = five.h2_class(chain_coordinates(Chain{*r}, five.b2));
        REQUIRE(cls.has_value());
        CHECK(cls->any());
        CHECK(gf2::multiply(action, *cls).zero());
    }

    SECTION("zero derivation gives the zero matrix") {
        Derivation zero{1, [](const BasisMonomial&) { return Element{}; }};
        gf2::BitMatrix action = induced_action_on_h2(l1, zero, 5, 6);
        for (std::size_t i = 0; i < action.n_rows(); ++i)
            CHECK(action.row(i).zero());
    }

    SECTION("non-derivations are rejected") {
        Derivation bogus{1, [](const BasisMonomial& m) {
                             return m == v2 ? Element{v3} : Element{};
                         }};
        CHECK_THROWS_AS(induced_action_on_h2(l1, bogus, 5, 6), NotADerivation);
    }
}

TEST_CASE("one_dim_action_spaces") {
    SECTION("trivial action") {
        GradedAction mu;
        mu.weight = 1;
        mu.dims[1] = 3;
        ActionSpaces s = one_dim_action_spaces(mu, 1);
        CHECK(s.invariants.at(1) == 3);
        CHECK(s.coinvariants.at(1) == 3);
    }
    SECTION("rank-nullity on square blocks") {
        GradedAction mu;
        mu.weight = 1;
        mu.dims[1] = 2;
        mu.dims[2] = 2;
        gf2::BitMatrix block(2, 2);
        block.set(0, 0);
        mu.blocks.emplace(1, block);
        ActionSpaces s = one_dim_action_spaces(mu, 2);
        CHECK(s.invariants.at(1) == 2 - 1);
        CHECK(s.coinvariants.at(2) == 2 - 1);
    }
}

TEST_CASE("split SES for M1, Q1, L") {
    SplitSesData data = split_ses_data(AlgebraId::M(1), AlgebraId::Q(1), AlgebraId::full(), 8);
    for (std::int64_t d = 1; d <= 8; ++d)
        CHECK(split_ses_holds(data, d));
}

TEST_CASE("split SES rejects non-semidirect triples") {
    CHECK_THROWS_AS(split_ses_check(AlgebraId::Lsub(1), AlgebraId::Q(2), AlgebraId::full(), 4),
                    NotSemidirect);
}

TEST_CASE("H2(L2) embeds in H2(M2) split by the projection") {
    // inclusion L2 -> M2 then projection M2 -> M2/A2 = L2 compose to the
    // identity on classes, so dim H2(M2)_d >= dim H2(L2)_d
    AlgebraId l2 = AlgebraId::Lsub(2), m2 = AlgebraId::M(2);
    for (std::int64_t d = 2; d <= 12; ++d) {
        ComplexSlice sl(l2, d), sm(m2, d);
        CHECK(sm.h2_dim() >= sl.h2_dim());
        for (const gf2::BitVec& rep : sl.h2_reps) {
            Chain r = chain_from_coordinates(rep, sl.b2);
            auto included = sm.h2_class(chain_coordinates(r, sm.b2));
            REQUIRE(included.has_value());
            Chain z;
            for (std::size_t i = 0; i < sm.h2_reps.size(); ++i)
                if (included->get(i))
                    z += chain_from_coordinates(sm.h2_reps[i], sm.b2);
            std::vector<ChainMonomial> kept;
            for (const ChainMonomial& w : z.monomials()) {
                bool in_l2 = true;
                for (const BasisMonomial& e : w.entries)
                    in_l2 = in_l2 && member_monomial(l2, e);
                if (in_l2)
                    kept.push_back(w);
            }
            Chain projected = Chain::from_monomials(std::move(kept));
            auto back = sl.h2_class(chain_coordinates(projected, sl.b2));
            auto orig = sl.h2_class(rep);
            REQUIRE(back.has_value());
            REQUIRE(orig.has_value());
            CHECK(*back == *orig);
        }
    }
}

TEST_CASE("H1(Q2, H1(M2)) at degree 5 is one-dimensional") {
    // invariants of H1(M2) at degree 4, shifted by wt(v2) = 1
    Derivation ad_v2 = adjoint_derivation(AlgebraId::Lsub(1), mono({}, 2));
    GradedAction mu = h1_action(AlgebraId::M(2), ad_v2, 6);
    ActionSpaces s = one_dim_action_spaces(mu, 6);
    CHECK(s.invariants.at(4) == 1);
    CHECK(s.invariants.at(2) == 0);
    CHECK(s.invariants.at(3) == 0);
}
