#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gebra/errors.hpp"
#include "gebra/tensor.hpp"

using namespace gebra;

namespace {

TensorPoly random_tensor(std::uint32_t dim, std::size_t rank, std::mt19937_64& rng) {
    TensorPoly t(dim, rank);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<std::uint64_t> mask(0, (1ull << dim) - 1);
    for (int k = 0; k < 6; ++k) {
        TensorPoly::Word w(rank);
        for (auto& s : w) s = mask(rng);
        int v = val(rng);
        if (v) t.add_term(w, RatFunc(v));
    }
    return t;
}

}  // namespace

TEST_CASE("tensor product of multivectors expands multilinearly") {
    std::uint32_t n = 3;
    RatFunc a{Sym("a")}, b{Sym("b")};
    auto e1 = Multivector::generator(n, 1);
    auto e2 = Multivector::generator(n, 2);
    auto e3 = Multivector::generator(n, 3);

    auto t = tensor({e1, e2.scaled(a) + e3.scaled(b), e3});
    CHECK(t.rank() == 3);
    CHECK(t.terms().size() == 2);
    CHECK(t.coeff({0b001, 0b010, 0b100}) == a);
    CHECK(t.coeff({0b001, 0b100, 0b100}) == b);
    CHECK(t.str() == "a*&t(e1,e2,e3) + b*&t(e1,e3,e3)");
    CHECK(t.dsl() == "a*t(e1,e2,e3) + b*t(e1,e3,e3)");
}

TEST_CASE("rank-0 tensors are bare scalars") {
    auto s = TensorPoly::scalar(2, RatFunc(Sym("x")));
    CHECK(s.rank() == 0);
    CHECK(s.str() == "x");
    auto p = tensor_concat(s, s);
    CHECK(p.rank() == 0);
    CHECK(p.str() == "x^2");
}

TEST_CASE("tensor_concat concatenates words and multiplies coefficients") {
    std::uint32_t n = 2;
    auto e1 = Multivector::generator(n, 1);
    auto e2 = Multivector::generator(n, 2);
    auto a = tensor({e1 + e2});
    auto b = tensor({e1, e2});
    auto c = tensor_concat(a, b);
    CHECK(c.rank() == 3);
    CHECK(c.str() == "&t(e1,e1,e2) + &t(e2,e1,e2)");
}

TEST_CASE("peek splits one slot out of every stored term") {
    std::uint32_t n = 3;
    RatFunc a{Sym("a")}, b{Sym("b")};
    auto e1 = Multivector::generator(n, 1);
    auto e2 = Multivector::generator(n, 2);
    auto e3 = Multivector::generator(n, 3);
    auto t = tensor({e1, e2.scaled(a) + e3.scaled(b), e3});

    auto parts = peek(t, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first.str() == "a*e2");
    CHECK(parts[0].second.str() == "&t(e1,e3)");
    CHECK(parts[1].first.str() == "b*e3");
    CHECK(parts[1].second.str() == "&t(e1,e3)");

    CHECK_THROWS_AS(peek(t, 0), SlotOutOfRange);
    CHECK_THROWS_AS(peek(t, 4), SlotOutOfRange);
}

TEST_CASE("peek then poke restores the tensor") {
    std::mt19937_64 rng(20260821);
    for (int trial = 0; trial < 20; ++trial) {
        auto t = random_tensor(3, 3, rng);
        for (std::size_t slot = 1; slot <= 3; ++slot) {
            TensorPoly back(3, 3);
            for (auto& [piece, rest] : peek(t, slot)) back = back + poke(rest, piece, slot);
            CHECK(back == t);
        }
    }
}

TEST_CASE("contract against the Kronecker pairing computes inner products") {
    std::uint32_t n = 2;
    // X runs over the four basis blades with distinct coefficients
    auto basis = blade_basis(n);
    Multivector x(n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        x.add_term(basis[k].mask, RatFunc(Sym("x", static_cast<std::uint32_t>(k + 1))));
    auto xx = tensor({x, x});
    auto c = contract(xx, 1, [](const Multivector& u, const Multivector& v) {
        return ev(u, v);
    });
    CHECK(c.rank() == 0);
    CHECK(c.str() == "x1^2 + x2^2 + x3^2 + x4^2");
}

TEST_CASE("switch operators are involutions; gswitch carries the sign") {
    std::uint32_t n = 2;
    auto e1 = Multivector::generator(n, 1);
    auto e2 = Multivector::generator(n, 2);
    auto t = tensor({e1, e2});

    CHECK(tswitch(t, 1).str() == "&t(e2,e1)");
    CHECK(gswitch(t, 1).str() == "-&t(e2,e1)");

    auto id2 = Multivector::unit(n);
    CHECK(gswitch(tensor({id2, e1}), 1).str() == "&t(e1,Id)");

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        auto r = random_tensor(2, 3, rng);
        for (std::size_t slot = 1; slot <= 2; ++slot) {
            CHECK(tswitch(tswitch(r, slot), slot) == r);
            CHECK(gswitch(gswitch(r, slot), slot) == r);
        }
        // braid relation for adjacent graded switches
        auto lhs = gswitch(gswitch(gswitch(r, 1), 2), 1);
        auto rhs = gswitch(gswitch(gswitch(r, 2), 1), 2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gswitch sign on a rank-4 word") {
    std::uint32_t n = 4;
    auto t = tensor({Multivector::generator(n, 1), Multivector::generator(n, 2),
                     Multivector::generator(n, 3), Multivector::generator(n, 4)});
    CHECK(gswitch(t, 2).str() == "-&t(e1,e3,e2,e4)");
}

TEST_CASE("mapop applies an endomorphism to one slot") {
    std::uint32_t n = 2;
    auto e1 = Multivector::generator(n, 1);
    auto e2 = Multivector::generator(n, 2);
    auto t = tensor({e1, e2}) + tensor({e2, e1});

    auto gi = mapop(t, 2, [](const Multivector& u) { return grade_involution(u); });
    CHECK(gi == -t);

    auto m = endo_matrix([](const Multivector& u) { return grade_involution(u); }, n);
    CHECK(mapop(t, 2, m) == gi);

    // collapse to a grade projection: kill everything but e1
    auto proj = mapop(t, 1, [](const Multivector& u) {
        return Multivector(u.dim(), 0b01, u.coeff(0b01));
    });
    CHECK(proj.str() == "&t(e1,e2)");
}

TEST_CASE("map_mul fuses adjacent slots through a product") {
    std::uint32_t n = 2;
    auto e1 = Multivector::generator(n, 1);
    auto e2 = Multivector::generator(n, 2);
    auto t = tensor({e1, e2, e1});
    ProductFn w = [](const Multivector& u, const Multivector& v) { return wedge(u, v); };
    CHECK(map_mul(t, 1, w).str() == "&t(e1we2,e1)");
    CHECK(map_mul(t, 2, w).str() == "-&t(e1,e1we2)");

    auto dead = map_mul(tensor({e1, e1, e2}), 1, w);
    CHECK(dead.rank() == 2);
    CHECK(dead.is_zero());
}

TEST_CASE("drop_t lowers rank-1 tensors and rejects the rest") {
    std::uint32_t n = 2;
    auto e1 = Multivector::generator(n, 1);
    auto t = tensor({e1.scaled(RatFunc(Sym("a")))});
    CHECK(drop_t(t).str() == "a*e1");
    CHECK_THROWS_AS(drop_t(tensor({e1, e1})), RankMismatch);
}

TEST_CASE("tcollect is the identity on the canonical representation") {
    std::mt19937_64 rng(3);
    auto t = random_tensor(2, 2, rng);
    CHECK(tcollect(t) == t);
    CHECK(tcollect(tcollect(t)) == tcollect(t));
}

TEST_CASE("rank and dimension guards") {
    TensorPoly a(2, 2), b(2, 3), c(3, 2);
    CHECK_THROWS_AS(a + b, MixedRank);
    CHECK_THROWS_AS(a + c, DimMismatch);
    CHECK_THROWS_AS(a.add_term({0b01}, RatFunc(1)), RankMismatch);
    auto t = tensor({Multivector::unit(2), Multivector::unit(2)});
    CHECK_THROWS_AS(tswitch(t, 2), SlotOutOfRange);
    CHECK_THROWS_AS(contract(t, 0, PairingFn{}), SlotOutOfRange);
}

TEST_CASE("substitution reaches every coefficient") {
    std::uint32_t n = 2;
    Sym a("a");
    auto t = tensor({Multivector::generator(n, 1).scaled(RatFunc(a)),
                     Multivector::generator(n, 2)});
    SubstMap m{{a, RatFunc(7)}};
    CHECK(subst(t, m).str() == "7*&t(e1,e2)");
}
