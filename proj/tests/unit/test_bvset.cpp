#include <bvd/delta0.hpp>

#include "verify/oracles.hpp"

#include <doctest.h>

using namespace bvd;

namespace {
// HfSet({x}) would pick the copy constructor
HfSet hf(std::vector<HfSet> elems) { return HfSet(std::move(elems)); }
} // namespace

TEST_CASE("truth values by hand")
{
    Universe u(Algebra::make(2));
    auto& alg = u.algebra();
    auto e = u.empty();
    CHECK(u.truth(TruthKind::Equality, e, e).is_top());
    auto x = u.make({{e, alg.element({0})}});
    auto y = u.make({{e, alg.element({1})}});
    CHECK(u.truth(TruthKind::Equality, x, y).is_bottom());
    CHECK(u.truth(TruthKind::Membership, e, x) == alg.element({0}));
}

TEST_CASE("constructions")
{
    Universe u(Algebra::make(2));
    auto& alg = u.algebra();
    auto e = u.empty();
    auto s = singleton(e);
    CHECK(s.size() == 1);
    CHECK(s.value(0).is_top());
    CHECK(ordered_pair(e, e).size() == 1);
    auto p = u.make({{e, alg.element({0})}});
    auto q = u.make({{e, alg.element({1})}});
    auto prod = product(p, q);
    REQUIRE(prod.size() == 1);
    CHECK(prod.key(0) == ordered_pair(e, e));
    CHECK(prod.value(0).is_bottom());
    // check embedding preserves pairs
    HfSet a = HfSet::von_neumann(1), b = HfSet::von_neumann(2);
    HfSet pair = hf({hf({a}), hf({a, b})});
    CHECK(check_embed(u, pair) == ordered_pair(check_embed(u, a), check_embed(u, b)));
}

TEST_CASE("power set")
{
    Universe u1(Algebra::make(1));
    auto pe = power_set(u1.empty(), 16);
    REQUIRE(pe.size() == 1);
    CHECK(pe.key(0) == u1.empty());
    auto top1 = u1.make({{u1.empty(), u1.algebra().top()}});
    CHECK(power_set(top1, 16).size() == 2);

    Universe u(Algebra::make(2));
    auto& alg = u.algebra();
    auto X = u.make({{u.empty(), alg.element({0})}, {singleton(u.empty()), alg.top()}});
    auto P = power_set(X, 64);
    CHECK(P.size() == 8); // 2 choices for the first key, 4 for the second
    for (auto& S : P.domain())
        CHECK(u.truth(TruthKind::Membership, S, P) == u.truth(TruthKind::Subset, S, X));
    CHECK_THROWS_AS(power_set(X, 4), BudgetError);
}

TEST_CASE("separation")
{
    Universe u(Algebra::make(2));
    auto& alg = u.algebra();
    auto e = u.empty();
    auto s = singleton(e);
    auto X = u.make({{e, alg.element({0})}, {s, alg.element({1})}});
    CHECK(separation(X, Delta0::truth(true), "x") == X);
    auto none = separation(X, Delta0::truth(false), "x");
    for (std::size_t i = 0; i < none.size(); ++i)
        CHECK(none.value(i).is_bottom());
    auto phi = Delta0::eq(D0Term::variable("x"), D0Term::of(e));
    auto sep = separation(X, phi, "x");
    CHECK(sep.at(e) == alg.element({0}));
    CHECK(sep.at(s).is_bottom());
    CHECK_THROWS_AS(separation(X, Delta0::eq(D0Term::variable("x"), D0Term::variable("y")), "x"),
                    DomainError);
}

TEST_CASE("check embedding of classical sets")
{
    Universe u(Algebra::make(2));
    CHECK(check_embed(u, HfSet()) == u.empty());
    auto one = check_embed(u, hf({HfSet()}));
    CHECK(one == singleton(u.empty()));
    auto all = HfSet::all_of_rank_below(4);
    REQUIRE(all.size() == 16);
    for (auto& a : all)
        for (auto& b : all) {
            auto v = u.truth(TruthKind::Equality, check_embed(u, a), check_embed(u, b));
            CHECK(v.is_top() == (a == b));
            CHECK((v.is_top() || v.is_bottom()));
        }
}

TEST_CASE("finite power set")
{
    Universe u(Algebra::uniform(2));
    auto fe = fin_power_set(u.empty(), 16);
    REQUIRE(fe.size() == 1);
    CHECK(fe.key(0) == u.empty());
    HfSet y = hf({HfSet(), hf({HfSet()})});
    CHECK(fin_power_set(check_embed(u, y), 16).size() == 4);
    auto nonchk = u.make({{u.empty(), u.algebra().element({0})}});
    CHECK_THROWS_AS(fin_power_set(nonchk, 16), DomainError);
}

TEST_CASE("Delta0 evaluation")
{
    Universe u(Algebra::make(2));
    auto& alg = u.algebra();
    auto e = u.empty();
    CHECK(eval_delta0(u, parse_delta0(u, "forall x in chk{}. false"), {}).is_top());
    auto X = u.make({{e, alg.element({0})}});
    Env env{{"X", X}};
    auto phi = Delta0::exists("x", D0Term::variable("X"),
                              Delta0::eq(D0Term::variable("x"), D0Term::of(e)));
    CHECK(eval_delta0(u, phi, env) == alg.element({0}));
    CHECK_THROWS_AS(eval_delta0(u, phi, {}), DomainError);
    CHECK(eval_delta0(u, parse_delta0(u, "exists x in {chk{} -> [0]}. x = chk{}"), {}) ==
          alg.element({0}));
    CHECK_THROWS_AS(parse_delta0(u, "forall in in chk{}. true"), ParseError);
    CHECK_THROWS_AS(parse_delta0(u, "chk{} = "), ParseError);
}

TEST_CASE("equality is an A-valued equivalence on small sets")
{
    Universe u(Algebra::uniform(2));
    auto all = verify::small_asets(u);
    std::size_t n = all.size();
    std::vector<AtomSet> eq(n * n), mem(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            eq[i * n + j] = u.truth_atoms(TruthKind::Equality, all[i], all[j]);
            mem[i * n + j] = u.truth_atoms(TruthKind::Membership, all[i], all[j]);
        }
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bad += !eq[i * n + i].all();
        for (std::size_t j = 0; j < n; ++j) {
            bad += !(eq[i * n + j] == eq[j * n + i]);
            for (std::size_t k = 0; k < n; ++k) {
                bad += !(eq[i * n + j] & eq[j * n + k]).subset_of(eq[i * n + k]);
                bad += !(eq[i * n + j] & mem[i * n + k]).subset_of(mem[j * n + k]);
            }
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("memoized truth agrees with the per-atom oracle")
{
    Universe u(Algebra::uniform(1));
    auto all = verify::small_asets(u);
    CHECK(all.size() == 19);
    for (auto& a : all)
        for (auto& b : all)
            for (auto k : {TruthKind::Membership, TruthKind::Subset, TruthKind::Equality})
                CHECK(u.truth_atoms(k, a, b) == verify::naive_truth(k, a, b));
}

TEST_CASE("maximizing witness attains the existential join")
{
    Universe u(Algebra::uniform(2));
    auto all = verify::small_asets(u);
    auto phi = parse_delta0(u, "exists y in x. y = chk{}");
    std::size_t checked = 0;
    for (std::size_t i = 0; i < all.size(); i += 7) {
        auto& X = all[i];
        auto w = maximizing_witness(X, phi, "x");
        auto ex = eval_delta0(u, Delta0::exists("x", D0Term::of(X), phi), {});
        CHECK(w.value == ex);
        ++checked;
    }
    CHECK(checked > 20);
    // the mixture may exceed every single domain element
    auto& alg = u.algebra();
    auto e = u.empty();
    auto a = u.make({{e, alg.element({0})}});
    auto b = u.make({{e, alg.element({1})}});
    auto X = u.make({{a, alg.element({0})}, {b, alg.element({1})}});
    auto w = maximizing_witness(X, phi, "x");
    CHECK(w.value.is_top());
    CHECK(u.truth(TruthKind::Equality, w.x, singleton(e)).is_top());
}

TEST_CASE("literal syntax")
{
    Universe u(Algebra::make(2));
    auto x = parse_aset(u, "{chk{} -> [0], {chk{} -> top} -> [1]}");
    CHECK(x.size() == 2);
    CHECK(x.at(u.empty()) == u.algebra().element({0}));
    CHECK(parse_aset(u, "chk{{}, {{}}}") == check_embed(u, HfSet::von_neumann(2)));
    CHECK_THROWS_AS(parse_aset(u, "{chk{} -> [5]}"), ParseError);
}

TEST_CASE("rank limit")
{
    Universe u(Algebra::make(1), 2);
    auto s = singleton(singleton(u.empty()));
    CHECK(s.rank() == 2);
    CHECK_THROWS_AS(singleton(s), DomainError);
}
