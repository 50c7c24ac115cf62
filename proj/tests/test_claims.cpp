#include "oracle.hpp"

#include "subsums/claims.hpp"
#include "subsums/structure.hpp"
#include "subsums/sumset.hpp"

#include <doctest.h>

#include <random>

using namespace subsums;

namespace {

GroupSubset set_of(const GroupSpec& g, std::string_view text) { return parse_subset(g, text); }

std::vector<GroupSpec> groups_up_to(std::uint32_t n) {
    std::vector<GroupSpec> out;
    for (const auto& f : abelian_groups_up_to(n)) out.push_back(make_group(f));
    return out;
}

template <class F>
void for_each_subset(const GroupSpec& g, F&& f) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) f(GroupSubset::from_mask(g, m));
}

}  // namespace

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(7)) == "7/1");
    CHECK(format_rational(Rational(-2, 4)) == "-1/2");
    CHECK(parse_rational("13/2") == Rational(13, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("claim names round-trip") {
    for (auto c : kAllClaims) {
        CHECK(parse_claim(to_string(c)) == c);
        CHECK_FALSE(claim_anchor(c).empty());
    }
    CHECK(parse_claim("conjecture") == ClaimId::CONJECTURE);
    CHECK_THROWS_AS(parse_claim("THEOREM_99"), std::invalid_argument);
}

TEST_CASE("xi examples") {
    CHECK(xi(set_of(make_group({13}), "1,2,3")) == 1);
    CHECK(xi(set_of(make_group({29}), "1,2,3,4,5")) == 0);
    CHECK(xi(set_of(make_group({29}), "1,2,3,4")) == 1);
    CHECK_THROWS_AS(xi(GroupSubset(make_group({5}))), std::invalid_argument);

    auto z13 = make_group({13});
    auto sym = set_of(z13, "1,2,3,10,11,12");
    CHECK(xi_prime(sym) == 1);
    CHECK(xi_prime_displayed(sym) == 1);
    CHECK(xi(set_of(z13, "1,11,3")) == xi(set_of(z13, "12,2,10")));
    auto z29 = make_group({29});
    auto sym29 = set_of(z29, "1,2,3,4,5,24,25,26,27,28");
    CHECK(xi_prime_displayed(sym29) == 0);
    CHECK(xi_prime(sym29) == 0);
    CHECK_THROWS_AS(xi_prime(set_of(z13, "1,2")), std::invalid_argument);
    CHECK_THROWS_AS(xi_prime(set_of(make_group({6}), "1,3,5")), std::invalid_argument);
}

TEST_CASE("displayed xi prime agrees with xi of a half when the half has odd size") {
    for (std::uint32_t n : {13u, 17u, 21u, 25u, 29u, 31u}) {
        auto g = make_group({n});
        for (std::uint32_t k = 1; k < n / 2; ++k) {
            GroupSubset s(g);
            for (Element e = 1; e <= k; ++e) {
                s.insert(e);
                s.insert(g.neg(e));
            }
            if (k % 2 == 1) CHECK(xi_prime(s) == xi_prime_displayed(s));
            if (k % 2 == 0) CHECK(xi_prime(s) == 1);
        }
    }
}

TEST_CASE("bound values") {
    auto z13 = make_group({13});
    CHECK(bound_value(ClaimId::CONJECTURE, set_of(z13, "1,2,3,4")) == Rational(7));
    CHECK(bound_value(ClaimId::SYM_T4_ODD, set_of(z13, "1,2,3,10,11,12")) == Rational(13));
    CHECK(bound_value(ClaimId::MAIN_T2, set_of(z13, "1,2")) == Rational(4));
    CHECK(bound_value(ClaimId::DEVOS_T3, set_of(z13, "1,2,3")) == Rational(9, 64));
    CHECK(bound_value(ClaimId::SYM_T4, set_of(z13, "1,12,2,11,3")) == Rational(35, 4));
    CHECK_THROWS_AS(bound_value(ClaimId::LEMMA_19, set_of(z13, "1")), std::invalid_argument);
    for (auto c : kAllClaims) {
        if (!has_closed_form(c)) CHECK_THROWS(bound_value(c, set_of(z13, "1,2")));
    }
}

TEST_CASE("claim check examples") {
    auto z13 = make_group({13});
    auto r = check(ClaimId::MAIN_T2, set_of(z13, "1,2,3"));
    CHECK(r.hypotheses_met);
    CHECK(r.holds);
    CHECK(r.branch == "(i')+(ii)");
    CHECK(r.lhs == 7);
    CHECK(*r.rhs == Rational(7));
    CHECK(*r.slack == Rational(0));
    REQUIRE(r.witness);
    CHECK(*r.witness == set_of(z13, "1,2,3"));

    // Σ(S) = Z13 is periodic, so the comparison is reported without being asserted
    r = check(ClaimId::SYM_T4_ODD, set_of(z13, "1,2,3,10,11,12"));
    CHECK_FALSE(r.hypotheses_met);
    CHECK(r.holds);
    CHECK(r.lhs == 13);
    CHECK(*r.rhs == Rational(13));
    CHECK(*r.slack == Rational(0));

    auto z9 = make_group({9});
    r = check(ClaimId::CONJECTURE, set_of(z9, "1,2,7,8"));
    CHECK(r.hypotheses_met);
    CHECK(r.lhs == 7);
    CHECK(*r.slack == Rational(0));

    r = check(ClaimId::LEMMA_18, set_of(z9, "1,2"));
    CHECK(r.hypotheses_met);
    CHECK(r.lhs == 4);
    CHECK(*r.rhs == Rational(2));

    r = check(ClaimId::MAIN_T2, set_of(z13, "1,12"));
    CHECK_FALSE(r.hypotheses_met);
    CHECK(r.holds);
    CHECK(r.note == "needs S ∩ (−S) = ∅");

    r = check(ClaimId::LEMMA_19, set_of(z13, "1,2,3"), ClaimAux{.set_b = set_of(z13, "0,1")});
    CHECK(r.hypotheses_met == false);
    CHECK_FALSE(r.rhs);
}

TEST_CASE("aux inputs are required where the claim needs them") {
    auto z7 = make_group({7});
    CHECK_THROWS_AS(check(ClaimId::KWEDGE_T11, set_of(z7, "1,2")), std::invalid_argument);
    CHECK_THROWS_AS(check(ClaimId::LEMMA_14, set_of(z7, "1,2")), std::invalid_argument);
    ClaimAux aux;
    aux.set_b = set_of(make_group({5}), "1");
    CHECK_THROWS_AS(check(ClaimId::KNESER, set_of(z7, "1"), aux), std::invalid_argument);
}

TEST_CASE("critical numbers") {
    CHECK(critical_number(make_group({3})).value == 2);
    CHECK(critical_number(make_group({5})).value == 3);
    CHECK(critical_number(make_group({7})).value == 4);
    auto t = critical_number(make_group({1}));
    CHECK(t.value == 0);
    CHECK(t.trivial_convention);
    CHECK_THROWS_AS(critical_number(make_group({17})), std::length_error);
    for (const auto& g : groups_up_to(13)) {
        if (g.order() < 2) continue;
        CHECK(critical_number(g).value == oracle::critical_number(g));
    }
}

TEST_CASE("theorem 1 on small prime cyclic groups") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        for_each_subset(make_group({p}), [](const GroupSubset& s) {
            auto r = check(ClaimId::OLSON_T1, s);
            if (!r.hypotheses_met) return;
            REQUIRE(r.holds);
        });
    }
}

TEST_CASE("theorem 2 on groups of order at most 14") {
    for (const auto& g : groups_up_to(14)) {
        for_each_subset(g, [&](const GroupSubset& s) {
            for (auto c : {ClaimId::MAIN_T2, ClaimId::MAIN_T2_ODD}) {
                auto r = check(c, s);
                if (!r.hypotheses_met) continue;
                REQUIRE(r.holds);
                if (r.witness) REQUIRE(2 * sigma(*r.witness).size() > span(*r.witness).order());
            }
        });
    }
}

TEST_CASE("symmetric and periodic bounds on groups of order at most 16") {
    for (const auto& g : groups_up_to(16)) {
        for_each_subset(g, [&](const GroupSubset& s) {
            if (!is_symmetric(s)) return;
            for (auto c : {ClaimId::SYM_T4, ClaimId::SYM_T4_ODD, ClaimId::PERIODIC_T5,
                           ClaimId::CONJECTURE, ClaimId::DEVOS_T3}) {
                auto r = check(c, s);
                if (!r.hypotheses_met) continue;
                REQUIRE(*r.slack == Rational(r.lhs) - *r.rhs);
                REQUIRE(r.holds);
            }
        });
    }
}

TEST_CASE("lemmas on subset sums of asymmetric sets") {
    for (const auto& g : groups_up_to(16)) {
        for_each_subset(g, [&](const GroupSubset& s) {
            for (auto c : {ClaimId::LEMMA_2S, ClaimId::LEMMA_2S1, ClaimId::LEMMA_13}) {
                auto r = check(c, s);
                if (r.hypotheses_met) REQUIRE(r.holds);
            }
        });
    }
}

TEST_CASE("the 2|S|+1 bound fails for a non-generating set") {
    auto g = make_group({3, 6});
    auto s = set_of(g, "(0,2),(1,0),(1,2),(1,4)");
    REQUIRE(span(s).order() == 9);
    auto r = check(ClaimId::LEMMA_2S1, s);
    CHECK(r.hypotheses_met);
    CHECK(r.lhs == 8);
    CHECK(*r.rhs == Rational(9));
    CHECK_FALSE(r.holds);
    CHECK(check(ClaimId::LEMMA_2S, s).holds);
}

TEST_CASE("restricted sums") {
    for (const auto& g : groups_up_to(12)) {
        for_each_subset(g, [&](const GroupSubset& a) {
            for (std::uint32_t k = 1; k + 1 <= a.size(); ++k) {
                ClaimAux aux;
                aux.k = k;
                auto r = check(ClaimId::KWEDGE_T11, a, aux);
                REQUIRE(r.hypotheses_met);
                REQUIRE(r.holds);
            }
        });
    }
    auto v4 = make_group({2, 2});
    ClaimAux aux;
    aux.k = 2;
    auto r = check(ClaimId::KWEDGE_T11, GroupSubset::full(v4), aux);
    CHECK(r.branch == "2-coset");
    CHECK(r.lhs == 3);
    CHECK(r.holds);
    auto z8 = make_group({8});
    aux.subgroup = span(set_of(z8, "2"));
    r = check(ClaimId::KWEDGE_T11, set_of(z8, "1,3,5"), aux);
    CHECK(r.hypotheses_met);
    CHECK(r.branch == "coset");
    CHECK(r.holds);
}

TEST_CASE("lambda lemmas on random inputs") {
    std::mt19937_64 rng(17);
    for (const auto& g : groups_up_to(16)) {
        for (int i = 0; i < 60; ++i) {
            auto sv = oracle::random_subset(g, rng, g.order());
            auto bv = oracle::random_subset(g, rng, g.order() / 2);
            auto s = GroupSubset::from_elements(g, std::span<const Element>(sv));
            ClaimAux aux;
            aux.set_b = GroupSubset::from_elements(g, std::span<const Element>(bv));
            for (auto c : {ClaimId::LEMMA_12, ClaimId::LEMMA_14, ClaimId::KNESER, ClaimId::PREHISTORIC}) {
                auto r = check(c, s, aux);
                if (r.hypotheses_met) REQUIRE(r.holds);
            }
            if (s.size() <= 10) {
                auto r = check(ClaimId::OBS_APERIODIC, s);
                REQUIRE(r.holds);
            }
        }
    }
}

TEST_CASE("lemma 18 over every AP representation") {
    for (const auto& g : groups_up_to(14)) {
        for_each_subset(g, [&](const GroupSubset& s) {
            auto r = check(ClaimId::LEMMA_18, s);
            if (r.hypotheses_met) REQUIRE(r.holds);
        });
    }
}

TEST_CASE("lemma 20 on super faithful sets") {
    std::mt19937_64 rng(23);
    for (const auto& g : groups_up_to(15)) {
        if (g.order() % 2 == 0) continue;
        for_each_subset(g, [&](const GroupSubset& s) {
            if (s.size() < 3 || !is_super_faithful(s)) return;
            for (int i = 0; i < 3; ++i) {
                auto bv = oracle::random_subset(g, rng, g.order() / 2);
                ClaimAux aux;
                aux.set_b = GroupSubset::from_elements(g, std::span<const Element>(bv));
                auto r = check(ClaimId::LEMMA_20, s, aux);
                if (r.hypotheses_met) REQUIRE(r.holds);
            }
        });
    }
}

TEST_CASE("hp theorem reports revalidated certificates") {
    for (const auto& g : groups_up_to(10)) {
        for_each_subset(g, [&](const GroupSubset& s) {
            auto r = check(ClaimId::HP_T10, s);
            if (r.hypotheses_met) REQUIRE(r.holds);
        });
    }
}
