#include "oracle.hpp"

#include "subsums/structure.hpp"
#include "subsums/sumset.hpp"
#include "subsums/valid.hpp"

#include <doctest.h>

#include <random>

using namespace subsums;

namespace {

GroupSubset set_of(const GroupSpec& g, std::string_view text) { return parse_subset(g, text); }

oracle::ElemSet as_set(const GroupSubset& s) {
    auto v = s.elements();
    return {v.begin(), v.end()};
}

GroupSubset from_vec(const GroupSpec& g, const std::vector<Element>& v) {
    return GroupSubset::from_elements(g, std::span<const Element>(v));
}

std::vector<GroupSpec> groups_up_to(std::uint32_t n) {
    std::vector<GroupSpec> out;
    for (const auto& f : abelian_groups_up_to(n)) out.push_back(make_group(f));
    return out;
}

}  // namespace

TEST_CASE("kneser examples") {
    auto z5 = make_group({5});
    auto r = kneser_check(set_of(z5, "0,1"), set_of(z5, "0,1"));
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 3);
    CHECK(r.period.is_trivial());

    auto z6 = make_group({6});
    r = kneser_check(set_of(z6, "0,2,4"), set_of(z6, "0,2,4"));
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 3);
    CHECK(r.period.order() == 3);

    r = kneser_check(set_of(z6, "0"), GroupSubset::full(z6));
    CHECK(r.lhs == 6);
    CHECK(r.period.order() == 6);
}

TEST_CASE("kneser holds on random pairs") {
    std::mt19937_64 rng(7);
    const auto gs = groups_up_to(60);
    std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
    for (int i = 0; i < 3000; ++i) {
        const auto& g = gs[pick(rng)];
        auto x = from_vec(g, oracle::random_subset(g, rng, g.order()));
        auto y = from_vec(g, oracle::random_subset(g, rng, g.order()));
        if (x.empty() || y.empty()) continue;
        auto r = kneser_check(x, y);
        CHECK(static_cast<std::int64_t>(r.lhs) >= r.rhs);
        CHECK(is_periodic_under(sumset(x, y), r.period));
    }
}

TEST_CASE("arithmetic progression examples") {
    auto z9 = make_group({9});
    auto ap = arithmetic_progression(set_of(z9, "7,8,0,1,2"));
    REQUIRE(ap);
    CHECK(ap->start == 7);
    CHECK(ap->difference == 1);

    auto z7 = make_group({7});
    ap = arithmetic_progression(set_of(z7, "0,1,3,4,6"));
    REQUIRE(ap);
    CHECK(ap->start == 1);
    CHECK(ap->difference == 3);
    CHECK_FALSE(arithmetic_progression(set_of(make_group({8}), "0,1,3")));
    CHECK(arithmetic_progression(set_of(z7, "3,5")));
    CHECK(arithmetic_progression(set_of(z7, "4")));
    CHECK_THROWS_AS(arithmetic_progression(GroupSubset(z7)), std::invalid_argument);
}

TEST_CASE("arithmetic progression agrees with exhaustive search") {
    for (const auto& g : groups_up_to(12)) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
            auto x = GroupSubset::from_mask(g, m);
            auto ap = arithmetic_progression(x);
            REQUIRE(ap.has_value() == oracle::is_progression(g, as_set(x)));
            if (ap) {
                GroupSubset terms(g);
                Element cur = ap->start;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    terms.insert(cur);
                    cur = g.add(cur, ap->difference);
                }
                REQUIRE(terms == x);
            }
        }
    }
}

TEST_CASE("vosper examples") {
    auto z7 = make_group({7});
    CHECK(is_vosper(set_of(z7, "0,1,3,4,6")));
    auto r = vosper_test(set_of(z7, "0,1,2"));
    CHECK_FALSE(r.vosper);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 2);
    CHECK(r.witness->contains(0));
    CHECK(sumset(set_of(z7, "0,1,2"), *r.witness).size() < 5);
    for (std::uint32_t n = 4; n <= 9; ++n) {
        auto g = make_group({n});
        CHECK_FALSE(is_vosper(set_of(g, "1")));
    }
    CHECK_THROWS_AS(vosper_test(GroupSubset::zero(make_group({21}))), std::length_error);
}

TEST_CASE("vosper test agrees with a definition-literal oracle") {
    std::mt19937_64 rng(11);
    for (const auto& g : groups_up_to(12)) {
        const bool all = g.order() <= 8;
        const std::uint64_t total = std::uint64_t{1} << g.order();
        for (std::uint64_t m = 1; m < total; ++m) {
            if (!all && rng() % 40 != 0) continue;
            auto x = GroupSubset::from_mask(g, m);
            auto r = vosper_test(x);
            REQUIRE(r.vosper == oracle::is_vosper(g, as_set(x)));
            if (!r.vosper) {
                const auto need = std::min<std::size_t>(g.order() - 1, x.size() + r.witness->size());
                REQUIRE(sumset(x, *r.witness).size() < need);
            }
        }
    }
}

TEST_CASE("hp representation examples") {
    auto z9 = make_group({9});
    auto hp = hp_representation(set_of(z9, "1,2"));
    CHECK_FALSE(hp.hypotheses_met);
    bool found = false;
    for (const auto& r : hp.representations) {
        if (r.subgroup.is_trivial() && r.kind == RepresentationKind::AP) {
            found = true;
            REQUIRE(r.ap);
            CHECK(r.ap->start == 7);
            CHECK(r.ap->difference == 1);
            CHECK(r.quotient_size == 9);
        }
    }
    CHECK(found);

    auto z7 = make_group({7});
    hp = hp_representation(set_of(z7, "1,3"));
    REQUIRE(hp.representations.size() == 2);
    CHECK(hp.representations[0].kind == RepresentationKind::AP);
    CHECK(hp.representations[1].kind == RepresentationKind::Vosper);
    CHECK(hp.representations[1].subgroup.is_trivial());
    CHECK(format_certificate(set_of(z7, "1,3"), hp.representations[0]) ==
          "group=Z7 set=" + set_of(z7, "1,3").to_hex() + " H=[] kind=AP ap=(1,3) quotient=7");
    CHECK(format_certificate(set_of(z7, "1,3"), hp.representations[1]) ==
          "group=Z7 set=" + set_of(z7, "1,3").to_hex() + " H=[] kind=Vosper quotient=7");

    CHECK_THROWS_AS(hp_representation(set_of(make_group({8}), "2")), std::invalid_argument);
}

TEST_CASE("every generating set with a small hat has a certificate") {
    for (const auto& g : groups_up_to(12)) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
            auto s = GroupSubset::from_mask(g, m);
            if (span(s).order() != g.order()) continue;
            if (2 * hat(s).size() > g.order()) continue;
            auto hp = hp_representation(s);
            REQUIRE(hp.hypotheses_met);
            REQUIRE_FALSE(hp.representations.empty());
            for (const auto& r : hp.representations) REQUIRE(revalidate(s, r));
        }
    }
}

TEST_CASE("faithfulness examples") {
    auto z9 = make_group({9});
    CHECK(is_faithful(set_of(z9, "1,2")));
    CHECK(is_super_faithful(set_of(z9, "1,2")));
    auto z8 = make_group({8});
    CHECK_FALSE(is_faithful(set_of(z8, "2")));
    auto z4 = make_group({4});
    CHECK(is_faithful(set_of(z4, "1")));
}

TEST_CASE("faithfulness matches iterated sumsets") {
    for (const auto& g : groups_up_to(10)) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
            auto s = GroupSubset::from_mask(g, m);
            auto a = hat(s);
            const std::int64_t n = g.order(), k = a.size();
            bool faithful = true, super = true;
            for (std::int64_t j = 1; j <= n; ++j) {
                const std::int64_t size = iterated_sumset(j, a).size();
                if (size < std::min(n, j * (k - 1) + 1)) faithful = false;
                if (size < std::min(n, j * (k + 1) - 1)) super = false;
            }
            REQUIRE(is_faithful(s) == faithful);
            REQUIRE(is_super_faithful(s) == super);
        }
    }
}

TEST_CASE("2-hat periodicity") {
    auto z7 = make_group({7});
    auto s = set_of(z7, "1,3");
    auto r = check_2hat_periodic(s, Subgroup(z7));
    CHECK(r.defining_inequality);
    CHECK(r.periodic);
    CHECK(r.holds());
    CHECK(iterated_sumset(2, hat(s)).is_full());
}

TEST_CASE("2-hat periodicity holds for every vosper representation") {
    for (const auto& g : groups_up_to(12)) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
            auto s = GroupSubset::from_mask(g, m);
            if (span(s).order() != g.order() || 2 * hat(s).size() > g.order()) continue;
            for (const auto& r : hp_representation(s).representations) {
                if (r.kind != RepresentationKind::Vosper) continue;
                REQUIRE(check_2hat_periodic(s, r.subgroup).holds());
            }
        }
    }
}

TEST_CASE("coset layers") {
    auto z6 = make_group({6});
    auto k = Subgroup::from_carrier(set_of(z6, "0,3"));
    auto cl = coset_layers(k, set_of(z6, "1,2,4"));
    REQUIRE(cl.layers.size() == 2);
    const auto& q = cl.quotient;
    CHECK(cl.layers[0] == q.project(set_of(z6, "1,2")));
    CHECK(cl.layers[1] == q.project(set_of(z6, "1")));

    auto trivial = coset_layers(Subgroup(z6), set_of(z6, "1,5"));
    REQUIRE(trivial.layers.size() == 1);
    CHECK(trivial.layers[0].size() == 2);
    CHECK(coset_layers(k, GroupSubset(z6)).layers.empty());
}

TEST_CASE("coset layers reconstruct the set size and keep symmetry") {
    std::mt19937_64 rng(5);
    for (const auto& g : groups_up_to(24)) {
        for (const auto& k : subgroups(g)) {
            for (int i = 0; i < 4; ++i) {
                auto t = from_vec(g, oracle::random_subset(g, rng, g.order()));
                if (i % 2) t |= negate(t);
                auto cl = coset_layers(k, t);
                std::size_t total = 0;
                for (std::size_t j = 0; j < cl.layers.size(); ++j) {
                    total += cl.layers[j].size();
                    if (j) REQUIRE(cl.layers[j].is_subset_of(cl.layers[j - 1]));
                    if (is_symmetric(t)) REQUIRE(is_symmetric(cl.layers[j]));
                }
                REQUIRE(total == t.size());
                if (!cl.layers.empty()) REQUIRE_FALSE(cl.layers.back().empty());
            }
        }
    }
}

TEST_CASE("valid subset examples") {
    auto z13 = make_group({13});
    auto w = large_sigma_subset(set_of(z13, "1,2,3"));
    REQUIRE(w);
    CHECK(*w == set_of(z13, "1,2,3"));
    CHECK(is_valid_subset(set_of(make_group({9}), "1,2")));
    CHECK(is_valid_subset(set_of(make_group({5}), "1")));
    CHECK_THROWS_AS(is_valid_subset(GroupSubset::full(make_group({21}))), std::length_error);
}

TEST_CASE("valid subset agrees with plain enumeration") {
    std::mt19937_64 rng(3);
    for (const auto& g : groups_up_to(20)) {
        for (int i = 0; i < 30; ++i) {
            auto v = oracle::random_subset(g, rng, 8);
            auto s = from_vec(g, v);
            auto w = large_sigma_subset(s);
            REQUIRE(w.has_value() == !oracle::valid(g, s.elements()));
            if (w) {
                REQUIRE(w->is_subset_of(s));
                REQUIRE(2 * sigma(*w).size() > span(*w).order());
            }
        }
    }
}

TEST_CASE("ap case statistics") {
    auto z9 = make_group({9});
    auto st = ap_case_stats(set_of(z9, "1,2"), Subgroup(z9));
    CHECK(st.h == 1);
    CHECK(st.v == 2);
    CHECK(st.t == 0);
    CHECK(st.u == 0);
    CHECK(st.ell == 3);
    CHECK(st.sigma_size == 4);
    CHECK(st.valid);
    CHECK(st.lemma18_asserted);
    CHECK(st.lemma18);
    CHECK(st.holds());
}

TEST_CASE("ap case claims hold for valid sets") {
    std::size_t asserted = 0;
    for (const auto& g : groups_up_to(14)) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
            auto s = GroupSubset::from_mask(g, m);
            if (s.contains(0) || !is_asymmetric(s) || span(s).order() != g.order()) continue;
            if (2 * hat(s).size() > g.order()) continue;
            for (const auto& r : hp_representation(s).representations) {
                if (r.kind != RepresentationKind::AP) continue;
                if (hat(Quotient(g, r.subgroup).project(s)).size() % 2 == 0) continue;
                auto st = ap_case_stats(s, r.subgroup);
                REQUIRE(static_cast<std::int64_t>(s.size()) ==
                        static_cast<std::int64_t>(st.v) * st.h + st.t - st.u);
                REQUIRE(st.normalized.size() == s.size());
                REQUIRE(sigma(st.normalized).size() == sigma(s).size());
                if (st.claims_asserted) ++asserted;
                REQUIRE(st.holds());
            }
        }
    }
    CHECK(asserted > 0);
}
