#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "zdchroma/constructions.hpp"
#include "zdchroma/solvers.hpp"

using namespace zdchroma;

namespace {

uint64_t upow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

} // namespace

TEST_CASE("local clique of Z16") {
    auto d = maximal_clique_zpr(2, 4);
    CHECK(d.clique_members == std::vector<uint64_t>{0, 4, 8, 12});
    CHECK(d.square_zero_members == d.clique_members);
    CHECK(d.s == 4);
    CHECK(d.n == 4);
}

TEST_CASE("local clique of Z8") {
    auto d = maximal_clique_zpr(2, 3);
    CHECK(d.clique_members == std::vector<uint64_t>{0, 2, 4});
    CHECK(d.square_zero_members == std::vector<uint64_t>{0, 4});
    CHECK(d.s == 3);
    CHECK(d.n == 2);
}

TEST_CASE("local clique of a prime field includes the unit") {
    // a maximal clique of the star gamma0(F) is {0, x}; the closed forms
    // (p^{(r-1)/2}+1 at r=1) and the k+1 product rule all need s = 2
    auto d = maximal_clique_zpr(5, 1);
    CHECK(d.clique_members == std::vector<uint64_t>{0, 1});
    CHECK(d.s == 2);
    CHECK(d.n == 1);
    auto gf = factor_clique_plan(FactorSpec::field(2, 2));
    CHECK(gf.clique_members == std::vector<uint64_t>{0, 1});
}

TEST_CASE("local clique sizes follow the closed form") {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        for (uint32_t r = 1; r <= 5; ++r) {
            if (upow(p, r) > 2401) break;
            auto d = maximal_clique_zpr(p, r);
            if (r % 2 == 0) {
                CHECK(d.s == upow(p, r / 2));
                CHECK(d.n == d.s);
            } else {
                CHECK(d.n == upow(p, (r - 1) / 2));
                CHECK(d.s == d.n + 1);
            }
            CHECK(d.s - d.n == (r % 2));   // square-nonzero count: 0 even, 1 odd
        }
    }
}

TEST_CASE("hypothesis check passes for the default plans") {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        for (uint32_t r = 1; r <= 5; ++r) {
            uint64_t q = upow(p, r);
            if (q > 2401) break;
            RingSpec spec({FactorSpec::local(p, r)}, q);
            auto rep = check_theorem1_hypotheses(spec, default_plans(spec));
            CHECK(rep.pass);
        }
    }
    RingSpec gf({FactorSpec::field(3, 2)});
    CHECK(check_theorem1_hypotheses(gf, default_plans(gf)).pass);
}

TEST_CASE("hypothesis check flags a bad plan") {
    RingSpec z4 = decompose_zn(4);
    LocalCliqueData bad;
    bad.factor = z4.factors()[0];
    bad.clique_members = {0};
    bad.square_zero_members = {0};
    bad.s = bad.n = 1;
    auto rep = check_theorem1_hypotheses(z4, {bad});
    CHECK(!rep.pass);
    bool square_issue = false;
    for (const auto& issue : rep.issues)
        if (issue.condition == "outside_square" && issue.a == 2) square_issue = true;
    CHECK(square_issue);
    CHECK_THROWS_AS(theorem1_coloring(z4, {bad}), RingError);
}

TEST_CASE("product coloring of Z8 x Z16 certifies 9") {
    RingSpec spec({FactorSpec::local(2, 3), FactorSpec::local(2, 4)});
    Graph g0 = build_gamma0(spec);
    auto cert = theorem1_coloring(spec, default_plans(spec), g0);
    CHECK(cert.value == 9);
    CHECK(cert.clique.count() == 9);
    CHECK(cert.coloring.color_count == 9);
    CHECK(check(g0, cert.clique, SetMode::clique));
    CHECK(verify_coloring(g0, cert.coloring));
}

TEST_CASE("product coloring cross-checked by the solver") {
    RingSpec spec({FactorSpec::local(2, 2), FactorSpec::local(3, 2)});
    Graph g0 = build_gamma0(spec);
    auto cert = theorem1_coloring(spec, default_plans(spec), g0);
    CHECK(cert.value == 6);
    CHECK(max_clique(g0).omega == 6);
    CHECK(chromatic_number(g0).chi == 6);
}

TEST_CASE("single-factor coloring of Z27") {
    RingSpec spec({FactorSpec::local(3, 3)});
    auto cert = theorem1_coloring(spec, default_plans(spec));
    CHECK(cert.value == 4);
}

TEST_CASE("field products certify k+1") {
    RingSpec spec({FactorSpec::field(2, 1), FactorSpec::field(3, 1), FactorSpec::field(2, 2)});
    Graph g0 = build_gamma0(spec);
    auto cert = theorem1_coloring(spec, default_plans(spec), g0);
    CHECK(cert.value == 4);
    CHECK(chromatic_number(g0).chi == 4);
}

TEST_CASE("closed form for gamma0") {
    CHECK(formula_chi_gamma0({{2, 3}, {2, 4}}, 0) == 9);
    CHECK(formula_chi_gamma0({{2, 2}, {3, 2}}, 0) == 6);
    CHECK(formula_chi_gamma0({}, 3) == 4);   // empty product, three domains
    CHECK(formula_chi_gamma0({{3, 3}}, 2) == 6);
    RingSpec mixed({FactorSpec::local(2, 3), FactorSpec::field(2, 2)});
    CHECK(formula_chi_gamma0(mixed) == 2 + 1 + 1);
}

TEST_CASE("complement class union of Z_{p^r}") {
    auto d24 = complement_clique_zpr(2, 4);
    CHECK(d24.size == 4);
    CHECK(d24.members == std::vector<uint64_t>{2, 6, 10, 14});

    auto d33 = complement_clique_zpr(3, 3);
    CHECK(d33.size == 6);

    auto d23 = complement_clique_zpr(2, 3);
    CHECK(d23.size == 2);
    CHECK(d23.members == std::vector<uint64_t>{2, 6});

    CHECK_THROWS_AS(complement_clique_zpr(2, 2), RingError);
    CHECK(formula_complement_zpr(2, 4) == 4);
    CHECK(formula_complement_zpr(3, 3) == 6);
}

TEST_CASE("class union sizes hold across the whole small-prime range") {
    // construction self-checks size, independence, and the reuse bound
    for (uint32_t p : {2u, 3u, 5u, 7u})
        for (uint32_t r = 3; r <= 5; ++r) {
            if (upow(p, r) > 2401) break;
            auto d = complement_clique_zpr(p, r);
            CHECK(d.size == formula_complement_zpr(p, r));
        }
}

TEST_CASE("square local ring: complement is edgeless, convention gives 1") {
    RingSpec z4({FactorSpec::local(2, 2)});
    Graph comp = complement(build_gamma(z4));
    REQUIRE(comp.size() == 1);
    CHECK(max_clique(comp).omega == 1);
    CHECK(chromatic_number(comp).chi == 1);
    auto cert = theorem2_construction(z4, comp);
    CHECK(cert.value == 1);
}

TEST_CASE("class union matches the exact independence number of gamma(Z8)") {
    RingSpec spec({FactorSpec::local(2, 3)});
    Graph comp = complement(build_gamma(spec));
    auto d = complement_clique_zpr(2, 3);
    VertexSet s = vertex_set_from_labels(comp, d.members);
    CHECK(check(comp, s, SetMode::clique));
    CHECK(max_clique(comp).omega == d.size);
}

TEST_CASE("even exponent: one midpoint vertex extends the class union") {
    // the class union is a maximum clique only for odd exponents; for even
    // exponents the complement's true invariants sit one above the closed
    // form, witnessed here by the solver and by the tuple construction
    RingSpec z16({FactorSpec::local(2, 4)});
    Graph comp16 = complement(build_gamma(z16));
    CHECK(formula_complement_zpr(2, 4) == 4);
    CHECK(max_clique(comp16).omega == 5);
    CHECK(chromatic_number(comp16).chi == 5);
    auto cert16 = theorem2_construction(z16, comp16);
    CHECK(cert16.value == 5);

    RingSpec z32({FactorSpec::local(2, 5)});
    Graph comp32 = complement(build_gamma(z32));
    CHECK(formula_complement_zpr(2, 5) == 12);
    CHECK(max_clique(comp32).omega == 12);
    auto cert32 = theorem2_construction(z32, comp32);
    CHECK(cert32.value == 12);
}

TEST_CASE("tuple construction on Z8 x Z16 certifies 76") {
    RingSpec spec({FactorSpec::local(2, 3), FactorSpec::local(2, 4)});
    Graph comp = complement(build_gamma(spec));
    REQUIRE(comp.size() == 95);
    auto cert = theorem2_construction(spec, comp);
    CHECK(cert.value == 76);
    CHECK(cert.clique.count() == 76);
    CHECK(check(comp, cert.clique, SetMode::clique));
    CHECK(verify_coloring(comp, cert.coloring));
}

TEST_CASE("tuple construction on small products matches the solver") {
    for (auto factors : std::vector<std::vector<FactorSpec>>{
             {FactorSpec::local(2, 1), FactorSpec::local(3, 1)},
             {FactorSpec::local(2, 2), FactorSpec::local(2, 2)},
             {FactorSpec::local(3, 2), FactorSpec::local(2, 3)},
             {FactorSpec::field(2, 1), FactorSpec::field(2, 2)},
             {FactorSpec::field(2, 2), FactorSpec::field(3, 2)},
             {FactorSpec::local(2, 2), FactorSpec::local(3, 1), FactorSpec::local(5, 1)}}) {
        RingSpec spec(factors);
        Graph comp = complement(build_gamma(spec));
        auto cert = theorem2_construction(spec, comp);
        CHECK(cert.value == max_clique(comp).omega);
        CHECK(cert.value == static_cast<uint64_t>(chromatic_number(comp).chi));
    }
}

TEST_CASE("all-even product picks a center vertex") {
    RingSpec spec({FactorSpec::local(2, 2), FactorSpec::local(2, 2)});
    auto plan = theorem2_plan(spec);
    REQUIRE(plan.center.has_value());
    CHECK(*plan.center == std::vector<uint32_t>{1, 1});
    Graph comp = complement(build_gamma(spec));
    auto cert = theorem2_construction(spec, comp);
    CHECK(cert.value == plan.clique_size);
    CHECK(cert.value == max_clique(comp).omega);
}

TEST_CASE("tuple plan partitions the index set") {
    for (auto factors : std::vector<std::vector<FactorSpec>>{
             {FactorSpec::local(2, 3), FactorSpec::local(2, 4)},
             {FactorSpec::local(2, 2), FactorSpec::local(2, 2)},
             {FactorSpec::local(3, 1), FactorSpec::local(5, 2)},
             {FactorSpec::field(2, 2), FactorSpec::local(2, 2)}}) {
        RingSpec spec(factors);
        auto plan = theorem2_plan(spec);
        std::set<std::vector<uint32_t>> all(plan.tuples.begin(), plan.tuples.end());
        std::set<std::vector<uint32_t>> covered;
        for (const auto& t : plan.t0) {
            CHECK(covered.insert(t).second);
            std::vector<uint32_t> dual(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) dual[i] = plan.lengths[i] - t[i];
            CHECK(covered.insert(dual).second);   // involution, no overlap
        }
        if (plan.center) CHECK(covered.insert(*plan.center).second);
        CHECK(covered == all);
    }
}

TEST_CASE("composition rule") {
    auto c = product_composition(2, 2, true);
    CHECK(c.value == 3);
    CHECK(c.exact);
    auto b = product_composition(4, 3, false);
    CHECK(b.value == 6);
    CHECK(!b.exact);
    CHECK_THROWS_AS(product_composition(0, 2, true), RingError);
}

TEST_CASE("composition against the solver") {
    // reduced second factor: equality
    RingSpec z4 = decompose_zn(4);
    RingSpec f5({FactorSpec::field(5, 1)});
    RingSpec both({FactorSpec::local(2, 2), FactorSpec::field(5, 1)});
    auto chi1 = chromatic_number(build_gamma0(z4)).chi;
    auto chi2 = chromatic_number(build_gamma0(f5)).chi;
    auto chip = chromatic_number(build_gamma0(both)).chi;
    CHECK(product_composition(chi1, chi2, f5.is_reduced()).value ==
          static_cast<uint64_t>(chip));
    auto om1 = max_clique(build_gamma0(z4)).omega;
    auto om2 = max_clique(build_gamma0(f5)).omega;
    auto omp = max_clique(build_gamma0(both)).omega;
    CHECK(product_composition(om1, om2, true).value == omp);

    // reduced composite second factor also composes exactly
    RingSpec z6 = decompose_zn(6);
    RingSpec prod({FactorSpec::local(2, 2), FactorSpec::local(2, 1), FactorSpec::local(3, 1)});
    auto chi6 = chromatic_number(build_gamma0(z6)).chi;
    auto chi46 = chromatic_number(build_gamma0(prod)).chi;
    CHECK(product_composition(chi1, chi6, z6.is_reduced()).value ==
          static_cast<uint64_t>(chi46));

    // non-reduced second factor: lower bound only
    RingSpec z8 = decompose_zn(8);
    RingSpec z4z8({FactorSpec::local(2, 2), FactorSpec::local(2, 3)});
    auto chi8 = chromatic_number(build_gamma0(z8)).chi;
    auto chi48 = chromatic_number(build_gamma0(z4z8)).chi;
    CHECK(static_cast<uint64_t>(chi48) >= product_composition(chi1, chi8, false).value);
}
