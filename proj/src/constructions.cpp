#include "zdchroma/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace zdchroma {

namespace {

uint64_t upow(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

bool contains_sorted(const std::vector<uint64_t>& v, uint64_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return it != v.end() && *it == x;
}

} // namespace

LocalCliqueData factor_clique_plan(const FactorSpec& f) {
    LocalCliqueData d;
    d.factor = f;
    if (f.kind == FactorSpec::Kind::galois_field || f.exponent == 1) {
        d.clique_members = {0, 1};
        d.square_zero_members = {0};
    } else {
        const uint32_t r = f.exponent;
        const uint64_t step = upow(f.p, (r + 1) / 2);
        for (uint64_t m = 0; m * step < f.order; ++m)
            d.square_zero_members.push_back(m * step);
        d.clique_members = d.square_zero_members;
        if (r % 2 == 1) {
            d.clique_members.push_back(upow(f.p, (r - 1) / 2));
            std::sort(d.clique_members.begin(), d.clique_members.end());
        }
    }
    d.s = d.clique_members.size();
    d.n = d.square_zero_members.size();

    for (std::size_t i = 0; i < d.clique_members.size(); ++i)
        for (std::size_t j = i + 1; j < d.clique_members.size(); ++j)
            if (f.mul(d.clique_members[i], d.clique_members[j]) != 0)
                throw std::logic_error("factor clique is not a clique");
    for (uint64_t v = 0; v < f.order; ++v) {
        if (contains_sorted(d.clique_members, v)) continue;
        bool misses_someone = false;
        for (uint64_t u : d.clique_members)
            if (f.mul(u, v) != 0) { misses_someone = true; break; }
        if (!misses_someone)
            throw std::logic_error("factor clique is not maximal");
    }
    return d;
}

LocalCliqueData maximal_clique_zpr(uint32_t p, uint32_t r) {
    return factor_clique_plan(FactorSpec::local(p, r));
}

std::vector<LocalCliqueData> default_plans(const RingSpec& spec) {
    std::vector<LocalCliqueData> plans;
    plans.reserve(spec.factor_count());
    for (const auto& f : spec.factors()) plans.push_back(factor_clique_plan(f));
    return plans;
}

HypothesisReport check_theorem1_hypotheses(const RingSpec& spec,
                                           const std::vector<LocalCliqueData>& plans) {
    if (plans.size() != spec.factor_count())
        throw RingError(ErrorCode::invalid_input, "one clique plan per factor required");
    HypothesisReport rep;
    auto flag = [&](std::size_t fi, const char* cond, uint64_t a, uint64_t b) {
        rep.pass = false;
        rep.issues.push_back({fi, cond, a, b});
    };
    for (std::size_t fi = 0; fi < plans.size(); ++fi) {
        const FactorSpec& f = spec.factors()[fi];
        const auto& S = plans[fi].clique_members;

        bool hit = false;
        for (std::size_t i = 0; i < S.size() && !hit; ++i)
            for (std::size_t j = i + 1; j < S.size() && !hit; ++j)
                if (f.mul(S[i], S[j]) != 0) { flag(fi, "clique", S[i], S[j]); hit = true; }

        // outside elements: a unit never contributes a zero product, so
        // only non-units matter for both (i)-maximality and (ii)
        std::vector<uint64_t> outside_zd;
        hit = false;
        for (uint64_t v = 0; v < f.order; ++v) {
            if (contains_sorted(S, v)) continue;
            if (f.is_unit(v)) continue;
            outside_zd.push_back(v);
            if (!hit) {
                bool misses_someone = false;
                for (uint64_t u : S)
                    if (f.mul(u, v) != 0) { misses_someone = true; break; }
                if (!misses_someone) { flag(fi, "maximal", v, v); hit = true; }
            }
        }

        hit = false;
        for (uint64_t a : outside_zd)
            if (f.mul(a, a) == 0) { flag(fi, "outside_square", a, a); hit = true; break; }
        hit = false;
        for (std::size_t i = 0; i < outside_zd.size() && !hit; ++i)
            for (std::size_t j = i + 1; j < outside_zd.size() && !hit; ++j)
                if (f.mul(outside_zd[i], outside_zd[j]) == 0) {
                    flag(fi, "outside_product", outside_zd[i], outside_zd[j]);
                    hit = true;
                }
    }
    return rep;
}

namespace {

struct Theorem1Layout {
    std::vector<uint64_t> strides;           // canonical stride per factor
    std::vector<uint64_t> clique_indices;    // sorted canonical indices of N u A
    std::unordered_map<uint64_t, int> color_of;
};

} // namespace

Certificate theorem1_coloring(const RingSpec& spec,
                              const std::vector<LocalCliqueData>& plans,
                              const Graph& gamma0) {
    auto rep = check_theorem1_hypotheses(spec, plans);
    if (!rep.pass)
        throw RingError(ErrorCode::invalid_input,
                        "theorem1_coloring: clique plans violate the hypotheses");
    if (gamma0.size() != spec.order())
        throw RingError(ErrorCode::invalid_input, "theorem1_coloring: graph is not gamma0");

    const std::size_t k = spec.factor_count();
    Theorem1Layout lay;
    lay.strides.assign(k, 1);
    for (std::size_t i = k - 1; i-- > 0;)
        lay.strides[i] = lay.strides[i + 1] * spec.factors()[i + 1].order;

    std::vector<uint64_t> pick_nonzero(k);   // b_i, smallest nonzero member of S_i
    for (std::size_t i = 0; i < k; ++i) {
        const auto& S = plans[i].clique_members;
        auto it = std::find_if(S.begin(), S.end(), [](uint64_t u) { return u != 0; });
        if (it == S.end())
            throw RingError(ErrorCode::invalid_input,
                            "theorem1_coloring: plan needs a nonzero clique member");
        pick_nonzero[i] = *it;
    }

    // clique = (N_1 x ... x N_k)  u  one-hot vectors of each S_i \ N_i
    {
        std::vector<std::size_t> odo(k, 0);
        while (true) {
            uint64_t idx = 0;
            for (std::size_t i = 0; i < k; ++i)
                idx += plans[i].square_zero_members[odo[i]] * lay.strides[i];
            lay.clique_indices.push_back(idx);
            std::size_t i = k;
            while (i > 0 && ++odo[i - 1] == plans[i - 1].square_zero_members.size())
                odo[--i] = 0;
            if (i == 0) break;
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (uint64_t a : plans[i].clique_members)
            if (!contains_sorted(plans[i].square_zero_members, a))
                lay.clique_indices.push_back(a * lay.strides[i]);
    std::sort(lay.clique_indices.begin(), lay.clique_indices.end());
    for (std::size_t c = 0; c < lay.clique_indices.size(); ++c)
        lay.color_of.emplace(lay.clique_indices[c], static_cast<int>(c));

    uint64_t expected = 1;
    for (const auto& p : plans) expected *= p.n;
    for (const auto& p : plans) expected += p.s - p.n;
    if (expected != lay.clique_indices.size())
        throw std::logic_error("theorem1_coloring: clique size mismatch");

    // memoized choice of a clique member compatible with an outside
    // zero-divisor component (smallest such, for reproducibility)
    std::vector<std::unordered_map<uint64_t, uint64_t>> compat(k);
    auto compatible_member = [&](std::size_t i, uint64_t c) {
        auto& memo = compat[i];
        auto it = memo.find(c);
        if (it != memo.end()) return it->second;
        const FactorSpec& f = spec.factors()[i];
        for (uint64_t u : plans[i].clique_members)
            if (f.mul(u, c) != 0) { memo.emplace(c, u); return u; }
        throw std::logic_error("theorem1_coloring: no compatible clique member");
    };

    Certificate cert;
    cert.clique = Bitset(gamma0.size());
    for (uint64_t idx : lay.clique_indices) cert.clique.set(static_cast<std::size_t>(idx));
    cert.coloring.assignment.assign(gamma0.size(), -1);
    cert.coloring.color_count = static_cast<int>(lay.clique_indices.size());
    cert.value = lay.clique_indices.size();

    for (uint64_t v = 0; v < spec.order(); ++v) {
        RingElement e = spec.element_of_index(v);
        std::size_t first_not_sq = k, first_not_clique = k, first_unit = k;
        for (std::size_t i = 0; i < k; ++i) {
            uint64_t c = e.comps[i];
            bool in_S = contains_sorted(plans[i].clique_members, c);
            bool in_N = in_S && contains_sorted(plans[i].square_zero_members, c);
            if (!in_N && first_not_sq == k) first_not_sq = i;
            if (!in_S && first_not_clique == k) first_not_clique = i;
            if (spec.factors()[i].is_unit(c) && first_unit == k) first_unit = i;
        }
        uint64_t target;
        if (first_not_clique == k) {
            // inside the product clique S_1 x ... x S_k
            target = (first_not_sq == k) ? v
                                         : e.comps[first_not_sq] * lay.strides[first_not_sq];
        } else if (first_unit == k) {
            // all components are zero-divisors but some leaves its S_i
            std::size_t i = first_not_clique;
            target = compatible_member(i, e.comps[i]) * lay.strides[i];
        } else {
            std::size_t i = first_unit;
            target = pick_nonzero[i] * lay.strides[i];
        }
        cert.coloring.assignment[static_cast<std::size_t>(v)] = lay.color_of.at(target);
    }

    if (!check(gamma0, cert.clique, SetMode::clique))
        throw std::logic_error("theorem1_coloring: clique failed verification");
    if (!verify_coloring(gamma0, cert.coloring))
        throw std::logic_error("theorem1_coloring: coloring failed verification");
    return cert;
}

Certificate theorem1_coloring(const RingSpec& spec,
                              const std::vector<LocalCliqueData>& plans) {
    Graph g = build_gamma0(spec, spec.order());
    return theorem1_coloring(spec, plans, g);
}

uint64_t formula_chi_gamma0(const std::vector<std::pair<uint32_t, uint32_t>>& prime_powers,
                            uint64_t n_domains) {
    uint64_t prod = 1, odd = 0;
    for (auto [p, r] : prime_powers) {
        if (!is_prime(p))
            throw RingError(ErrorCode::invalid_input, "formula_chi_gamma0: p must be prime");
        if (r < 1)
            throw RingError(ErrorCode::invalid_input, "formula_chi_gamma0: r must be >= 1");
        prod *= upow(p, r / 2);
        if (r % 2) ++odd;
    }
    return prod + odd + n_domains;
}

uint64_t formula_chi_gamma0(const RingSpec& spec) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    uint64_t domains = 0;
    for (const auto& f : spec.factors()) {
        if (f.kind == FactorSpec::Kind::galois_field)
            ++domains;
        else
            pairs.emplace_back(f.p, f.exponent);
    }
    return formula_chi_gamma0(pairs, domains);
}

uint64_t formula_complement_zpr(uint32_t p, uint32_t r) {
    if (r < 2)
        throw RingError(ErrorCode::invalid_input, "formula_complement_zpr: r must be >= 2");
    uint64_t low = (r % 2 == 0) ? upow(p, r / 2) : upow(p, (r - 1) / 2);
    return upow(p, r - 1) - low;
}

ComplementCliqueData complement_clique_zpr(uint32_t p, uint32_t r) {
    if (r < 3)
        throw RingError(ErrorCode::out_of_scope,
                        "complement_clique_zpr: defined for r >= 3 (the r = 2 complement "
                        "is edgeless and handled by convention)");
    FactorSpec f = FactorSpec::local(p, r);
    const uint32_t top = (r % 2 == 0) ? r / 2 - 1 : (r - 1) / 2;

    ComplementCliqueData d;
    d.p = p;
    d.r = r;
    for (uint64_t v = 1; v < f.order; ++v) {
        uint32_t t = f.valuation(v);
        if (t >= 1 && t <= top) d.members.push_back(v);
    }
    d.size = d.members.size();

    if (d.size != formula_complement_zpr(p, r))
        throw std::logic_error("complement_clique_zpr: size formula mismatch");
    for (std::size_t i = 0; i < d.members.size(); ++i)
        for (std::size_t j = i + 1; j < d.members.size(); ++j)
            if (f.mul(d.members[i], d.members[j]) == 0)
                throw std::logic_error("complement_clique_zpr: members are not independent");
    const uint64_t gamma_size = upow(p, r - 1) - 1;
    if (gamma_size - d.size > d.size)
        throw std::logic_error("complement_clique_zpr: color reuse bound violated");
    return d;
}

Theorem2Plan theorem2_plan(const RingSpec& spec) {
    const std::size_t k = spec.factor_count();
    Theorem2Plan plan;
    plan.lengths.resize(k);
    for (std::size_t i = 0; i < k; ++i) plan.lengths[i] = spec.factors()[i].local_length();

    auto class_size = [&](const std::vector<uint32_t>& t) {
        uint64_t s = 1;
        for (std::size_t i = 0; i < k; ++i) s *= spec.factors()[i].class_size(t[i]);
        return s;
    };
    auto dual_of = [&](const std::vector<uint32_t>& t) {
        std::vector<uint32_t> d(k);
        for (std::size_t i = 0; i < k; ++i) d[i] = plan.lengths[i] - t[i];
        return d;
    };

    std::vector<uint32_t> t(k, 0);
    const std::vector<uint32_t> zero(k, 0);
    while (true) {
        if (t != zero && !std::equal(t.begin(), t.end(), plan.lengths.begin()))
            plan.tuples.push_back(t);
        std::size_t i = k;
        while (i > 0 && ++t[i - 1] > plan.lengths[i - 1]) t[--i] = 0;
        if (i == 0) break;
    }

    for (const auto& tup : plan.tuples) {
        auto dual = dual_of(tup);
        uint64_t a = class_size(tup), b = class_size(dual);
        if (a > b) {
            plan.t1.push_back(tup);
        } else if (a == b && tup != dual) {
            plan.t2.push_back(tup);
        }
    }
    plan.t0 = plan.t1;
    for (const auto& tup : plan.t2)
        if (tup < dual_of(tup)) plan.t0.push_back(tup);
    std::sort(plan.t0.begin(), plan.t0.end());

    bool all_even = std::all_of(plan.lengths.begin(), plan.lengths.end(),
                                [](uint32_t l) { return l % 2 == 0; });
    if (all_even) {
        std::vector<uint32_t> c(k);
        for (std::size_t i = 0; i < k; ++i) c[i] = plan.lengths[i] / 2;
        plan.center = c;
    }

    plan.clique_size = all_even ? 1 : 0;
    for (const auto& tup : plan.t0) {
        // every chosen tuple dips below the midpoint somewhere
        bool dips = false;
        for (std::size_t i = 0; i < k; ++i)
            if (2 * tup[i] < plan.lengths[i]) { dips = true; break; }
        if (!dips) throw std::logic_error("theorem2_plan: chosen tuple never dips");
        plan.clique_size += class_size(tup);
    }
    return plan;
}

Certificate theorem2_construction(const RingSpec& spec, const Graph& complement_gamma) {
    Theorem2Plan plan = theorem2_plan(spec);
    const std::size_t nverts = complement_gamma.size();

    // bucket the vertices by valuation tuple; labels ascend, so buckets do too
    std::map<std::vector<uint32_t>, std::vector<std::size_t>> bucket;
    for (std::size_t v = 0; v < nverts; ++v) {
        RingElement e = spec.element_of_index(complement_gamma.label(v));
        bucket[spec.valuation_tuple(e)].push_back(v);
    }
    if (bucket.size() != plan.tuples.size())
        throw RingError(ErrorCode::invalid_input,
                        "theorem2_construction: graph does not match the ring");

    std::set<std::vector<uint32_t>> chosen(plan.t0.begin(), plan.t0.end());

    Certificate cert;
    cert.clique = Bitset(nverts);
    cert.coloring.assignment.assign(nverts, -1);

    std::vector<std::size_t> clique_verts;
    for (const auto& tup : plan.t0)
        for (std::size_t v : bucket.at(tup)) clique_verts.push_back(v);
    std::size_t center_vertex = Bitset::npos;
    if (plan.center) {
        center_vertex = bucket.at(*plan.center).front();
        clique_verts.push_back(center_vertex);
    }
    std::sort(clique_verts.begin(), clique_verts.end());
    std::vector<int> color_of_vertex(nverts, -1);
    for (std::size_t c = 0; c < clique_verts.size(); ++c) {
        cert.clique.set(clique_verts[c]);
        color_of_vertex[clique_verts[c]] = static_cast<int>(c);
        cert.coloring.assignment[clique_verts[c]] = static_cast<int>(c);
    }
    cert.value = clique_verts.size();
    cert.coloring.color_count = static_cast<int>(clique_verts.size());
    if (cert.value != plan.clique_size)
        throw std::logic_error("theorem2_construction: clique size mismatch");

    for (auto& [tup, verts] : bucket) {
        if (chosen.count(tup)) continue;
        if (plan.center && tup == *plan.center) {
            for (std::size_t v : verts)
                if (v != center_vertex)
                    cert.coloring.assignment[v] = color_of_vertex[center_vertex];
            continue;
        }
        std::vector<uint32_t> dual(tup.size());
        for (std::size_t i = 0; i < tup.size(); ++i) dual[i] = plan.lengths[i] - tup[i];
        if (!chosen.count(dual))
            throw std::logic_error("theorem2_construction: dual class not chosen");
        const auto& owners = bucket.at(dual);
        if (owners.size() < verts.size())
            throw std::logic_error("theorem2_construction: dual class too small");
        for (std::size_t j = 0; j < verts.size(); ++j)
            cert.coloring.assignment[verts[j]] = color_of_vertex[owners[j]];
    }

    if (!check(complement_gamma, cert.clique, SetMode::clique))
        throw std::logic_error("theorem2_construction: clique failed verification");
    if (!verify_coloring(complement_gamma, cert.coloring))
        throw std::logic_error("theorem2_construction: coloring failed verification");
    return cert;
}

Certificate theorem2_construction(const RingSpec& spec) {
    Graph gamma = build_gamma(spec, spec.order());
    Graph comp = complement(gamma);
    return theorem2_construction(spec, comp);
}

Composition product_composition(uint64_t v1, uint64_t v2, bool second_factor_reduced) {
    if (v1 == 0 || v2 == 0)
        throw RingError(ErrorCode::invalid_input,
                        "product_composition: factor values must be positive");
    return Composition{v1 + v2 - 1, second_factor_reduced};
}

VertexSet vertex_set_from_labels(const Graph& g, const std::vector<uint64_t>& labels) {
    VertexSet s(g.size());
    for (uint64_t lab : labels) {
        std::size_t v = vertex_by_label(g, lab);
        if (v == Bitset::npos)
            throw RingError(ErrorCode::invalid_input, "label not present in graph");
        s.set(v);
    }
    return s;
}

} // namespace zdchroma
