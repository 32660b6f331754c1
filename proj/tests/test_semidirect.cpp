#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brauer/engine.hpp"
#include "brauer/oracle.hpp"
#include "brauer/semidirect.hpp"

using namespace brauer;

namespace {

bool is_zero(const ZVec& v)
{
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

Cochain scaled(const Cochain& a, i64 k, const AbelianModule& M)
{
    Cochain b = a;
    for (std::size_t i = 0; i < b.v.size(); ++i)
        b.v[i] = md(b.v[i] * k, M.factors[i % M.rank()]);
    return b;
}

// a mix of trivial and faithful actions, |N x| Q| <= 64
std::vector<SemidirectDatum> small_data()
{
    std::vector<SemidirectDatum> out;
    struct Shape {
        std::vector<i64> q, n;
        std::size_t take;
    };
    std::vector<Shape> shapes = {
        {{2}, {3}, 2},       {{2}, {4}, 2},       {{2}, {2, 2}, 4},    {{3}, {2, 2}, 3},
        {{2, 2}, {2, 2}, 6}, {{2}, {8}, 4},       {{4}, {5}, 4},       {{2, 2}, {4}, 4},
        {{2, 2, 2}, {2, 2}, 6}, {{2}, {2, 4}, 6}, {{3}, {7}, 3},       {{2, 2, 2}, {4}, 4},
    };
    for (const auto& s : shapes) {
        auto acts = oracle::module_actions(s.q, s.n, 1000);
        FiniteGroup Q = abelian_group(s.q);
        // spread the picks over the list so faithful actions appear
        std::size_t step = std::max<std::size_t>(1, acts.size() / s.take);
        for (std::size_t i = 0; i < acts.size() && out.size() < 200; i += step)
            out.push_back(semidirect_datum(Q, acts[i]));
    }
    return out;
}

bool faithful(const SemidirectDatum& sd)
{
    for (int q = 1; q < sd.Q.order(); ++q)
        if (sd.N.action[q] == sd.N.action[0])
            return false;
    return true;
}

} // namespace

TEST_CASE("group ring example, p = 2")
{
    auto ex = build_group_ring_example(2);
    CHECK(ex.sd.N.rank() == 7);
    CHECK(ex.sd.exponent() == 8);
    ShaGroup s = sha1_bic(ex.sd);
    CHECK(s.ambient.factors() == std::vector<i64>{8});
    CHECK(s.factors == std::vector<i64>{2});
    ZVec ca = s.ambient.coordinates(ex.a);
    REQUIRE(ca.size() == 1);
    CHECK(gcd64(ca[0], 8) == 1); // [a] generates
    REQUIRE(s.gen_coords.size() == 1);
    CHECK(s.gen_coords[0][0] == md(4 * ca[0], 8));
    CHECK(s.ambient.coordinates(scaled(ex.a, 4, ex.sd.dual)) == s.gen_coords[0]);
}

TEST_CASE("group ring example, p = 3")
{
    auto ex = build_group_ring_example(3);
    CHECK(ex.sd.N.rank() == 26);
    ShaGroup s = sha1_bic(ex.sd);
    CHECK(s.ambient.factors() == std::vector<i64>{27});
    CHECK(s.factors == std::vector<i64>{3});
    ZVec ca = s.ambient.coordinates(ex.a);
    CHECK(gcd64(ca[0], 27) == 1);
    // 9[a] lies in Sha and generates it
    i64 g = md(9 * ca[0], 27);
    CHECK((g == s.gen_coords[0][0] || g == md(2 * s.gen_coords[0][0], 27)));
    CHECK_THROWS_AS(build_group_ring_example(5), Error);
}

TEST_CASE("group ring example: kernel of Z/|Q| -> prod Z/|B|")
{
    for (int p : {2, 3}) {
        auto ex = build_group_ring_example(p);
        const i64 m = i64(p) * p * p;
        const FiniteGroup& Q = ex.sd.Q;
        std::vector<i64> targets;
        std::vector<ZVec> images(1);
        for (const auto& B : family_subgroups(Q, Family::Bicyclic)) {
            if (B.size() == 1)
                continue;
            SubgroupView v = subgroup_view(Q, B);
            // Tate H^0(B, Z/p^3) = Z/|B|
            AbelianStructure t = tate_h0(v.group, AbelianModule::trivial({m}, v.group.order()));
            CHECK(t.factors() == std::vector<i64>{i64(B.size())});
            // restriction of [a] has order |B|
            CohomologyGroup hb = h1(v.group, pull_module(ex.sd.dual, v.to_parent));
            ZVec c = hb.coordinates(restrict_cochain(ex.a, v));
            i64 ord = 1;
            for (std::size_t i = 0; i < c.size(); ++i)
                ord = lcm64(ord, hb.factors()[i] / gcd64(c[i], hb.factors()[i]));
            CHECK(ord == i64(B.size()));
            targets.push_back(i64(B.size()));
            images[0].push_back(1);
        }
        SubgroupQuotient k = hom_kernel({m}, targets, images);
        CHECK(k.factors == sha1_bic(ex.sd).factors);
        CHECK(k.factors == std::vector<i64>{p});
    }
}

TEST_CASE("double duality and pairing invariance")
{
    std::mt19937 rng(5);
    for (const auto& sd : small_data()) {
        AbelianModule back = dual_module(sd.Q, sd.dual);
        for (int q = 0; q < sd.Q.order(); ++q)
            for (int i = 0; i < sd.N.rank(); ++i)
                for (int j = 0; j < sd.N.rank(); ++j)
                    CHECK(md(back.entry(q, i, j) - sd.N.entry(q, i, j), sd.N.factors[i]) == 0);
        for (int t = 0; t < 20; ++t) {
            ZVec n(sd.N.rank()), phi(sd.N.rank());
            for (int i = 0; i < sd.N.rank(); ++i) {
                n[i] = rng() % sd.N.factors[i];
                phi[i] = rng() % sd.N.factors[i];
            }
            int q = int(rng() % sd.Q.order());
            CHECK(dual_pairing(sd.N, sd.N.act(q, n), sd.dual.act(q, phi)) == dual_pairing(sd.N, n, phi));
        }
    }
    FiniteGroup S3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
    CHECK_THROWS_AS(semidirect_datum(S3, AbelianModule::trivial({2}, 6)), Error);
}

TEST_CASE("sha1_bic agrees with b0 of the semidirect product")
{
    int n = 0, nfaithful = 0, ntrivial = 0;
    for (const auto& sd : small_data()) {
        FiniteGroup G = semidirect_group(sd).group;
        CHECK(sha1_bic(sd).factors == b0(G).factors);
        ++n;
        nfaithful += faithful(sd);
        ntrivial += sd.N.action == AbelianModule::trivial(sd.N.factors, sd.Q.order()).action;
    }
    CHECK(n >= 10);
    CHECK(nfaithful >= 3);
    CHECK(ntrivial >= 3);
}

TEST_CASE("extension from a Q-cocycle: explicit group law")
{
    // the group (Z/e x N) x| Q with q.(l, n) = (l + a(q^-1)(n), q n), read through the section (0, n, q)
    int checked = 0;
    for (const auto& sd : small_data()) {
        const i64 e = sd.exponent();
        if (sd.N.size() * sd.Q.order() * e > 512)
            continue;
        CohomologyGroup H = h1(sd.Q, sd.dual);
        CocycleParam P(sd.Q, sd.dual, 1);
        std::vector<Cochain> as{Cochain::zero(1, sd.Q.order(), sd.dual.rank())};
        for (const auto& r : H.reps)
            as.push_back(r);
        // a coboundary as well
        {
            ZVec phi(sd.dual.rank());
            for (int i = 0; i < sd.dual.rank(); ++i)
                phi[i] = 1;
            as.push_back(P.table(P.coboundary_params(phi)));
        }
        SemidirectProduct sp = semidirect_group(sd);
        const FiniteGroup& G = sp.group;
        GaloisDatum gal = GaloisDatum::trivial(G);
        auto el = module_elements(sd.N, 1 << 20);
        const int r = sd.N.rank();
        for (const auto& a : as) {
            EquivariantExtension ext = extension_from_q_cocycle(sd, a, gal);
            CHECK(!validate(G, ext, gal));
            AbelianModule M;
            M.factors = sd.N.factors;
            M.factors.push_back(e);
            M.actor_order = sd.Q.order();
            for (int q = 0; q < sd.Q.order(); ++q) {
                std::vector<i64> A(std::size_t(r + 1) * (r + 1), 0);
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j)
                        A[i * (r + 1) + j] = sd.N.entry(q, i, j);
                const i64* phi = a.at(sd.Q.inv(q));
                for (int j = 0; j < r; ++j)
                    A[r * (r + 1) + j] = md(phi[j], sd.N.factors[j]) * (e / sd.N.factors[j]);
                A[r * (r + 1) + r] = 1;
                M.action.push_back(A);
            }
            SemidirectProduct big = semidirect_product(M, sd.Q); // validates the action
            auto bel = module_elements(M, 1 << 20);
            auto section = [&](int g) {
                ZVec x = el[sp.n_part(g)];
                x.push_back(0);
                return big.pair(int(module_index(M, x)), sp.q_part(g));
            };
            const i64 scale = gal.N / e;
            bool same = true;
            for (int g = 0; g < G.order(); ++g)
                for (int h = 0; h < G.order(); ++h) {
                    int p = big.group.mul(section(g), section(h));
                    i64 lam = bel[big.n_part(p)][r];
                    same = same && md(lam * scale, gal.N) == ext.f.s(g, h);
                }
            CHECK(same);
            ++checked;
        }
        // zero cocycle gives the split extension
        CHECK(extension_from_q_cocycle(sd, as[0], gal).f.is_zero());
    }
    CHECK(checked >= 10);
}

TEST_CASE("extension from a Q-cocycle: coboundaries vanish, errors")
{
    int checked = 0;
    for (const auto& sd : small_data()) {
        SemidirectProduct sp = semidirect_group(sd);
        if (sp.group.order() > 32)
            continue;
        GaloisDatum gal = GaloisDatum::trivial(sp.group);
        CocycleParam P(sd.Q, sd.dual, 1);
        ClassModule C(sp.group, gal);
        for (int k = 0; k < sd.dual.rank(); ++k) {
            ZVec phi(sd.dual.rank(), 0);
            phi[k] = 1;
            Cochain a = P.table(P.coboundary_params(phi));
            CHECK(is_zero(C.coords(extension_from_q_cocycle(sd, a, gal))));
            ++checked;
        }
        Cochain bad = Cochain::zero(1, sd.Q.order(), sd.dual.rank());
        bad.at(sd.Q.generators()[0])[0] = 1;
        bad.at(sd.Q.mul(sd.Q.generators()[0], sd.Q.generators()[0]))[0] = 0;
        if (!P.is_cocycle(bad))
            CHECK_THROWS_AS(extension_from_q_cocycle(sd, bad, gal), Error);
    }
    CHECK(checked >= 10);
}

TEST_CASE("extension from a Q-cocycle: unramified exactly on Sha")
{
    int passed = 0, failed = 0;
    for (const auto& sd : small_data()) {
        SemidirectProduct sp = semidirect_group(sd);
        const FiniteGroup& G = sp.group;
        if (G.order() > 32)
            continue;
        std::vector<GaloisDatum> gals{GaloisDatum::trivial(G)};
        if (sd.exponent() == 2) {
            // chi = -1, trivial on G: chi = 1 mod exp(N)
            GaloisDatum g2;
            g2.delta = cyclic_group(2);
            g2.N = G.order();
            g2.chi = {1, g2.N * g2.N - 1};
            g2.action = GroupAction::trivial(2, G.order());
            gals.push_back(g2);
        }
        ShaGroup s = sha1_bic(sd);
        const auto& H = s.ambient;
        // every class of H^1(Q, dual)
        std::vector<i64> q = H.factors();
        ZVec c(q.size(), 0);
        while (true) {
            Cochain a = H.element(c);
            std::vector<ZVec> with = s.gen_coords;
            with.push_back(c);
            bool in_sha = generated_subgroup(q, with) == generated_subgroup(q, s.gen_coords);
            for (const auto& gal : gals) {
                EquivariantExtension ext = extension_from_q_cocycle(sd, a, gal);
                if (in_sha) {
                    CHECK(!is_unramified(G, ext, gal));
                    ++passed;
                } else {
                    CHECK(bogomolov_condition(G, ext, gal.N).has_value());
                    ++failed;
                }
            }
            std::size_t i = 0;
            while (i < q.size() && ++c[i] == q[i])
                c[i++] = 0;
            if (i == q.size())
                break;
        }
    }
    CHECK(passed >= 10);
    CHECK(failed >= 10);
}

TEST_CASE("local witness")
{
    auto ex = build_group_ring_example(2);
    const FiniteGroup& Q = ex.sd.Q;
    std::vector<int> id(Q.order());
    for (int i = 0; i < Q.order(); ++i)
        id[i] = i;
    Cochain a4 = scaled(ex.a, 4, ex.sd.dual);

    auto w0 = local_witness(ex.sd, Cochain::zero(1, Q.order(), 7), Q, id);
    CHECK(w0.verdict == WitnessVerdict::NoObstructionFromThisClass);

    auto w = local_witness(ex.sd, a4, Q, id);
    CHECK(w.verdict == WitnessVerdict::ObstructionWitnessed);
    CHECK(!is_zero(w.inflated_coords));
    CHECK(w.pair != PairVerdict::NotSearched);

    // Delta_v = Q x Z/2 through the projection
    FiniteGroup D = direct_product(Q, cyclic_group(2));
    std::vector<int> proj(D.order());
    for (int x = 0; x < D.order(); ++x)
        proj[x] = x % Q.order();
    auto w2 = local_witness(ex.sd, a4, D, proj);
    CHECK(w2.verdict == WitnessVerdict::ObstructionWitnessed);
    CHECK(w2.twisted_dual.actor_order == D.order());

    // inflation along a surjection whose kernel acts trivially is injective on H^1
    auto H = h1(Q, ex.sd.dual);
    for (i64 k = 0; k < 8; ++k) {
        auto wk = local_witness(ex.sd, scaled(ex.a, k, ex.sd.dual), D, proj, {}, false);
        CHECK((wk.verdict == WitnessVerdict::ObstructionWitnessed) == (k % 8 != 0));
    }

    std::vector<int> not_onto(Q.order(), 0);
    CHECK_THROWS_AS(local_witness(ex.sd, a4, Q, not_onto), Error);
    try {
        local_witness(ex.sd, a4, Q, not_onto);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSurjective);
    }
}

TEST_CASE("cup witness on a small semidirect product")
{
    // Q = Z/2 acting on N = Z/2 trivially; a(q) = identity character.  With
    // Delta_v = Z/2 x Z/2 -> Q and y the other coordinate, a cup y != 0.
    FiniteGroup Q = cyclic_group(2);
    SemidirectDatum sd = semidirect_datum(Q, AbelianModule::trivial({2}, 2));
    Cochain a = Cochain::zero(1, 2, 1);
    a.at(1)[0] = 1;
    FiniteGroup D = abelian_group({2, 2});
    std::vector<int> cv(4);
    for (int x = 0; x < 4; ++x)
        cv[x] = x % 2;
    auto w = local_witness(sd, a, D, cv);
    CHECK(w.verdict == WitnessVerdict::ObstructionWitnessed);
    CHECK(w.pair == PairVerdict::WitnessPairFound);
    REQUIRE(w.cup.has_value());
    CHECK(!oracle::coboundary_search(D, {}, *w.cup, 2));
}

TEST_CASE("coded model agrees with the table product")
{
    for (const auto& sd : small_data()) {
        SemidirectProduct sp = semidirect_group(sd);
        CodedSemidirect C(sd);
        const int n = sp.group.order();
        for (int x = 0; x < n; ++x) {
            CHECK(C.inv(x) == sp.group.inv(x));
            for (int y = 0; y < n; ++y)
                if (C.mul(x, y) != sp.group.mul(x, y)) {
                    FAIL("coded product differs at " << x << "," << y);
                }
        }
        auto t = C.table({1, i64(sp.n_order)}, 4096);
        CHECK(t.group.order() == int(closure(sp.group, {1, sp.n_order}).size()));
    }
    auto ex = build_group_ring_example(2);
    CodedSemidirect C(ex.sd);
    CHECK(C.n_order() == (i64(1) << 21));
    CHECK_THROWS_AS(CodedSemidirect(build_group_ring_example(3).sd), Error);
}
