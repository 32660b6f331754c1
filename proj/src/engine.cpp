#include "brauer/engine.hpp"

#include <algorithm>
#include <set>

namespace brauer {

std::vector<GaloisTriple> galois_triples(const FiniteGroup& G, const GaloisDatum& gal)
{
    std::vector<GaloisTriple> out;
    const int n = G.order();
    const i64 N2 = gal.N * gal.N;
    for (int d = 0; d < gal.nd(); ++d) {
        const i64 chi = md(gal.chi[d], N2);
        for (int tau = 1; tau < n; ++tau) {
            const int t = G.element_order(tau);
            const i64 e = chi % t;
            const int target = G.pow(tau, e);
            const int dt = gal.act(d, tau);
            for (int g = 0; g < n; ++g)
                if (G.conj(g, dt) == target)
                    out.push_back({d, tau, g, t, e, (chi - e) / t});
        }
    }
    return out;
}

std::vector<Subgroup> maximal_bicyclic(const FiniteGroup& G)
{
    std::vector<Subgroup> cand;
    for (auto& B : subgroups_bicyclic(G)) {
        bool cyclic = false;
        for (int x : B)
            cyclic = cyclic || G.element_order(x) == int(B.size());
        if (!cyclic)
            cand.push_back(B);
    }
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool inside = false;
        for (std::size_t j = 0; j < cand.size() && !inside; ++j)
            inside = j != i && cand[j].size() > cand[i].size() &&
                     std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(), cand[i].end());
        if (!inside)
            out.push_back(cand[i]);
    }
    return out;
}

std::optional<Witness> bogomolov_condition(const FiniteGroup& G, const EquivariantExtension& e, i64 N,
                                           const std::vector<Subgroup>& subgroups)
{
    for (const auto& B : subgroups) {
        SubgroupView v = subgroup_view(G, B);
        if (!dies_in_QZ(v.group, restrict_cochain(e.f, v), N))
            return Witness{"bogomolov", "does not split over bicyclic subgroup " + subgroup_str(B)};
    }
    return std::nullopt;
}

std::optional<Witness> bogomolov_condition(const FiniteGroup& G, const EquivariantExtension& e, i64 N)
{
    return bogomolov_condition(G, e, N, maximal_bicyclic(G));
}

i64 galois_defect(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, const GaloisTriple& t)
{
    const i64 N = gal.N;
    const auto& f = e.f;
    i64 P = 0, T = 0;
    int x = t.tau; // tau^j
    for (int j = 1; j < t.t; ++j) {
        if (j == t.e)
            P = T;
        T += f.s(x, t.tau);
        x = G.mul(x, t.tau);
    }
    const int g = t.gamma, y = gal.act(t.d, t.tau), gi = G.inv(g);
    const i64 K = f.s(g, y) - f.s(g, gi) + f.s(G.mul(g, y), gi);
    return md(P - e.cval(t.d, t.tau) - K + md(t.u, N) * md(T, N), N);
}

bool galois_condition_single(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, int d,
                             int tau, int gamma)
{
    const i64 N2 = gal.N * gal.N;
    const i64 chi = md(gal.chi[d], N2);
    const int t = G.element_order(tau);
    const i64 ex = chi % t;
    if (G.conj(gamma, gal.act(d, tau)) != G.pow(tau, ex))
        fail(ErrorKind::PreconditionViolated, "gamma (delta tau) gamma^-1 != tau^chi(delta)",
             "(" + std::to_string(d) + "," + std::to_string(tau) + "," + std::to_string(gamma) + ")");
    if (tau == 0)
        return true;
    return galois_defect(G, e, gal, {d, tau, gamma, t, ex, (chi - ex) / t}) == 0;
}

namespace {

std::string triple_str(const GaloisTriple& t)
{
    return "delta=" + std::to_string(t.d) + " tau=" + std::to_string(t.tau) + " gamma=" + std::to_string(t.gamma);
}

std::optional<Witness> unramified_with(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal,
                                       const std::vector<Subgroup>& subs, const std::vector<GaloisTriple>& triples)
{
    if (auto w = bogomolov_condition(G, e, gal.N, subs))
        return w;
    if (gal.base_algebraically_closed)
        return std::nullopt;
    for (const auto& t : triples)
        if (galois_defect(G, e, gal, t) != 0)
            return Witness{"galois", triple_str(t)};
    return std::nullopt;
}

bool odometer(ZVec& c, const std::vector<i64>& q)
{
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (++c[i] < q[i])
            return true;
        c[i] = 0;
    }
    return false;
}

i64 order_of(const std::vector<i64>& q)
{
    i64 s = 1;
    for (i64 d : q) {
        if (s > (i64(1) << 40) / d)
            return i64(1) << 40;
        s *= d;
    }
    return s;
}

} // namespace

std::optional<Witness> is_unramified(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal)
{
    return unramified_with(G, e, gal, maximal_bicyclic(G), galois_triples(G, gal));
}

std::optional<Witness> is_unramified_split_cyclotomic(const FiniteGroup& G, const EquivariantExtension& e,
                                                      const GaloisDatum& gal)
{
    const i64 ex = G.exponent();
    for (int d = 0; d < gal.nd(); ++d) {
        if (md(gal.chi[d] - 1, ex) != 0)
            fail(ErrorKind::PreconditionViolated, "chi is not 1 mod exp(G)");
        for (int g = 0; g < G.order(); ++g)
            if (gal.act(d, g) != g)
                fail(ErrorKind::PreconditionViolated, "Galois action on G is not trivial");
    }
    if (auto w = bogomolov_condition(G, e, gal.N))
        return w;
    if (gal.base_algebraically_closed)
        return std::nullopt;
    for (int d = 0; d < gal.nd(); ++d) {
        Subgroup D = closure(gal.delta, {d});
        for (const auto& C : subgroups_cyclic(G))
            if (!splits_equivariantly(G, e, gal, C, D, true))
                return Witness{"galois", "delta=" + std::to_string(d) + " no equivariant splitting over " +
                                             subgroup_str(C)};
    }
    return std::nullopt;
}

BrauerReport b0(const FiniteGroup& G, const Caps& caps)
{
    check_cap("h2_base", G.order(), caps.h2_base);
    const i64 N = G.order();
    BrauerReport r;
    r.method = "linear";
    CohomologyGroup H = h2(G, AbelianModule::trivial({N}, G.order()));
    ShaGroup S = sha_from(H, Family::Bicyclic, true);
    GaloisDatum triv = GaloisDatum::trivial(G, N);
    std::vector<ZVec> kc;
    for (const auto& phi : equivariant_characters(G, triv))
        kc.push_back(H.coordinates(bockstein(G, phi, N).f));
    r.ambient = H.factors();
    r.kummer = generated_subgroup(H.factors(), kc);
    r.quotient = S.factors;
    SubgroupQuotient Q = subgroup_quotient(H.factors(), S.gen_coords, kc);
    r.factors = Q.factors;
    for (const auto& g : Q.gens) {
        EquivariantExtension e = EquivariantExtension::zero(G.order(), 1);
        e.f = H.element(g);
        r.reps.push_back(std::move(e));
    }
    return r;
}

BrauerReport br_nr(const FiniteGroup& G, const GaloisDatum& gal, const Caps& caps, Extraction how)
{
    validate_galois(G, gal);
    ClassModule C(G, gal, caps.h2_base);
    KummerKernel K = kummer_kernel(C);
    std::vector<ZVec> kparams;
    for (const auto& p : K.pairs)
        kparams.push_back(C.params(p));
    AbelianStructure Qt = C.quotient(kparams);
    BrauerReport r;
    r.ambient = C.factors();
    r.kummer = K.factors;
    r.quotient = Qt.factors();
    const auto subs = maximal_bicyclic(G);
    const auto triples = gal.base_algebraically_closed ? std::vector<GaloisTriple>{} : galois_triples(G, gal);

    const i64 qorder = order_of(Qt.factors());
    bool exhaustive = how == Extraction::Exhaustive || (how == Extraction::Auto && qorder <= caps.exhaustive_quotient);
    if (how == Extraction::Exhaustive)
        check_cap("exhaustive_quotient", qorder, caps.exhaustive_quotient);
    if (exhaustive) {
        r.method = "exhaustive";
        const auto& q = Qt.factors();
        std::set<ZVec> pass, span{ZVec(q.size(), 0)};
        std::vector<ZVec> gens;
        ZVec c(q.size(), 0);
        do {
            EquivariantExtension e = C.table(Qt.element(c));
            ++r.tested;
            auto w = unramified_with(G, e, gal, subs, triples);
            if (w) {
                if (!r.first_failure)
                    r.first_failure = w;
                continue;
            }
            ++r.passed;
            pass.insert(c);
            if (!span.count(c)) {
                gens.push_back(c);
                std::vector<ZVec> frontier(span.begin(), span.end());
                while (!frontier.empty()) {
                    std::vector<ZVec> next;
                    for (const auto& v : frontier) {
                        ZVec w2(v);
                        for (std::size_t i = 0; i < q.size(); ++i)
                            w2[i] = (w2[i] + c[i]) % q[i];
                        if (span.insert(w2).second)
                            next.push_back(w2);
                    }
                    frontier = std::move(next);
                }
            }
        } while (odometer(c, q));
        if (pass.size() != span.size())
            fail(ErrorKind::PreconditionViolated, "unramified classes do not form a subgroup");
        SubgroupQuotient U = subgroup_quotient(q, gens, {});
        r.factors = U.factors;
        for (const auto& g : U.gens)
            r.reps.push_back(C.table(Qt.element(g)));
        return r;
    }

    r.method = "linear";
    const auto& q = C.factors();
    const int k = int(q.size());
    std::vector<i64> h;
    std::vector<ZVec> images(k);
    if (!triples.empty())
        for (const auto& t : triples) {
            h.push_back(gal.N);
            for (int i = 0; i < k; ++i)
                images[i].push_back(galois_defect(G, C.reps()[i], gal, t));
        }
    for (const auto& B : subs) {
        SubgroupView v = subgroup_view(G, B);
        const i64 e = v.group.exponent(), M = gal.N * e;
        CocycleModel model(v.group, AbelianModule::trivial({M}, v.group.order()), 2);
        for (i64 d : model.structure().factors())
            h.push_back(d);
        for (int i = 0; i < k; ++i) {
            Cochain rc = restrict_cochain(C.reps()[i].f, v);
            for (auto& x : rc.v)
                x = md(x, gal.N) * e;
            ZVec co = model.coords(rc);
            images[i].insert(images[i].end(), co.begin(), co.end());
        }
    }
    SubgroupQuotient U = hom_kernel(q, h, images);
    SubgroupQuotient R = subgroup_quotient(q, U.gens, K.coords);
    r.factors = R.factors;
    for (const auto& g : R.gens)
        r.reps.push_back(C.element(g));
    return r;
}

BrauerReport algebraic_unramified(const FiniteGroup& G, const GaloisDatum& gal, const Caps& caps)
{
    validate_galois(G, gal);
    ClassModule C(G, gal, caps.h2_base);
    KummerKernel K = kummer_kernel(C);
    BrauerReport r;
    r.method = "linear";
    r.ambient = C.factors();
    r.kummer = K.factors;
    const int n = G.order(), nd = gal.nd();
    const i64 N = gal.N;
    std::vector<ZVec> A = K.coords;
    if (nd > 1 && n > 1) {
        const int W = (nd - 1) * (n - 1);
        auto col = [&](int d, int g) { return d && g ? (d - 1) * (n - 1) + (g - 1) : -1; };
        RowReducer R(W, N);
        ZVec row(W);
        auto put = [&](int d, int g, i64 s) {
            int j = col(d, g);
            if (j >= 0)
                row[j] = md(row[j] + s, N);
        };
        for (int d : gal.delta.generators())
            for (int g = 1; g < n; ++g)
                for (int x = 1; x < n; ++x) {
                    std::fill(row.begin(), row.end(), 0);
                    put(d, G.mul(g, x), 1);
                    put(d, g, -1);
                    put(d, x, -1);
                    R.add(row);
                }
        for (int d = 1; d < nd; ++d)
            for (int t = 1; t < nd; ++t)
                for (int g = 1; g < n; ++g) {
                    std::fill(row.begin(), row.end(), 0);
                    put(gal.delta.mul(d, t), g, 1);
                    put(t, g, -gal.chi_mod(d, N));
                    put(d, gal.act(t, g), -1);
                    R.add(row);
                }
        for (const auto& t : galois_triples(G, gal)) {
            std::fill(row.begin(), row.end(), 0);
            put(t.d, t.tau, 1);
            R.add(row);
        }
        KernelBasis Kb = kernel_basis(R.rank() ? R.matrix() : ZModMatrix(0, W, N), W);
        for (const auto& v : Kb.gens) {
            EquivariantExtension e = EquivariantExtension::zero(n, nd);
            for (int d = 1; d < nd; ++d)
                for (int g = 1; g < n; ++g)
                    e.c[std::size_t(d) * n + g] = v[col(d, g)];
            require_valid(G, e, gal);
            A.push_back(C.coords(e));
        }
    }
    SubgroupQuotient Q = subgroup_quotient(C.factors(), A, K.coords);
    r.factors = Q.factors;
    for (const auto& g : Q.gens)
        r.reps.push_back(C.element(g));
    return r;
}

std::vector<i64> sha2_ab(const FiniteGroup& G, i64 m, const Caps& caps)
{
    check_cap("h2_base", G.order(), caps.h2_base);
    return sha(G, AbelianModule::trivial({m}, G.order()), 2, Family::Abelian).factors;
}

} // namespace brauer
