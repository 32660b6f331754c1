#include "brauer/local.hpp"

#include "brauer/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brauer {

void validate_local(const LocalDatum& ld, const GaloisDatum& gal)
{
    if (int(ld.structure.size()) != ld.dv.order())
        fail(ErrorKind::InvalidDatum, "structure map has the wrong length", ld.label);
    for (int x : ld.structure)
        if (x < 0 || x >= gal.nd())
            fail(ErrorKind::InvalidDatum, "structure map leaves Delta", ld.label);
    if (!is_homomorphism(ld.dv, gal.delta, ld.structure))
        fail(ErrorKind::InvalidDatum, "structure map is not a homomorphism", ld.label);
}

std::vector<i64> local_chi(const LocalDatum& ld, const GaloisDatum& gal, i64 m)
{
    std::vector<i64> chi(ld.dv.order());
    for (int s = 0; s < ld.dv.order(); ++s)
        chi[s] = gal.chi_mod(ld.structure[s], m);
    return chi;
}

EvalModel table_model(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal)
{
    EvalModel m;
    m.N = gal.N;
    m.gal = gal;
    auto Gp = std::make_shared<FiniteGroup>(G);
    auto ep = std::make_shared<EquivariantExtension>(e);
    auto act = std::make_shared<GroupAction>(gal.action);
    m.mul = [Gp](i64 x, i64 y) { return i64(Gp->mul(int(x), int(y))); };
    m.act = [act](int d, i64 g) { return i64(act->act(d, int(g))); };
    m.f = [ep](i64 x, i64 y) { return ep->f.s(int(x), int(y)); };
    m.c = [ep](int d, i64 g) { return ep->cval(d, int(g)); };
    return m;
}

static void require_coefficient_action(const CodedSemidirect& G, const GaloisDatum& gal)
{
    const i64 e = G.datum().exponent();
    if (gal.N % e != 0)
        fail(ErrorKind::PreconditionViolated, "coefficient modulus must be a multiple of exp(N)");
    for (int d = 0; d < gal.nd(); ++d)
        if (md(gal.chi[d] - 1, e) != 0)
            fail(ErrorKind::PreconditionViolated, "chi must be 1 mod exp(N)", "delta=" + std::to_string(d));
}

EvalModel q_cocycle_model(const CodedSemidirect& G, const Cochain& a, const GaloisDatum& gal,
                          const std::string& class_id)
{
    require_coefficient_action(G, gal);
    EvalModel m;
    m.N = gal.N;
    m.gal = gal;
    auto Gp = std::make_shared<CodedSemidirect>(G);
    auto ap = std::make_shared<Cochain>(a);
    const i64 scale = gal.N / G.datum().exponent();
    m.mul = [Gp](i64 x, i64 y) { return Gp->mul(x, y); };
    m.act = [](int, i64 g) { return g; };
    m.f = [Gp, ap, scale](i64 x, i64 y) { return q_cocycle_value(*Gp, *ap, x, y) * scale; };
    m.c = [](int, i64) { return i64(0); };
    m.class_id = class_id;
    m.to_q = [Gp](i64 x) { return Gp->q_part(x); };
    return m;
}

EvalModel subgroup_model(const CodedSemidirect& G, const CodedSemidirect::Table& H, const Cochain& a,
                         const GaloisDatum& gal, const std::string& class_id)
{
    require_coefficient_action(G, gal);
    const auto& sd = G.datum();
    struct Data {
        FiniteGroup group;
        std::vector<int> q;
        std::vector<ZVec> n, phi; // phi[q] = a(q^-1)
        AbelianModule N;
        i64 scale;
    };
    auto D = std::make_shared<Data>();
    D->group = H.group;
    D->N = sd.N;
    D->scale = gal.N / sd.exponent();
    for (i64 c : H.codes) {
        D->q.push_back(G.q_part(c));
        D->n.push_back(G.n_part(c));
    }
    for (int q = 0; q < sd.Q.order(); ++q) {
        const i64* v = a.at(sd.Q.inv(q));
        D->phi.emplace_back(v, v + a.r);
    }
    EvalModel m;
    m.N = gal.N;
    m.gal = gal;
    m.mul = [D](i64 x, i64 y) { return i64(D->group.mul(int(x), int(y))); };
    m.act = [](int, i64 g) { return g; };
    m.f = [D](i64 x, i64 y) { return dual_pairing(D->N, D->n[y], D->phi[D->q[x]]) * D->scale; };
    m.c = [](int, i64) { return i64(0); };
    m.class_id = class_id;
    m.to_q = [D](i64 x) { return D->q[x]; };
    return m;
}

bool is_nonabelian_cocycle(const EvalModel& m, const LocalDatum& ld, const NonabelianCocycle& h)
{
    const FiniteGroup& D = ld.dv;
    if (int(h.h.size()) != D.order() || h.h[0] != 0)
        return false;
    for (int s = 0; s < D.order(); ++s)
        for (int t = 0; t < D.order(); ++t)
            if (h.h[D.mul(s, t)] != m.mul(h.h[s], m.act(ld.structure[s], h.h[t])))
                return false;
    return true;
}

std::vector<NonabelianCocycle> nonabelian_h1(const LocalDatum& ld, const FiniteGroup& G, const GaloisDatum& gal,
                                             const Caps& caps)
{
    validate_local(ld, gal);
    const FiniteGroup& D = ld.dv;
    const auto& gens = D.generators();
    const int n = G.order(), nd = D.order(), S = int(gens.size());
    double cand = 1;
    for (int i = 0; i < S; ++i)
        cand *= n;
    check_cap("h1_enumeration", i64(std::min(cand, 9.0e18)), caps.h1_enumeration);
    auto act = [&](int s, int g) { return gal.act(ld.structure[s], g); };

    // fixed factorization: BFS tree over the generators
    std::vector<int> parent(nd, -1), via(nd, -1), order{0};
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int k = 0; k < S; ++k) {
            int y = D.mul(order[i], gens[k]);
            if (parent[y] < 0) {
                parent[y] = order[i];
                via[y] = k;
                order.push_back(y);
            }
        }

    std::set<std::vector<i64>> seen;
    std::vector<NonabelianCocycle> reps;
    std::vector<int> img(S, 0), h(nd);
    while (true) {
        // h(x s) = h(x) . (x.h(s))
        h[0] = 0;
        for (std::size_t i = 1; i < order.size(); ++i) {
            int y = order[i], x = parent[y];
            h[y] = G.mul(h[x], act(x, img[via[y]]));
        }
        bool ok = true;
        for (int s = 0; s < nd && ok; ++s)
            for (int t = 0; t < nd && ok; ++t)
                ok = h[D.mul(s, t)] == G.mul(h[s], act(s, h[t]));
        if (ok) {
            std::vector<i64> key(h.begin(), h.end());
            if (!seen.count(key)) {
                // orbit under h'(s) = g^-1 h(s) (s.g)
                std::vector<i64> least = key;
                for (int g = 0; g < n; ++g) {
                    std::vector<i64> o(nd);
                    for (int s = 0; s < nd; ++s)
                        o[s] = G.mul(G.mul(G.inv(g), h[s]), act(s, g));
                    least = std::min(least, o);
                    seen.insert(std::move(o));
                }
                reps.push_back({least});
            }
        }
        int k = 0;
        while (k < S && ++img[k] == n)
            img[k++] = 0;
        if (k == S)
            break;
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.h < b.h; });
    return reps;
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::NonzeroCertified: return "NonzeroCertified";
    default: return "Unknown";
    }
}

const char* status_name(RowStatus s)
{
    switch (s) {
    case RowStatus::Admissible: return "Admissible";
    case RowStatus::Excluded: return "Excluded";
    default: return "Undetermined";
    }
}

Evaluation evaluate(const EvalModel& m, const LocalDatum& ld, const NonabelianCocycle& h)
{
    validate_local(ld, m.gal);
    if (!is_nonabelian_cocycle(m, ld, h))
        fail(ErrorKind::InvalidCocycle, "point is not a twisted cocycle Delta_v -> G", ld.label);
    const FiniteGroup& D = ld.dv;
    const int nd = D.order();
    const i64 N = m.N;
    Evaluation ev;
    ev.beta = Cochain::zero(2, nd, 1);
    for (int s = 0; s < nd; ++s) {
        int d = ld.structure[s];
        for (int t = 0; t < nd; ++t)
            ev.beta.v[std::size_t(s) * nd + t] = md(m.c(d, h.h[t]) + m.f(h.h[s], m.act(d, h.h[t])), N);
    }
    std::vector<i64> chi = local_chi(ld, m.gal, N);
    if (!is_cocycle_scalar(D, chi, ev.beta, N))
        fail(ErrorKind::InvalidCocycle, "evaluation cochain is not a cocycle; the extension is not valid", ld.label);
    if (is_coboundary(D, chi, ev.beta, N)) {
        ev.verdict = Verdict::Zero;
        ev.reason = "coboundary on Delta_v";
        return ev;
    }
    ev.verdict = Verdict::Unknown;
    ev.reason = "nonzero in H^2(Delta_v, Z/N); inflation to the local field is not certified";
    if (m.class_id.empty() || !m.to_q)
        return ev;
    for (const auto& cert : ld.certificates) {
        if (cert.class_id != m.class_id || int(cert.cv.size()) != nd)
            continue;
        // the point must come from a cocycle with values in N: q-part of h equals c_v
        bool theta = true;
        for (int s = 0; s < nd && theta; ++s)
            theta = m.to_q(h.h[s]) == cert.cv[s];
        if (theta) {
            ev.verdict = Verdict::NonzeroCertified;
            ev.reason = "class inflates nonzero along c_v and the point lies over c_v";
            break;
        }
    }
    return ev;
}

Evaluation evaluate(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal,
                    const LocalDatum& ld, const NonabelianCocycle& h)
{
    require_valid(G, e, gal);
    return evaluate(table_model(G, e, gal), ld, h);
}

BmReport bm_report(const std::vector<EvalModel>& classes, const std::vector<LocalPoints>& data, i64 row_cap)
{
    BmReport rep;
    double rows = 1;
    for (const auto& lp : data) {
        rep.labels.push_back(lp.datum.label);
        rows *= double(lp.points.size());
    }
    check_cap("bm_rows", i64(std::min(rows, 9.0e18)), row_cap);
    const int nc = int(classes.size()), nv = int(data.size());
    // verdict per (class, datum, point)
    std::vector<std::vector<std::vector<Verdict>>> V(nc, std::vector<std::vector<Verdict>>(nv));
    for (int i = 0; i < nc; ++i)
        for (int v = 0; v < nv; ++v)
            for (const auto& h : data[v].points)
                V[i][v].push_back(evaluate(classes[i], data[v].datum, h).verdict);
    std::vector<int> choice(nv, 0);
    if (rows == 0)
        return rep;
    while (true) {
        BmRow row;
        row.choice = choice;
        row.verdict.assign(nc, std::vector<Verdict>(nv));
        bool all_zero = true, excluded = false;
        for (int i = 0; i < nc; ++i) {
            int certified = 0, zero = 0;
            for (int v = 0; v < nv; ++v) {
                Verdict x = V[i][v][choice[v]];
                row.verdict[i][v] = x;
                certified += x == Verdict::NonzeroCertified;
                zero += x == Verdict::Zero;
            }
            all_zero = all_zero && zero == nv;
            excluded = excluded || (certified == 1 && zero == nv - 1);
        }
        row.status = excluded ? RowStatus::Excluded : all_zero ? RowStatus::Admissible : RowStatus::Undetermined;
        rep.rows.push_back(std::move(row));
        int k = 0;
        while (k < nv && ++choice[k] == int(data[k].points.size()))
            choice[k++] = 0;
        if (k == nv)
            break;
    }
    return rep;
}

BmReport bm_report(const FiniteGroup& G, const GaloisDatum& gal, const std::vector<EquivariantExtension>& classes,
                   const std::vector<LocalDatum>& data, const Caps& caps)
{
    std::vector<EvalModel> models;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        require_valid(G, classes[i], gal);
        if (auto w = is_unramified(G, classes[i], gal))
            fail(ErrorKind::PreconditionViolated, "class " + std::to_string(i) + " is ramified",
                 w->condition + ": " + w->detail);
        models.push_back(table_model(G, classes[i], gal));
    }
    std::vector<LocalPoints> pts;
    for (const auto& ld : data)
        pts.push_back({ld, nonabelian_h1(ld, G, gal, caps)});
    return bm_report(models, pts);
}

std::vector<i64> group_ring_witness_generators(const CodedSemidirect& G)
{
    // lifts of the generators 1, 2, 4 of Q, found by a randomized search over sparse lifts
    return {G.encode(ZVec{0, 0, 0, 0, 0, 0, 0}, 1), G.encode(ZVec{0, 0, 1, 5, 0, 0, 0}, 2),
            G.encode(ZVec{0, 7, 0, 0, 7, 4, 0}, 4)};
}

GroupRingWitness group_ring_witness(const Caps& caps)
{
    GroupRingWitness w;
    w.example = build_group_ring_example(2, caps);
    const auto& sd = w.example.sd;
    const i64 e = sd.exponent();
    w.class_cocycle = w.example.a;
    for (auto& v : w.class_cocycle.v)
        v = md(v * w.example.generator_multiple, e);
    w.class_id = std::to_string(w.example.generator_multiple) + "[a]";
    CodedSemidirect C(sd);
    w.subgroup = C.table(group_ring_witness_generators(C), caps.table_order);
    const FiniteGroup& H = w.subgroup.group;
    const int n = H.order();
    std::vector<int> cv(n);
    for (int s = 0; s < n; ++s)
        cv[s] = C.q_part(w.subgroup.codes[s]);
    w.witness = local_witness(sd, w.class_cocycle, H, cv);

    w.gal.N = e;
    w.gal.chi = {1};
    w.gal.action = GroupAction::trivial(1, 1);
    w.datum.label = "witness";
    w.datum.dv = H;
    w.datum.structure.assign(n, 0);
    if (w.witness.verdict == WitnessVerdict::ObstructionWitnessed)
        w.datum.certificates.push_back({w.class_id, cv, w.witness.inflated_coords});
    w.model = subgroup_model(C, w.subgroup, w.class_cocycle, w.gal, w.class_id);
    w.point.h.resize(n);
    for (int s = 0; s < n; ++s)
        w.point.h[s] = s;
    w.base_point.h.assign(n, 0);
    return w;
}

} // namespace brauer
