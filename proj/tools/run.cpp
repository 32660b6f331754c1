#include "run.hpp"

#include "brauer/engine.hpp"

using namespace brauer;

namespace cli {

namespace {

std::string vec_str(const std::vector<i64>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s + "]";
}

void print_extension(std::ostream& out, const std::string& name, const EquivariantExtension& e, int nd)
{
    const int n = e.f.n;
    out << name << ".f\n";
    for (int g = 0; g < n; ++g) {
        out << "  ";
        for (int h = 0; h < n; ++h)
            out << (h ? " " : "") << e.f.s(g, h);
        out << "\n";
    }
    bool any = false;
    for (i64 x : e.c)
        any = any || x != 0;
    if (!any) {
        out << name << ".c = 0\n";
        return;
    }
    out << name << ".c\n";
    for (int d = 0; d < nd; ++d) {
        out << "  ";
        for (int g = 0; g < n; ++g)
            out << (g ? " " : "") << e.cval(d, g);
        out << "\n";
    }
}

void print_report(std::ostream& out, const std::string& title, const BrauerReport& r, int nd, bool b0_fields = false)
{
    out << title << " = " << r.str() << "\n";
    if (b0_fields) {
        out << "H^2(G, Z/N) = " << factors_str(r.ambient) << "\n";
        out << "Bockstein subgroup = " << factors_str(r.kummer) << "\n";
        out << "dying on bicyclic subgroups in Q/Z = " << factors_str(r.quotient) << "\n";
    } else {
        out << "class module = " << factors_str(r.ambient) << "\n";
        out << "Kummer subgroup = " << factors_str(r.kummer) << "\n";
        out << "class module / Kummer = " << factors_str(r.quotient) << "\n";
    }
    out << "method = " << r.method << ", classes tested " << r.tested << ", unramified " << r.passed << "\n";
    if (r.first_failure)
        out << "rejected: " << r.first_failure->condition << ": " << r.first_failure->detail << "\n";
    for (std::size_t i = 0; i < r.reps.size(); ++i)
        print_extension(out, "generator " + std::to_string(i), r.reps[i], nd);
}

void print_cocycle1(std::ostream& out, const std::string& name, const Cochain& a)
{
    out << name << "\n";
    for (int q = 0; q < a.n; ++q)
        out << "  q=" << q << ": " << vec_str(std::vector<i64>(a.at(q), a.at(q) + a.r)) << "\n";
}

void run_sha1bic(Job& job, std::ostream& out)
{
    if (!job.group.sd)
        fail(ErrorKind::ValidationError, "sha1bic needs a semidirect or group_ring group", "group.kind");
    const auto& sd = *job.group.sd;
    ShaGroup S = sha1_bic(sd);
    out << "|Q| = " << sd.Q.order() << ", N = " << factors_str(sd.N.factors) << "\n";
    out << "H^1(Q, dual) = " << factors_str(S.ambient.factors()) << "\n";
    if (job.group.ring) {
        const auto& ex = *job.group.ring;
        ZVec ca = S.ambient.coordinates(ex.a);
        const auto& q = S.ambient.factors();
        // least k with k[a] generating Sha
        i64 k = 0;
        const i64 top = q.empty() ? 1 : q.back();
        for (i64 t = 1; t <= top && !k; ++t) {
            ZVec v(ca.size());
            for (std::size_t i = 0; i < ca.size(); ++i)
                v[i] = md(t * ca[i], q[i]);
            std::vector<ZVec> with = S.gen_coords;
            with.push_back(v);
            if (generated_subgroup(q, with) == S.factors && generated_subgroup(q, {v}) == S.factors)
                k = t;
        }
        out << "[a] coordinates = " << vec_str(ca) << "\n";
        if (S.factors.empty())
            out << "Sha^1_bic = 0\n";
        else if (k)
            out << "Sha^1_bic = " << S.str() << ", generator = " << k << "·[a]\n";
        else
            out << "Sha^1_bic = " << S.str() << "\n";
        out << "expected: H^1 = " << factors_str(ex.expected_h1) << ", Sha^1_bic = " << factors_str(ex.expected_sha)
            << ", generator = " << ex.generator_multiple << "·[a]\n";
        return;
    }
    out << "Sha^1_bic = " << S.str() << "\n";
    out << "B_0(N x| Q) = " << S.str() << "\n";
    for (std::size_t i = 0; i < S.reps.size(); ++i)
        print_cocycle1(out, "generator " + std::to_string(i) + " (coordinates " + vec_str(S.gen_coords[i]) + ")",
                       S.reps[i]);
}

// classes k [a] for the group ring example
struct RingClass {
    std::string id;
    Cochain a;
};

std::vector<RingClass> ring_classes(const Job& job, const ShaGroup& S)
{
    const auto& ex = *job.group.ring;
    const i64 e = ex.sd.exponent();
    std::vector<i64> ks = job.multiples.empty() ? std::vector<i64>{ex.generator_multiple} : job.multiples;
    std::vector<RingClass> out;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        RingClass c;
        c.id = std::to_string(ks[i]) + "[a]";
        c.a = ex.a;
        for (auto& v : c.a.v)
            v = md(v * ks[i], e);
        ZVec x = S.ambient.coordinates(c.a);
        std::vector<ZVec> with = S.gen_coords;
        with.push_back(x);
        if (generated_subgroup(S.ambient.factors(), with) != S.factors)
            fail(ErrorKind::ValidationError, "class " + c.id + " is not in Sha^1_bic, so it is ramified",
                 "options.classes[" + std::to_string(i) + "]");
        out.push_back(std::move(c));
    }
    return out;
}

struct Prepared {
    std::vector<std::string> class_ids;
    std::vector<EvalModel> models;
    std::vector<LocalPoints> data;
    std::vector<std::vector<std::string>> point_names;
};

Prepared prepare_ring(Job& job, std::ostream& out)
{
    if (job.group.ring->p != 2)
        fail(ErrorKind::PreconditionViolated, "local evaluation for the group ring example is available for p = 2 only",
             "group.p");
    GroupRingWitness w = group_ring_witness(job.caps);
    ShaGroup S = sha1_bic(w.example.sd);
    auto classes = ring_classes(job, S);
    CodedSemidirect C(w.example.sd);
    Prepared P;
    LocalDatum ld = w.datum;
    ld.certificates.clear();
    out << "Delta_v: subgroup of N x| Q of order " << w.subgroup.group.order() << " generated by codes "
        << vec_str(group_ring_witness_generators(C)) << "\n";
    const int n = w.subgroup.group.order();
    std::vector<int> cv(n);
    for (int s = 0; s < n; ++s)
        cv[s] = C.q_part(w.subgroup.codes[s]);
    for (const auto& c : classes) {
        LocalWitness lw = c.id == w.class_id ? w.witness : local_witness(w.example.sd, c.a, w.subgroup.group, cv);
        out << "class " << c.id << ": inflation to Delta_v " << vec_str(lw.inflated_coords) << ", "
            << verdict_name(lw.verdict) << ", cup pair " << verdict_name(lw.pair) << "\n";
        if (lw.verdict == WitnessVerdict::ObstructionWitnessed)
            ld.certificates.push_back({c.id, cv, lw.inflated_coords});
        P.class_ids.push_back(c.id);
        P.models.push_back(subgroup_model(C, w.subgroup, c.a, w.gal, c.id));
    }
    for (const auto& l : job.local) {
        LocalDatum d = ld;
        d.label = l.label;
        P.data.push_back({d, {w.base_point, w.point}});
        P.point_names.push_back({"base point", "inclusion of Delta_v"});
    }
    return P;
}

Prepared prepare_table(Job& job, std::ostream& out)
{
    const FiniteGroup& G = group_table(job);
    GaloisDatum gal = galois_datum(job);
    BrauerReport r = br_nr(G, gal, job.caps);
    out << "Br_nr = " << r.str() << "\n";
    Prepared P;
    for (std::size_t i = 0; i < r.reps.size(); ++i) {
        P.class_ids.push_back("generator " + std::to_string(i));
        P.models.push_back(table_model(G, r.reps[i], gal));
    }
    for (const auto& l : job.local) {
        LocalDatum d{l.label, l.dv, l.structure, {}};
        try {
            validate_local(d, gal);
        } catch (const Error& e) {
            fail(ErrorKind::ValidationError, "local datum " + l.label + ": " + e.what(), e.witness());
        }
        auto pts = nonabelian_h1(d, G, gal, job.caps);
        std::vector<std::string> names;
        for (const auto& h : pts)
            names.push_back("h = " + vec_str(h.h));
        P.data.push_back({d, std::move(pts)});
        P.point_names.push_back(std::move(names));
    }
    return P;
}

Prepared prepare(Job& job, std::ostream& out)
{
    if (job.local.empty())
        fail(ErrorKind::ValidationError, "this task needs at least one local record", "local");
    return job.group.ring ? prepare_ring(job, out) : prepare_table(job, out);
}

void run_evaluate(Job& job, std::ostream& out)
{
    Prepared P = prepare(job, out);
    for (std::size_t v = 0; v < P.data.size(); ++v) {
        out << "place " << P.data[v].datum.label << ": |Delta_v| = " << P.data[v].datum.dv.order() << ", "
            << P.data[v].points.size() << " local classes\n";
        for (std::size_t i = 0; i < P.models.size(); ++i)
            for (std::size_t k = 0; k < P.data[v].points.size(); ++k) {
                Evaluation ev = evaluate(P.models[i], P.data[v].datum, P.data[v].points[k]);
                out << "  " << P.class_ids[i] << " at point " << k << " (" << P.point_names[v][k]
                    << "): " << verdict_name(ev.verdict) << " (" << ev.reason << ")\n";
            }
    }
}

void run_bmreport(Job& job, std::ostream& out)
{
    Prepared P = prepare(job, out);
    BmReport rep = bm_report(P.models, P.data);
    out << "places:";
    for (const auto& l : rep.labels)
        out << " " << l;
    out << "\n";
    int excluded = 0, admissible = 0;
    for (const auto& row : rep.rows) {
        out << "row (";
        for (std::size_t v = 0; v < row.choice.size(); ++v)
            out << (v ? "," : "") << row.choice[v];
        out << ") " << status_name(row.status);
        for (std::size_t i = 0; i < row.verdict.size(); ++i) {
            out << " | " << P.class_ids[i] << ":";
            for (Verdict x : row.verdict[i])
                out << " " << verdict_name(x);
        }
        out << "\n";
        excluded += row.status == RowStatus::Excluded;
        admissible += row.status == RowStatus::Admissible;
    }
    out << "rows " << rep.rows.size() << ", admissible " << admissible << ", excluded " << excluded << "\n";
}

} // namespace

void run_job(Job& job, std::ostream& out)
{
    out << "task: " << task_name(job.task) << "\n";
    switch (job.task) {
    case Task::B0: {
        const FiniteGroup& G = group_table(job);
        out << "|G| = " << G.order() << "\n";
        BrauerReport r = b0(G, job.caps);
        print_report(out, "B_0", r, 1, true);
        break;
    }
    case Task::BrNr: {
        const FiniteGroup& G = group_table(job);
        GaloisDatum gal = galois_datum(job);
        out << "|G| = " << G.order() << ", |Delta| = " << gal.nd() << ", N = " << gal.N << "\n";
        print_report(out, "Br_nr", br_nr(G, gal, job.caps), gal.nd());
        break;
    }
    case Task::Algebraic: {
        const FiniteGroup& G = group_table(job);
        GaloisDatum gal = galois_datum(job);
        out << "|G| = " << G.order() << ", |Delta| = " << gal.nd() << ", N = " << gal.N << "\n";
        print_report(out, "Br_nr,alg", algebraic_unramified(G, gal, job.caps), gal.nd());
        break;
    }
    case Task::Sha2Ab: {
        const FiniteGroup& G = group_table(job);
        out << "|G| = " << G.order() << "\n";
        out << "Sha^2_ab(G, Z/" << job.m << ") = " << factors_str(sha2_ab(G, job.m, job.caps)) << "\n";
        break;
    }
    case Task::Sha1Bic: run_sha1bic(job, out); break;
    case Task::Evaluate: run_evaluate(job, out); break;
    case Task::BmReport: run_bmreport(job, out); break;
    }
}

} // namespace cli
