#include "job.hpp"

#include <algorithm>

using namespace brauer;

namespace cli {

const char* task_name(Task t)
{
    switch (t) {
    case Task::B0: return "b0";
    case Task::BrNr: return "brnr";
    case Task::Sha1Bic: return "sha1bic";
    case Task::Algebraic: return "algebraic";
    case Task::Evaluate: return "evaluate";
    case Task::BmReport: return "bmreport";
    default: return "sha2ab";
    }
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what)
{
    fail(ErrorKind::ValidationError, path + ": " + what, path);
}

const json& need(const json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object())
        bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        bad(path + "." + key, "missing");
    return *it;
}

i64 as_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        bad(path, "expected an integer");
    return j.get<i64>();
}

std::vector<i64> as_ints(const json& j, const std::string& path)
{
    if (!j.is_array())
        bad(path, "expected an array of integers");
    std::vector<i64> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<i64>> as_matrix(const json& j, const std::string& path)
{
    if (!j.is_array())
        bad(path, "expected an array of arrays");
    std::vector<std::vector<i64>> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_ints(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<int> narrow(const std::vector<i64>& v)
{
    return std::vector<int>(v.begin(), v.end());
}

std::vector<std::vector<int>> narrow(const std::vector<std::vector<i64>>& m)
{
    std::vector<std::vector<int>> out;
    for (const auto& r : m)
        out.push_back(narrow(r));
    return out;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path)
{
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
            bad(path + "." + it.key(), "unknown field");
}

// table, permutations or abelian; canonical record returned through canon_json
FiniteGroup plain_group(const json& j, const std::string& path, const Caps& caps, json& canon_json)
{
    std::string kind = need(j, "kind", path).is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "table") {
        check_keys(j, {"kind", "table"}, path);
        auto t = as_matrix(need(j, "table", path), path + ".table");
        check_cap("table_order", i64(t.size()), caps.table_order);
        canon_json = {{"kind", kind}, {"table", t}};
        return group_from_table(narrow(t));
    }
    if (kind == "permutations") {
        check_keys(j, {"kind", "degree", "generators"}, path);
        i64 deg = as_int(need(j, "degree", path), path + ".degree");
        auto gens = as_matrix(need(j, "generators", path), path + ".generators");
        if (deg < 1 || deg > 4096)
            bad(path + ".degree", "must lie in [1, 4096]");
        canon_json = {{"kind", kind}, {"degree", deg}, {"generators", gens}};
        FiniteGroup G = group_from_permutations(narrow(gens), int(deg), caps.closure);
        check_cap("table_order", G.order(), caps.table_order);
        return G;
    }
    if (kind == "abelian") {
        check_keys(j, {"kind", "factors"}, path);
        auto f = as_ints(need(j, "factors", path), path + ".factors");
        double n = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 1)
                bad(path + ".factors[" + std::to_string(i) + "]", "must be positive");
            n *= double(f[i]);
        }
        check_cap("table_order", i64(std::min(n, 9e18)), caps.table_order);
        canon_json = {{"kind", kind}, {"factors", f}};
        return abelian_group(f);
    }
    bad(path + ".kind", "expected table, permutations or abelian");
}

GroupRecord group_record(const json& j, const Caps& caps)
{
    GroupRecord g;
    const std::string path = "group";
    const json& k = need(j, "kind", path);
    if (!k.is_string())
        bad(path + ".kind", "expected a string");
    g.kind = k.get<std::string>();
    if (g.kind == "semidirect") {
        check_keys(j, {"kind", "q", "n", "action"}, path);
        auto qf = as_ints(need(j, "q", path), path + ".q");
        auto nf = as_ints(need(j, "n", path), path + ".n");
        auto act = need(j, "action", path);
        if (!act.is_array() || act.size() != qf.size())
            bad(path + ".action", "expected one matrix per factor of q");
        for (std::size_t i = 0; i < qf.size(); ++i)
            if (qf[i] < 1)
                bad(path + ".q[" + std::to_string(i) + "]", "must be positive");
        for (std::size_t i = 0; i < nf.size(); ++i)
            if (nf[i] < 2)
                bad(path + ".n[" + std::to_string(i) + "]", "must be at least 2");
        const int r = int(nf.size());
        std::vector<std::vector<i64>> mats;
        for (std::size_t i = 0; i < qf.size(); ++i) {
            std::string p = path + ".action[" + std::to_string(i) + "]";
            auto M = as_matrix(act[i], p);
            if (int(M.size()) != r)
                bad(p, "expected " + std::to_string(r) + " rows");
            std::vector<i64> flat;
            for (std::size_t row = 0; row < M.size(); ++row) {
                if (int(M[row].size()) != r)
                    bad(p + "[" + std::to_string(row) + "]", "expected " + std::to_string(r) + " entries");
                for (std::size_t c = 0; c < M[row].size(); ++c)
                    flat.push_back(md(M[row][c], nf[row]));
            }
            mats.push_back(flat);
        }
        double nq = 1;
        for (i64 q : qf)
            nq *= double(q);
        check_cap("table_order", i64(std::min(nq, 9e18)), caps.table_order);
        FiniteGroup Q = abelian_group(qf);
        AbelianModule N;
        N.factors = nf;
        N.actor_order = Q.order();
        N.action.assign(Q.order(), {});
        // q = sum k_i e_i acts by prod A_i^{k_i}
        for (int q = 0; q < Q.order(); ++q) {
            std::vector<i64> A(std::size_t(r) * r, 0);
            for (int i = 0; i < r; ++i)
                A[std::size_t(i) * r + i] = 1;
            int t = q;
            for (std::size_t i = 0; i < qf.size(); ++i) {
                int k = int(t % qf[i]);
                t /= int(qf[i]);
                for (int s = 0; s < k; ++s) {
                    std::vector<i64> B(std::size_t(r) * r, 0);
                    for (int x = 0; x < r; ++x)
                        for (int y = 0; y < r; ++y)
                            for (int z = 0; z < r; ++z)
                                B[std::size_t(x) * r + y] += A[std::size_t(x) * r + z] * mats[i][std::size_t(z) * r + y];
                    for (int x = 0; x < r; ++x)
                        for (int y = 0; y < r; ++y)
                            B[std::size_t(x) * r + y] = md(B[std::size_t(x) * r + y], nf[x]);
                    A = std::move(B);
                }
            }
            N.action[q] = std::move(A);
        }
        g.sd = semidirect_datum(Q, N);
        std::vector<std::vector<std::vector<i64>>> canon;
        for (const auto& M : mats) {
            std::vector<std::vector<i64>> rows(r);
            for (int x = 0; x < r; ++x)
                rows[x].assign(M.begin() + std::size_t(x) * r, M.begin() + std::size_t(x + 1) * r);
            canon.push_back(rows);
        }
        g.canon_json = {{"kind", g.kind}, {"q", qf}, {"n", nf}, {"action", canon}};
        return g;
    }
    if (g.kind == "group_ring") {
        check_keys(j, {"kind", "p"}, path);
        i64 p = as_int(need(j, "p", path), path + ".p");
        g.ring = build_group_ring_example(int(p), caps);
        g.sd = g.ring->sd;
        g.canon_json = {{"kind", g.kind}, {"p", p}};
        return g;
    }
    g.table = plain_group(j, path, caps, g.canon_json);
    return g;
}

Task task_of(const json& j)
{
    if (!j.is_string())
        bad("task", "expected a string");
    const std::string s = j.get<std::string>();
    for (Task t : {Task::B0, Task::BrNr, Task::Sha1Bic, Task::Algebraic, Task::Evaluate, Task::BmReport, Task::Sha2Ab})
        if (s == task_name(t))
            return t;
    bad("task", "unknown task '" + s + "'");
}

std::string position(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + " column " + std::to_string(col);
}

} // namespace

Job parse_job(const std::string& text, const Caps& base)
{
    json doc;
    try {
        doc = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        std::string where = position(text, e.byte);
        fail(ErrorKind::ParseError, "malformed job file", where);
    }
    if (!doc.is_object())
        bad("job", "expected an object with group, task and optional galois, local, options");
    check_keys(doc, {"group", "galois", "local", "task", "options", "caps"}, "job");

    Job job;
    job.caps = base;
    if (doc.contains("caps")) {
        const json& c = doc["caps"];
        if (!c.is_object())
            bad("caps", "expected an object");
        for (auto it = c.begin(); it != c.end(); ++it)
            if (!job.caps.set(it.key(), as_int(it.value(), "caps." + it.key())))
                bad("caps." + it.key(), "unknown cap");
    }
    job.task = task_of(need(doc, "task", "job"));
    job.group = group_record(need(doc, "group", "job"), job.caps);

    if (doc.contains("options")) {
        const json& o = doc["options"];
        if (!o.is_object())
            bad("options", "expected an object");
        check_keys(o, {"m", "classes"}, "options");
        if (o.contains("m"))
            job.m = as_int(o["m"], "options.m");
        if (o.contains("classes"))
            job.multiples = as_ints(o["classes"], "options.classes");
    }
    if (job.task == Task::Sha2Ab && job.m < 1)
        bad("options.m", "sha2ab needs a positive coefficient modulus");

    if (doc.contains("galois")) {
        const json& g = doc["galois"];
        if (!g.is_object())
            bad("galois", "expected an object");
        check_keys(g, {"N", "delta", "chi", "action", "base_algebraically_closed"}, "galois");
        i64 N = as_int(need(g, "N", "galois"), "galois.N");
        if (N < 1 || N > 3037000499)
            bad("galois.N", "must be positive with N^2 representable");
        json canon = {{"N", N}};
        json dcanon = {{"kind", "table"}, {"table", std::vector<std::vector<int>>{{0}}}};
        int nd = 1;
        if (g.contains("delta")) {
            FiniteGroup D = plain_group(g["delta"], "galois.delta", job.caps, dcanon);
            nd = D.order();
        }
        canon["delta"] = dcanon;
        std::vector<i64> chi{1};
        if (g.contains("chi"))
            chi = as_ints(g["chi"], "galois.chi");
        if (int(chi.size()) != nd)
            bad("galois.chi", "expected " + std::to_string(nd) + " entries, one per element of delta");
        const i64 N2 = N * N;
        for (int d = 0; d < nd; ++d) {
            i64 x = md(chi[d], N2);
            if (gcd64(x, N2) != 1)
                bad("galois.chi[" + std::to_string(d) + "]",
                    std::to_string(chi[d]) + " is not a unit mod N^2 = " + std::to_string(N2));
            chi[d] = x;
        }
        canon["chi"] = chi;
        if (g.contains("action"))
            canon["action"] = as_matrix(g["action"], "galois.action");
        bool closed = false;
        if (g.contains("base_algebraically_closed")) {
            if (!g["base_algebraically_closed"].is_boolean())
                bad("galois.base_algebraically_closed", "expected true or false");
            closed = g["base_algebraically_closed"].get<bool>();
        }
        canon["base_algebraically_closed"] = closed;
        job.galois = canon;
    }

    if (doc.contains("local")) {
        const json& L = doc["local"];
        if (!L.is_array())
            bad("local", "expected an array of local records");
        for (std::size_t i = 0; i < L.size(); ++i) {
            std::string p = "local[" + std::to_string(i) + "]";
            check_keys(L[i], {"label", "delta_v", "structure", "witness"}, p);
            LocalRecord lr;
            const json& lab = need(L[i], "label", p);
            if (!lab.is_string())
                bad(p + ".label", "expected a string");
            lr.label = lab.get<std::string>();
            if (L[i].contains("witness")) {
                if (!L[i]["witness"].is_boolean() || !L[i]["witness"].get<bool>())
                    bad(p + ".witness", "expected true");
                if (job.group.kind != "group_ring")
                    bad(p + ".witness", "the built-in witness exists only for group_ring");
                lr.witness = true;
                lr.canon_json = {{"label", lr.label}, {"witness", true}};
            } else {
                if (job.group.kind == "group_ring")
                    bad(p, "group_ring local data must be the built-in witness");
                json dcanon;
                lr.dv = plain_group(need(L[i], "delta_v", p), p + ".delta_v", job.caps, dcanon);
                std::vector<i64> s(lr.dv.order(), 0);
                if (L[i].contains("structure"))
                    s = as_ints(L[i]["structure"], p + ".structure");
                lr.structure = narrow(s);
                lr.canon_json = {{"label", lr.label}, {"delta_v", dcanon}, {"structure", s}};
            }
            job.local.push_back(std::move(lr));
        }
    }
    return job;
}

json canonical(const Job& job)
{
    json j;
    j["task"] = task_name(job.task);
    j["group"] = job.group.canon_json;
    if (job.galois)
        j["galois"] = *job.galois;
    if (!job.local.empty()) {
        j["local"] = json::array();
        for (const auto& l : job.local)
            j["local"].push_back(l.canon_json);
    }
    json o = json::object();
    if (job.m)
        o["m"] = job.m;
    if (!job.multiples.empty())
        o["classes"] = job.multiples;
    if (!o.empty())
        j["options"] = o;
    json c = json::object();
    const Caps def;
    auto d = def.list();
    auto cur = job.caps.list();
    for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i].second != d[i].second)
            c[cur[i].first] = cur[i].second;
    if (!c.empty())
        j["caps"] = c;
    return j;
}

FiniteGroup& group_table(Job& job)
{
    auto& g = job.group;
    if (!g.table) {
        if (g.ring) {
            double n = g.sd->N.size() * g.sd->Q.order();
            check_cap("table_order", i64(std::min(n, 9e18)), job.caps.table_order);
        }
        g.table = semidirect_group(*g.sd, job.caps.table_order).group;
    }
    return *g.table;
}

GaloisDatum galois_datum(Job& job)
{
    FiniteGroup& G = group_table(job);
    if (!job.galois)
        return GaloisDatum::trivial(G);
    const json& g = *job.galois;
    GaloisDatum gal;
    gal.N = g["N"].get<i64>();
    json dcanon;
    Caps caps = job.caps;
    gal.delta = plain_group(g["delta"], "galois.delta", caps, dcanon);
    gal.chi = g["chi"].get<std::vector<i64>>();
    gal.base_algebraically_closed = g["base_algebraically_closed"].get<bool>();
    const int nd = gal.nd(), n = G.order();
    if (g.contains("action")) {
        auto rows = g["action"].get<std::vector<std::vector<i64>>>();
        if (int(rows.size()) != nd)
            bad("galois.action", "expected one row per element of delta");
        gal.action.actor_order = nd;
        gal.action.target_order = n;
        for (int d = 0; d < nd; ++d) {
            if (int(rows[d].size()) != n)
                bad("galois.action[" + std::to_string(d) + "]", "expected " + std::to_string(n) + " entries");
            for (int x = 0; x < n; ++x) {
                if (rows[d][x] < 0 || rows[d][x] >= n)
                    bad("galois.action[" + std::to_string(d) + "][" + std::to_string(x) + "]", "not an element of G");
                gal.action.table.push_back(int(rows[d][x]));
            }
        }
    } else {
        gal.action = GroupAction::trivial(nd, n);
    }
    try {
        validate_galois(G, gal);
    } catch (const Error& e) {
        fail(ErrorKind::ValidationError, std::string("galois: ") + e.what(), e.witness());
    }
    return gal;
}

} // namespace cli
