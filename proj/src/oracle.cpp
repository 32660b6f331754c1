#include "brauer/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace brauer::oracle {

namespace {

std::vector<i64> prime_factors(i64 n)
{
    std::vector<i64> ps;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

i64 ilog(i64 x, i64 p)
{
    i64 k = 0;
    while (x % p == 0 && x > 1) {
        x /= p;
        ++k;
    }
    return k;
}

// tree for propagation along right multiplication by generators
struct Tree {
    std::vector<int> order, parent, sidx;
};

Tree tree_of(const FiniteGroup& G)
{
    Tree t;
    const auto& gens = G.generators();
    t.parent.assign(G.order(), -1);
    t.sidx.assign(G.order(), -1);
    t.order = {0};
    t.parent[0] = 0;
    for (std::size_t i = 0; i < t.order.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            int y = G.mul(t.order[i], gens[k]);
            if (t.parent[y] < 0) {
                t.parent[y] = t.order[i];
                t.sidx[y] = int(k);
                t.order.push_back(y);
            }
        }
    return t;
}

// odometer over k digits base m; returns false after the last
bool next_digits(ZVec& d, i64 m)
{
    for (auto& x : d) {
        if (++x < m)
            return true;
        x = 0;
    }
    return false;
}

} // namespace

std::vector<i64> factors_from_torsion(const std::vector<std::pair<i64, i64>>& killed_by, i64 order)
{
    std::map<i64, i64> cnt(killed_by.begin(), killed_by.end());
    std::vector<std::vector<i64>> parts; // per prime: sizes p^a of cyclic factors
    std::vector<i64> out;
    std::map<int, i64> product; // index from the top -> factor
    for (i64 p : prime_factors(order)) {
        i64 pe = 1, prev = 0;
        std::vector<i64> ge; // ge[j] = # factors with p-part >= p^(j+1)
        for (;;) {
            pe *= p;
            if (order % pe != 0 && cnt.find(pe) == cnt.end())
                break;
            auto it = cnt.find(pe);
            if (it == cnt.end())
                break;
            i64 a = ilog(it->second, p);
            if (a == prev)
                break;
            ge.push_back(a - prev);
            prev = a;
        }
        // number with exactly p^j: ge[j-1] - ge[j]
        std::vector<i64> sizes;
        for (std::size_t j = 0; j < ge.size(); ++j) {
            i64 exact = ge[j] - (j + 1 < ge.size() ? ge[j + 1] : 0);
            i64 pw = 1;
            for (std::size_t t = 0; t <= j; ++t)
                pw *= p;
            for (i64 e = 0; e < exact; ++e)
                sizes.push_back(pw);
        }
        std::sort(sizes.rbegin(), sizes.rend());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            auto& f = product[int(i)];
            f = (f == 0 ? 1 : f) * sizes[i];
        }
    }
    for (auto& [i, f] : product)
        out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> h2_enumerate(const FiniteGroup& G, i64 m)
{
    const int n = G.order();
    const int k = (n - 1) * (n - 1);
    double total = 1;
    for (int i = 0; i < k; ++i)
        total *= double(m);
    if (total > 5e6)
        fail(ErrorKind::CapExceeded, "h2_enumerate too large");
    auto val = [&](const ZVec& d, int g, int h) -> i64 {
        if (g == 0 || h == 0)
            return 0;
        return d[(g - 1) * (n - 1) + (h - 1)];
    };
    std::set<ZVec> Z, B;
    ZVec d(k, 0);
    do {
        bool ok = true;
        for (int g = 1; g < n && ok; ++g)
            for (int h = 1; h < n && ok; ++h)
                for (int l = 1; l < n && ok; ++l)
                    ok = md(val(d, h, l) - val(d, G.mul(g, h), l) + val(d, g, G.mul(h, l)) - val(d, g, h), m) == 0;
        if (ok)
            Z.insert(d);
    } while (next_digits(d, m));
    ZVec b(n - 1, 0);
    do {
        ZVec f(k);
        auto bv = [&](int g) { return g == 0 ? i64(0) : b[g - 1]; };
        for (int g = 1; g < n; ++g)
            for (int h = 1; h < n; ++h)
                f[(g - 1) * (n - 1) + (h - 1)] = md(bv(h) - bv(G.mul(g, h)) + bv(g), m);
        B.insert(f);
    } while (next_digits(b, m));
    i64 order = i64(Z.size() / B.size());
    std::vector<std::pair<i64, i64>> kb;
    for (i64 q = 2; q <= order; ++q) {
        if (order % q)
            continue;
        i64 c = 0;
        for (const auto& z : Z) {
            ZVec w(z);
            for (auto& x : w)
                x = x * q % m;
            c += B.count(w);
        }
        kb.push_back({q, c / i64(B.size())});
    }
    return factors_from_torsion(kb, order);
}

std::vector<i64> h1_enumerate(const FiniteGroup& G, const AbelianModule& M)
{
    const int n = G.order(), r = M.rank();
    const auto& gens = G.generators();
    auto elems = module_elements(M, 1 << 20);
    Tree t = tree_of(G);
    std::set<ZVec> Z, B;
    ZVec pick(gens.size(), 0);
    const i64 ne = i64(elems.size());
    do {
        std::vector<ZVec> a(n, ZVec(r, 0));
        for (std::size_t oi = 1; oi < t.order.size(); ++oi) {
            int h = t.order[oi], p = t.parent[h], k = t.sidx[h];
            ZVec y = M.act(p, elems[pick[k]]);
            for (int i = 0; i < r; ++i)
                y[i] += a[p][i];
            a[h] = M.reduce(y);
        }
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h) {
                ZVec y = M.act(g, a[h]);
                for (int i = 0; i < r; ++i)
                    y[i] += a[g][i];
                ok = M.reduce(y) == a[G.mul(g, h)];
            }
        if (ok) {
            ZVec flat;
            for (auto& v : a)
                flat.insert(flat.end(), v.begin(), v.end());
            Z.insert(flat);
        }
    } while (next_digits(pick, ne));
    for (const auto& x : elems) {
        ZVec flat;
        for (int g = 0; g < n; ++g) {
            ZVec y = M.act(g, x);
            for (int i = 0; i < r; ++i)
                y[i] -= x[i];
            y = M.reduce(y);
            flat.insert(flat.end(), y.begin(), y.end());
        }
        B.insert(flat);
    }
    i64 order = i64(Z.size() / B.size());
    std::vector<std::pair<i64, i64>> kb;
    for (i64 q = 2; q <= order; ++q) {
        if (order % q)
            continue;
        i64 c = 0;
        for (const auto& z : Z) {
            ZVec w(z);
            for (std::size_t u = 0; u < w.size(); ++u)
                w[u] = w[u] * q % M.factors[u % r];
            c += B.count(w);
        }
        kb.push_back({q, c / i64(B.size())});
    }
    return factors_from_torsion(kb, order);
}

ZVec DenseH2::coords(const Cochain& f) const
{
    ZVec x((n - 1) * (n - 1));
    for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h)
            x[(g - 1) * (n - 1) + (h - 1)] = f.s(g, h);
    return S.coords(x);
}

DenseH2 h2_dense(const FiniteGroup& G, i64 m)
{
    const int n = G.order();
    const int U = (n - 1) * (n - 1);
    auto idx = [&](int g, int h) { return (g - 1) * (n - 1) + (h - 1); };
    RowReducer R(U, m);
    ZVec row(U);
    for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h)
            for (int k = 1; k < n; ++k) {
                std::fill(row.begin(), row.end(), 0);
                auto put = [&](int a, int b, i64 s) {
                    if (a && b)
                        row[idx(a, b)] = md(row[idx(a, b)] + s, m);
                };
                put(h, k, 1);
                put(G.mul(g, h), k, -1);
                put(g, G.mul(h, k), 1);
                put(g, h, -1);
                R.add(row);
            }
    std::vector<ZVec> den;
    for (int b = 1; b < n; ++b) {
        ZVec d(U, 0);
        // d(e_b)(g,h) = e_b(h) - e_b(gh) + e_b(g)
        for (int g = 1; g < n; ++g)
            for (int h = 1; h < n; ++h)
                d[idx(g, h)] = md((h == b) - (G.mul(g, h) == b) + (g == b), m);
        den.push_back(d);
    }
    DenseH2 out;
    out.n = n;
    out.S = subquotient(R, den);
    for (const auto& l : out.S.lifts()) {
        Cochain f = Cochain::zero(2, n, 1);
        for (int g = 1; g < n; ++g)
            for (int h = 1; h < n; ++h)
                f.v[std::size_t(g) * n + h] = l[idx(g, h)];
        out.reps.push_back(f);
    }
    return out;
}

std::optional<ZVec> coboundary_search(const FiniteGroup& G, std::span<const i64> chi, const Cochain& beta, i64 m)
{
    const int n = G.order();
    const auto& gens = G.generators();
    double total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i)
        total *= double(m);
    if (total > 5e7)
        fail(ErrorKind::CapExceeded, "coboundary_search too large");
    Tree t = tree_of(G);
    auto X = [&](int g) { return chi.empty() ? i64(1) : chi[g]; };
    ZVec pick(gens.size(), 0), b(n, 0);
    do {
        for (std::size_t oi = 1; oi < t.order.size(); ++oi) {
            int h = t.order[oi], p = t.parent[h], k = t.sidx[h];
            b[h] = md(X(p) * pick[k] + b[p] - beta.s(p, gens[k]), m);
        }
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h)
                ok = md(X(g) * b[h] - b[G.mul(g, h)] + b[g] - beta.s(g, h), m) == 0;
        if (ok)
            return b;
    } while (next_digits(pick, m));
    return std::nullopt;
}

bool dies_in_QZ_search(const FiniteGroup& B, const Cochain& f, i64 N)
{
    i64 e = B.exponent();
    Cochain g = f;
    for (auto& x : g.v)
        x = md(x, N) * e;
    return coboundary_search(B, {}, g, N * e).has_value();
}

std::vector<ZVec> homs_to_cyclic(const FiniteGroup& G, i64 m)
{
    const int n = G.order();
    const auto& gens = G.generators();
    Tree t = tree_of(G);
    std::vector<ZVec> out;
    ZVec pick(gens.size(), 0), phi(n, 0);
    do {
        for (std::size_t oi = 1; oi < t.order.size(); ++oi) {
            int h = t.order[oi], p = t.parent[h], k = t.sidx[h];
            phi[h] = (phi[p] + pick[k]) % m;
        }
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            for (int h = 0; h < n && ok; ++h)
                ok = phi[G.mul(g, h)] == (phi[g] + phi[h]) % m;
        if (ok)
            out.push_back(phi);
    } while (next_digits(pick, m));
    return out;
}

i64 b0_order(const FiniteGroup& G)
{
    const int n = G.order();
    const i64 N = n;
    DenseH2 H = h2_dense(G, N);
    const auto& q = H.S.factors();
    std::set<ZVec> kummer;
    for (const auto& phi : homs_to_cyclic(G, N)) {
        BocksteinPair bp = bockstein(G, phi, N);
        kummer.insert(H.coords(bp.f));
    }
    auto subs = subgroups_bicyclic(G);
    std::vector<SubgroupView> views;
    for (const auto& B : subs)
        if (B.size() > 1)
            views.push_back(subgroup_view(G, B));
    i64 dying = 0;
    ZVec c(q.size(), 0);
    do {
        Cochain f = Cochain::zero(2, n, 1);
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t u = 0; u < f.v.size(); ++u)
                f.v[u] = (f.v[u] + c[i] * H.reps[i].v[u]) % N;
        bool dies = true;
        for (const auto& v : views) {
            if (!dies_in_QZ_search(v.group, restrict_cochain(f, v), N)) {
                dies = false;
                break;
            }
        }
        dying += dies;
        // odometer with per-digit moduli
        std::size_t i = 0;
        for (; i < q.size(); ++i) {
            if (++c[i] < q[i])
                break;
            c[i] = 0;
        }
        if (i == q.size())
            break;
    } while (true);
    return dying / i64(kummer.size());
}

bool galois_condition_search(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, int d,
                             int tau, int gamma)
{
    const i64 N = gal.N, L = N * N;
    using El = std::pair<i64, int>;
    auto mul = [&](El a, El b) -> El { return {md(a.first + b.first + N * e.f.s(a.second, b.second), L), G.mul(a.second, b.second)}; };
    auto pw = [&](El a, i64 k) {
        El r{0, 0};
        for (i64 i = 0; i < k; ++i)
            r = mul(r, a);
        return r;
    };
    auto act = [&](El a) -> El {
        return {md(md(gal.chi[d], L) * a.first + N * e.cval(d, a.second), L), gal.act(d, a.second)};
    };
    const i64 chi = md(gal.chi[d], L);
    const int t = G.element_order(tau);
    const El one{0, 0};
    for (i64 b = 0; b < L; ++b) {
        El x{b, tau};
        if (pw(x, t) != one)
            continue;
        El rhs = pw(x, chi);
        El y = act(x);
        for (i64 mu : {i64(0), i64(1), N + 1}) {
            El g{md(mu, L), gamma};
            // inverse by powering
            El gi = g;
            while (mul(gi, g) != one)
                gi = mul(gi, g);
            if (mul(mul(g, y), gi) == rhs)
                return true;
        }
    }
    return false;
}

// ---- small groups ---------------------------------------------------------

namespace {

using Fingerprint = std::vector<i64>;

Fingerprint fingerprint(const FiniteGroup& G)
{
    const int n = G.order();
    std::vector<int> roots(n, 0);
    for (int x = 0; x < n; ++x)
        ++roots[G.mul(x, x)];
    std::vector<std::array<int, 3>> el;
    int center = 0;
    for (int g = 0; g < n; ++g) {
        int cz = 0;
        for (int x = 0; x < n; ++x)
            cz += G.commute(g, x);
        center += cz == n;
        el.push_back({G.element_order(g), cz, roots[g]});
    }
    std::sort(el.begin(), el.end());
    std::set<int> comm;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            comm.insert(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    std::vector<int> cv(comm.begin(), comm.end());
    Fingerprint f{n, center, i64(closure(G, cv).size())};
    for (auto& e : el)
        f.insert(f.end(), e.begin(), e.end());
    return f;
}

// extend a partial generator assignment to the subgroup it generates;
// false on inconsistency
bool extend_map(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& gens,
                const std::vector<int>& img, std::vector<int>& phi, std::vector<int>& used)
{
    std::fill(phi.begin(), phi.end(), -1);
    std::fill(used.begin(), used.end(), -1);
    phi[0] = 0;
    used[0] = 0;
    std::vector<int> q{0};
    for (std::size_t i = 0; i < q.size(); ++i) {
        int x = q[i];
        for (std::size_t k = 0; k < img.size(); ++k) {
            int y = A.mul(x, gens[k]);
            int v = B.mul(phi[x], img[k]);
            if (phi[y] < 0) {
                if (used[v] >= 0)
                    return false;
                phi[y] = v;
                used[v] = y;
                q.push_back(y);
            } else if (phi[y] != v) {
                return false;
            }
        }
    }
    return true;
}

struct ElemClass {
    int order, cent;
};

std::vector<ElemClass> elem_classes(const FiniteGroup& G)
{
    std::vector<ElemClass> c(G.order());
    for (int g = 0; g < G.order(); ++g) {
        int cz = 0;
        for (int x = 0; x < G.order(); ++x)
            cz += G.commute(g, x);
        c[g] = {G.element_order(g), cz};
    }
    return c;
}

bool iso_search(const FiniteGroup& A, const FiniteGroup& B, const std::vector<ElemClass>& ca,
                const std::vector<ElemClass>& cb, std::vector<int>& img, std::vector<int>& phi, std::vector<int>& used)
{
    const auto& gens = A.generators();
    std::size_t k = img.size();
    if (k == gens.size())
        return true; // extend_map succeeded on all generators, phi is injective on A
    for (int y = 1; y < B.order(); ++y) {
        if (cb[y].order != ca[gens[k]].order || cb[y].cent != ca[gens[k]].cent)
            continue;
        img.push_back(y);
        if (extend_map(A, B, std::vector<int>(gens.begin(), gens.begin() + k + 1), img, phi, used) &&
            iso_search(A, B, ca, cb, img, phi, used))
            return true;
        img.pop_back();
    }
    return false;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& K)
{
    std::vector<std::vector<int>> out;
    const auto& gens = K.generators();
    auto ck = elem_classes(K);
    std::vector<int> img, phi(K.order()), used(K.order());
    // depth-first over generator images
    std::function<void()> rec = [&]() {
        std::size_t k = img.size();
        if (k == gens.size()) {
            out.push_back(phi);
            return;
        }
        for (int y = 0; y < K.order(); ++y) {
            if (ck[y].order != ck[gens[k]].order || ck[y].cent != ck[gens[k]].cent)
                continue;
            img.push_back(y);
            if (extend_map(K, K, std::vector<int>(gens.begin(), gens.begin() + k + 1), img, phi, used))
                rec();
            img.pop_back();
        }
    };
    if (gens.empty())
        out.push_back({0});
    else
        rec();
    return out;
}

// G = <K, t>, t x t^-1 = alpha(x), t^p = k0
FiniteGroup cyclic_extension(const FiniteGroup& K, const std::vector<int>& alpha, int k0, int p)
{
    const int nk = K.order(), n = nk * p;
    // alpha^i
    std::vector<std::vector<int>> ap(p, std::vector<int>(nk));
    for (int x = 0; x < nk; ++x)
        ap[0][x] = x;
    for (int i = 1; i < p; ++i)
        for (int x = 0; x < nk; ++x)
            ap[i][x] = alpha[ap[i - 1][x]];
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = a % nk, i = a / nk, y = b % nk, j = b / nk;
            int z = K.mul(x, ap[i][y]);
            int e = i + j;
            if (e >= p) {
                z = K.mul(z, k0);
                e -= p;
            }
            mul[std::size_t(a) * n + b] = z + nk * e;
        }
    return FiniteGroup::from_table_unchecked(n, std::move(mul));
}

} // namespace

bool isomorphic(const FiniteGroup& A, const FiniteGroup& B)
{
    if (A.order() != B.order())
        return false;
    if (fingerprint(A) != fingerprint(B))
        return false;
    auto ca = elem_classes(A), cb = elem_classes(B);
    std::vector<int> img, phi(A.order()), used(B.order());
    return iso_search(A, B, ca, cb, img, phi, used);
}

bool GroupCollector::add(FiniteGroup G)
{
    Fingerprint f = fingerprint(G);
    auto& b = buckets[f];
    for (int i : b)
        if (isomorphic(groups[i], G))
            return false;
    b.push_back(int(groups.size()));
    groups.push_back(std::move(G));
    return true;
}

void add_cyclic_extensions(const FiniteGroup& K, int p, GroupCollector& col)
{
    const int nk = K.order();
    for (const auto& alpha : automorphisms(K)) {
        // alpha^p
        std::vector<int> a(nk);
        for (int x = 0; x < nk; ++x) {
            int y = x;
            for (int i = 0; i < p; ++i)
                y = alpha[y];
            a[x] = y;
        }
        for (int k0 = 0; k0 < nk; ++k0) {
            if (alpha[k0] != k0)
                continue;
            bool inner = true;
            for (int x = 0; x < nk && inner; ++x)
                inner = a[x] == K.conj(k0, x);
            if (inner)
                col.add(cyclic_extension(K, alpha, k0, p));
        }
    }
}

std::vector<FiniteGroup> small_groups(int n)
{
    static std::map<int, std::vector<FiniteGroup>> memo;
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    if (n == 1)
        return memo[n] = {FiniteGroup()};
    GroupCollector col;
    for (i64 p : prime_factors(n))
        for (const FiniteGroup& K : small_groups(n / int(p)))
            add_cyclic_extensions(K, int(p), col);
    std::vector<FiniteGroup> out = std::move(col.groups);
    // deterministic order: by fingerprint
    std::vector<std::pair<Fingerprint, int>> keyed;
    for (std::size_t i = 0; i < out.size(); ++i)
        keyed.push_back({fingerprint(out[i]), int(i)});
    std::sort(keyed.begin(), keyed.end());
    std::vector<FiniteGroup> sorted;
    for (auto& [f, i] : keyed)
        sorted.push_back(out[i]);
    memo[n] = sorted;
    return sorted;
}

} // namespace brauer::oracle

namespace brauer::oracle {

static std::vector<i64> mat_mul(const std::vector<i64>& A, const std::vector<i64>& B, const std::vector<i64>& nf)
{
    const int r = int(nf.size());
    std::vector<i64> C(std::size_t(r) * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            i64 s = 0;
            for (int k = 0; k < r; ++k)
                s += A[i * r + k] * B[k * r + j];
            C[i * r + j] = md(s, nf[i]);
        }
    return C;
}

std::vector<std::vector<i64>> module_automorphisms(const std::vector<i64>& nf)
{
    AbelianModule M = AbelianModule::trivial(nf, 1);
    auto el = module_elements(M, 4096);
    const int r = int(nf.size());
    const std::size_t n = el.size();
    // admissible image of e_j: killed by nf[j]
    std::vector<std::vector<int>> cand(r);
    for (int j = 0; j < r; ++j)
        for (std::size_t x = 0; x < n; ++x) {
            bool ok = true;
            for (int i = 0; i < r; ++i)
                ok = ok && el[x][i] * nf[j] % nf[i] == 0;
            if (ok)
                cand[j].push_back(int(x));
        }
    std::vector<std::vector<i64>> out;
    std::vector<int> pick(r, 0);
    while (true) {
        std::vector<i64> A(std::size_t(r) * r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i)
                A[i * r + j] = el[cand[j][pick[j]]][i];
        std::vector<char> hit(n, 0);
        std::size_t count = 0;
        for (std::size_t x = 0; x < n; ++x) {
            ZVec y(r, 0);
            for (int i = 0; i < r; ++i) {
                i64 s = 0;
                for (int j = 0; j < r; ++j)
                    s += A[i * r + j] * el[x][j];
                y[i] = md(s, nf[i]);
            }
            i64 k = module_index(M, y);
            if (!hit[k]) {
                hit[k] = 1;
                ++count;
            }
        }
        if (count == n)
            out.push_back(A);
        int j = 0;
        while (j < r && ++pick[j] == int(cand[j].size()))
            pick[j++] = 0;
        if (j == r)
            break;
    }
    return out;
}

std::vector<AbelianModule> module_actions(const std::vector<i64>& qf, const std::vector<i64>& nf, std::size_t limit)
{
    const int r = int(nf.size()), k = int(qf.size());
    auto aut = module_automorphisms(nf);
    std::vector<i64> I(std::size_t(r) * r, 0);
    for (int i = 0; i < r; ++i)
        I[i * r + i] = 1;
    auto power = [&](const std::vector<i64>& A, i64 e) {
        std::vector<i64> P = I;
        for (i64 t = 0; t < e; ++t)
            P = mat_mul(P, A, nf);
        return P;
    };
    std::vector<std::vector<int>> ok(k);
    for (int i = 0; i < k; ++i)
        for (std::size_t a = 0; a < aut.size(); ++a)
            if (power(aut[a], qf[i]) == I)
                ok[i].push_back(int(a));
    FiniteGroup Q = abelian_group(qf);
    std::vector<AbelianModule> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int i) {
        if (out.size() >= limit)
            return;
        if (i == k) {
            AbelianModule M;
            M.factors = nf;
            M.actor_order = Q.order();
            for (int q = 0; q < Q.order(); ++q) {
                int rest = q;
                std::vector<i64> A = I;
                for (int t = 0; t < k; ++t) {
                    A = mat_mul(A, power(aut[pick[t]], rest % qf[t]), nf);
                    rest /= int(qf[t]);
                }
                M.action.push_back(A);
            }
            out.push_back(std::move(M));
            return;
        }
        for (int a : ok[i]) {
            bool commute = true;
            for (int t = 0; t < i && commute; ++t)
                commute = mat_mul(aut[a], aut[pick[t]], nf) == mat_mul(aut[pick[t]], aut[a], nf);
            if (!commute)
                continue;
            pick.push_back(a);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace brauer::oracle

namespace brauer::oracle {

GaloisDatum z2_datum(const FiniteGroup& G, const std::vector<int>& sigma, i64 N, i64 chi)
{
    GaloisDatum gal;
    gal.delta = cyclic_group(2);
    gal.N = N;
    gal.chi = {1, md(chi, N * N)};
    gal.action.actor_order = 2;
    gal.action.target_order = G.order();
    for (int g = 0; g < G.order(); ++g)
        gal.action.table.push_back(g);
    for (int g = 0; g < G.order(); ++g)
        gal.action.table.push_back(sigma[g]);
    validate_galois(G, gal);
    return gal;
}

std::vector<GaloisCase> galois_cases(int maxn, int units)
{
    std::vector<GaloisCase> out;
    for (int n = 2; n <= maxn; ++n)
        for (const auto& G : small_groups(n)) {
            out.push_back({G, GaloisDatum::trivial(G)});
            const i64 L = i64(n) * n;
            std::vector<i64> inv;
            for (i64 c = 2; c < L && int(inv.size()) < units; ++c)
                if (gcd64(c, L) == 1 && c * c % L == 1)
                    inv.push_back(c);
            std::vector<int> id(n), neg(n);
            for (int g = 0; g < n; ++g) {
                id[g] = g;
                neg[g] = G.inv(g);
            }
            for (i64 c : inv) {
                out.push_back({G, z2_datum(G, id, n, c)});
                if (G.is_abelian())
                    out.push_back({G, z2_datum(G, neg, n, c)});
            }
        }
    return out;
}

EquivariantExtension random_valid(const ClassModule& C, std::mt19937_64& rng)
{
    ZVec c(C.factors().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = i64(rng() % C.factors()[i]);
    EquivariantExtension e = C.element(c);
    ZVec b(C.group().order(), 0);
    for (std::size_t g = 1; g < b.size(); ++g)
        b[g] = i64(rng() % C.N());
    return baer_sum(e, coboundary_pair(C.group(), C.galois(), b), C.N());
}

} // namespace brauer::oracle

namespace brauer::oracle {

bool section_search(const ExtensionGroup& X, const FiniteGroup& G, const GaloisDatum& gal, const Subgroup& H,
                    const Subgroup& Dsub)
{
    std::map<int, int> s; // g -> section value index in X
    std::vector<int> elems(H.begin(), H.end());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == elems.size())
            return true;
        int g = elems[i];
        for (i64 l = 0; l < X.N; ++l) {
            if (g == 0 && l != 0)
                break;
            s[g] = X.index(l, g);
            bool ok = true;
            for (auto& [a, sa] : s) {
                for (auto& [b, sb] : s) {
                    auto it = s.find(G.mul(a, b));
                    if (it != s.end() && X.group.mul(sa, sb) != it->second) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    break;
                for (int d : Dsub) {
                    auto it = s.find(gal.act(d, a));
                    if (it != s.end() && X.action.act(d, sa) != it->second) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (ok && rec(i + 1))
                return true;
            s.erase(g);
        }
        return false;
    };
    return rec(0);
}

bool lifts_to_extension(const ExtensionGroup& E, const FiniteGroup& D, const std::vector<int>& structure,
                        const std::vector<i64>& h)
{
    const auto& gens = D.generators();
    ZVec lam(gens.size(), 0);
    do {
        std::vector<int> x(D.order(), -1);
        x[0] = 0;
        std::vector<int> q{0};
        bool ok = true;
        for (std::size_t i = 0; i < q.size() && ok; ++i)
            for (std::size_t k = 0; k < gens.size() && ok; ++k) {
                int s = q[i], y = D.mul(s, gens[k]);
                int xg = E.index(lam[k], int(h[gens[k]]));
                int v = E.group.mul(x[s], E.action.act(structure[s], xg));
                if (x[y] < 0) {
                    x[y] = v;
                    q.push_back(y);
                } else {
                    ok = x[y] == v;
                }
            }
        for (int s = 0; s < D.order() && ok; ++s)
            for (int t = 0; t < D.order() && ok; ++t)
                ok = x[D.mul(s, t)] == E.group.mul(x[s], E.action.act(structure[s], x[t]));
        if (ok)
            return true;
    } while (next_digits(lam, E.N));
    return false;
}

} // namespace brauer::oracle
