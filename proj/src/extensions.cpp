#include "brauer/extensions.hpp"

#include <algorithm>

namespace brauer {

std::vector<i64> GaloisDatum::chi_table(i64 m) const
{
    std::vector<i64> t(chi.size());
    for (std::size_t d = 0; d < chi.size(); ++d)
        t[d] = md(chi[d], m);
    return t;
}

GaloisDatum GaloisDatum::trivial(const FiniteGroup& G, i64 N)
{
    GaloisDatum g;
    g.N = N ? N : G.order();
    g.chi = {1};
    g.action = GroupAction::trivial(1, G.order());
    return g;
}

void validate_galois(const FiniteGroup& G, const GaloisDatum& gal)
{
    const int nd = gal.nd();
    const i64 N2 = gal.N * gal.N;
    if (gal.N < 1)
        fail(ErrorKind::InvalidDatum, "N must be positive");
    if (int(gal.chi.size()) != nd)
        fail(ErrorKind::InvalidDatum, "chi table has the wrong length");
    if (md(gal.chi[0], N2) != 1 % N2)
        fail(ErrorKind::InvalidDatum, "chi(1) != 1");
    for (int d = 0; d < nd; ++d) {
        if (gcd64(md(gal.chi[d], N2), N2) != 1)
            fail(ErrorKind::InvalidDatum, "chi value is not a unit", "delta=" + std::to_string(d));
        for (int e = 0; e < nd; ++e)
            if (md(gal.chi[d] * gal.chi[e] - gal.chi[gal.delta.mul(d, e)], N2) != 0)
                fail(ErrorKind::InvalidDatum, "chi is not multiplicative",
                     "(" + std::to_string(d) + "," + std::to_string(e) + ")");
    }
    if (gal.action.actor_order != nd || gal.action.target_order != G.order())
        fail(ErrorKind::InvalidAction, "action table has the wrong shape");
    validate_action(gal.delta, G, gal.action);
}

EquivariantExtension EquivariantExtension::zero(int n, int nd)
{
    EquivariantExtension e;
    e.f = Cochain::zero(2, n, 1);
    e.c.assign(std::size_t(nd) * n, 0);
    return e;
}

const char* law_name(Law l)
{
    switch (l) {
    case Law::Normalization:
        return "normalization";
    case Law::C1:
        return "C1 (cocycle)";
    case Law::C2:
        return "C2 (automorphism)";
    case Law::C3:
        return "C3 (crossed cocycle)";
    }
    return "?";
}

std::optional<Violation> validate(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal)
{
    const int n = G.order(), nd = gal.nd();
    const i64 N = gal.N;
    auto w = [](std::initializer_list<int> xs) {
        std::string s = "(";
        for (int x : xs)
            s += (s.size() > 1 ? "," : "") + std::to_string(x);
        return s + ")";
    };
    if (e.f.n != n || e.c.size() != std::size_t(nd) * n)
        return Violation{Law::Normalization, "table sizes"};
    for (int g = 0; g < n; ++g)
        if (md(e.f.s(0, g), N) || md(e.f.s(g, 0), N))
            return Violation{Law::Normalization, w({0, g})};
    for (int d = 0; d < nd; ++d)
        if (md(e.cval(d, 0), N))
            return Violation{Law::Normalization, w({d, 0})};
    for (int g = 0; g < n; ++g)
        if (md(e.cval(0, g), N))
            return Violation{Law::Normalization, w({0, g})};
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (md(e.f.s(g, h) + e.f.s(G.mul(g, h), k) - e.f.s(g, G.mul(h, k)) - e.f.s(h, k), N))
                    return Violation{Law::C1, w({g, h, k})};
    for (int d = 0; d < nd; ++d) {
        i64 x = gal.chi_mod(d, N);
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (md(e.cval(d, G.mul(g, h)) - e.cval(d, g) - e.cval(d, h) - e.f.s(gal.act(d, g), gal.act(d, h)) +
                           x * e.f.s(g, h),
                       N))
                    return Violation{Law::C2, w({d, g, h})};
    }
    for (int d = 0; d < nd; ++d)
        for (int t = 0; t < nd; ++t)
            for (int g = 0; g < n; ++g)
                if (md(e.cval(gal.delta.mul(d, t), g) - gal.chi_mod(d, N) * e.cval(t, g) - e.cval(d, gal.act(t, g)), N))
                    return Violation{Law::C3, w({d, t, g})};
    return std::nullopt;
}

void require_valid(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal)
{
    if (auto v = validate(G, e, gal))
        fail(ErrorKind::InvalidCocycle, std::string("extension violates ") + law_name(v->law), v->witness);
}

ExtensionGroup extension_group(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, i64 cap)
{
    const int n = G.order(), nd = gal.nd();
    const i64 N = gal.N;
    check_cap("extension_order", N * n, cap);
    ExtensionGroup X;
    X.N = N;
    const int m = int(N * n);
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int g = a / int(N), h = b / int(N);
            t[a][b] = X.index(a % N + b % N + e.f.s(g, h), G.mul(g, h));
        }
    X.group = group_from_table(t);
    X.action.actor_order = nd;
    X.action.target_order = m;
    X.action.table.resize(std::size_t(nd) * m);
    for (int d = 0; d < nd; ++d)
        for (int a = 0; a < m; ++a) {
            int g = a / int(N);
            X.action.table[std::size_t(d) * m + a] =
                X.index(gal.chi_mod(d, N) * (a % N) + e.cval(d, g), gal.act(d, g));
        }
    validate_action(gal.delta, X.group, X.action);
    return X;
}

namespace {

// b' on the view with (f, c) = (d b', chi b' - b' o d); returns -b'
std::optional<ZVec> section(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum* gal, i64 N,
                            i64 m, const Subgroup& H, const Subgroup& Dsub)
{
    SubgroupView v = subgroup_view(G, H);
    const int k = v.group.order();
    const i64 lift = m / N;
    Cochain f = Cochain::zero(2, k, 1);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            f.v[std::size_t(a) * k + b] = md(e.f.s(v.to_parent[a], v.to_parent[b]), N) * lift;
    std::vector<LinearEq> extra;
    if (gal)
        for (int d : Dsub) {
            if (d == 0)
                continue;
            i64 x = gal->chi_mod(d, m);
            for (int a = 1; a < k; ++a) {
                int img = v.from_parent[gal->act(d, v.to_parent[a])];
                if (img < 0)
                    fail(ErrorKind::NotStable, "subgroup is not stable under the Galois action",
                         "delta=" + std::to_string(d) + ", g=" + std::to_string(v.to_parent[a]));
                LinearEq q;
                q.terms = {{a, x}, {img, -1}};
                q.rhs = md(e.cval(d, v.to_parent[a]), N) * lift;
                extra.push_back(std::move(q));
            }
        }
    auto b = solve_coboundary(v.group, {}, f, m, extra);
    if (!b)
        return std::nullopt;
    for (auto& x : *b)
        x = md(-x, m);
    return b;
}

} // namespace

std::optional<ZVec> splits_over(const FiniteGroup& G, const EquivariantExtension& e, i64 N, const Subgroup& H)
{
    return section(G, e, nullptr, N, N, H, {});
}

std::optional<ZVec> splits_equivariantly(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal,
                                         const Subgroup& H, const Subgroup& Dsub, bool lift_to_N2)
{
    if (!is_subgroup(gal.delta, Dsub))
        fail(ErrorKind::NotASubgroup, "Galois subgroup is not a subgroup", subgroup_str(Dsub));
    return section(G, e, &gal, gal.N, lift_to_N2 ? gal.N * gal.N : gal.N, H, Dsub);
}

Pullback pullback(const FiniteGroup& G, const EquivariantExtension& e, const GaloisDatum& gal, const Subgroup& H,
                  const Subgroup& Dsub)
{
    Pullback p;
    p.H = subgroup_view(G, H);
    p.D = subgroup_view(gal.delta, Dsub);
    const int k = p.H.group.order(), kd = p.D.group.order();
    p.gal.delta = p.D.group;
    p.gal.N = gal.N;
    p.gal.base_algebraically_closed = gal.base_algebraically_closed;
    p.gal.action.actor_order = kd;
    p.gal.action.target_order = k;
    p.gal.action.table.resize(std::size_t(kd) * k);
    for (int d = 0; d < kd; ++d) {
        p.gal.chi.push_back(gal.chi[p.D.to_parent[d]]);
        for (int a = 0; a < k; ++a) {
            int img = p.H.from_parent[gal.act(p.D.to_parent[d], p.H.to_parent[a])];
            if (img < 0)
                fail(ErrorKind::NotStable, "subgroup is not stable under the Galois action",
                     "delta=" + std::to_string(p.D.to_parent[d]) + ", g=" + std::to_string(p.H.to_parent[a]));
            p.gal.action.table[std::size_t(d) * k + a] = img;
        }
    }
    p.ext = EquivariantExtension::zero(k, kd);
    p.ext.f = restrict_cochain(e.f, p.H);
    for (int d = 0; d < kd; ++d)
        for (int a = 0; a < k; ++a)
            p.ext.c[std::size_t(d) * k + a] = e.cval(p.D.to_parent[d], p.H.to_parent[a]);
    return p;
}

EquivariantExtension baer_sum(const EquivariantExtension& a, const EquivariantExtension& b, i64 N)
{
    if (a.f.n != b.f.n || a.c.size() != b.c.size())
        fail(ErrorKind::MismatchedBase, "extensions live over different bases");
    EquivariantExtension s = a;
    for (std::size_t u = 0; u < s.f.v.size(); ++u)
        s.f.v[u] = md(a.f.v[u] + b.f.v[u], N);
    for (std::size_t u = 0; u < s.c.size(); ++u)
        s.c[u] = md(a.c[u] + b.c[u], N);
    return s;
}

EquivariantExtension negate(const EquivariantExtension& a, i64 N)
{
    EquivariantExtension s = a;
    for (auto& x : s.f.v)
        x = md(-x, N);
    for (auto& x : s.c)
        x = md(-x, N);
    return s;
}

EquivariantExtension coboundary_pair(const FiniteGroup& G, const GaloisDatum& gal, std::span<const i64> b)
{
    const int n = G.order(), nd = gal.nd();
    const i64 N = gal.N;
    EquivariantExtension e = EquivariantExtension::zero(n, nd);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            e.f.v[std::size_t(g) * n + h] = md(b[h] - b[G.mul(g, h)] + b[g], N);
    for (int d = 0; d < nd; ++d)
        for (int g = 0; g < n; ++g)
            e.c[std::size_t(d) * n + g] = md(gal.chi_mod(d, N) * b[g] - b[gal.act(d, g)], N);
    return e;
}

// ---- class module ----------------------------------------------------------

ClassModule::ClassModule(const FiniteGroup& G, const GaloisDatum& gal, i64 cap)
    : gal_(gal), P_((check_cap("h2_base", G.order(), cap), G), AbelianModule::trivial({gal.N}, G.order()), 2)
{
    const int n = G.order(), nd = gal.nd();
    const i64 N = gal.N;
    Uf_ = P_.unknowns();
    cidx_.assign(std::size_t(nd) * n, -1);
    W_ = Uf_;
    for (int d = 1; d < nd; ++d)
        for (int g = 1; g < n; ++g)
            cidx_[std::size_t(d) * n + g] = W_++;
    R_ = std::make_unique<RowReducer>(W_, N);
    RowReducer& R = *R_;
    P_.add_equations(R, 0);
    ZVec row(W_);
    auto addf = [&](int g, int h, i64 s) {
        const i64* F = P_.form(g, h);
        for (int u = 0; u < Uf_; ++u)
            if (F[u])
                row[u] = md(row[u] + s * F[u], N);
    };
    auto addc = [&](int d, int g, i64 s) {
        int j = cidx_[std::size_t(d) * n + g];
        if (j >= 0)
            row[j] = md(row[j] + s, N);
    };
    // C2 for generators of Delta; C3 for all pairs carries it to the rest
    for (int d : gal.delta.generators()) {
        i64 x = gal.chi_mod(d, N);
        for (int g = 1; g < n; ++g)
            for (int h = 1; h < n; ++h) {
                std::fill(row.begin(), row.end(), 0);
                addc(d, G.mul(g, h), 1);
                addc(d, g, -1);
                addc(d, h, -1);
                addf(gal.act(d, g), gal.act(d, h), -1);
                addf(g, h, x);
                R.add(row);
            }
    }
    for (int d = 1; d < nd; ++d)
        for (int t = 1; t < nd; ++t)
            for (int g = 1; g < n; ++g) {
                std::fill(row.begin(), row.end(), 0);
                addc(gal.delta.mul(d, t), g, 1);
                addc(t, g, -gal.chi_mod(d, N));
                addc(d, gal.act(t, g), -1);
                R.add(row);
            }
    ZVec b(n, 0);
    for (int h = 1; h < n; ++h) {
        b[h] = 1;
        den_.push_back(params(coboundary_pair(G, gal, b)));
        b[h] = 0;
    }
    S_ = subquotient(R, den_);
    for (const auto& l : S_.lifts())
        reps_.push_back(table(l));
}

ZVec ClassModule::params(const EquivariantExtension& e) const
{
    ZVec x = P_.params(e.f);
    x.resize(W_, 0);
    for (std::size_t u = 0; u < cidx_.size(); ++u)
        if (cidx_[u] >= 0)
            x[cidx_[u]] = md(e.c[u], gal_.N);
    return x;
}

EquivariantExtension ClassModule::table(std::span<const i64> x) const
{
    EquivariantExtension e;
    e.f = P_.table(x.subspan(0, Uf_));
    e.c.assign(cidx_.size(), 0);
    for (std::size_t u = 0; u < cidx_.size(); ++u)
        if (cidx_[u] >= 0)
            e.c[u] = md(x[cidx_[u]], gal_.N);
    return e;
}

AbelianStructure ClassModule::quotient(const std::vector<ZVec>& extra) const
{
    std::vector<ZVec> den = den_;
    den.insert(den.end(), extra.begin(), extra.end());
    return subquotient(*R_, den);
}

// ---- Kummer part -----------------------------------------------------------

std::vector<ZVec> equivariant_characters(const FiniteGroup& G, const GaloisDatum& gal)
{
    const int n = G.order();
    const i64 N = gal.N;
    CocycleParam P(G, AbelianModule::trivial({N}, n), 1);
    const int U = P.unknowns();
    RowReducer R(U, N);
    P.add_equations(R, 0);
    ZVec row(U);
    for (int d : gal.delta.generators()) {
        i64 x = gal.chi_mod(d, N);
        for (int g : G.generators()) {
            std::fill(row.begin(), row.end(), 0);
            const i64* a = P.form(gal.act(d, g));
            const i64* b = P.form(g);
            for (int u = 0; u < U; ++u)
                row[u] = md(a[u] - x * b[u], N);
            R.add(row);
        }
    }
    KernelBasis K = kernel_basis(R.matrix(), U);
    std::vector<ZVec> out;
    for (const auto& v : K.gens) {
        Cochain c = P.table(v);
        out.push_back(c.v);
    }
    return out;
}

EquivariantExtension kummer_pair(const FiniteGroup& G, const GaloisDatum& gal, std::span<const i64> phi)
{
    BocksteinPair bp = bockstein(G, phi, gal.N, &gal.action, gal.chi);
    EquivariantExtension e;
    e.f = bp.f;
    e.c = bp.c;
    if (e.c.empty())
        e.c.assign(std::size_t(gal.nd()) * G.order(), 0);
    return e;
}

KummerKernel kummer_kernel(const ClassModule& C)
{
    KummerKernel K;
    K.characters = equivariant_characters(C.group(), C.galois());
    for (const auto& phi : K.characters) {
        K.pairs.push_back(kummer_pair(C.group(), C.galois(), phi));
        K.coords.push_back(C.coords(K.pairs.back()));
    }
    K.factors = generated_subgroup(C.factors(), K.coords);
    return K;
}

std::vector<i64> generated_subgroup(const std::vector<i64>& q, const std::vector<ZVec>& gens)
{
    if (q.empty() || gens.empty())
        return {};
    i64 W = 1;
    for (i64 d : q)
        W = lcm64(W, d);
    ZModMatrix A(int(gens.size()), int(q.size()), W);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            A.at(int(i), int(j)) = md(gens[i][j], q[j]) * (W / q[j]);
    std::vector<i64> out;
    for (i64 d : smith(A, 0).diag)
        if (d != 0)
            out.push_back(W / gcd64(d, W));
    std::sort(out.begin(), out.end());
    out.erase(std::remove(out.begin(), out.end(), 1), out.end());
    return out;
}

} // namespace brauer
