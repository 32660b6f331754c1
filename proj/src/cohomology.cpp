#include "brauer/cohomology.hpp"

#include <algorithm>

namespace brauer {

Cochain Cochain::zero(int degree, int n, int r)
{
    Cochain c;
    c.degree = degree;
    c.n = n;
    c.r = r;
    c.v.assign((degree == 2 ? std::size_t(n) * n : std::size_t(n)) * r, 0);
    return c;
}

bool Cochain::is_zero() const
{
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

namespace {

struct BfsTree {
    std::vector<int> order, parent, sidx;
};

BfsTree bfs_tree(const FiniteGroup& G, const std::vector<int>& gens)
{
    BfsTree t;
    const int n = G.order();
    t.parent.assign(n, -1);
    t.sidx.assign(n, -1);
    t.order.push_back(0);
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

} // namespace

// ---- parametrization -----------------------------------------------------

CocycleParam::CocycleParam(const FiniteGroup& G, const AbelianModule& M, int degree, i64 cap)
    : G_(G), M_(M), deg_(degree), n_(G.order()), r_(M.rank()), m_(M.exponent()), gens_(G.generators())
{
    if (degree != 1 && degree != 2)
        fail(ErrorKind::PreconditionViolated, "degree must be 1 or 2");
    if (M.actor_order != n_)
        fail(ErrorKind::InvalidAction, "module actor does not match the group");
    const int S = int(gens_.size());
    U_ = degree == 1 ? S * r_ : (n_ - 1) * S * r_;
    const double cells = degree == 1 ? double(n_) : double(n_) * n_;
    const double need = cells * r_ * U_;
    if (need > double(cap))
        fail(ErrorKind::OrderBound, "cochain coordinates exceed cap", std::to_string(i64(need)));
    L_.assign(std::size_t(need), 0);
    BfsTree t = bfs_tree(G_, gens_);
    const std::size_t blk = std::size_t(r_) * U_;
    if (degree == 1) {
        for (std::size_t oi = 1; oi < t.order.size(); ++oi) {
            int h = t.order[oi], p = t.parent[h], k = t.sidx[h];
            i64* dst = L_.data() + std::size_t(h) * blk;
            const i64* src = L_.data() + std::size_t(p) * blk;
            std::copy(src, src + blk, dst);
            for (int i = 0; i < r_; ++i)
                for (int j = 0; j < r_; ++j) {
                    i64& e = dst[std::size_t(i) * U_ + param_index(0, k, j)];
                    e = md(e + M_.entry(p, i, j), m_);
                }
        }
        return;
    }
    for (int g = 1; g < n_; ++g)
        for (std::size_t oi = 1; oi < t.order.size(); ++oi) {
            int h = t.order[oi], p = t.parent[h], k = t.sidx[h];
            i64* dst = L_.data() + (std::size_t(g) * n_ + h) * blk;
            if (p != 0) {
                const i64* src = L_.data() + (std::size_t(g) * n_ + p) * blk;
                std::copy(src, src + blk, dst);
            }
            // f(g, p s) = f(gp, s) + f(g, p) - g.f(p, s)
            int gp = G_.mul(g, p);
            if (gp != 0)
                for (int i = 0; i < r_; ++i) {
                    i64& e = dst[std::size_t(i) * U_ + param_index(gp, k, i)];
                    e = md(e + 1, m_);
                }
            if (p != 0)
                for (int i = 0; i < r_; ++i)
                    for (int j = 0; j < r_; ++j) {
                        i64 a = M_.entry(g, i, j);
                        if (!a)
                            continue;
                        i64& e = dst[std::size_t(i) * U_ + param_index(p, k, j)];
                        e = md(e - a, m_);
                    }
        }
}

int CocycleParam::param_index(int g, int k, int i) const
{
    const int S = int(gens_.size());
    if (deg_ == 1)
        return k * r_ + i;
    if (g == 0)
        return -1;
    return ((g - 1) * S + k) * r_ + i;
}

void CocycleParam::add_equations(RowReducer& R, int offset) const
{
    const int W = R.cols();
    ZVec row(W, 0), tmp(std::size_t(r_) * U_);
    auto emit = [&]() {
        for (int i = 0; i < r_; ++i) {
            std::fill(row.begin(), row.end(), 0);
            bool nz = false;
            for (int u = 0; u < U_; ++u) {
                i64 v = tmp[std::size_t(i) * U_ + u];
                row[offset + u] = v;
                nz |= v != 0;
            }
            if (nz)
                R.add_scaled(row, m_ / M_.factors[i]);
        }
    };
    auto apply_into = [&](int g, const i64* src, i64 sign) {
        // tmp += sign * A_g * src
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j) {
                i64 a = md(sign * M_.entry(g, i, j), m_);
                if (!a)
                    continue;
                const i64* s = src + std::size_t(j) * U_;
                i64* d = tmp.data() + std::size_t(i) * U_;
                for (int u = 0; u < U_; ++u)
                    if (s[u])
                        d[u] = (d[u] + a * s[u]) % m_;
            }
    };
    auto add_into = [&](const i64* src, i64 sign) {
        for (std::size_t u = 0; u < tmp.size(); ++u)
            if (src[u])
                tmp[u] = md(tmp[u] + sign * src[u], m_);
    };
    for (int s : gens_) {
        if (deg_ == 1) {
            for (int h = 1; h < n_; ++h) {
                std::fill(tmp.begin(), tmp.end(), 0);
                apply_into(s, form(h), 1);
                add_into(form(G_.mul(s, h)), -1);
                add_into(form(s), 1);
                emit();
            }
            continue;
        }
        for (int h = 1; h < n_; ++h)
            for (int k = 1; k < n_; ++k) {
                std::fill(tmp.begin(), tmp.end(), 0);
                apply_into(s, form(h, k), 1);
                add_into(form(G_.mul(s, h), k), -1);
                add_into(form(s, G_.mul(h, k)), 1);
                add_into(form(s, h), -1);
                emit();
            }
    }
}

void CocycleParam::add_scaling(std::vector<ZVec>& denoms, int width, int offset) const
{
    for (int u = 0; u < U_; ++u) {
        i64 d = M_.factors[u % r_];
        if (d == m_)
            continue;
        ZVec v(width, 0);
        v[offset + u] = d;
        denoms.push_back(std::move(v));
    }
}

ZVec CocycleParam::coboundary_params(std::span<const i64> b) const
{
    ZVec x(U_, 0);
    const int S = int(gens_.size());
    if (deg_ == 1) {
        for (int k = 0; k < S; ++k) {
            ZVec y = M_.act(gens_[k], b);
            for (int i = 0; i < r_; ++i)
                x[param_index(0, k, i)] = md(y[i] - b[i], m_);
        }
        return x;
    }
    // (db)(g, s) = g.b(s) - b(gs) + b(g)
    for (int g = 1; g < n_; ++g)
        for (int k = 0; k < S; ++k) {
            int s = gens_[k];
            ZVec y = M_.act(g, b.subspan(std::size_t(s) * r_, r_));
            int gs = G_.mul(g, s);
            for (int i = 0; i < r_; ++i)
                x[param_index(g, k, i)] = md(y[i] - b[std::size_t(gs) * r_ + i] + b[std::size_t(g) * r_ + i], m_);
        }
    return x;
}

ZVec CocycleParam::params(const Cochain& c) const
{
    ZVec x(U_, 0);
    const int S = int(gens_.size());
    if (deg_ == 1) {
        for (int k = 0; k < S; ++k)
            for (int i = 0; i < r_; ++i)
                x[param_index(0, k, i)] = md(c.at(gens_[k])[i], m_);
        return x;
    }
    for (int g = 1; g < n_; ++g)
        for (int k = 0; k < S; ++k)
            for (int i = 0; i < r_; ++i)
                x[param_index(g, k, i)] = md(c.at(g, gens_[k])[i], m_);
    return x;
}

Cochain CocycleParam::table(std::span<const i64> x) const
{
    Cochain c = Cochain::zero(deg_, n_, r_);
    const int cells = deg_ == 1 ? n_ : n_ * n_;
    for (int cell = 0; cell < cells; ++cell) {
        const i64* F = form(cell);
        for (int i = 0; i < r_; ++i) {
            i64 s = 0;
            const i64* f = F + std::size_t(i) * U_;
            for (int u = 0; u < U_; ++u)
                if (f[u])
                    s = (s + f[u] * md(x[u], m_)) % m_;
            c.v[std::size_t(cell) * r_ + i] = s % M_.factors[i];
        }
    }
    return c;
}

bool CocycleParam::is_cocycle(const Cochain& c) const
{
    auto eq = [&](const i64* a, const i64* b) {
        for (int i = 0; i < r_; ++i)
            if (md(a[i] - b[i], M_.factors[i]) != 0)
                return false;
        return true;
    };
    ZVec zero(r_, 0);
    if (deg_ == 1) {
        if (!eq(c.at(0), zero.data()))
            return false;
        for (int g = 0; g < n_; ++g)
            for (int h = 0; h < n_; ++h) {
                ZVec v = M_.act(g, std::span<const i64>(c.at(h), r_));
                for (int i = 0; i < r_; ++i)
                    v[i] += c.at(g)[i];
                if (!eq(v.data(), c.at(G_.mul(g, h))))
                    return false;
            }
        return true;
    }
    for (int g = 0; g < n_; ++g)
        if (!eq(c.at(0, g), zero.data()) || !eq(c.at(g, 0), zero.data()))
            return false;
    for (int g : gens_)
        for (int h = 0; h < n_; ++h)
            for (int k = 0; k < n_; ++k) {
                ZVec v = M_.act(g, std::span<const i64>(c.at(h, k), r_));
                const i64* a = c.at(G_.mul(g, h), k);
                const i64* b = c.at(g, G_.mul(h, k));
                const i64* d = c.at(g, h);
                for (int i = 0; i < r_; ++i)
                    v[i] = v[i] - a[i] + b[i] - d[i];
                if (!eq(v.data(), zero.data()))
                    return false;
            }
    return true;
}

CocycleModel::CocycleModel(const FiniteGroup& G, const AbelianModule& M, int degree, i64 cap) : P_(G, M, degree, cap)
{
    const int U = P_.unknowns(), r = P_.rank(), n = G.order();
    RowReducer R(U, P_.modulus());
    P_.add_equations(R, 0);
    std::vector<ZVec> den;
    if (degree == 1) {
        for (int j = 0; j < r; ++j) {
            ZVec e(r, 0);
            e[j] = 1;
            den.push_back(P_.coboundary_params(e));
        }
    } else {
        ZVec b(std::size_t(n) * r, 0);
        for (int h = 1; h < n; ++h)
            for (int j = 0; j < r; ++j) {
                b[std::size_t(h) * r + j] = 1;
                den.push_back(P_.coboundary_params(b));
                b[std::size_t(h) * r + j] = 0;
            }
    }
    P_.add_scaling(den, U, 0);
    S_ = subquotient(R, den);
}

Cochain CohomologyGroup::element(std::span<const i64> coords) const
{
    return model->table(model->structure().element(coords));
}

CohomologyGroup h1(const FiniteGroup& G, const AbelianModule& M)
{
    CohomologyGroup H;
    H.model = std::make_shared<CocycleModel>(G, M, 1);
    for (const auto& l : H.model->structure().lifts())
        H.reps.push_back(H.model->table(l));
    return H;
}

CohomologyGroup h2(const FiniteGroup& G, const AbelianModule& M, i64 cap)
{
    CohomologyGroup H;
    H.model = std::make_shared<CocycleModel>(G, M, 2, cap);
    for (const auto& l : H.model->structure().lifts())
        H.reps.push_back(H.model->table(l));
    return H;
}

AbelianStructure tate_h0(const FiniteGroup& G, const AbelianModule& M)
{
    const int r = M.rank();
    const i64 e = M.exponent();
    RowReducer R(r, e);
    for (int g : G.generators())
        for (int i = 0; i < r; ++i) {
            ZVec row(r);
            for (int j = 0; j < r; ++j)
                row[j] = md(M.entry(g, i, j) - (i == j), e);
            R.add_scaled(row, e / M.factors[i]);
        }
    std::vector<ZVec> den;
    for (int j = 0; j < r; ++j) {
        ZVec nm(r, 0), ej(r, 0);
        ej[j] = 1;
        for (int g = 0; g < G.order(); ++g) {
            ZVec y = M.act(g, ej);
            for (int i = 0; i < r; ++i)
                nm[i] = md(nm[i] + y[i], e);
        }
        den.push_back(nm);
        if (M.factors[j] != e) {
            ZVec d(r, 0);
            d[j] = M.factors[j];
            den.push_back(d);
        }
    }
    return subquotient(R, den);
}

// ---- restriction and Sha -------------------------------------------------

Cochain restrict_cochain(const Cochain& c, const SubgroupView& H)
{
    const int k = H.group.order();
    Cochain out = Cochain::zero(c.degree, k, c.r);
    for (int a = 0; a < k; ++a) {
        if (c.degree == 1) {
            std::copy(c.at(H.to_parent[a]), c.at(H.to_parent[a]) + c.r, out.at(a));
            continue;
        }
        for (int b = 0; b < k; ++b)
            std::copy(c.at(H.to_parent[a], H.to_parent[b]), c.at(H.to_parent[a], H.to_parent[b]) + c.r,
                      out.at(a, b));
    }
    return out;
}

Cochain restrict_cochain(const Cochain& c, const FiniteGroup& G, const Subgroup& H)
{
    return restrict_cochain(c, subgroup_view(G, H));
}

std::vector<Subgroup> family_subgroups(const FiniteGroup& G, Family f)
{
    switch (f) {
    case Family::Abelian:
        return subgroups_abelian(G);
    case Family::Bicyclic:
        return subgroups_bicyclic(G);
    case Family::Cyclic:
        return subgroups_cyclic(G);
    }
    return {};
}

ShaGroup sha_from(const CohomologyGroup& H, Family family, bool qz)
{
    ShaGroup out;
    out.ambient = H;
    const auto& q = H.factors();
    const int k = int(q.size());
    if (k == 0)
        return out;
    const FiniteGroup& G = H.model->group();
    const AbelianModule& M = H.model->module();
    const int deg = H.model->degree();
    const i64 N = M.exponent();
    if (qz && (deg != 2 || M.rank() != 1))
        fail(ErrorKind::PreconditionViolated, "Q/Z reading needs degree 2 and cyclic coefficients");

    struct Target {
        std::vector<i64> h;
        std::vector<ZVec> coef; // coef[i][j]
    };
    std::vector<Target> targets;
    i64 W = 1;
    for (i64 d : q)
        W = lcm64(W, d);
    for (const auto& B : family_subgroups(G, family)) {
        if (B.size() == 1)
            continue;
        SubgroupView view = subgroup_view(G, B);
        i64 e = view.group.exponent();
        AbelianModule MB = qz ? AbelianModule::trivial({N * e}, view.group.order())
                              : pull_module(M, view.to_parent);
        CocycleModel model(view.group, MB, deg);
        const auto& hf = model.structure().factors();
        if (hf.empty())
            continue;
        Target t;
        t.h = hf;
        for (int i = 0; i < k; ++i) {
            Cochain rc = restrict_cochain(H.reps[i], view);
            if (qz)
                for (auto& x : rc.v)
                    x = x * e % (N * e);
            t.coef.push_back(model.coords(rc));
        }
        for (i64 d : hf)
            W = lcm64(W, d);
        targets.push_back(std::move(t));
    }
    RowReducer R(k, W);
    for (const auto& t : targets)
        for (std::size_t j = 0; j < t.h.size(); ++j) {
            ZVec row(k);
            for (int i = 0; i < k; ++i)
                row[i] = t.coef[i][j];
            R.add_scaled(row, W / t.h[j]);
        }
    std::vector<ZVec> den;
    for (int i = 0; i < k; ++i)
        if (q[i] != W) {
            ZVec d(k, 0);
            d[i] = q[i];
            den.push_back(d);
        }
    AbelianStructure S = subquotient(R, den);
    out.factors = S.factors();
    for (const auto& l : S.lifts()) {
        ZVec c(k);
        for (int i = 0; i < k; ++i)
            c[i] = md(l[i], q[i]);
        out.reps.push_back(H.element(c));
        out.gen_coords.push_back(std::move(c));
    }
    return out;
}

ShaGroup sha(const FiniteGroup& G, const AbelianModule& M, int degree, Family family, bool qz)
{
    return sha_from(degree == 1 ? h1(G, M) : h2(G, M), family, qz);
}

// ---- coboundary solving --------------------------------------------------

std::optional<ZVec> solve_coboundary(const FiniteGroup& G, std::span<const i64> chi, const Cochain& beta, i64 m,
                                     const std::vector<LinearEq>& extra)
{
    const int n = G.order();
    const auto& gens = G.generators();
    const int S = int(gens.size());
    auto X = [&](int g) { return chi.empty() ? i64(1) : md(chi[g], m); };
    // b(h) = F[h][0..S) . x + F[h][S]
    std::vector<ZVec> F(n, ZVec(S + 1, 0));
    BfsTree t = bfs_tree(G, gens);
    for (std::size_t oi = 1; oi < t.order.size(); ++oi) {
        int h = t.order[oi], p = t.parent[h], k = t.sidx[h];
        ZVec f = F[p];
        f[k] = md(f[k] + X(p), m);
        f[S] = md(f[S] - beta.s(p, gens[k]), m);
        F[h] = std::move(f);
    }
    RowReducer R(S + 1, m);
    ZVec row(S + 1);
    for (int g = 1; g < n; ++g)
        for (int h = 1; h < n; ++h) {
            // chi(g) b(h) - b(gh) + b(g) - beta(g,h) = 0
            const ZVec &fh = F[h], &fgh = F[G.mul(g, h)], &fg = F[g];
            i64 xg = X(g);
            for (int j = 0; j <= S; ++j)
                row[j] = (xg * fh[j] - fgh[j] + fg[j]) % m;
            row[S] = row[S] - beta.s(g, h);
            row[S] = md(-row[S], m); // move the constant to the right-hand side
            R.add(row);
        }
    for (const auto& e : extra) {
        std::fill(row.begin(), row.end(), 0);
        for (auto [g, c] : e.terms)
            for (int j = 0; j <= S; ++j)
                row[j] = (row[j] + c % m * F[g][j]) % m;
        row[S] = md(e.rhs - row[S], m);
        R.add(row);
    }
    ZModMatrix Aug = R.matrix();
    ZModMatrix A(Aug.rows(), S, m);
    ZVec b(Aug.rows());
    for (int i = 0; i < Aug.rows(); ++i) {
        for (int j = 0; j < S; ++j)
            A.at(i, j) = Aug(i, j);
        b[i] = Aug(i, S);
    }
    auto sol = solve(A, b);
    if (!sol)
        return std::nullopt;
    ZVec out(n);
    for (int h = 0; h < n; ++h) {
        i64 s = F[h][S];
        for (int j = 0; j < S; ++j)
            s = (s + F[h][j] * sol->x[j]) % m;
        out[h] = md(s, m);
    }
    return out;
}

bool is_coboundary(const FiniteGroup& G, std::span<const i64> chi, const Cochain& beta, i64 m)
{
    return solve_coboundary(G, chi, beta, m).has_value();
}

bool is_cocycle_scalar(const FiniteGroup& G, std::span<const i64> chi, const Cochain& f, i64 m)
{
    const int n = G.order();
    for (int g = 0; g < n; ++g)
        if (md(f.s(0, g), m) || md(f.s(g, 0), m))
            return false;
    for (int g : G.generators()) {
        i64 x = chi.empty() ? 1 : chi[g];
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (md(x * f.s(h, k) - f.s(G.mul(g, h), k) + f.s(g, G.mul(h, k)) - f.s(g, h), m) != 0)
                    return false;
    }
    return true;
}

bool dies_in_QZ(const FiniteGroup& B, const Cochain& f, i64 N)
{
    const i64 e = B.exponent();
    Cochain g = f;
    for (auto& x : g.v)
        x = md(x, N) * e;
    return is_coboundary(B, {}, g, N * e);
}

// ---- cup products and Bocksteins ----------------------------------------

i64 dual_pairing(const AbelianModule& M, std::span<const i64> n, std::span<const i64> phi)
{
    const i64 e = M.exponent();
    i64 s = 0;
    for (int i = 0; i < M.rank(); ++i)
        s = (s + md(phi[i], M.factors[i]) * md(n[i], M.factors[i]) % e * (e / M.factors[i])) % e;
    return s;
}

Cochain cup_h1_h1(const FiniteGroup& G, const AbelianModule& M, const Cochain& x, const AbelianModule& Mdual,
                  const Cochain& y)
{
    const int n = G.order(), r = M.rank();
    const i64 e = M.exponent();
    Cochain out = Cochain::zero(2, n, 1);
    // <x(s), s.y(t)> = sum_j w_j y(t)_j with w_j = sum_i x(s)_i (e/d_i) A_s[i][j]
    ZVec w(r);
    for (int s = 0; s < n; ++s) {
        const i64* xs = x.at(s);
        for (int j = 0; j < r; ++j) {
            i64 acc = 0;
            for (int i = 0; i < r; ++i)
                acc = (acc + md(xs[i], M.factors[i]) * (e / M.factors[i]) % e * md(Mdual.entry(s, i, j), e)) % e;
            w[j] = acc;
        }
        for (int t = 0; t < n; ++t) {
            const i64* yt = y.at(t);
            i64 acc = 0;
            for (int j = 0; j < r; ++j)
                acc += w[j] * md(yt[j], Mdual.factors[j]);
            out.v[std::size_t(s) * n + t] = acc % e;
        }
    }
    return out;
}

BocksteinPair bockstein(const FiniteGroup& G, std::span<const i64> phi, i64 N, const GroupAction* act,
                        std::span<const i64> chi2)
{
    const int n = G.order();
    BocksteinPair out;
    out.f = Cochain::zero(2, n, 1);
    ZVec lift(n);
    for (int g = 0; g < n; ++g)
        lift[g] = md(phi[g], N);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            i64 v = lift[g] + lift[h] - lift[G.mul(g, h)];
            if (md(v, N) != 0)
                fail(ErrorKind::PreconditionViolated, "character is not a homomorphism",
                     "(" + std::to_string(g) + "," + std::to_string(h) + ")");
            out.f.v[std::size_t(g) * n + h] = md(v / N, N);
        }
    if (act && !chi2.empty()) {
        const int nd = int(chi2.size());
        const i64 N2 = N * N;
        out.c.assign(std::size_t(nd) * n, 0);
        for (int d = 0; d < nd; ++d)
            for (int g = 0; g < n; ++g) {
                i64 v = md(md(chi2[d], N2) * lift[g] - lift[act->act(d, g)], N2);
                if (v % N != 0)
                    fail(ErrorKind::NotEquivariant, "character is not equivariant",
                         "(delta=" + std::to_string(d) + ",g=" + std::to_string(g) + ")");
                out.c[std::size_t(d) * n + g] = v / N;
            }
    }
    return out;
}

} // namespace brauer
