#include "brauer/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace brauer {

namespace {

std::string triple(int a, int b, int c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// BFS closure from the identity under right multiplication by gens
std::vector<int> right_closure(int n, const std::vector<int>& mul, const std::vector<int>& gens)
{
    std::vector<char> seen(n, 0);
    std::vector<int> out{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int s : gens) {
            int y = mul[std::size_t(out[i]) * n + s];
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    return out;
}

std::vector<int> greedy_generators(int n, const std::vector<int>& mul)
{
    std::vector<int> gens;
    std::vector<char> in(n, 0);
    in[0] = 1;
    int covered = 1;
    for (int g = 1; g < n && covered < n; ++g) {
        if (in[g])
            continue;
        gens.push_back(g);
        auto cl = right_closure(n, mul, gens);
        std::fill(in.begin(), in.end(), 0);
        for (int x : cl)
            in[x] = 1;
        covered = int(cl.size());
    }
    return gens;
}

} // namespace

FiniteGroup::FiniteGroup() : n_(1), mul_{0}
{
    derive();
}

FiniteGroup FiniteGroup::from_table_unchecked(int n, std::vector<int> mul)
{
    FiniteGroup G;
    G.n_ = n;
    G.mul_ = std::move(mul);
    G.derive();
    return G;
}

void FiniteGroup::derive()
{
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }
    ord_.assign(n_, 1);
    for (int a = 1; a < n_; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        ord_[a] = k;
    }
    gens_ = greedy_generators(n_, mul_);
}

int FiniteGroup::pow(int a, i64 k) const
{
    i64 o = ord_[a];
    k %= o;
    if (k < 0)
        k += o;
    int x = 0;
    for (i64 i = 0; i < k; ++i)
        x = mul(x, a);
    return x;
}

i64 FiniteGroup::exponent() const
{
    i64 e = 1;
    for (int o : ord_)
        e = lcm64(e, o);
    return e;
}

bool FiniteGroup::is_abelian() const
{
    for (int a : gens_)
        for (int b : gens_)
            if (!commute(a, b))
                return false;
    return true;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table)
{
    const int n = int(table.size());
    if (n == 0)
        fail(ErrorKind::NoIdentity, "empty table");
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a) {
        if (int(table[a].size()) != n)
            fail(ErrorKind::PreconditionViolated, "table is not square", "row " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n)
                fail(ErrorKind::PreconditionViolated, "table entry out of range",
                     "(" + std::to_string(a) + "," + std::to_string(b) + ")");
            mul[std::size_t(a) * n + b] = v;
        }
    }
    auto M = [&](int a, int b) { return mul[std::size_t(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        if (M(0, a) != a || M(a, 0) != a) {
            for (int e = 1; e < n; ++e) {
                bool ok = true;
                for (int x = 0; x < n && ok; ++x)
                    ok = M(e, x) == x && M(x, e) == x;
                if (ok)
                    fail(ErrorKind::NoIdentity, "identity must be element 0", "identity found at " + std::to_string(e));
            }
            fail(ErrorKind::NoIdentity, "no two-sided identity", "element " + std::to_string(a));
        }
    for (int a = 0; a < n; ++a) {
        int b = 0;
        while (b < n && !(M(a, b) == 0 && M(b, a) == 0))
            ++b;
        if (b == n)
            fail(ErrorKind::NoInverse, "element has no two-sided inverse", "element " + std::to_string(a));
    }
    // Light's test over a generating set
    auto gens = greedy_generators(n, mul);
    if (int(right_closure(n, mul, gens).size()) != n)
        fail(ErrorKind::NonAssociative, "table does not close up", "generators");
    for (int s : gens)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (M(M(x, y), s) != M(x, M(y, s)))
                    fail(ErrorKind::NonAssociative, "associativity fails", triple(x, y, s));
    return FiniteGroup::from_table_unchecked(n, std::move(mul));
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : v)
            h = (h ^ std::size_t(x)) * 1099511628211ull;
        return h;
    }
};

} // namespace

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens, int degree, i64 cap)
{
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& p = gens[k];
        std::vector<char> hit(degree, 0);
        bool ok = int(p.size()) == degree;
        for (int i = 0; ok && i < degree; ++i) {
            ok = p[i] >= 0 && p[i] < degree && !hit[p[i]];
            if (ok)
                hit[p[i]] = 1;
        }
        if (!ok)
            fail(ErrorKind::PreconditionViolated, "not a permutation", "generator " + std::to_string(k));
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::unordered_map<std::vector<int>, int, VecHash> index{{id, 0}};
    // (a*b)(x) = a(b(x)); discovery by right multiplication
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(degree);
        for (int x = 0; x < degree; ++x)
            c[x] = a[b[x]];
        return c;
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            auto c = compose(elems[i], g);
            if (!index.count(c)) {
                if (i64(elems.size()) >= cap)
                    fail(ErrorKind::OrderBound, "permutation closure exceeds cap", std::to_string(cap));
                index.emplace(c, int(elems.size()));
                elems.push_back(std::move(c));
            }
        }
    const int n = int(elems.size());
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[std::size_t(a) * n + b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup::from_table_unchecked(n, std::move(mul));
}

FiniteGroup cyclic_group(int n)
{
    std::vector<int> mul(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[std::size_t(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_table_unchecked(n, std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B)
{
    const int na = A.order(), nb = B.order(), n = na * nb;
    std::vector<int> mul(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            mul[std::size_t(x) * n + y] = A.mul(x % na, y % na) + na * B.mul(x / na, y / na);
    return FiniteGroup::from_table_unchecked(n, std::move(mul));
}

FiniteGroup abelian_group(const std::vector<i64>& factors)
{
    FiniteGroup G;
    for (i64 d : factors)
        G = direct_product(G, cyclic_group(int(d)));
    return G;
}

// ---- subgroups -----------------------------------------------------------

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens)
{
    auto c = right_closure(G.order(), G.table(), gens);
    std::sort(c.begin(), c.end());
    return c;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems)
{
    std::vector<char> in(G.order(), 0);
    for (int x : elems) {
        if (x < 0 || x >= G.order())
            return false;
        in[x] = 1;
    }
    if (elems.empty() || !in[0])
        return false;
    for (int a : elems)
        for (int b : elems)
            if (!in[G.mul(a, b)])
                return false;
    return true;
}

namespace {

bool subgroup_less(const Subgroup& a, const Subgroup& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

std::vector<int> cyclic_of(const FiniteGroup& G, int g)
{
    std::vector<int> c;
    int x = 0;
    do {
        c.push_back(x);
        x = G.mul(x, g);
    } while (x != 0);
    std::sort(c.begin(), c.end());
    return c;
}

} // namespace

std::vector<Subgroup> subgroups_cyclic(const FiniteGroup& G)
{
    std::set<Subgroup> s;
    for (int g = 0; g < G.order(); ++g)
        s.insert(cyclic_of(G, g));
    std::vector<Subgroup> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
}

std::vector<Subgroup> subgroups_bicyclic(const FiniteGroup& G)
{
    // one generator per cyclic subgroup suffices
    std::vector<int> reps;
    {
        std::set<Subgroup> s;
        for (int g = 0; g < G.order(); ++g)
            if (s.insert(cyclic_of(G, g)).second)
                reps.push_back(g);
    }
    std::set<Subgroup> out;
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i; j < reps.size(); ++j) {
            int a = reps[i], b = reps[j];
            if (!G.commute(a, b))
                continue;
            std::vector<int> ca = cyclic_of(G, a), cb = cyclic_of(G, b), h;
            for (int x : ca)
                for (int y : cb)
                    h.push_back(G.mul(x, y));
            std::sort(h.begin(), h.end());
            h.erase(std::unique(h.begin(), h.end()), h.end());
            out.insert(std::move(h));
        }
    std::vector<Subgroup> v(out.begin(), out.end());
    std::sort(v.begin(), v.end(), subgroup_less);
    return v;
}

std::vector<Subgroup> subgroups_abelian(const FiniteGroup& G)
{
    std::set<Subgroup> all;
    std::vector<Subgroup> frontier;
    for (auto& c : subgroups_cyclic(G))
        if (all.insert(c).second)
            frontier.push_back(c);
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& H : frontier) {
            std::vector<char> in(G.order(), 0);
            for (int x : H)
                in[x] = 1;
            for (int g = 0; g < G.order(); ++g) {
                if (in[g])
                    continue;
                bool central = true;
                for (int h : H)
                    if (!G.commute(g, h)) {
                        central = false;
                        break;
                    }
                if (!central)
                    continue;
                std::vector<int> gens(H.begin() + 1, H.end());
                gens.push_back(g);
                auto K = closure(G, gens);
                if (all.insert(K).second)
                    next.push_back(std::move(K));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> v(all.begin(), all.end());
    std::sort(v.begin(), v.end(), subgroup_less);
    return v;
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G)
{
    std::vector<char> seen(G.order(), 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < G.order(); ++x) {
        if (seen[x])
            continue;
        std::vector<int> cls;
        for (int g = 0; g < G.order(); ++g) {
            int y = G.conj(g, x);
            if (!seen[y]) {
                seen[y] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

SubgroupView subgroup_view(const FiniteGroup& G, const std::vector<int>& elems)
{
    std::vector<int> s(elems);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!is_subgroup(G, s))
        fail(ErrorKind::NotASubgroup, "element set is not a subgroup", subgroup_str(s));
    SubgroupView v;
    v.to_parent = s;
    v.from_parent.assign(G.order(), -1);
    const int k = int(s.size());
    for (int i = 0; i < k; ++i)
        v.from_parent[s[i]] = i;
    std::vector<int> mul(std::size_t(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            mul[std::size_t(a) * k + b] = v.from_parent[G.mul(s[a], s[b])];
    v.group = FiniteGroup::from_table_unchecked(k, std::move(mul));
    return v;
}

std::string subgroup_str(const Subgroup& H)
{
    std::string s = "{";
    for (std::size_t i = 0; i < H.size(); ++i)
        s += (i ? "," : "") + std::to_string(H[i]);
    return s + "}";
}

bool is_homomorphism(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& phi)
{
    if (int(phi.size()) != A.order())
        return false;
    for (int x : phi)
        if (x < 0 || x >= B.order())
            return false;
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < A.order(); ++b)
            if (phi[A.mul(a, b)] != B.mul(phi[a], phi[b]))
                return false;
    return true;
}

// ---- actions -------------------------------------------------------------

GroupAction GroupAction::trivial(int actor, int target)
{
    GroupAction A;
    A.actor_order = actor;
    A.target_order = target;
    A.table.resize(std::size_t(actor) * target);
    for (int a = 0; a < actor; ++a)
        for (int x = 0; x < target; ++x)
            A.table[std::size_t(a) * target + x] = x;
    return A;
}

void validate_action(const FiniteGroup& actor, const FiniteGroup& target, const GroupAction& A)
{
    const int na = actor.order(), nt = target.order();
    if (A.actor_order != na || A.target_order != nt || A.table.size() != std::size_t(na) * nt)
        fail(ErrorKind::InvalidAction, "action table has wrong shape");
    for (int x = 0; x < nt; ++x)
        if (A.act(0, x) != x)
            fail(ErrorKind::InvalidAction, "identity does not act trivially", "element " + std::to_string(x));
    for (int a = 0; a < na; ++a) {
        std::vector<char> hit(nt, 0);
        for (int x = 0; x < nt; ++x) {
            int y = A.act(a, x);
            if (y < 0 || y >= nt || hit[y])
                fail(ErrorKind::InvalidAction, "row is not a bijection", "actor " + std::to_string(a));
            hit[y] = 1;
        }
        for (int x = 0; x < nt; ++x)
            for (int y = 0; y < nt; ++y)
                if (A.act(a, target.mul(x, y)) != target.mul(A.act(a, x), A.act(a, y)))
                    fail(ErrorKind::InvalidAction, "row is not a homomorphism", triple(a, x, y));
    }
    for (int a : actor.generators())
        for (int b = 0; b < na; ++b)
            for (int x = 0; x < nt; ++x)
                if (A.act(actor.mul(a, b), x) != A.act(a, A.act(b, x)))
                    fail(ErrorKind::InvalidAction, "composition law fails", triple(a, b, x));
}

// ---- modules -------------------------------------------------------------

i64 AbelianModule::exponent() const
{
    i64 e = 1;
    for (i64 d : factors)
        e = lcm64(e, d);
    return e;
}

double AbelianModule::size() const
{
    double s = 1;
    for (i64 d : factors)
        s *= double(d);
    return s;
}

ZVec AbelianModule::act(int g, std::span<const i64> x) const
{
    const int r = rank();
    ZVec y(r, 0);
    const auto& A = action[g];
    for (int i = 0; i < r; ++i) {
        i64 s = 0;
        for (int j = 0; j < r; ++j)
            s += A[std::size_t(i) * r + j] % factors[i] * md(x[j], factors[i]) % factors[i];
        y[i] = md(s, factors[i]);
    }
    return y;
}

ZVec AbelianModule::reduce(ZVec x) const
{
    for (int i = 0; i < rank(); ++i)
        x[i] = md(x[i], factors[i]);
    return x;
}

AbelianModule AbelianModule::trivial(std::vector<i64> factors, int actor_order)
{
    AbelianModule M;
    M.factors = std::move(factors);
    M.actor_order = actor_order;
    const int r = M.rank();
    std::vector<i64> I(std::size_t(r) * r, 0);
    for (int i = 0; i < r; ++i)
        I[std::size_t(i) * r + i] = 1;
    M.action.assign(actor_order, I);
    return M;
}

AbelianModule AbelianModule::twisted_cyclic(i64 m, const std::vector<i64>& chi)
{
    AbelianModule M;
    M.factors = {m};
    M.actor_order = int(chi.size());
    for (i64 c : chi)
        M.action.push_back({md(c, m)});
    return M;
}

void validate_module(const FiniteGroup& actor, const AbelianModule& M)
{
    const int r = M.rank();
    for (int i = 0; i < r; ++i) {
        if (M.factors[i] < 2)
            fail(ErrorKind::InvalidAction, "invariant factor below 2", "index " + std::to_string(i));
        if (i + 1 < r && M.factors[i + 1] % M.factors[i] != 0)
            fail(ErrorKind::InvalidAction, "invariant factors do not divide", "index " + std::to_string(i));
    }
    if (M.actor_order != actor.order() || int(M.action.size()) != actor.order())
        fail(ErrorKind::InvalidAction, "module action has wrong actor order");
    for (int g = 0; g < actor.order(); ++g) {
        if (M.action[g].size() != std::size_t(r) * r)
            fail(ErrorKind::InvalidAction, "action matrix has wrong shape", "actor " + std::to_string(g));
        // column j must have order dividing d_j in component i
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (md(M.entry(g, i, j) * M.factors[j], M.factors[i]) != 0)
                    fail(ErrorKind::InvalidAction, "action matrix does not respect the moduli",
                         triple(g, i, j));
    }
    for (int i = 0; i < r; ++i) {
        ZVec e(r, 0);
        e[i] = 1;
        if (M.act(0, e) != e)
            fail(ErrorKind::InvalidAction, "identity acts nontrivially", "basis " + std::to_string(i));
    }
    for (int a : actor.generators())
        for (int b = 0; b < actor.order(); ++b)
            for (int i = 0; i < r; ++i) {
                ZVec e(r, 0);
                e[i] = 1;
                if (M.act(actor.mul(a, b), e) != M.act(a, M.act(b, e)))
                    fail(ErrorKind::InvalidAction, "module action composition fails", triple(a, b, i));
            }
    // invertibility follows from the composition law and the identity row
}

AbelianModule dual_module(const FiniteGroup& actor, const AbelianModule& M)
{
    AbelianModule D;
    D.factors = M.factors;
    D.actor_order = M.actor_order;
    const int r = M.rank();
    D.action.resize(M.actor_order);
    for (int q = 0; q < M.actor_order; ++q) {
        int qi = actor.inv(q);
        std::vector<i64> A(std::size_t(r) * r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) {
                // D_q[j][i] = A_{q^-1}[i][j] d_j / d_i
                i64 a = md(M.entry(qi, i, j), M.factors[i]);
                A[std::size_t(j) * r + i] = md(a * M.factors[j] / M.factors[i], M.factors[j]);
            }
        D.action[q] = std::move(A);
    }
    return D;
}

AbelianModule pull_module(const AbelianModule& M, const std::vector<int>& phi)
{
    AbelianModule P;
    P.factors = M.factors;
    P.actor_order = int(phi.size());
    for (int a : phi)
        P.action.push_back(M.action[a]);
    return P;
}

std::vector<ZVec> module_elements(const AbelianModule& M, i64 cap)
{
    double s = M.size();
    if (s > double(cap))
        cap_exceeded("module_elements", i64(std::min(s, 9.0e18)), cap);
    std::vector<ZVec> out;
    const int r = M.rank();
    ZVec x(r, 0);
    for (i64 k = 0; k < i64(s); ++k) {
        out.push_back(x);
        for (int i = 0; i < r; ++i) {
            if (++x[i] < M.factors[i])
                break;
            x[i] = 0;
        }
    }
    return out;
}

i64 module_index(const AbelianModule& M, std::span<const i64> x)
{
    i64 idx = 0;
    for (int i = M.rank() - 1; i >= 0; --i)
        idx = idx * M.factors[i] + md(x[i], M.factors[i]);
    return idx;
}

FiniteGroup module_group(const AbelianModule& M, i64 cap)
{
    auto el = module_elements(M, cap);
    const int n = int(el.size());
    check_cap("table_order", i64(n), cap);
    std::vector<int> mul(std::size_t(n) * n);
    ZVec z(M.rank());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int i = 0; i < M.rank(); ++i)
                z[i] = el[a][i] + el[b][i];
            mul[std::size_t(a) * n + b] = int(module_index(M, z));
        }
    return FiniteGroup::from_table_unchecked(n, std::move(mul));
}

GroupAction module_action(const AbelianModule& M, i64 cap)
{
    auto el = module_elements(M, cap);
    GroupAction A;
    A.actor_order = M.actor_order;
    A.target_order = int(el.size());
    A.table.resize(std::size_t(A.actor_order) * A.target_order);
    for (int q = 0; q < A.actor_order; ++q)
        for (int x = 0; x < A.target_order; ++x)
            A.table[std::size_t(q) * A.target_order + x] = int(module_index(M, M.act(q, el[x])));
    return A;
}

SemidirectProduct semidirect_product(const FiniteGroup& N, const FiniteGroup& Q, const GroupAction& act, i64 cap)
{
    validate_action(Q, N, act);
    const i64 n64 = i64(N.order()) * Q.order();
    if (n64 > cap)
        fail(ErrorKind::OrderBound, "semidirect product exceeds cap", std::to_string(n64));
    SemidirectProduct sp;
    sp.n_order = N.order();
    sp.q_order = Q.order();
    const int n = int(n64), nn = N.order();
    std::vector<int> mul(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int n1 = x % nn, q1 = x / nn, n2 = y % nn, q2 = y / nn;
            mul[std::size_t(x) * n + y] = N.mul(n1, act.act(q1, n2)) + nn * Q.mul(q1, q2);
        }
    sp.group = FiniteGroup::from_table_unchecked(n, std::move(mul));
    return sp;
}

SemidirectProduct semidirect_product(const AbelianModule& N, const FiniteGroup& Q, i64 cap)
{
    return semidirect_product(module_group(N, cap), Q, module_action(N, cap), cap);
}

} // namespace brauer
