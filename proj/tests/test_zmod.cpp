#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "brauer/zmod.hpp"

using namespace brauer;

namespace {

ZModMatrix random_matrix(std::mt19937_64& rng, int r, int c, i64 m, int sparsity = 0)
{
    ZModMatrix A(r, c, m);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (sparsity == 0 || rng() % sparsity == 0)
                A.at(i, j) = rng() % m;
    return A;
}

void check_snf(const ZModMatrix& A)
{
    const i64 m = A.modulus();
    SmithForm s = smith_normal_form(A);
    CHECK(s.U * s.D * s.V == A);
    CHECK(s.U * s.Uinv == ZModMatrix::identity(A.rows(), m));
    CHECK(s.V * s.Vinv == ZModMatrix::identity(A.cols(), m));
    for (int i = 0; i < s.D.rows(); ++i)
        for (int j = 0; j < s.D.cols(); ++j)
            if (i != j)
                REQUIRE(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
        i64 a = s.diag[i], b = s.diag[i + 1];
        if (a == 0)
            CHECK(b == 0);
        else
            CHECK(b % a == 0);
        if (a)
            CHECK(m % a == 0);
    }
}

// all x in (Z/m)^c as vectors
std::vector<ZVec> all_vectors(int c, i64 m)
{
    std::vector<ZVec> out;
    ZVec x(c, 0);
    for (;;) {
        out.push_back(x);
        int i = 0;
        while (i < c && ++x[i] == m)
            x[i++] = 0;
        if (i == c)
            break;
    }
    return out;
}

std::set<ZVec> span_of(const std::vector<ZVec>& gens, int dim, i64 m)
{
    std::set<ZVec> S{ZVec(dim, 0)};
    std::vector<ZVec> frontier{ZVec(dim, 0)};
    while (!frontier.empty()) {
        std::vector<ZVec> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                ZVec w(dim);
                for (int i = 0; i < dim; ++i)
                    w[i] = (v[i] + g[i]) % m;
                if (S.insert(w).second)
                    next.push_back(w);
            }
        frontier = std::move(next);
    }
    return S;
}

} // namespace

TEST_CASE("smith normal form: examples")
{
    ZModMatrix Z(3, 2, 6);
    SmithForm s = smith_normal_form(Z);
    CHECK(s.D.is_zero());
    CHECK(s.U == ZModMatrix::identity(3, 6));
    CHECK(s.V == ZModMatrix::identity(2, 6));

    ZModMatrix A(1, 1, 4);
    A.at(0, 0) = 2;
    CHECK(smith_normal_form(A).diag == std::vector<i64>{2});

    ZModMatrix B = ZModMatrix::from_rows({{2, 4}, {4, 8}}, 2, 12);
    SmithForm sb = smith_normal_form(B);
    CHECK(sb.diag == std::vector<i64>{2, 0});
    CHECK(sb.U * sb.D * sb.V == B);
}

TEST_CASE("smith normal form: reconstruction on random matrices")
{
    std::mt19937_64 rng(12345);
    const i64 mods[] = {2, 3, 4, 8, 12, 64};
    const int classes[][2] = {{1, 4}, {5, 10}, {11, 20}, {21, 40}};
    for (auto& cl : classes)
        for (int it = 0; it < 1000; ++it) {
            i64 m = mods[it % 6];
            int r = cl[0] + int(rng() % (cl[1] - cl[0] + 1));
            int c = cl[0] + int(rng() % (cl[1] - cl[0] + 1));
            check_snf(random_matrix(rng, r, c, m, it % 3 == 0 ? 4 : 0));
        }
}

TEST_CASE("solve: examples")
{
    ZModMatrix I = ZModMatrix::identity(3, 5);
    ZVec b{1, 2, 3};
    auto s = solve(I, b);
    REQUIRE(s);
    CHECK(s->x == b);
    CHECK(s->kernel.empty());

    ZModMatrix two(1, 1, 4);
    two.at(0, 0) = 2;
    CHECK_FALSE(solve(two, ZVec{1}));
    auto t = solve(two, ZVec{2});
    REQUIRE(t);
    CHECK(t->x == ZVec{1});
    REQUIRE(t->kernel.size() == 1);
    CHECK(t->kernel[0] == ZVec{2});
}

TEST_CASE("solve agrees with exhaustive search")
{
    std::mt19937_64 rng(7);
    for (int it = 0; it < 3000; ++it) {
        i64 m = 2 + i64(rng() % 7);
        int c = 1 + int(rng() % 4), r = 1 + int(rng() % 4);
        ZModMatrix A = random_matrix(rng, r, c, m, it % 2 ? 3 : 0);
        ZVec b(r);
        for (auto& x : b)
            x = i64(rng() % m);
        if (it % 4 == 0) {
            // force consistency
            ZVec x0(c);
            for (auto& x : x0)
                x = i64(rng() % m);
            b = A.apply(x0);
        }
        bool found = false;
        std::vector<ZVec> kernel;
        for (const auto& x : all_vectors(c, m)) {
            ZVec y = A.apply(x);
            if (y == b)
                found = true;
            if (std::all_of(y.begin(), y.end(), [](i64 v) { return v == 0; }))
                kernel.push_back(x);
        }
        auto s = solve(A, b);
        REQUIRE(bool(s) == found);
        if (!s)
            continue;
        CHECK(A.apply(s->x) == b);
        for (const auto& k : s->kernel)
            CHECK(A.apply(k) == ZVec(r, 0));
        CHECK(span_of(s->kernel, c, m).size() == kernel.size());
    }
}

TEST_CASE("cokernel: examples")
{
    CHECK(cokernel(ZModMatrix::identity(3, 7)).trivial());
    CHECK(cokernel(ZModMatrix(2, 1, 6)).factors() == std::vector<i64>{6, 6});
    ZModMatrix A(1, 1, 8);
    A.at(0, 0) = 2;
    CHECK(cokernel(A).factors() == std::vector<i64>{2});
}

TEST_CASE("cokernel agrees with brute-force quotient structure")
{
    std::mt19937_64 rng(99);
    for (int it = 0; it < 600; ++it) {
        i64 m = 2 + i64(rng() % 11);
        int r = 1 + int(rng() % 3), c = 1 + int(rng() % 3);
        ZModMatrix A = random_matrix(rng, r, c, m);
        AbelianStructure Q = cokernel(A);
        std::vector<ZVec> cols;
        for (int j = 0; j < c; ++j) {
            ZVec v(r);
            for (int i = 0; i < r; ++i)
                v[i] = A(i, j);
            cols.push_back(v);
        }
        auto S = span_of(cols, r, m);
        auto all = all_vectors(r, m);
        // count of elements killed by k, for every k | m
        for (i64 k = 1; k <= m; ++k) {
            if (m % k)
                continue;
            std::size_t cnt = 0;
            for (const auto& x : all) {
                ZVec y(r);
                for (int i = 0; i < r; ++i)
                    y[i] = x[i] * k % m;
                cnt += S.count(y);
            }
            i64 expect = 1;
            for (i64 f : Q.factors())
                expect *= gcd64(k, f);
            CHECK(i64(cnt / S.size()) == expect);
        }
        // projection laws
        for (int i = 0; i < Q.ngens(); ++i) {
            ZVec e = Q.coords(Q.lifts()[i]);
            for (int j = 0; j < Q.ngens(); ++j)
                CHECK(e[j] == (i == j ? 1 : 0));
        }
        for (const auto& v : cols)
            for (i64 x : Q.coords(v))
                CHECK(x == 0);
    }
}

TEST_CASE("howell form is canonical")
{
    std::mt19937_64 rng(5);
    for (int it = 0; it < 400; ++it) {
        i64 m = 2 + i64(rng() % 15);
        int c = 1 + int(rng() % 4);
        std::vector<ZVec> g1;
        int k = 1 + int(rng() % 4);
        for (int i = 0; i < k; ++i) {
            ZVec v(c);
            for (auto& x : v)
                x = i64(rng() % m);
            g1.push_back(v);
        }
        // second generating set: random combinations plus the originals shuffled
        std::vector<ZVec> g2;
        for (int t = 0; t < k + 2; ++t) {
            ZVec v(c, 0);
            for (const auto& g : g1)
                axpy(v, i64(rng() % m), g, m);
            g2.push_back(v);
        }
        for (auto it2 = g1.rbegin(); it2 != g1.rend(); ++it2) {
            ZVec v = *it2;
            axpy(v, 3, g2[0], m);
            g2.push_back(v);
        }
        auto H1 = howell_form(g1, c, m);
        auto H2 = howell_form(g2, c, m);
        CHECK(H1 == H2);
        CHECK(span_of(H1, c, m) == span_of(g1, c, m));
    }
}

TEST_CASE("subquotient of a kernel")
{
    // ker of [2 0] mod 4 is {x: 2 x0 = 0} = <2> + Z/4; divide by (0,2)
    RowReducer R(2, 4);
    R.add(ZVec{2, 0});
    AbelianStructure S = subquotient(R, {ZVec{0, 2}});
    CHECK(S.factors() == std::vector<i64>{2, 2});
    for (int i = 0; i < S.ngens(); ++i) {
        ZVec e = S.coords(S.lifts()[i]);
        for (int j = 0; j < S.ngens(); ++j)
            CHECK(e[j] == (i == j));
    }
    CHECK(S.coords(ZVec{0, 2}) == ZVec{0, 0});
}

TEST_CASE("row reducer keeps the row span")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        i64 m = 2 + i64(rng() % 11);
        int c = 1 + int(rng() % 4);
        RowReducer R(c, m);
        std::vector<ZVec> rows;
        int k = int(rng() % 9);
        for (int i = 0; i < k; ++i) {
            ZVec v(c);
            for (auto& x : v)
                x = i64(rng() % m);
            rows.push_back(v);
            R.add(v);
        }
        CHECK(R.rank() <= c);
        std::vector<ZVec> red;
        ZModMatrix M = R.matrix();
        for (int i = 0; i < M.rows(); ++i)
            red.emplace_back(M.row(i).begin(), M.row(i).end());
        CHECK(span_of(red, c, m) == span_of(rows, c, m));
    }
}
