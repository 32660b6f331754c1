#include "brauer/zmod.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace brauer {

i64 gcd64(i64 a, i64 b)
{
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

i64 lcm64(i64 a, i64 b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / gcd64(a, b) * b;
}

namespace {

struct XG {
    i64 g, s, t;
};

XG ext_gcd(i64 a, i64 b)
{
    i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 r = a - q * b;
        a = b;
        b = r;
        i64 s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        i64 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0)
        return {-a, -s0, -t0};
    return {a, s0, t0};
}

} // namespace

i64 inverse_mod(i64 a, i64 m)
{
    if (m == 1)
        return 0;
    XG x = ext_gcd(md(a, m), m);
    if (x.g != 1)
        fail(ErrorKind::PreconditionViolated, "not a unit mod " + std::to_string(m), std::to_string(a));
    return md(x.s, m);
}

i64 normalizing_unit(i64 a, i64 m)
{
    a = md(a, m);
    if (m == 1)
        return 0;
    if (a == 0)
        return 1;
    i64 g = gcd64(a, m);
    i64 mp = m / g, ap = a / g;
    i64 u = mp == 1 ? 1 : inverse_mod(ap, mp);
    while (gcd64(u, m) != 1)
        u += mp;
    return u % m;
}

void axpy(std::span<i64> y, i64 a, std::span<const i64> x, i64 m)
{
    a = md(a, m);
    if (a == 0)
        return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i])
            y[i] = (y[i] + a * x[i]) % m;
}

// ---- matrix --------------------------------------------------------------

ZModMatrix::ZModMatrix(int rows, int cols, i64 m) : r_(rows), c_(cols), m_(m), a_(std::size_t(rows) * cols, 0)
{
    if (m < 1)
        fail(ErrorKind::PreconditionViolated, "modulus must be >= 1");
}

ZModMatrix ZModMatrix::identity(int n, i64 m)
{
    ZModMatrix I(n, n, m);
    for (int i = 0; i < n; ++i)
        I.at(i, i) = 1 % m;
    return I;
}

ZModMatrix ZModMatrix::from_rows(const std::vector<ZVec>& rows, int cols, i64 m)
{
    ZModMatrix A(int(rows.size()), cols, m);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < cols; ++j)
            A.at(i, j) = md(rows[i][j], m);
    return A;
}

ZModMatrix ZModMatrix::operator*(const ZModMatrix& b) const
{
    ZModMatrix C(r_, b.c_, m_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            i64 v = (*this)(i, k);
            if (!v)
                continue;
            auto br = b.row(k);
            auto cr = C.row(i);
            for (int j = 0; j < b.c_; ++j)
                cr[j] = (cr[j] + v * br[j]) % m_;
        }
    return C;
}

ZVec ZModMatrix::apply(std::span<const i64> x) const
{
    ZVec y(r_, 0);
    for (int i = 0; i < r_; ++i) {
        i64 s = 0;
        auto rr = row(i);
        for (int j = 0; j < c_; ++j)
            s = (s + rr[j] * md(x[j], m_)) % m_;
        y[i] = s;
    }
    return y;
}

ZModMatrix ZModMatrix::transpose() const
{
    ZModMatrix T(c_, r_, m_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            T.at(j, i) = (*this)(i, j);
    return T;
}

bool ZModMatrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](i64 v) { return v == 0; });
}

std::string ZModMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < c_; ++j)
            os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---- Smith normal form ---------------------------------------------------

namespace {

struct SnfWork {
    ZModMatrix S, L, Linv, R, Rinv;
    bool left, right;
    i64 m;
    int r, c;

    void row_swap(int i, int j)
    {
        if (i == j)
            return;
        std::swap_ranges(S.row(i).begin(), S.row(i).end(), S.row(j).begin());
        if (left) {
            std::swap_ranges(L.row(i).begin(), L.row(i).end(), L.row(j).begin());
            for (int k = 0; k < r; ++k)
                std::swap(Linv.at(k, i), Linv.at(k, j));
        }
    }
    void col_swap(int i, int j)
    {
        if (i == j)
            return;
        for (int k = 0; k < r; ++k)
            std::swap(S.at(k, i), S.at(k, j));
        if (right) {
            for (int k = 0; k < c; ++k)
                std::swap(R.at(k, i), R.at(k, j));
            std::swap_ranges(Rinv.row(i).begin(), Rinv.row(i).end(), Rinv.row(j).begin());
        }
    }
    void row_scale(int i, i64 u)
    {
        for (auto& v : S.row(i))
            v = v * u % m;
        if (left) {
            for (auto& v : L.row(i))
                v = v * u % m;
            i64 ui = inverse_mod(u, m);
            for (int k = 0; k < r; ++k)
                Linv.at(k, i) = Linv(k, i) * ui % m;
        }
    }
    // row_i += k row_j
    void row_add(int i, int j, i64 k)
    {
        k = md(k, m);
        if (!k)
            return;
        axpy(S.row(i), k, S.row(j), m);
        if (left) {
            axpy(L.row(i), k, L.row(j), m);
            for (int t = 0; t < r; ++t)
                Linv.at(t, j) = md(Linv(t, j) - k * Linv(t, i), m);
        }
    }
    void col_add(int i, int j, i64 k)
    {
        k = md(k, m);
        if (!k)
            return;
        for (int t = 0; t < r; ++t)
            if (S(t, j))
                S.at(t, i) = (S(t, i) + k * S(t, j)) % m;
        if (right) {
            for (int t = 0; t < c; ++t)
                if (R(t, j))
                    R.at(t, i) = (R(t, i) + k * R(t, j)) % m;
            axpy(Rinv.row(j), m - k, Rinv.row(i), m);
        }
    }
    // rows (i,j) <- [[a,b],[cc,d]] (i,j), det 1
    void row_mix(int i, int j, i64 a, i64 b, i64 cc, i64 d)
    {
        a = md(a, m), b = md(b, m), cc = md(cc, m), d = md(d, m);
        auto mix = [&](ZModMatrix& M) {
            auto ri = M.row(i), rj = M.row(j);
            for (int k = 0; k < M.cols(); ++k) {
                i64 x = ri[k], y = rj[k];
                ri[k] = (a * x + b * y) % m;
                rj[k] = (cc * x + d * y) % m;
            }
        };
        mix(S);
        if (left) {
            mix(L);
            for (int k = 0; k < r; ++k) {
                i64 x = Linv(k, i), y = Linv(k, j);
                Linv.at(k, i) = md(d * x - cc * y, m);
                Linv.at(k, j) = md(a * y - b * x, m);
            }
        }
    }
    // cols (i,j): new_i = a col_i + b col_j, new_j = cc col_i + d col_j
    void col_mix(int i, int j, i64 a, i64 b, i64 cc, i64 d)
    {
        a = md(a, m), b = md(b, m), cc = md(cc, m), d = md(d, m);
        auto mix = [&](ZModMatrix& M) {
            for (int k = 0; k < M.rows(); ++k) {
                i64 x = M(k, i), y = M(k, j);
                M.at(k, i) = (a * x + b * y) % m;
                M.at(k, j) = (cc * x + d * y) % m;
            }
        };
        mix(S);
        if (right) {
            mix(R);
            auto ri = Rinv.row(i), rj = Rinv.row(j);
            for (int k = 0; k < c; ++k) {
                i64 x = ri[k], y = rj[k];
                ri[k] = md(d * x - cc * y, m);
                rj[k] = md(a * y - b * x, m);
            }
        }
    }
};

} // namespace

SmithForm smith(const ZModMatrix& A, unsigned track)
{
    const i64 m = A.modulus();
    SnfWork w{A, {}, {}, {}, {}, (track & TrackLeft) != 0, (track & TrackRight) != 0, m, A.rows(), A.cols()};
    if (w.left) {
        w.L = ZModMatrix::identity(w.r, m);
        w.Linv = w.L;
    }
    if (w.right) {
        w.R = ZModMatrix::identity(w.c, m);
        w.Rinv = w.R;
    }
    auto& S = w.S;
    const int kmax = std::min(w.r, w.c);
    int t = 0;
    for (; t < kmax; ++t) {
        // pivot: smallest gcd with m
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < w.r && best != 1; ++i)
            for (int j = t; j < w.c; ++j) {
                i64 v = S(i, j);
                if (!v)
                    continue;
                i64 g = gcd64(v, m);
                if (pi < 0 || g < best) {
                    pi = i, pj = j, best = g;
                    if (g == 1)
                        break;
                }
            }
        if (pi < 0)
            break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        for (;;) {
            i64 u = normalizing_unit(S(t, t), m);
            if (u != 1)
                w.row_scale(t, u);
            i64 g = S(t, t);
            bool changed = false;
            for (int i = t + 1; i < w.r; ++i) {
                i64 b = S(i, t);
                if (!b)
                    continue;
                if (b % g == 0) {
                    w.row_add(i, t, m - b / g);
                } else {
                    XG x = ext_gcd(g, b);
                    w.row_mix(t, i, x.s, x.t, -(b / x.g), g / x.g);
                    g = S(t, t);
                    changed = true;
                }
            }
            for (int j = t + 1; j < w.c; ++j) {
                i64 b = S(t, j);
                if (!b)
                    continue;
                if (b % g == 0) {
                    w.col_add(j, t, m - b / g);
                } else {
                    XG x = ext_gcd(g, b);
                    w.col_mix(t, j, x.s, x.t, -(b / x.g), g / x.g);
                    g = S(t, t);
                    changed = true;
                }
            }
            if (changed)
                continue;
            bool clean = true;
            for (int i = t + 1; i < w.r && clean; ++i)
                for (int j = t + 1; j < w.c; ++j)
                    if (S(i, j) % g != 0) {
                        w.row_add(t, i, 1);
                        clean = false;
                        break;
                    }
            if (clean)
                break;
        }
    }
    SmithForm out;
    out.rank = 0;
    out.diag.assign(kmax, 0);
    for (int i = 0; i < kmax; ++i) {
        out.diag[i] = S(i, i);
        if (S(i, i))
            out.rank = i + 1;
    }
    out.D = std::move(w.S);
    if (w.left) {
        out.U = std::move(w.Linv);
        out.Uinv = std::move(w.L);
    }
    if (w.right) {
        out.V = std::move(w.Rinv);
        out.Vinv = std::move(w.R);
    }
    return out;
}

SmithForm smith_normal_form(const ZModMatrix& A)
{
    return smith(A, TrackBoth);
}

// ---- Howell form ---------------------------------------------------------

std::vector<ZVec> howell_form(std::vector<ZVec> rows, int cols, i64 m)
{
    std::vector<ZVec> H(cols);
    std::vector<char> has(cols, 0);
    std::deque<ZVec> work(rows.begin(), rows.end());
    auto push_ann = [&](const ZVec& h, int j) {
        i64 k = m / h[j];
        if (k == m || k == 0)
            return;
        ZVec a(cols);
        bool nz = false;
        for (int t = 0; t < cols; ++t) {
            a[t] = h[t] * k % m;
            nz |= a[t] != 0;
        }
        if (nz)
            work.push_back(std::move(a));
    };
    while (!work.empty()) {
        ZVec v = std::move(work.front());
        work.pop_front();
        for (auto& x : v)
            x = md(x, m);
        for (int j = 0; j < cols; ++j) {
            if (!v[j])
                continue;
            if (!has[j]) {
                i64 u = normalizing_unit(v[j], m);
                for (auto& x : v)
                    x = x * u % m;
                H[j] = v;
                has[j] = 1;
                push_ann(H[j], j);
                break;
            }
            ZVec& h = H[j];
            i64 p = h[j];
            if (v[j] % p == 0) {
                axpy(v, m - v[j] / p, h, m);
                continue;
            }
            XG x = ext_gcd(p, v[j]);
            ZVec nh(cols), nv(cols);
            i64 a = md(x.s, m), b = md(x.t, m), c = md(-(v[j] / x.g), m), d = p / x.g;
            for (int t = 0; t < cols; ++t) {
                nh[t] = (a * h[t] + b * v[t]) % m;
                nv[t] = (c * h[t] + d * v[t]) % m;
            }
            h = std::move(nh);
            push_ann(h, j);
            v = std::move(nv);
        }
    }
    std::vector<ZVec> out;
    std::vector<int> pc;
    for (int j = 0; j < cols; ++j)
        if (has[j]) {
            out.push_back(H[j]);
            pc.push_back(j);
        }
    for (std::size_t i = 0; i < out.size(); ++i) {
        int j = pc[i];
        i64 p = out[i][j];
        for (std::size_t k = 0; k < i; ++k) {
            i64 q = out[k][j] / p;
            if (q)
                axpy(out[k], m - q % m, out[i], m);
        }
    }
    return out;
}

ZVec reduce_by_howell(const std::vector<ZVec>& H, ZVec v, i64 m)
{
    for (auto& x : v)
        x = md(x, m);
    for (const auto& h : H) {
        int j = 0;
        while (h[j] == 0)
            ++j;
        i64 q = v[j] / h[j];
        if (q)
            axpy(v, m - q % m, h, m);
    }
    return v;
}

// ---- solve ---------------------------------------------------------------

std::optional<Solution> solve(const ZModMatrix& A, std::span<const i64> b)
{
    const i64 m = A.modulus();
    const int r = A.rows(), c = A.cols();
    SmithForm s = smith(A, TrackBoth);
    ZVec cb = s.Uinv.apply(b);
    ZVec y(c, 0);
    for (int i = 0; i < r; ++i) {
        i64 d = i < int(s.diag.size()) ? s.diag[i] : 0;
        if (d == 0) {
            if (cb[i] != 0)
                return std::nullopt;
        } else {
            if (cb[i] % d != 0)
                return std::nullopt;
            y[i] = cb[i] / d;
        }
    }
    std::vector<ZVec> ker;
    for (int i = 0; i < c; ++i) {
        i64 d = i < int(s.diag.size()) ? s.diag[i] : 0;
        i64 scale = d == 0 ? 1 : m / d;
        if (scale % m == 0)
            continue;
        ZVec k(c);
        for (int t = 0; t < c; ++t)
            k[t] = s.Vinv(t, i) * scale % m;
        ker.push_back(std::move(k));
    }
    Solution out;
    out.kernel = howell_form(std::move(ker), c, m);
    out.x = reduce_by_howell(out.kernel, s.Vinv.apply(y), m);
    return out;
}

// ---- structures ----------------------------------------------------------

ZVec AbelianStructure::coords(std::span<const i64> x) const
{
    const int k = P_.rows();
    ZVec c(k);
    for (int i = 0; i < k; ++i) {
        i64 s = 0;
        auto pr = P_.row(i);
        for (int j = 0; j < n_; ++j)
            if (pr[j])
                s = (s + pr[j] * md(x[j], m_)) % m_;
        if (s % q_[i] != 0)
            fail(ErrorKind::PreconditionViolated, "vector is not in the submodule");
        c[i] = s / q_[i];
    }
    ZVec out(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        i64 s = 0;
        auto wr = W_.row(int(j));
        for (int i = 0; i < k; ++i)
            s = (s + wr[i] * c[i]) % m_;
        out[j] = s % factors_[j];
    }
    return out;
}

ZVec AbelianStructure::element(std::span<const i64> c) const
{
    ZVec x(n_, 0);
    for (std::size_t j = 0; j < lifts_.size(); ++j)
        axpy(x, c[j], lifts_[j], m_);
    return x;
}

double AbelianStructure::order() const
{
    double o = 1;
    for (i64 f : factors_)
        o *= double(f);
    return o;
}

std::string factors_str(const std::vector<i64>& f)
{
    if (f.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += (i ? " + Z/" : "Z/") + std::to_string(f[i]);
    return s;
}

std::string AbelianStructure::str() const
{
    return factors_str(factors_);
}

AbelianStructure cokernel(const ZModMatrix& A)
{
    const i64 m = A.modulus();
    const int r = A.rows();
    SmithForm s = smith(A, TrackLeft);
    AbelianStructure out;
    out.m_ = m;
    out.n_ = r;
    out.P_ = ZModMatrix::identity(r, m);
    out.q_.assign(r, 1);
    std::vector<int> keep;
    for (int i = 0; i < r; ++i) {
        i64 d = i < int(s.diag.size()) ? s.diag[i] : 0;
        i64 f = d == 0 ? m : d;
        if (f == 1)
            continue;
        keep.push_back(i);
        out.factors_.push_back(f);
        ZVec lift(r);
        for (int t = 0; t < r; ++t)
            lift[t] = s.U(t, i);
        out.lifts_.push_back(std::move(lift));
    }
    out.W_ = ZModMatrix(int(keep.size()), r, m);
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (int t = 0; t < r; ++t)
            out.W_.at(int(j), t) = s.Uinv(keep[j], t);
    return out;
}

// ---- row reducer ---------------------------------------------------------

RowReducer::RowReducer(int cols, i64 m) : c_(cols), m_(m), pivot_(cols, -1), buf_(cols) {}

void RowReducer::add(std::span<const i64> row)
{
    add_scaled(row, 1);
}

void RowReducer::add_scaled(std::span<const i64> row, i64 scale)
{
    const i64 m = m_;
    scale = md(scale, m);
    if (!scale)
        return;
    bool nz = false;
    for (int j = 0; j < c_; ++j) {
        buf_[j] = md(row[j] * scale, m);
        nz |= buf_[j] != 0;
    }
    if (!nz)
        return;
    ZVec& v = buf_;
    for (int j = 0; j < c_; ++j) {
        if (!v[j])
            continue;
        int pr = pivot_[j];
        if (pr < 0) {
            i64 u = normalizing_unit(v[j], m);
            ZVec nr(v.begin(), v.end());
            if (u != 1)
                for (int t = j; t < c_; ++t)
                    nr[t] = nr[t] * u % m;
            pivot_[j] = int(rows_.size());
            rows_.push_back(std::move(nr));
            return;
        }
        ZVec& h = rows_[pr];
        i64 p = h[j];
        if (v[j] % p == 0) {
            i64 f = m - v[j] / p;
            for (int t = j; t < c_; ++t)
                if (h[t])
                    v[t] = (v[t] + f * h[t]) % m;
            continue;
        }
        XG x = ext_gcd(p, v[j]);
        i64 a = md(x.s, m), b = md(x.t, m), c = md(-(v[j] / x.g), m), d = p / x.g;
        for (int t = j; t < c_; ++t) {
            i64 hx = h[t], vx = v[t];
            h[t] = (a * hx + b * vx) % m;
            v[t] = (c * hx + d * vx) % m;
        }
    }
}

ZModMatrix RowReducer::matrix() const
{
    return ZModMatrix::from_rows(rows_, c_, m_);
}

KernelBasis kernel_basis(const ZModMatrix& E, int cols)
{
    KernelBasis K;
    const i64 m = E.modulus();
    K.m = m;
    SmithForm s = smith(E, TrackRight);
    std::vector<int> idx;
    for (int i = 0; i < cols; ++i) {
        i64 d = i < int(s.diag.size()) ? s.diag[i] : 0;
        i64 o = d == 0 ? m : d;
        if (o == 1)
            continue;
        idx.push_back(i);
        K.orders.push_back(o);
        ZVec g(cols);
        i64 sc = m / o;
        for (int t = 0; t < cols; ++t)
            g[t] = s.Vinv(t, i) * sc % m;
        K.gens.push_back(std::move(g));
    }
    K.P = ZModMatrix(int(idx.size()), cols, m);
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (int t = 0; t < cols; ++t)
            K.P.at(int(j), t) = s.V(idx[j], t);
    return K;
}

AbelianStructure subquotient(const RowReducer& eqs, const std::vector<ZVec>& denoms)
{
    const i64 m = eqs.modulus();
    const int n = eqs.cols();
    ZModMatrix E = eqs.rank() ? eqs.matrix() : ZModMatrix(0, n, m);
    KernelBasis K = kernel_basis(E, n);
    const int k = int(K.orders.size());
    AbelianStructure pre;
    pre.m_ = m;
    pre.n_ = n;
    pre.P_ = K.P;
    pre.q_.resize(k);
    for (int i = 0; i < k; ++i)
        pre.q_[i] = m / K.orders[i];
    pre.W_ = ZModMatrix::identity(k, m);
    pre.factors_.assign(k, m); // provisional, only stage 1 used below

    ZModMatrix C(k, k + int(denoms.size()), m);
    for (int i = 0; i < k; ++i)
        C.at(i, i) = K.orders[i] % m;
    for (std::size_t d = 0; d < denoms.size(); ++d) {
        ZVec c = pre.coords(denoms[d]);
        for (int i = 0; i < k; ++i)
            C.at(i, k + int(d)) = c[i];
    }
    AbelianStructure q = cokernel(C);
    AbelianStructure out;
    out.m_ = m;
    out.n_ = n;
    out.P_ = std::move(pre.P_);
    out.q_ = std::move(pre.q_);
    out.W_ = std::move(q.W_);
    out.factors_ = q.factors_;
    for (const auto& l : q.lifts_) {
        ZVec x(n, 0);
        for (int i = 0; i < k; ++i)
            axpy(x, l[i], K.gens[i], m);
        out.lifts_.push_back(std::move(x));
    }
    return out;
}

SubgroupQuotient subgroup_quotient(const std::vector<i64>& q, const std::vector<ZVec>& A, const std::vector<ZVec>& B)
{
    SubgroupQuotient out;
    const int k = int(q.size()), a = int(A.size());
    if (k == 0 || a == 0) {
        if (!B.empty())
            for (const auto& b : B)
                for (int i = 0; i < k; ++i)
                    if (md(b[i], q[i]))
                        fail(ErrorKind::PreconditionViolated, "subgroup is not contained in the larger one");
        return out;
    }
    i64 W = 1;
    for (i64 d : q)
        W = lcm64(W, d);
    auto scaled = [&](const ZVec& v) {
        ZVec s(k);
        for (int i = 0; i < k; ++i)
            s[i] = md(v[i], q[i]) * (W / q[i]);
        return s;
    };
    ZModMatrix M(k, a, W);
    for (int j = 0; j < a; ++j) {
        ZVec s = scaled(A[j]);
        for (int i = 0; i < k; ++i)
            M.at(i, j) = s[i];
    }
    std::vector<ZVec> den = kernel_basis(M, a).gens;
    for (const auto& b : B) {
        auto y = solve(M, scaled(b));
        if (!y)
            fail(ErrorKind::PreconditionViolated, "subgroup is not contained in the larger one");
        den.push_back(y->x);
    }
    RowReducer none(a, W);
    AbelianStructure S = subquotient(none, den);
    out.factors = S.factors();
    for (const auto& l : S.lifts()) {
        ZVec g(k, 0);
        for (int j = 0; j < a; ++j)
            for (int i = 0; i < k; ++i)
                g[i] = (g[i] + md(l[j], W) * md(A[j][i], q[i])) % q[i];
        out.gens.push_back(std::move(g));
    }
    return out;
}

SubgroupQuotient hom_kernel(const std::vector<i64>& q, const std::vector<i64>& h, const std::vector<ZVec>& images)
{
    const int k = int(q.size());
    SubgroupQuotient out;
    if (k == 0)
        return out;
    i64 W = 1;
    for (i64 d : q)
        W = lcm64(W, d);
    for (i64 d : h)
        W = lcm64(W, d);
    RowReducer R(k, W);
    ZVec row(k);
    for (std::size_t j = 0; j < h.size(); ++j) {
        bool nz = false;
        for (int i = 0; i < k; ++i) {
            row[i] = md(images[i][j], h[j]);
            nz |= row[i] != 0;
        }
        if (nz)
            R.add_scaled(row, W / h[j]);
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
        out.gens.push_back(std::move(c));
    }
    return out;
}

} // namespace brauer
