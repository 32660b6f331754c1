#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brauer/error.hpp"

namespace brauer {

using ZVec = std::vector<i64>;

inline i64 md(i64 a, i64 m)
{
    a %= m;
    return a < 0 ? a + m : a;
}
i64 gcd64(i64 a, i64 b);
i64 lcm64(i64 a, i64 b);
i64 inverse_mod(i64 a, i64 m);     // throws PreconditionViolated on non-units
i64 normalizing_unit(i64 a, i64 m); // unit u with u*a = gcd(a,m) mod m

class ZModMatrix {
public:
    ZModMatrix() = default;
    ZModMatrix(int rows, int cols, i64 m);
    static ZModMatrix identity(int n, i64 m);
    static ZModMatrix from_rows(const std::vector<ZVec>& rows, int cols, i64 m);

    int rows() const { return r_; }
    int cols() const { return c_; }
    i64 modulus() const { return m_; }
    i64 operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }
    i64& at(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    void set(int i, int j, i64 v) { at(i, j) = md(v, m_); }
    std::span<i64> row(int i) { return {a_.data() + std::size_t(i) * c_, std::size_t(c_)}; }
    std::span<const i64> row(int i) const { return {a_.data() + std::size_t(i) * c_, std::size_t(c_)}; }

    ZModMatrix operator*(const ZModMatrix& b) const;
    ZVec apply(std::span<const i64> x) const;
    ZModMatrix transpose() const;
    bool operator==(const ZModMatrix& b) const = default;
    bool is_zero() const;
    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    i64 m_ = 1;
    std::vector<i64> a_;
};

// A = U * D * V, D diagonal with d_1 | d_2 | ... (each a divisor of m, or 0).
struct SmithForm {
    ZModMatrix D, U, V;
    ZModMatrix Uinv, Vinv;
    std::vector<i64> diag; // length min(rows, cols), entries in [0, m), divisors of m or 0
    int rank = 0;          // number of nonzero diagonal entries
};

enum SnfTrack : unsigned { TrackNone = 0, TrackLeft = 1, TrackRight = 2, TrackBoth = 3 };

SmithForm smith_normal_form(const ZModMatrix& A);
SmithForm smith(const ZModMatrix& A, unsigned track);

struct Solution {
    ZVec x;                  // reduced modulo the kernel
    std::vector<ZVec> kernel; // Howell basis
};
std::optional<Solution> solve(const ZModMatrix& A, std::span<const i64> b);

// Howell form of the row span: canonical generating rows.
std::vector<ZVec> howell_form(std::vector<ZVec> rows, int cols, i64 m);
ZVec reduce_by_howell(const std::vector<ZVec>& H, ZVec v, i64 m);

// Finite abelian group given as a quotient of a submodule of (Z/m)^n.
// coords(x) is additive, kills relations and maps lift i to e_i.
class AbelianStructure {
public:
    i64 modulus() const { return m_; }
    int ambient_dim() const { return n_; }
    const std::vector<i64>& factors() const { return factors_; }
    const std::vector<ZVec>& lifts() const { return lifts_; }
    int ngens() const { return int(factors_.size()); }
    ZVec coords(std::span<const i64> x) const;
    ZVec element(std::span<const i64> coords) const; // sum c_i * lift_i
    bool trivial() const { return factors_.empty(); }
    double order() const; // may be huge
    std::string str() const;

    // internal construction
    i64 m_ = 1;
    int n_ = 0;
    std::vector<i64> factors_;
    std::vector<ZVec> lifts_;
    // stage 1: c_i = (P_i . x) / q_i   (x in the submodule)
    ZModMatrix P_;
    std::vector<i64> q_;
    // stage 2: coords_j = (W_j . c) mod factor_j
    ZModMatrix W_;
};

AbelianStructure cokernel(const ZModMatrix& A);

// Incremental row echelon over Z/m; the row span is preserved.
// Keeps at most cols rows no matter how many are added.
class RowReducer {
public:
    RowReducer(int cols, i64 m);
    void add(std::span<const i64> row); // row length cols
    void add_scaled(std::span<const i64> row, i64 scale);
    int cols() const { return c_; }
    i64 modulus() const { return m_; }
    int rank() const { return int(rows_.size()); }
    ZModMatrix matrix() const;

private:
    int c_;
    i64 m_;
    std::vector<ZVec> rows_;
    std::vector<int> pivot_; // column -> row index or -1
    ZVec buf_;
};

// ker(E) / span(denoms) where E is given by its row reducer.  Every
// denominator must lie in ker(E).
AbelianStructure subquotient(const RowReducer& eqs, const std::vector<ZVec>& denoms);

// Kernel of E as a direct sum of cyclic pieces.
struct KernelBasis {
    i64 m = 1;
    std::vector<i64> orders;
    std::vector<ZVec> gens;
    ZModMatrix P; // rows project x to y_i (divisible by m/orders_i)
};
KernelBasis kernel_basis(const ZModMatrix& E, int cols);

// Subgroups of a finite abelian group sum Z/q_i, elements given by coordinates.
struct SubgroupQuotient {
    std::vector<i64> factors;
    std::vector<ZVec> gens; // ambient coordinates, one per factor
};
// A/B for B <= A <= sum Z/q_i, both given by generators; throws if B is not inside A
SubgroupQuotient subgroup_quotient(const std::vector<i64>& q, const std::vector<ZVec>& A, const std::vector<ZVec>& B);
// kernel of the homomorphism sum Z/q_i -> sum Z/h_j sending e_i to images[i]
SubgroupQuotient hom_kernel(const std::vector<i64>& q, const std::vector<i64>& h, const std::vector<ZVec>& images);

// Plain sum c_i * v_i mod m.
void axpy(std::span<i64> y, i64 a, std::span<const i64> x, i64 m);

std::string factors_str(const std::vector<i64>& f);

} // namespace brauer
