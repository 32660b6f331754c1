#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brauer/group.hpp"
#include "brauer/zmod.hpp"

namespace brauer {

// Normalized cochain of degree 1 or 2, values in a module of rank r.
// v[(g * n + h) * r + i] in degree 2, v[g * r + i] in degree 1.
struct Cochain {
    int degree = 1;
    int n = 1;
    int r = 1;
    std::vector<i64> v;

    static Cochain zero(int degree, int n, int r);
    i64* at(int g) { return v.data() + std::size_t(g) * r; }
    const i64* at(int g) const { return v.data() + std::size_t(g) * r; }
    i64* at(int g, int h) { return v.data() + (std::size_t(g) * n + h) * r; }
    const i64* at(int g, int h) const { return v.data() + (std::size_t(g) * n + h) * r; }
    i64 s(int g, int h) const { return v[std::size_t(g) * n + h]; } // scalar degree 2
    bool is_zero() const;
    bool operator==(const Cochain&) const = default;
};
using Cochain1 = Cochain;
using Cochain2 = Cochain;

// Cocycles parametrized by their values on generators (degree 1: a(s);
// degree 2: f(g, s)).  Every value of the cochain is a linear form in the
// parameters; Z^d is the kernel of a short equation list.
class CocycleParam {
public:
    CocycleParam(const FiniteGroup& G, const AbelianModule& M, int degree, i64 cap = 200000000);

    int degree() const { return deg_; }
    int unknowns() const { return U_; }
    int rank() const { return r_; }
    i64 modulus() const { return m_; }
    const FiniteGroup& group() const { return G_; }
    const AbelianModule& module() const { return M_; }
    const std::vector<int>& gens() const { return gens_; }

    // r x U linear form of the value at h (degree 1) or (g, h) (degree 2)
    const i64* form(int h) const { return L_.data() + std::size_t(h) * r_ * U_; }
    const i64* form(int g, int h) const { return form(g * n_ + h); }
    // parameter index of component i of a(gens[k]) / f(g, gens[k]); -1 if forced zero
    int param_index(int g, int k, int i) const;

    // cocycle equations placed at columns [offset, offset + U)
    void add_equations(RowReducer& R, int offset) const;
    // d_i e for parameters in components with d_i < m
    void add_scaling(std::vector<ZVec>& denoms, int width, int offset) const;
    // parameter vector of d(b); b is a 1-cochain (degree 2) or an element of M (degree 1)
    ZVec coboundary_params(std::span<const i64> b) const;

    ZVec params(const Cochain& c) const;
    Cochain table(std::span<const i64> x) const;
    bool is_cocycle(const Cochain& c) const;

private:
    FiniteGroup G_;
    AbelianModule M_;
    int deg_, n_, r_, U_;
    i64 m_;
    std::vector<int> gens_;
    std::vector<i64> L_;
};

class CocycleModel {
public:
    CocycleModel(const FiniteGroup& G, const AbelianModule& M, int degree, i64 cap = 200000000);

    const CocycleParam& param() const { return P_; }
    int degree() const { return P_.degree(); }
    i64 modulus() const { return P_.modulus(); }
    const FiniteGroup& group() const { return P_.group(); }
    const AbelianModule& module() const { return P_.module(); }
    const AbelianStructure& structure() const { return S_; }

    ZVec params(const Cochain& c) const { return P_.params(c); }
    Cochain table(std::span<const i64> x) const { return P_.table(x); }
    ZVec coords(const Cochain& c) const { return S_.coords(P_.params(c)); }
    bool is_cocycle(const Cochain& c) const { return P_.is_cocycle(c); }

private:
    CocycleParam P_;
    AbelianStructure S_;
};

struct CohomologyGroup {
    std::shared_ptr<const CocycleModel> model;
    std::vector<Cochain> reps;

    const AbelianStructure& structure() const { return model->structure(); }
    const std::vector<i64>& factors() const { return model->structure().factors(); }
    ZVec coordinates(const Cochain& c) const { return model->coords(c); }
    Cochain element(std::span<const i64> coords) const;
};

CohomologyGroup h1(const FiniteGroup& G, const AbelianModule& M);
CohomologyGroup h2(const FiniteGroup& G, const AbelianModule& M, i64 cap = 200000000);
AbelianStructure tate_h0(const FiniteGroup& G, const AbelianModule& M);

Cochain restrict_cochain(const Cochain& c, const SubgroupView& H);
Cochain restrict_cochain(const Cochain& c, const FiniteGroup& G, const Subgroup& H);

enum class Family { Abelian, Bicyclic, Cyclic };
std::vector<Subgroup> family_subgroups(const FiniteGroup& G, Family f);

// Sha^d_x as a subgroup of H^d: generators given in H^d coordinates.
struct ShaGroup {
    CohomologyGroup ambient;
    std::vector<i64> factors;
    std::vector<ZVec> gen_coords;
    std::vector<Cochain> reps;
    std::string str() const { return factors_str(factors); }
};
// qz: degree 2 with trivial Z/N coefficients read in Q/Z (restrictions use dies_in_QZ)
ShaGroup sha(const FiniteGroup& G, const AbelianModule& M, int degree, Family family, bool qz = false);
ShaGroup sha_from(const CohomologyGroup& H, Family family, bool qz = false);

// f scalar 2-cocycle on B mod N; true iff it dies in H^2(B, Q/Z)
bool dies_in_QZ(const FiniteGroup& B, const Cochain& f, i64 N);

// b with beta = d(b): beta(g,h) = chi(g) b(h) - b(gh) + b(g) mod m,
// plus optional extra linear equations sum coef * b(g) = rhs.
struct LinearEq {
    std::vector<std::pair<int, i64>> terms;
    i64 rhs = 0;
};
std::optional<ZVec> solve_coboundary(const FiniteGroup& G, std::span<const i64> chi, const Cochain& beta, i64 m,
                                     const std::vector<LinearEq>& extra = {});
bool is_coboundary(const FiniteGroup& G, std::span<const i64> chi, const Cochain& beta, i64 m);
bool is_cocycle_scalar(const FiniteGroup& G, std::span<const i64> chi, const Cochain& f, i64 m);

// (x cup y)(s,t) = <x(s), s.y(t)>, y valued in dual_module(M)
Cochain cup_h1_h1(const FiniteGroup& G, const AbelianModule& M, const Cochain& x, const AbelianModule& Mdual,
                  const Cochain& y);
// <n, phi> in Z/exp(M) for phi in the dual basis
i64 dual_pairing(const AbelianModule& M, std::span<const i64> n, std::span<const i64> phi);

// Bockstein of phi: G -> Z/N along Z/N -> Z/N^2 -> Z/N.
struct BocksteinPair {
    Cochain f;             // scalar mod N
    std::vector<i64> c;    // c[delta * n + g] mod N (empty when no Delta)
};
// act(delta, g) and chi2 (mod N^2) may be empty for the untwisted case
BocksteinPair bockstein(const FiniteGroup& G, std::span<const i64> phi, i64 N, const GroupAction* act = nullptr,
                        std::span<const i64> chi2 = {});

} // namespace brauer
