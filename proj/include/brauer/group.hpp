#pragma once

#include <span>
#include <string>
#include <vector>

#include "brauer/caps.hpp"
#include "brauer/error.hpp"
#include "brauer/zmod.hpp"

namespace brauer {

// Finite group by full multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup(); // trivial group
    // no validation; use group_from_table for untrusted input
    static FiniteGroup from_table_unchecked(int n, std::vector<int> mul);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[std::size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv_[g]); } // g x g^-1
    int pow(int a, i64 k) const;
    int element_order(int a) const { return ord_[a]; }
    i64 exponent() const;
    bool is_abelian() const;
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
    // greedy generating set (first element not yet in the closure)
    const std::vector<int>& generators() const { return gens_; }
    const std::vector<int>& table() const { return mul_; }
    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && mul_ == o.mul_; }

private:
    void derive();
    int n_ = 1;
    std::vector<int> mul_, inv_, ord_, gens_;
};

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens, int degree, i64 cap = 1000000);
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b); // (x,y) -> x + |A| y
FiniteGroup abelian_group(const std::vector<i64>& factors);             // mixed radix, first factor fastest

// sorted element set
using Subgroup = std::vector<int>;

std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems);
std::vector<Subgroup> subgroups_cyclic(const FiniteGroup& G);
std::vector<Subgroup> subgroups_bicyclic(const FiniteGroup& G);
std::vector<Subgroup> subgroups_abelian(const FiniteGroup& G); // all abelian subgroups
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);

// Subgroup with its own indexing: local 0 = identity, then parent order.
struct SubgroupView {
    FiniteGroup group;
    std::vector<int> to_parent;
    std::vector<int> from_parent; // -1 outside
};
SubgroupView subgroup_view(const FiniteGroup& G, const std::vector<int>& elems);

// Action of actor on target by automorphisms: table[a * |target| + x].
struct GroupAction {
    int actor_order = 1;
    int target_order = 1;
    std::vector<int> table;
    int act(int a, int x) const { return table[std::size_t(a) * target_order + x]; }
    static GroupAction trivial(int actor, int target);
};
void validate_action(const FiniteGroup& actor, const FiniteGroup& target, const GroupAction& A);

// Finite abelian group with invariant factors and a matrix action.
// Element coordinates x_i live mod factors[i]; action[g] is r x r row-major.
struct AbelianModule {
    std::vector<i64> factors;
    int actor_order = 1;
    std::vector<std::vector<i64>> action;

    int rank() const { return int(factors.size()); }
    i64 exponent() const;
    double size() const;
    ZVec act(int g, std::span<const i64> x) const;
    i64 entry(int g, int i, int j) const { return action[g][std::size_t(i) * factors.size() + j]; }
    ZVec reduce(ZVec x) const;

    static AbelianModule trivial(std::vector<i64> factors, int actor_order);
    // Z/m with g acting by multiplication by chi[g]
    static AbelianModule twisted_cyclic(i64 m, const std::vector<i64>& chi);
};
void validate_module(const FiniteGroup& actor, const AbelianModule& M);
// Hom(M, Z/e), e = exp(M): dual basis phi_i(e_j) = delta_ij e/d_i; (q.phi)(n) = phi(q^-1 n)
AbelianModule dual_module(const FiniteGroup& actor, const AbelianModule& M);
// module along a homomorphism actor' -> actor (phi[a'] = a)
AbelianModule pull_module(const AbelianModule& M, const std::vector<int>& phi);
// enumerate elements (mixed radix, coordinate 0 fastest); caps apply
std::vector<ZVec> module_elements(const AbelianModule& M, i64 cap);
i64 module_index(const AbelianModule& M, std::span<const i64> x);

struct SemidirectProduct {
    FiniteGroup group;
    int n_order = 1, q_order = 1;
    // element (n, q) has index n + |N| q
    int pair(int n, int q) const { return n + n_order * q; }
    int n_part(int g) const { return g % n_order; }
    int q_part(int g) const { return g / n_order; }
};
SemidirectProduct semidirect_product(const FiniteGroup& N, const FiniteGroup& Q, const GroupAction& act,
                                     i64 cap = 1000000);
SemidirectProduct semidirect_product(const AbelianModule& N, const FiniteGroup& Q, i64 cap = 1000000);
// table of the additive group of M and the induced action
FiniteGroup module_group(const AbelianModule& M, i64 cap);
GroupAction module_action(const AbelianModule& M, i64 cap);

// homomorphism test for an index map
bool is_homomorphism(const FiniteGroup& A, const FiniteGroup& B, const std::vector<int>& phi);

std::string subgroup_str(const Subgroup& H);

} // namespace brauer
