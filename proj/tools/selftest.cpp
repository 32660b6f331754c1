#include "run.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "brauer/engine.hpp"
#include "brauer/local.hpp"
#include "brauer/oracle.hpp"

using namespace brauer;

namespace cli {

namespace {

struct Check {
    const char* name;
    std::function<std::string()> body; // empty string: pass
};

std::string h2_cyclic()
{
    for (int n = 1; n <= 6; ++n)
        for (i64 m = 2; m <= 6; ++m) {
            FiniteGroup G = cyclic_group(n);
            auto fast = h2(G, AbelianModule::trivial({m}, n)).factors();
            auto dense = oracle::h2_dense(G, m).S.factors();
            std::vector<i64> want;
            if (gcd64(n, m) > 1)
                want.push_back(gcd64(n, m));
            if (fast != want || dense != want)
                return "H^2(Z/" + std::to_string(n) + ", Z/" + std::to_string(m) + ") = " + factors_str(fast) +
                       ", dense oracle " + factors_str(dense) + ", expected " + factors_str(want);
        }
    return {};
}

std::string b0_small()
{
    for (int n = 2; n <= 12; ++n)
        for (const auto& G : oracle::small_groups(n)) {
            i64 fast = 1;
            for (i64 f : b0(G).factors)
                fast *= f;
            i64 brute = oracle::b0_order(G);
            if (fast != brute)
                return "order " + std::to_string(n) + ": engine |B_0| = " + std::to_string(fast) + ", oracle " +
                       std::to_string(brute);
        }
    return {};
}

std::string galois_closed_form()
{
    std::mt19937_64 rng(5);
    for (const auto& [G, gal] : oracle::galois_cases(8, 2)) {
        ClassModule C(G, gal);
        EquivariantExtension e = oracle::random_valid(C, rng);
        for (const auto& t : galois_triples(G, gal)) {
            bool closed = galois_condition_single(G, e, gal, t.d, t.tau, t.gamma);
            bool brute = oracle::galois_condition_search(G, e, gal, t.d, t.tau, t.gamma);
            if (closed != brute)
                return "order " + std::to_string(G.order()) + " triple (" + std::to_string(t.d) + "," +
                       std::to_string(t.tau) + "," + std::to_string(t.gamma) + "): closed form " +
                       (closed ? "passes" : "fails") + ", search " + (brute ? "passes" : "fails");
        }
    }
    return {};
}

std::string evaluation_soundness()
{
    std::mt19937_64 rng(9);
    for (const auto& [G, gal] : oracle::galois_cases(6, 1)) {
        ClassModule C(G, gal);
        EquivariantExtension e = oracle::random_valid(C, rng);
        LocalDatum ld{"v", gal.delta, {}, {}};
        for (int d = 0; d < gal.nd(); ++d)
            ld.structure.push_back(d);
        for (const auto& h : nonabelian_h1(ld, G, gal)) {
            Evaluation ev = evaluate(G, e, gal, ld, h);
            bool brute = oracle::coboundary_search(ld.dv, local_chi(ld, gal, gal.N), ev.beta, gal.N).has_value();
            if ((ev.verdict == Verdict::Zero) != brute)
                return "order " + std::to_string(G.order()) + ": verdict " + verdict_name(ev.verdict) +
                       " but brute-force coboundary search " + (brute ? "succeeds" : "fails");
        }
        NonabelianCocycle base{std::vector<i64>(ld.dv.order(), 0)};
        if (evaluate(G, e, gal, ld, base).verdict != Verdict::Zero)
            return "order " + std::to_string(G.order()) + ": base point is not Zero";
    }
    return {};
}

std::string group_ring_p2()
{
    GroupRingExample ex = build_group_ring_example(2);
    ShaGroup S = sha1_bic(ex.sd);
    if (S.ambient.factors() != ex.expected_h1)
        return "H^1 = " + factors_str(S.ambient.factors()) + ", expected " + factors_str(ex.expected_h1);
    if (S.factors != ex.expected_sha)
        return "Sha^1_bic = " + S.str() + ", expected " + factors_str(ex.expected_sha);
    return {};
}

} // namespace

int selftest(std::ostream& out)
{
    const std::vector<Check> checks = {
        {"h2_cyclic_vs_dense_oracle", h2_cyclic},
        {"b0_vs_bruteforce_order_le_12", b0_small},
        {"galois_closed_form_vs_search", galois_closed_form},
        {"evaluation_zero_vs_coboundary_search", evaluation_soundness},
        {"group_ring_p2_regression", group_ring_p2},
    };
    int failed = 0;
    for (const auto& c : checks) {
        std::string why;
        try {
            why = c.body();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) {
            out << "PASS " << c.name << "\n";
        } else {
            out << "FAIL " << c.name << ": " << why << "\n";
            ++failed;
        }
    }
    out << (failed ? "selftest: " + std::to_string(failed) + " failed" : std::string("selftest: all passed")) << "\n";
    return failed;
}

} // namespace cli
