// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "arrpot/elementary.hpp"
#include "arrpot/potentials.hpp"
#include "arrpot/random_family.hpp"
#include "arrpot/residue_algebra.hpp"
#include "arrpot/verify.hpp"
#include "support.hpp"

#include <array>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace arrpot;
using namespace arrpot::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    std::vector<std::string> problems;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && problems.size() < 20) problems.push_back(what);
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report_line(int number, const std::string& title, const Outcome& out, double elapsed) {
    const bool ok = out.problems.empty();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << " " << title;
    // negative elapsed: the criterion reuses an earlier computation
    if (elapsed >= 0) std::cout << " [" << std::fixed << std::setprecision(3) << elapsed << " s]";
    if (!out.detail.empty()) std::cout << " " << out.detail;
    std::cout << "\n";
    for (const auto& p : out.problems) std::cout << "    " << p << "\n";
    return ok;
}

// Criterion 1: the displayed potentials of the four-line example and the
// closed forms for one pairing and one triple product.
Outcome fig1_reproduction() {
    Outcome out;
    std::mt19937_64 rng(1001);
    const LinearForm u1 = zform({{1, 1}, {3, 1}, {4, -1}});
    const LinearForm u2 = zform({{2, 1}, {3, 1}, {4, -1}});
    const LinearForm v = zform({{1, 1}, {2, -1}});
    std::size_t weight_vectors = 0, points = 0;
    for (int w = 0; w < 5; ++w) {
        const RatVector a = random_weights(rng, 4);
        const auto arr = fig1(a);
        const Rat aj = a[0] + a[1] + a[2] + a[3];
        const Rat c1 = a[0] * a[2] * a[3], c2 = a[1] * a[2] * a[3];
        const Rat c3 = a[0] * a[1] * a[2] * a[3] / (a[2] + a[3]);
        const PotentialExpr p_expected =
            (1 / aj) * (PotentialExpr::term(c1 / factorial(4), {{u1, 4}}) +
                        PotentialExpr::term(c2 / factorial(4), {{u2, 4}}) +
                        PotentialExpr::term(c3 / 4, {{v, 2}, {u1, 2}}));
        const PotentialExpr q_expected = PotentialExpr::term(c1 / factorial(4), {{u1, 4}}, u1) +
                                         PotentialExpr::term(c2 / factorial(4), {{u2, 4}}, u2) +
                                         PotentialExpr::term(c3 / 4, {{v, 2}, {u1, 2}}, v);
        const PotentialExpr p = potential_first(arr);
        const PotentialExpr q = potential_second(arr);
        out.expect(p == p_expected, "P mismatch at a=" + vector_text(a) + ": " + p.to_sexpr());
        out.expect(q == q_expected, "Q mismatch at a=" + vector_text(a) + ": " + q.to_sexpr());

        const Rat pairing_expected = a[0] * a[1] * a[2] * a[3] / (aj * (a[2] + a[3]));
        const PairingViaP via = pairing_via_P(arr, p, idx({1, 3}), idx({2, 4}));
        out.expect(via.z_independent && via.value == pairing_expected,
                   "pairing (13,24) at a=" + vector_text(a) + " gave " + via.expression.to_sexpr());

        DerivativeCache q_cache(q);
        for (int t = 0; t < 5; ++t) {
            const BasePoint z = random_point(rng, arr);
            const Rat triple_expected = a[0] * a[2] * a[3] / (z[0] + z[2] - z[3]);
            const Rat triple = triple_via_Q(arr, q_cache, z, 3, idx({1, 3}), idx({3, 4}));
            out.expect(triple == triple_expected, "triple at z=" + vector_text(z) + " gave " + to_string(triple));
            // the same two numbers computed inside the algebra
            const ResidueAlgebra alg(arr, z);
            const auto p13 = alg.monomial_p(idx({1, 3}));
            out.expect(alg.residue_pairing(p13, alg.monomial_p(idx({2, 4}))) == pairing_expected,
                       "algebra pairing at z=" + vector_text(z));
            out.expect(alg.residue_pairing(alg.multiply_by_p(3, p13), alg.monomial_p(idx({3, 4}))) == triple_expected,
                       "algebra triple at z=" + vector_text(z));
            ++points;
        }
        ++weight_vectors;
    }
    out.detail = std::to_string(weight_vectors) + " weight vectors x " + std::to_string(points / weight_vectors) +
                 " base points";
    return out;
}

// Criterion 2: the two displayed projections, and formula = oracle on every
// independent pair.
Outcome fig1_projections() {
    Outcome out;
    std::mt19937_64 rng(2002);
    for (int w = 0; w < 6; ++w) {
        const RatVector a = random_weights(rng, 4);
        const auto arr = fig1(a);
        const Rat aj = a[0] + a[1] + a[2] + a[3];
        const FlagVector p34 = (1 / aj) * (a[0] * F(arr, {3, 4}) + a[2] * F(arr, {4, 1}) + a[3] * F(arr, {1, 3}) +
                                           a[1] * F(arr, {3, 4}) + a[2] * F(arr, {4, 2}) + a[3] * F(arr, {2, 3}));
        const FlagVector s = wedge(arr, {{2, a[0]}, {1, -a[1]}}, {{3, a[3]}, {4, -a[2]}});
        const FlagVector p23 = (1 / aj) * (a[3] * F(arr, {2, 3}) + a[1] * F(arr, {3, 4}) + a[2] * F(arr, {4, 2}) +
                                           (1 / (a[2] + a[3])) * s);
        out.expect(project_formula(arr, idx({3, 4})) == p34, "pi(F34) at a=" + vector_text(a));
        out.expect(project_formula(arr, idx({2, 3})) == p23, "pi(F23) at a=" + vector_text(a));
        const auto pairs = independent_subsets(arr, 2);
        out.expect(pairs.size() == 5, "expected 5 independent pairs");
        for (const auto& i : pairs)
            out.expect(project_formula(arr, i) == project_oracle(arr, basic(arr, i)),
                       "formula vs oracle for I=" + format_tuple(i) + " at a=" + vector_text(a));
    }
    out.detail = "6 weight vectors, 5 independent pairs each";
    return out;
}

struct Instance {
    std::uint64_t seed;
    RandomInstance data;
    VerifyReport report;
};

void require_checks(Outcome& out, const std::vector<Instance>& suite, std::initializer_list<const char*> names) {
    for (const auto& inst : suite)
        for (const char* name : names) {
            const CheckResult* c = inst.report.find(name);
            if (!c) {
                out.expect(false, "seed " + std::to_string(inst.seed) + ": missing check " + name);
                continue;
            }
            if (!c->passed()) {
                const auto& f = c->failures.front();
                std::ostringstream msg;
                msg << "seed " << inst.seed << ": " << name << " failed " << c->failures.size() << "/" << c->instances
                    << " (first: " << f.lhs << " vs " << f.rhs << ")";
                out.expect(false, msg.str());
            }
        }
}

std::size_t total_instances(const std::vector<Instance>& suite, const char* name) {
    std::size_t total = 0;
    for (const auto& inst : suite)
        if (const CheckResult* c = inst.report.find(name)) total += c->instances;
    return total;
}

}  // namespace

int main() {
    bool all = true;

    auto start = Clock::now();
    Outcome c1 = fig1_reproduction();
    double t1 = seconds_since(start);
    c1.expect(t1 < 1.0, "runtime over 1 s");
    all &= report_line(1, "four-line example potentials, pairing and triple", c1, t1);

    start = Clock::now();
    Outcome c2 = fig1_projections();
    all &= report_line(2, "four-line example projections", c2, seconds_since(start));

    // Criterion 3 builds the shared random suite.
    constexpr std::uint64_t kSeeds = 60;
    std::vector<Instance> suite;
    Outcome c3;
    start = Clock::now();
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
        const auto [k, n] = random_shape(seed);
        RandomInstance data = random_family(seed, k, n);
        VerifyReport report = verify(data.arrangement, data.base_point);
        suite.push_back({seed, std::move(data), std::move(report)});
    }
    const double t3 = seconds_since(start);
    require_checks(c3, suite, {"projection_formula", "pairing_via_P", "triple_via_Q"});
    std::array<std::size_t, 3> per_k{};
    for (const auto& inst : suite) {
        const std::size_t k = inst.data.arrangement.k(), n = inst.data.arrangement.n();
        c3.expect(k >= 1 && k <= 3 && n <= k + 4 && n > k, "seed " + std::to_string(inst.seed) + " out of range");
        c3.expect(!in_discriminant(inst.data.arrangement, inst.data.base_point), "base point on the discriminant");
        c3.expect(all_weights_positive(inst.data.arrangement), "non-positive weight");
        ++per_k[k - 1];
    }
    for (std::size_t k = 0; k < 3; ++k) c3.expect(per_k[k] > 0, "no family with k=" + std::to_string(k + 1));
    c3.expect(t3 < 60.0, "runtime over 60 s");
    c3.detail = std::to_string(kSeeds) + " families (k=1,2,3: " + std::to_string(per_k[0]) + "," +
                std::to_string(per_k[1]) + "," + std::to_string(per_k[2]) + "); " +
                std::to_string(total_instances(suite, "projection_formula")) + " projections, " +
                std::to_string(total_instances(suite, "pairing_via_P")) + " pairings, " +
                std::to_string(total_instances(suite, "triple_via_Q")) + " triples";
    all &= report_line(3, "identity suite on seeded random families", c3, t3);

    Outcome c4;
    require_checks(c4, suite,
                   {"gram_nondegenerate", "operator_s_symmetry", "operator_commutation", "frobenius", "prel_operators"});
    c4.detail = std::to_string(total_instances(suite, "frobenius")) + " Frobenius triples, " +
                std::to_string(total_instances(suite, "operator_commutation")) + " commutators";
    all &= report_line(4, "Frobenius and Bethe structure", c4, -1);

    Outcome c5;
    require_checks(c5, suite, {"relation_potential_first", "relation_potential_second", "e_choice_invariance"});
    std::size_t with_alternate = 0;
    for (const auto& inst : suite) {
        const auto& arr = inst.data.arrangement;
        bool admits = false;
        for (const auto& e : enumerate_elementary(arr)) admits = admits || has_alternate_e(arr, e);
        if (!admits) continue;
        ++with_alternate;
        const CheckResult* c = inst.report.find("e_choice_invariance");
        c5.expect(c && c->instances > 0, "seed " + std::to_string(inst.seed) + ": alternate e-solution not compared");
    }
    c5.expect(with_alternate > 0, "no instance admits a second e-solution");
    c5.detail = std::to_string(with_alternate) + " instances compared under two e-solutions";
    all &= report_line(5, "potential relations and e-choice invariance", c5, -1);

    Outcome c6;
    require_checks(c6, suite, {"pairing_z_independence", "contravariant_via_P"});
    c6.detail = std::to_string(total_instances(suite, "pairing_z_independence")) + " pairing expressions constant";
    all &= report_line(6, "pairings from P are independent of z", c6, -1);

    Outcome c7;
    require_checks(c7, suite, {"mu_consistency"});
    std::mt19937_64 rng(7007);
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto arr = collinear(n, random_weights(rng, n));
        c7.expect(sing_dimension(arr) == n - 1, "collinear n=" + std::to_string(n) + " has wrong sing dimension");
        const ResidueAlgebra alg(arr, random_point(rng, arr));
        c7.expect(alg.dimension() == n - 1 && rank(alg.gram()) == n - 1,
                  "collinear n=" + std::to_string(n) + " algebra dimension");
    }
    c7.detail = std::to_string(kSeeds) + " random families plus collinear n=2..8";
    all &= report_line(7, "consistency of the algebra dimension", c7, -1);

    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? 0 : 1;
}
