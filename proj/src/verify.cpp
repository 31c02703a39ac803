#include "arrpot/verify.hpp"

#include "arrpot/elementary.hpp"
#include "arrpot/errors.hpp"
#include "arrpot/potentials.hpp"
#include "arrpot/residue_algebra.hpp"

#include <algorithm>
#include <map>

namespace arrpot {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult* VerifyReport::find(const std::string& identity) const {
    for (const auto& c : checks)
        if (c.identity == identity) return &c;
    return nullptr;
}

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

void record(CheckResult& check, bool ok, Inputs inputs, std::string lhs, std::string rhs) {
    ++check.instances;
    if (!ok) check.failures.push_back({std::move(inputs), std::move(lhs), std::move(rhs)});
}

std::string vec_string(const RatVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
    return out + "]";
}

std::string matrix_string(const RatMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? "," : "") + vec_string(m.row(r));
    return out + "]";
}

// Memoized values of a fixed expression's mixed partials at one point.
class PartialValues {
public:
    PartialValues(const PotentialExpr& expr, const BasePoint& z) : cache_(expr), z_(z) {}
    Rat at(IndexTuple vars) {
        std::sort(vars.begin(), vars.end());
        auto it = memo_.find(vars);
        if (it == memo_.end()) it = memo_.emplace(vars, cache_.value(vars, z_)).first;
        return it->second;
    }

private:
    DerivativeCache cache_;
    const BasePoint& z_;
    std::map<IndexTuple, Rat> memo_;
};

IndexTuple concat(std::initializer_list<const IndexTuple*> parts) {
    IndexTuple out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

PotentialExpr relation_derivative(const PotentialExpr& expr, const ArrangementFamily& arr, const IndexTuple& s) {
    PotentialExpr sum;
    for (Index j = 0; j < arr.n(); ++j) {
        IndexTuple js{j};
        js.insert(js.end(), s.begin(), s.end());
        const Rat d = minor(arr, js);
        if (sgn(d) != 0) sum += d * differentiate(expr, j);
    }
    return sum;
}

}  // namespace

VerifyReport verify(const ArrangementFamily& arr, const BasePoint& z) {
    if (z.size() != arr.n()) throw InputError("base point has the wrong number of coordinates");
    if (auto witness = discriminant_witness(arr, z))
        throw DiscriminantError("base point lies on the discriminant: circuit {" + format_tuple(*witness) +
                                    "} is concurrent",
                                *witness);
    if (!is_unbalanced(arr)) {
        const auto flat = zero_weight_dense_flat(arr, arr.weights());
        throw BalancedWeightsError("weights are balanced: dense flat {" + (flat ? format_tuple(*flat) : "") +
                                   "} has zero weight");
    }

    const std::size_t k = arr.k();
    const auto elementary = enumerate_elementary(arr);
    const PotentialExpr p = potential_first(arr);
    const PotentialExpr q = potential_second(arr);
    const ResidueAlgebra alg(arr, z);
    const auto& indep = alg.independent();
    const std::size_t mu = alg.dimension();

    VerifyReport report;
    report.mu = mu;
    report.basis = alg.basis_labels();

    std::vector<AlgebraElement> p_mono;
    for (const auto& i : indep) p_mono.push_back(alg.monomial_p(i));

    {
        CheckResult c{"projection_formula"};
        for (const auto& i : indep) {
            const FlagVector formula = project_formula(arr, i, elementary);
            const FlagVector oracle = alg.marked_vector(i);
            record(c, formula == oracle, {{"I", format_tuple(i)}}, formula.to_string(), oracle.to_string());
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult pairing{"pairing_via_P"}, contra{"contravariant_via_P"}, constant{"pairing_z_independence"};
        DerivativeCache p_cache(p);
        for (std::size_t a = 0; a < indep.size(); ++a)
            for (std::size_t b = 0; b < indep.size(); ++b) {
                const Inputs in{{"I", format_tuple(indep[a])}, {"L", format_tuple(indep[b])}};
                const PairingViaP via = pairing_via_P(arr, p_cache, indep[a], indep[b]);
                record(constant, via.z_independent, in, via.expression.to_sexpr(), "constant");
                if (!via.z_independent) continue;
                const Rat direct = alg.residue_pairing(p_mono[a], p_mono[b]);
                record(pairing, via.value == direct, in, to_string(via.value), to_string(direct));
                const Rat s = contravariant(arr, alg.marked_vector(indep[a]), alg.marked_vector(indep[b]));
                record(contra, via.contravariant == s, in, to_string(via.contravariant), to_string(s));
            }
        report.checks.push_back(std::move(pairing));
        report.checks.push_back(std::move(contra));
        report.checks.push_back(std::move(constant));
    }

    {
        CheckResult c{"triple_via_Q"};
        PartialValues q_values(q, z);
        const Rat sign = k % 2 == 0 ? 1 : -1;
        for (Index i0 = 0; i0 < arr.n(); ++i0)
            for (std::size_t a = 0; a < indep.size(); ++a) {
                const AlgebraElement prod = alg.multiply_by_p(i0, p_mono[a]);
                const AlgebraElement g_prod = alg.gram() * prod;
                for (std::size_t b = 0; b < indep.size(); ++b) {
                    Rat direct = 0;
                    for (std::size_t r = 0; r < mu; ++r) direct += g_prod[r] * p_mono[b][r];
                    const IndexTuple head{i0};
                    const Rat via = sign * q_values.at(concat({&head, &indep[a], &indep[b]}));
                    record(c, via == direct,
                           {{"i0", std::to_string(i0 + 1)}, {"I", format_tuple(indep[a])}, {"L", format_tuple(indep[b])}},
                           to_string(via), to_string(direct));
                }
            }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"gram_nondegenerate"};
        const RatMatrix& g = alg.gram();
        const bool symmetric = g == g.transpose();
        const std::size_t r = rank(g);
        record(c, symmetric && r == mu, {}, "symmetric=" + std::string(symmetric ? "true" : "false") +
                                                " rank=" + std::to_string(r),
               "symmetric=true rank=" + std::to_string(mu));
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult sym{"operator_s_symmetry"}, comm{"operator_commutation"};
        const RatMatrix& g = alg.gram();
        for (Index j = 0; j < arr.n(); ++j) {
            const RatMatrix gk = g * alg.multiplication_operator(j);
            record(sym, gk == gk.transpose(), {{"j", std::to_string(j + 1)}}, matrix_string(gk),
                   matrix_string(gk.transpose()));
        }
        for (Index i = 0; i < arr.n(); ++i)
            for (Index j = i + 1; j < arr.n(); ++j) {
                const RatMatrix ab = alg.multiplication_operator(i) * alg.multiplication_operator(j);
                const RatMatrix ba = alg.multiplication_operator(j) * alg.multiplication_operator(i);
                record(comm, ab == ba, {{"i", std::to_string(i + 1)}, {"j", std::to_string(j + 1)}},
                       matrix_string(ab), matrix_string(ba));
            }
        report.checks.push_back(std::move(sym));
        report.checks.push_back(std::move(comm));
    }

    {
        // (uv, w) = A_u[w][v] and (u, vw) = A_v[u][w] with A_u = G * M_u.
        CheckResult c{"frobenius"};
        std::vector<RatMatrix> a;
        for (std::size_t b = 0; b < mu; ++b) a.push_back(alg.gram() * alg.basis_operator(b));
        for (std::size_t u = 0; u < mu; ++u)
            for (std::size_t v = 0; v < mu; ++v)
                for (std::size_t w = 0; w < mu; ++w) {
                    const Rat& lhs = a[u](w, v);
                    const Rat& rhs = a[v](u, w);
                    record(c, lhs == rhs,
                           {{"u", format_tuple(report.basis[u])},
                            {"v", format_tuple(report.basis[v])},
                            {"w", format_tuple(report.basis[w])}},
                           to_string(lhs), to_string(rhs));
                }
        report.checks.push_back(std::move(c));
    }

    const auto lower = independent_subsets(arr, k - 1);
    {
        CheckResult ops{"prel_operators"}, marked{"marked_relation"};
        for (const auto& s : lower) {
            RatMatrix sum(mu, mu);
            FlagVector w_sum;
            for (Index j = 0; j < arr.n(); ++j) {
                IndexTuple js{j};
                js.insert(js.end(), s.begin(), s.end());
                const Rat d = minor(arr, js);
                if (sgn(d) != 0) sum = sum + d * alg.multiplication_operator(j);
                w_sum += alg.marked_vector(js);
            }
            record(ops, sum.is_zero(), {{"S", format_tuple(s)}}, matrix_string(sum), "0");
            record(marked, w_sum.is_zero(), {{"S", format_tuple(s)}}, w_sum.to_string(), "0");
        }
        report.checks.push_back(std::move(ops));
        report.checks.push_back(std::move(marked));
    }

    {
        CheckResult lp{"relation_potential_first"}, lq{"relation_potential_second"};
        for (const auto& s : lower) {
            const PotentialExpr dp = relation_derivative(p, arr, s);
            const PotentialExpr dq = relation_derivative(q, arr, s);
            record(lp, dp.is_zero(), {{"S", format_tuple(s)}}, dp.to_sexpr(), "(sum)");
            record(lq, dq.is_zero(), {{"S", format_tuple(s)}}, dq.to_sexpr(), "(sum)");
        }
        report.checks.push_back(std::move(lp));
        report.checks.push_back(std::move(lq));
    }

    {
        CheckResult c{"e_choice_invariance"};
        const bool admits = std::any_of(elementary.begin(), elementary.end(),
                                        [&](const auto& e) { return has_alternate_e(arr, e); });
        if (!admits) {
            c.notes.push_back("no elementary subarrangement admits a second e-solution");
        } else {
            const PotentialExpr p_alt = potential_first(arr, EChoice::Alternate);
            const PotentialExpr q_alt = potential_second(arr, EChoice::Alternate);
            c.notes.push_back(std::string("full potential of first kind ") +
                              (p_alt == p ? "unchanged" : "changed") + " by the alternate e-solution");
            c.notes.push_back(std::string("full potential of second kind ") +
                              (q_alt == q ? "unchanged" : "changed") + " by the alternate e-solution");
            DerivativeCache p_cache(p), p_alt_cache(p_alt);
            for (const auto& i : indep)
                for (const auto& l : indep) {
                    const IndexTuple vars = concat({&i, &l});
                    const PotentialExpr lhs = p_cache.derivative(vars);
                    const PotentialExpr rhs = p_alt_cache.derivative(vars);
                    record(c, lhs == rhs, {{"kind", "first"}, {"I", format_tuple(i)}, {"L", format_tuple(l)}},
                           lhs.to_sexpr(), rhs.to_sexpr());
                }
            PartialValues q_values(q, z), q_alt_values(q_alt, z);
            for (Index i0 = 0; i0 < arr.n(); ++i0)
                for (const auto& i : indep)
                    for (const auto& l : indep) {
                        const IndexTuple head{i0};
                        const IndexTuple vars = concat({&head, &i, &l});
                        const Rat lhs = q_values.at(vars);
                        const Rat rhs = q_alt_values.at(vars);
                        record(c, lhs == rhs,
                               {{"kind", "second"},
                                {"i0", std::to_string(i0 + 1)},
                                {"I", format_tuple(i)},
                                {"L", format_tuple(l)}},
                               to_string(lhs), to_string(rhs));
                    }
        }
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"rewrite_independence"};
        for (Index j = 0; j < arr.n(); ++j)
            for (const auto& i : indep) {
                if (!alg.has_alternate_rewrite(j, i)) continue;
                const FlagVector lhs = alg.p_times_w(j, i, Rewrite::Canonical);
                const FlagVector rhs = alg.p_times_w(j, i, Rewrite::Alternate);
                record(c, lhs == rhs, {{"j", std::to_string(j + 1)}, {"I", format_tuple(i)}}, lhs.to_string(),
                       rhs.to_string());
            }
        if (c.instances == 0) c.notes.push_back("no product admits a second rewrite subset");
        report.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"mu_consistency"};
        std::vector<FlagVector> singular;
        for (const auto& e : elementary) singular.push_back(singular_element(arr, e));
        const std::size_t sing = sing_dimension(arr);
        const std::size_t gram_rank = rank(alg.gram());
        const std::size_t span = span_rank(singular);
        const std::string lhs = "sing=" + std::to_string(sing) + " gram_rank=" + std::to_string(gram_rank) +
                                " singular_span=" + std::to_string(span) + " basis=" + std::to_string(mu);
        bool ok = sing == gram_rank && sing == span && sing == mu;
        std::string rhs = "all equal";
        if (k == 1) {
            ok = ok && sing == arr.n() - 1;
            rhs += " to n-1=" + std::to_string(arr.n() - 1);
        }
        record(c, ok, {}, lhs, rhs);
        report.checks.push_back(std::move(c));
    }

    return report;
}

}  // namespace arrpot
