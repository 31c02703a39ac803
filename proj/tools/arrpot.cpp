// arrpot: command-line front end for the arrangement potential library.

#include "arrpot/arrangement.hpp"
#include "arrpot/elementary.hpp"
#include "arrpot/errors.hpp"
#include "arrpot/flag_space.hpp"
#include "arrpot/io.hpp"
#include "arrpot/potentials.hpp"
#include "arrpot/random_family.hpp"
#include "arrpot/residue_algebra.hpp"
#include "arrpot/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

using namespace arrpot;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kIdentityFailure = 1, kMalformed = 2, kDiscriminant = 3, kBalanced = 4 };

struct Options {
    std::string input;
    std::string at;
    std::string format;
    std::string kind = "first";
    std::size_t j = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    bool random = false;
    bool signed_weights = false;
};

json header(const std::string& command) { return {{"tool", "arrpot"}, {"version", kVersion}, {"command", command}}; }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

BasePoint base_point_for(const ArrangementInput& in, const std::string& at) {
    if (!at.empty()) return parse_base_point(at, in.arrangement.n());
    if (in.base_point) return *in.base_point;
    throw InputError("no base point: pass --at or add base_point to the input file");
}

int run_validate(const Options& opt) {
    const ArrangementInput in = load_arrangement(opt.input);
    const ArrangementFamily& arr = in.arrangement;
    json doc = header("validate");
    doc["arrangement"] = arrangement_json(arr, in.name, in.base_point);
    doc["independent_subsets"] = independent_subsets(arr, arr.k()).size();
    json circ = json::array();
    for (const auto& c : circuits(arr)) circ.push_back(tuple_json(c));
    doc["circuits"] = circ;

    int code = kOk;
    const bool unbalanced = is_unbalanced(arr);
    doc["unbalanced"] = unbalanced;
    if (!unbalanced) {
        if (auto flat = zero_weight_dense_flat(arr, arr.weights())) doc["zero_weight_flat"] = tuple_json(*flat);
        code = kBalanced;
    } else {
        doc["mu"] = sing_dimension(arr);
    }

    if (!opt.at.empty() || in.base_point) {
        const BasePoint z = base_point_for(in, opt.at);
        doc["base_point"] = vector_json(z);
        const auto witness = discriminant_witness(arr, z);
        doc["in_discriminant"] = witness.has_value();
        if (witness) {
            doc["discriminant_circuit"] = tuple_json(*witness);
            code = kDiscriminant;
        }
    }
    doc["ok"] = code == kOk;
    if (opt.format == "text") {
        std::cout << "k=" << arr.k() << " n=" << arr.n() << " unbalanced=" << (unbalanced ? "yes" : "no");
        if (doc.contains("mu")) std::cout << " mu=" << doc["mu"].get<std::size_t>();
        if (doc.contains("discriminant_circuit"))
            std::cout << " base point on discriminant (circuit " << doc["discriminant_circuit"].dump() << ")";
        std::cout << "\n";
    } else {
        emit(doc);
    }
    return code;
}

int run_elementary(const Options& opt) {
    const ArrangementInput in = load_arrangement(opt.input);
    const auto list = enumerate_elementary(in.arrangement);
    if (opt.format == "text") {
        for (const auto& e : list) std::cout << to_string(e) << "\n";
        return kOk;
    }
    json doc = header("elementary");
    json items = json::array();
    for (const auto& e : list) items.push_back(elementary_json(in.arrangement, e));
    doc["elementary"] = items;
    emit(doc);
    return kOk;
}

int run_potential(const Options& opt) {
    const ArrangementInput in = load_arrangement(opt.input);
    const PotentialExpr expr = opt.kind == "second" ? potential_second(in.arrangement) : potential_first(in.arrangement);
    if (opt.format == "latex") {
        std::cout << (opt.kind == "second" ? "Q = " : "P = ") << expr.to_latex() << "\n";
    } else if (opt.format == "text") {
        std::cout << expr.to_sexpr() << "\n";
    } else {
        json doc = header("potential");
        doc["kind"] = opt.kind;
        doc["terms"] = expr.terms().size();
        doc["latex"] = expr.to_latex();
        doc["sexpr"] = expr.to_sexpr();
        emit(doc);
    }
    return kOk;
}

json basis_json(const ResidueAlgebra& alg) {
    json basis = json::array();
    for (const auto& b : alg.basis_labels()) basis.push_back(tuple_json(b));
    return basis;
}

int run_gram(const Options& opt) {
    const ArrangementInput in = load_arrangement(opt.input);
    const ResidueAlgebra alg(in.arrangement, base_point_for(in, opt.at));
    json doc = header("gram");
    doc["base_point"] = vector_json(alg.base_point());
    doc["mu"] = alg.dimension();
    doc["basis"] = basis_json(alg);
    doc["gram"] = matrix_json(alg.gram());
    emit(doc);
    return kOk;
}

int run_multop(const Options& opt) {
    const ArrangementInput in = load_arrangement(opt.input);
    if (opt.j < 1 || opt.j > in.arrangement.n())
        throw InputError("-j must be between 1 and " + std::to_string(in.arrangement.n()));
    const ResidueAlgebra alg(in.arrangement, base_point_for(in, opt.at));
    json doc = header("multop");
    doc["base_point"] = vector_json(alg.base_point());
    doc["j"] = opt.j;
    doc["mu"] = alg.dimension();
    doc["basis"] = basis_json(alg);
    doc["operator"] = matrix_json(alg.multiplication_operator(opt.j - 1));
    emit(doc);
    return kOk;
}

struct TrialOutcome {
    json entry;
    bool failed = false;
};

TrialOutcome run_trial(std::size_t t, const ArrangementFamily& arr, const std::string& name, const BasePoint& z) {
    TrialOutcome out;
    out.entry = {{"trial", t}, {"arrangement", arrangement_json(arr, name, z)}};
    try {
        const VerifyReport report = verify(arr, z);
        out.entry["status"] = "checked";
        out.entry["report"] = report_json(report);
        out.failed = !report.passed();
    } catch (const BalancedWeightsError& e) {
        out.entry["status"] = "skipped";
        out.entry["reason"] = e.what();
    }
    return out;
}

int run_verify(const Options& opt) {
    if (opt.trials < 1) throw InputError("--trials must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    json doc = header("verify");
    doc["seed"] = opt.seed;
    doc["trials"] = opt.trials;
    doc["random"] = opt.random;
    json entries = json::array();
    bool failed = false;
    std::size_t skipped = 0;

    if (opt.random) {
        RandomOptions ro;
        ro.signed_weights = opt.signed_weights;
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const std::uint64_t s = opt.seed + t;
            const auto [k, n] = random_shape(s);
            const RandomInstance inst = random_family(s, k, n, ro);
            TrialOutcome o = run_trial(t, inst.arrangement, "random seed " + std::to_string(s), inst.base_point);
            failed = failed || o.failed;
            skipped += o.entry["status"] == "skipped";
            entries.push_back(std::move(o.entry));
        }
    } else {
        const ArrangementInput in = load_arrangement(opt.input);
        if (!is_unbalanced(in.arrangement)) {
            const auto flat = zero_weight_dense_flat(in.arrangement, in.arrangement.weights());
            throw BalancedWeightsError("weights are balanced: dense flat {" + (flat ? format_tuple(*flat) : "") +
                                       "} has zero weight");
        }
        // Trial 0 is the given base point; later trials draw seeded points off the discriminant.
        for (std::size_t t = 0; t < opt.trials; ++t) {
            const BasePoint z =
                t == 0 ? base_point_for(in, opt.at) : random_base_point(in.arrangement, opt.seed + t);
            if (t == 0)
                if (auto w = discriminant_witness(in.arrangement, z))
                    throw DiscriminantError("base point lies on the discriminant: circuit {" + format_tuple(*w) +
                                                "} is concurrent",
                                            *w);
            TrialOutcome o = run_trial(t, in.arrangement, in.name, z);
            failed = failed || o.failed;
            skipped += o.entry["status"] == "skipped";
            entries.push_back(std::move(o.entry));
        }
    }
    doc["results"] = entries;
    doc["skipped"] = skipped;
    doc["passed"] = !failed;

    if (opt.format == "text") {
        for (const auto& e : entries) {
            std::cout << "trial " << e["trial"].get<std::size_t>() << ": " << e["status"].get<std::string>();
            if (e.contains("report")) {
                const auto& r = e["report"];
                std::cout << " mu=" << r["mu"].get<std::size_t>() << (r["passed"].get<bool>() ? " pass" : " FAIL");
                for (const auto& c : r["checks"])
                    if (!c["failures"].empty())
                        std::cout << "\n  " << c["identity"].get<std::string>() << ": " << c["failures"].size() << "/"
                                  << c["instances"].get<std::size_t>() << " failed";
            } else {
                std::cout << " (" << e["reason"].get<std::string>() << ")";
            }
            std::cout << "\n";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (failed ? "FAILED" : "passed") << " in " << secs << " s\n";
    } else {
        emit(doc);
    }
    return failed ? kIdentityFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact potentials and residue algebras of weighted arrangement families"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--input,-i", opt.input, "Arrangement JSON file");
        if (required) o->required();
        return o;
    };

    auto* validate = app.add_subcommand("validate", "Check invariants, unbalancedness and the discriminant");
    add_input(validate, true);
    validate->add_option("--at", opt.at, "Base point z1,z2,...");
    validate->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* elementary = app.add_subcommand("elementary", "List elementary subarrangements");
    add_input(elementary, true);
    elementary->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* potential = app.add_subcommand("potential", "Print the potential of first or second kind");
    add_input(potential, true);
    potential->add_option("--kind", opt.kind, "first|second")->check(CLI::IsMember({"first", "second"}));
    potential->add_option("--format", opt.format, "latex|json|text")->check(CLI::IsMember({"latex", "json", "text"}));

    auto* gram = app.add_subcommand("gram", "Gram matrix of the residue pairing");
    add_input(gram, true);
    gram->add_option("--at", opt.at, "Base point z1,z2,...");
    gram->add_option("--format", opt.format, "json")->check(CLI::IsMember({"json"}));

    auto* multop = app.add_subcommand("multop", "Matrix of multiplication by p_j");
    add_input(multop, true);
    multop->add_option("-j", opt.j, "Generator index (1-based)")->required();
    multop->add_option("--at", opt.at, "Base point z1,z2,...");
    multop->add_option("--format", opt.format, "json")->check(CLI::IsMember({"json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
    add_input(verify_cmd, false);
    verify_cmd->add_option("--at", opt.at, "Base point z1,z2,...");
    verify_cmd->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
    verify_cmd->add_option("--seed", opt.seed, "Seed")->capture_default_str();
    verify_cmd->add_flag("--random", opt.random, "Use seeded random families instead of --input");
    verify_cmd->add_flag("--signed-weights", opt.signed_weights, "Random weights with random signs");
    verify_cmd->add_option("--format", opt.format, "json|text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*validate) return run_validate(opt);
        if (*elementary) return run_elementary(opt);
        if (*potential) {
            if (opt.format.empty()) opt.format = "latex";
            return run_potential(opt);
        }
        if (*gram) return run_gram(opt);
        if (*multop) return run_multop(opt);
        if (*verify_cmd) {
            if (!opt.random && opt.input.empty()) throw InputError("verify needs --input or --random");
            return run_verify(opt);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const DiscriminantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDiscriminant;
    } catch (const EvaluationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDiscriminant;
    } catch (const BalancedWeightsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBalanced;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kIdentityFailure;
    }
    return kMalformed;
}
