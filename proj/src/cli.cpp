#include "softev/cli.hpp"

#include "softev/core.hpp"
#include "softev/environment.hpp"
#include "softev/error.hpp"
#include "softev/oracle.hpp"
#include "softev/random_instances.hpp"
#include "softev/render.hpp"
#include "softev/sweep.hpp"
#include "softev/update.hpp"

#include <fstream>
#include <map>
#include <sstream>

#ifndef SOFTEV_CORPUS_DIR
#define SOFTEV_CORPUS_DIR "corpus"
#endif

namespace softev::cli {

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << path.string() << "'\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Loads and compiles a netspec file, reporting problems on `err`.
std::optional<netspec::Environment> load_file(const std::filesystem::path& path, std::ostream& err, int& code) {
    auto source = read_file(path, err);
    if (!source) {
        code = kExitUsage;
        return std::nullopt;
    }
    try {
        return netspec::load(*source);
    } catch (const netspec::LoadError& e) {
        for (const auto& d : e.diagnostics()) {
            err << path.string() << ":" << d.format() << "\n";
        }
    } catch (const ProbError& e) {
        err << path.string() << ": error: " << e.what() << "\n";
    }
    code = kExitUsage;
    return std::nullopt;
}

void explain(const UpdateReport& report, const RenderOptions& options, std::ostream& out) {
    out << "rule: " << to_string(report.rule) << "\n";
    out << "prior: " << render_state(report.prior, options) << "\n";
    if (report.evidence) {
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, PredicateEvidence>) {
                    out << "evidence (predicate): " << render_predicate(e.predicate, options) << "\n";
                } else if constexpr (std::is_same_v<T, StateEvidence>) {
                    out << "evidence (state): " << render_state(e.state, options) << "\n";
                } else if constexpr (std::is_same_v<T, EventStrength>) {
                    out << "evidence (event validity): " << render_predicate(e.event.indicator(), options)
                        << " to " << render_scalar(e.q, options) << "\n";
                } else {
                    out << "evidence (Bayes factor): " << render_predicate(e.event.indicator(), options)
                        << " by " << render_scalar(e.k, options) << "\n";
                }
            },
            *report.evidence);
    }
    if (report.predicted) {
        out << "predicted: " << render_state(*report.predicted, options) << "\n";
    }
    if (report.transformed) {
        out << "transformed predicate: " << render_predicate(*report.transformed, options) << "\n";
    }
    if (report.evidence_validity) {
        out << "validity: " << render_scalar(*report.evidence_validity, options) << "\n";
    }
    if (report.inverted) {
        out << "inverted channel:\n";
        std::istringstream rows(render_channel(*report.inverted, options));
        for (std::string line; std::getline(rows, line);) {
            out << "  " << line << "\n";
        }
    }
    out << "posterior: " << render_state(report.posterior, options) << "\n";
}

}  // namespace

std::filesystem::path default_corpus_dir() { return SOFTEV_CORPUS_DIR; }

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto env = load_file(options.file, err, code);
    if (!env) {
        return code;
    }
    if (!env->contains(options.query)) {
        err << "error: no query or value named '" << options.query << "' in " << options.file.string() << "\n";
        return kExitUsage;
    }
    netspec::QueryResult result = [&] {
        try {
            return std::optional(env->evaluate(options.query));
        } catch (const ProbError& e) {
            err << options.file.string() << ": error: " << e.what() << "\n";
            return std::optional<netspec::QueryResult>();
        }
    }().value_or(netspec::QueryResult{"", Rational(-1), "", {}, {}});
    if (result.name.empty()) {
        return kExitFailure;
    }
    RenderOptions exact{options.show_zeros, std::nullopt};
    if (options.csv) {
        out << netspec::to_csv(result, RenderOptions{options.show_zeros, options.decimal_digits});
        return kExitOk;
    }
    out << netspec::render_value(result.value, exact) << "\n";
    if (options.decimal_digits) {
        out << netspec::render_value(result.value, RenderOptions{options.show_zeros, options.decimal_digits})
            << "\n";
    }
    if (options.explain) {
        out << "query: " << result.name << " = " << result.rule;
        if (!result.inputs.empty()) {
            out << "(";
            for (std::size_t i = 0; i < result.inputs.size(); ++i) {
                out << (i ? ", " : "") << result.inputs[i];
            }
            out << ")";
        }
        out << "\n";
        if (result.report) {
            explain(*result.report, exact, out);
        }
    }
    return kExitOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    auto env = load_file(options.file, err, code);
    if (!env) {
        return code;
    }
    try {
        const State& prior = env->state(options.prior);
        const Channel& channel = env->channel(options.channel);
        auto rows = sweep(prior, channel, options.target, options.steps);
        out << sweep_csv(rows, RenderOptions{false, options.decimal_digits});
    } catch (const ProbError& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::UnknownElement ? kExitUsage : kExitFailure;
    }
    return kExitOk;
}

namespace {

struct ExampleCase {
    const char* file;
    const char* query;
    const char* expected;  // ket sum in the reported form
    const char* element = nullptr;  // for rounded checks: the element compared
    int digits = 0;                 // and its reported decimal places
};

// Values as reported for the worked examples. Fractions are compared as
// rationals, so unreduced forms are fine.
const ExampleCase kExamples[] = {
    {"disease.netspec", "prior", "1/100|d> + 99/100|~d>"},
    {"disease.netspec", "predicted", "117/2000|t> + 1883/2000|~t>"},
    {"disease.netspec", "given_positive", "18/117|d> + 99/117|~d>"},
    {"disease.netspec", "given_negative", "2/1883|d> + 1881/1883|~d>"},
    {"disease.netspec", "pearl_posterior", "148/4702|d> + 4554/4702|~d>"},
    {"disease.netspec", "jeffrey_posterior", "27162/220311|d> + 193149/220311|~d>"},
    {"disease_certainty.netspec", "predicted_certainty", "4702/20000|c> + 15298/20000|~c>"},
    {"disease_certainty.netspec", "hard_on_certainty", "148/4702|d> + 4554/4702|~d>"},
    {"disease_certainty.netspec", "virtual_evidence", "148/4702|d> + 4554/4702|~d>"},
    {"halpern.netspec", "jeffrey_posterior", "1/10|r> + 7/20|b> + 7/20|g> + 1/5|y>"},
    {"halpern.netspec", "pearl_posterior", "3/23|r> + 7/23|b> + 7/23|g> + 6/23|y>"},
    {"halpern.netspec", "atc_posterior", "1/10|r> + 7/20|b> + 7/20|g> + 1/5|y>"},
    {"halpern.netspec", "nec_posterior", "3/23|r> + 7/23|b> + 7/23|g> + 6/23|y>"},
    {"barber.netspec", "joint_prior",
     "0.00000001|b,e> + 0.00999999|b,~e> + 0.00000099|~b,e> + 0.98999901|~b,~e>"},
    {"barber.netspec", "jeffrey_burglary", "0.693", "b", 3},
    {"barber.netspec", "pearl_burglary", "0.0229", "b", 4},
    {"dietrich.netspec", "base_rate", "1/2|c> + 1/2|~c>"},
    {"dietrich.netspec", "experience_only", "4/5|c> + 1/5|~c>"},
    {"dietrich.netspec", "omega_prime", "1/10|c,e> + 1/40|c,~e> + 7/40|~c,e> + 7/10|~c,~e>"},
    {"dietrich.netspec", "final_competence", "4/11|c> + 7/11|~c>"},
};

// Returns the rendered actual value and whether it matches.
std::pair<std::string, bool> run_example(const netspec::Environment& env, const ExampleCase& ex) {
    auto result = env.evaluate(ex.query);
    const State& state = std::get<State>(result.value);
    if (ex.element) {
        const Rational& actual = state.weight(ex.element);
        bool match = round_to(actual, ex.digits) == parse_rational(ex.expected);
        return {std::string(ex.element) + ": " + to_decimal(actual, ex.digits + 3), match};
    }
    return {render_state(state), state == parse_ket(state.space(), ex.expected)};
}

}  // namespace

int cmd_examples(const ExamplesOptions& options, std::ostream& out, std::ostream& err) {
    std::filesystem::path dir = options.corpus_dir.empty() ? default_corpus_dir() : options.corpus_dir;
    std::map<std::string, std::optional<netspec::Environment>> loaded;
    int passed = 0;
    int total = 0;
    for (const auto& ex : kExamples) {
        ++total;
        auto [it, fresh] = loaded.try_emplace(ex.file);
        if (fresh) {
            int code = kExitOk;
            it->second = load_file(dir / ex.file, err, code);
        }
        std::string actual;
        bool match = false;
        if (it->second) {
            try {
                std::tie(actual, match) = run_example(*it->second, ex);
            } catch (const std::exception& e) {
                actual = std::string("error: ") + e.what();
            }
        } else {
            actual = "error: file did not load";
        }
        passed += match ? 1 : 0;
        out << (match ? "PASS" : "FAIL") << "  " << ex.file << "  " << ex.query << "  " << actual;
        if (!match) {
            out << "  (expected " << ex.expected << ")";
        }
        out << "\n";
    }
    out << passed << "/" << total << " examples passed\n";
    return passed == total ? kExitOk : kExitFailure;
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
    InstanceGenerator gen(options.seed);
    int comparisons = 0;
    int mismatches = 0;
    auto compare = [&](const char* what, int instance, const State& lib, const State& ref) {
        ++comparisons;
        if (!(lib == ref)) {
            ++mismatches;
            err << "mismatch in " << what << " (instance " << instance << "): library " << render_state(lib)
                << " vs oracle " << render_state(ref) << "\n";
        }
    };
    for (int i = 0; i < options.count; ++i) {
        Space x = gen.space("x");
        Space y = gen.space("y");
        State sigma = gen.state(x, gen.integer(0, 1) == 1);
        Channel c = gen.channel(x, y, gen.integer(0, 1) == 1);
        Predicate p = gen.predicate(x);
        Predicate q = gen.predicate(y);
        State rho = gen.state(y);

        if (validity(sigma, p) != 0) {
            compare("condition", i, condition(sigma, p), oracle::oracle_condition_state(sigma, p));
        }
        if (validity(sigma, predicate_transform(c, q)) != 0) {
            compare("pearl", i, pearl_update(sigma, c, q), oracle::oracle_pearl(sigma, c, q));
        }
        auto joint = oracle::joint(sigma, c);
        if (state_transform(c, sigma).has_full_support()) {
            compare("jeffrey", i, jeffrey_update(sigma, c, rho), oracle::oracle_jeffrey(joint, rho));
            Channel inverted = dagger(c, sigma);
            auto rows = oracle::oracle_inverted_rows(joint);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                compare("dagger row", i, inverted.row(r), rows[r]);
            }
        }
        State tau = gen.state(Space::product(x, y));
        auto table = oracle::from_product_state(tau);
        compare("first marginal", i, marginal(tau, Side::First), oracle::domain_marginal(table));
        compare("second marginal", i, marginal(tau, Side::Second), oracle::codomain_marginal(table));
    }
    out << "check: seed " << options.seed << ", " << options.count << " instances, " << comparisons
        << " comparisons, " << mismatches << " mismatches\n";
    return mismatches == 0 ? kExitOk : kExitFailure;
}

}  // namespace softev::cli
