// Copyright 2026 The shadowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.hpp"

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "shadowlab/dcr.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/fixtures.hpp"
#include "shadowlab/flipper.hpp"
#include "shadowlab/fourier_demo.hpp"
#include "shadowlab/grover.hpp"
#include "shadowlab/io.hpp"
#include "shadowlab/models.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/shadow_collect.hpp"

#ifndef SHADOWLAB_GIT_DESCRIBE
#define SHADOWLAB_GIT_DESCRIBE "unknown"
#endif

namespace shadowlab::cli {

using nlohmann::json;

std::string git_describe() { return SHADOWLAB_GIT_DESCRIBE; }

std::string config_hash(const json &config) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : io::dump(config)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

void flatten(const json &j, const std::string &prefix, std::ostringstream &out) {
    if (j.is_object() || j.is_array()) {
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            const std::string key = j.is_object() ? it.key() : std::to_string(i);
            flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    std::string value = j.is_string() ? j.get<std::string>() : j.dump();
    if (value.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : value) {
            quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        value = quoted + "\"";
    }
    out << prefix << ',' << value << '\n';
}

}  // namespace

std::string to_csv(const json &report) {
    std::ostringstream out;
    out << "key,value\n";
    flatten(report, "", out);
    return out.str();
}

namespace {

struct Common {
    uint64_t seed = 0;
    double epsilon = 0.1;
    double delta = 0.05;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App *cmd, Common &c, bool with_tolerances = true) {
    cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
    if (with_tolerances) {
        cmd->add_option("--epsilon", c.epsilon, "Accuracy parameter")->capture_default_str();
        cmd->add_option("--delta", c.delta, "Failure probability")->capture_default_str();
    }
    cmd->add_option("--out", c.out, "Output path");
    cmd->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

json make_report(const std::string &command, const Common &c, json config, json results) {
    config["command"] = command;
    config["seed"] = c.seed;
    config["format"] = c.format;
    return {{"command", command},
            {"git_describe", git_describe()},
            {"seed", c.seed},
            {"config_hash", config_hash(config)},
            {"config", config},
            {"results", std::move(results)}};
}

std::string render(const json &report, const std::string &format) {
    return format == "csv" ? to_csv(report) : io::dump(report);
}

/// Writes the report to `path`, or to `out` when the path is empty.
void emit(const json &report, const std::string &format, const std::string &path, std::ostream &out) {
    const std::string text = render(report, format);
    if (path.empty()) {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

void require_out(const Common &c, const std::string &what) {
    require(!c.out.empty(), "--out is required: path of the " + what + " to write");
}

void apply_thread_env() {
    const char *env = std::getenv("SHADOWLAB_THREADS");
    if (env == nullptr || *env == '\0') {
        return;
    }
    const uint64_t threads = io::parse_u64(env);
    require(threads >= 1 && threads <= 4096, "SHADOWLAB_THREADS must be a positive thread count");
    omp_set_num_threads(static_cast<int>(threads));
}

double spectral_norm(const qsim::Matrix &m) {
    const Eigen::SelfAdjointEigenSolver<qsim::Matrix> s(m, Eigen::EigenvaluesOnly);
    return s.eigenvalues().cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// shadow

struct ShadowOpts {
    Common c{0, 0.2, 0.1, "", "json"};
    std::string model;
    uint64_t T = 0;
    uint64_t groups = 0;
    std::size_t eval_grid = 0;
    std::string report;
};

int cmd_shadow(const ShadowOpts &o, std::ostream &out) {
    require_out(o.c, "shadow file");
    const auto model = io::flipped_model_from_json(io::read_json_file(o.model));
    const auto bound = shadow_sample_bound(model.max_locality(), model.weights().bound(), o.c.epsilon, o.c.delta,
                                           model.paulis().size());
    const uint64_t T = o.T != 0 ? o.T : bound.total;
    const uint64_t groups = o.groups != 0 ? o.groups : std::min(bound.groups, T);
    require(groups <= T, "--groups cannot exceed the number of snapshots");

    const auto shadow = collect_pauli_shadow(model.state_prep(), T, o.c.seed);
    io::write_text_file(o.c.out, io::dump(io::to_json(shadow)));

    json results = {{"snapshots", T},
                    {"groups", groups},
                    {"bound", {{"total", bound.total}, {"groups", bound.groups}, {"per_group", bound.per_group}}},
                    {"locality", model.max_locality()},
                    {"weight_bound", model.weights().bound()}};
    if (o.eval_grid > 0) {
        const ShadowModel surrogate(shadow, model, MoMConfig{groups});
        const std::size_t d = model.weights().input_dim();
        const auto grid = d == 0 ? std::vector<std::vector<double>>{{}} : fixtures::diagonal_grid(d, o.eval_grid);
        double worst = 0.0;
        for (const auto &x : grid) {
            worst = std::max(worst, std::abs(surrogate(x) - eval_flipped_exact(model, x)));
        }
        results["eval_points"] = grid.size();
        results["max_deviation"] = worst;
        results["within_epsilon"] = worst <= o.c.epsilon;
    }
    const json config = {{"model", o.model}, {"T", o.T}, {"groups", o.groups}, {"eval_grid", o.eval_grid},
                         {"epsilon", o.c.epsilon}, {"delta", o.c.delta}, {"out", o.c.out}};
    emit(make_report("shadow", o.c, config, results), o.c.format, o.report, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dcr

struct DcrOpts {
    Common c;
    unsigned bits = 16;
    uint64_t p = 0;
    uint64_t q = 0;
    std::string public_out;
    std::string modulus;
    uint64_t s = 0;
    std::size_t count = 0;
    std::string data;
    std::string train;
    std::string heldout;
    std::string hypothesis;
    std::string report;
};

int cmd_dcr_keygen(const DcrOpts &o, std::ostream &out) {
    require_out(o.c, "secret modulus file");
    require((o.p == 0) == (o.q == 0), "--p and --q must be given together");
    Rng rng(o.c.seed);
    const auto m = o.p != 0 ? dcr::modulus_from_primes(o.p, o.q) : dcr::generate_modulus(o.bits, rng);
    // Re-read through the validating parser before anything is written.
    const auto check = io::modulus_from_json(io::secret_json(m));
    ensure(check.N == m.N && check.d == m.d, "modulus failed its own validation");
    io::write_text_file(o.c.out, io::dump(io::secret_json(m)));
    if (!o.public_out.empty()) {
        io::write_text_file(o.public_out, io::dump(io::public_json(m)));
    }
    const json config = {{"bits", o.bits}, {"p", o.p}, {"q", o.q}, {"out", o.c.out}, {"public_out", o.public_out}};
    const json results = {{"N", std::to_string(m.N)}, {"n_bits", m.n_bits}};
    emit(make_report("dcr keygen", o.c, config, results), o.c.format, o.report, out);
    return kExitOk;
}

int cmd_dcr_gen_data(const DcrOpts &o, std::ostream &out) {
    require_out(o.c, "dataset");
    require(o.count >= 1, "--count must be positive");
    const auto m = io::modulus_from_json(io::read_json_file(o.modulus));
    require(o.s < m.N, "--s must lie in [0, N)");
    const dcr::Concept concept_s{m, o.s};
    const auto data = dcr::generate_dataset(concept_s, o.count, o.c.seed);
    io::write_text_file(o.c.out, io::to_jsonl(data));
    std::size_t positives = 0;
    for (const auto &s : data) {
        positives += static_cast<std::size_t>(s.label);
    }
    const json config = {{"modulus", o.modulus}, {"s", std::to_string(o.s)}, {"count", o.count}, {"out", o.c.out}};
    const json results = {{"N", std::to_string(m.N)}, {"count", data.size()}, {"positives", positives}};
    emit(make_report("dcr gen-data", o.c, config, results), o.c.format, o.report, out);
    return kExitOk;
}

int cmd_dcr_learn(const DcrOpts &o, std::ostream &out) {
    require_out(o.c, "hypothesis file");
    const uint64_t N = io::public_modulus_from_json(io::read_json_file(o.modulus));
    const auto data = io::dataset_from_jsonl(io::read_text_file(o.data));
    const auto r = dcr::quantum_learn(data, N, o.c.epsilon, o.c.delta);
    io::write_text_file(o.c.out, io::dump(io::to_json(r.hypothesis)));
    const json config = {{"data", o.data}, {"modulus", o.modulus}, {"epsilon", o.c.epsilon}, {"delta", o.c.delta},
                         {"out", o.c.out}};
    const json results = {{"N", std::to_string(N)},
                          {"training_size", data.size()},
                          {"required_size", dcr::required_training_size(o.c.epsilon, o.c.delta)},
                          {"training_loss", r.training_loss},
                          {"d_prime", std::to_string(r.hypothesis.d_prime)},
                          {"s_prime", std::to_string(r.hypothesis.s_prime)}};
    emit(make_report("dcr learn", o.c, config, results), o.c.format, o.report, out);
    return kExitOk;
}

int cmd_dcr_eval(const DcrOpts &o, std::ostream &out) {
    const auto h = io::hypothesis_from_json(io::read_json_file(o.hypothesis));
    const auto data = io::dataset_from_jsonl(io::read_text_file(o.data));
    require(!data.empty(), "evaluation dataset is empty");
    const double error = dcr::hypothesis_error(h, data);
    const json config = {{"hypothesis", o.hypothesis}, {"data", o.data}, {"epsilon", o.c.epsilon}};
    const json results = {{"samples", data.size()},
                          {"error", error},
                          {"accuracy", 1.0 - error},
                          {"error_bound", 2.0 * o.c.epsilon},
                          {"within_bound", error <= 2.0 * o.c.epsilon}};
    emit(make_report("dcr eval", o.c, config, results), o.c.format, o.c.out, out);
    return kExitOk;
}

int cmd_dcr_baseline(const DcrOpts &o, std::ostream &out) {
    const uint64_t N = io::public_modulus_from_json(io::read_json_file(o.modulus));
    const auto train = io::dataset_from_jsonl(io::read_text_file(o.train));
    const auto heldout = io::dataset_from_jsonl(io::read_text_file(o.heldout));
    require(!heldout.empty(), "held-out dataset is empty");
    const auto r = dcr::classical_baseline(train, heldout, N);
    const json config = {{"train", o.train}, {"heldout", o.heldout}, {"modulus", o.modulus}};
    const json results = {{"N", std::to_string(N)},
                          {"train_size", r.train_size},
                          {"heldout_size", r.heldout_size},
                          {"threshold_accuracy", r.threshold_accuracy},
                          {"perceptron_accuracy", r.perceptron_accuracy},
                          {"knn_accuracy", r.knn_accuracy},
                          {"best_accuracy", r.best()}};
    emit(make_report("dcr baseline", o.c, config, results), o.c.format, o.c.out, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// flip

struct FlipOpts {
    Common c;
    std::string model;
    std::size_t qubits = 2;
    std::size_t terms = 3;
    std::size_t models = 20;
    std::size_t inputs = 20;
    bool mixed = false;
    double tol = 1e-8;
};

int cmd_flip(const FlipOpts &o, std::ostream &out) {
    require(o.tol > 0.0, "--tol must be positive");
    Rng rng(o.c.seed);
    std::vector<ConventionalLinearModel> models;
    if (!o.model.empty()) {
        models.push_back(io::conventional_model_from_json(io::read_json_file(o.model)));
    } else {
        require(o.models >= 1, "--models must be positive");
        for (std::size_t i = 0; i < o.models; ++i) {
            models.push_back(fixtures::random_conventional_model(o.qubits, o.terms, !o.mixed, rng));
        }
    }
    double trace_gap = 0.0;
    double norm_gap = 0.0;
    double min_p_zero = 1.0;
    for (const auto &m : models) {
        const auto f = flip_conventional(m);
        min_p_zero = std::min(min_p_zero, f.p_zero());
        double max_rho0 = 0.0;
        for (const auto &[index, p] : m.initial_state()) {
            max_rho0 = std::max(max_rho0, p);
        }
        for (std::size_t k = 0; k < o.inputs; ++k) {
            const auto x = fixtures::random_point(m.encoder().input_dim(), 0.0, 2 * std::numbers::pi, rng);
            trace_gap = std::max(trace_gap, std::abs(f.evaluate(x) - eval_conventional_exact(m, x)));
            norm_gap = std::max(norm_gap, std::abs(spectral_norm(f.observable(x)) - f.alpha() * max_rho0));
        }
    }
    const bool ok = trace_gap <= o.tol && norm_gap <= o.tol;
    const json config = {{"model", o.model}, {"qubits", o.qubits}, {"terms", o.terms}, {"models", o.models},
                         {"inputs", o.inputs}, {"mixed", o.mixed}, {"tol", o.tol}};
    const json results = {{"models", models.size()},
                          {"max_trace_gap", trace_gap},
                          {"max_norm_gap", norm_gap},
                          {"min_p_zero", min_p_zero},
                          {"status", ok ? "trace equality OK" : "trace equality FAILED"}};
    emit(make_report("flip", o.c, config, results), o.c.format, o.c.out, out);
    return ok ? kExitOk : kExitProperty;
}

// ---------------------------------------------------------------------------
// alg1

struct Alg1Opts {
    Common c;
    std::string model;
    std::string x;
    uint64_t iterations = 0;
};

int cmd_alg1(const Alg1Opts &o, std::ostream &out) {
    const auto model = io::conventional_model_from_json(io::read_json_file(o.model));
    const auto x = o.x.empty() ? std::vector<double>(model.encoder().input_dim(), 0.0) : io::parse_vector(o.x);
    require(x.size() == model.encoder().input_dim(),
            "--x has " + std::to_string(x.size()) + " entries, the encoder takes " +
                std::to_string(model.encoder().input_dim()));
    const Algorithm1Sampler sampler(model, x);
    const uint64_t iters = o.iterations != 0 ? o.iterations
                                             : algorithm1_iterations(sampler.alpha(), o.c.epsilon, o.c.delta);
    const auto r = sampler.run(iters, o.c.seed);
    const double exact = eval_conventional_exact(model, x);
    const json config = {{"model", o.model}, {"x", x}, {"iterations", o.iterations}, {"epsilon", o.c.epsilon},
                         {"delta", o.c.delta}};
    const json results = {{"estimate", r.estimate},
                          {"N_iters", r.iterations},
                          {"seed", r.seed},
                          {"alpha", r.alpha},
                          {"slack_iterations", r.slack_iterations},
                          {"exact_reference", exact},
                          {"abs_error", std::abs(r.estimate - exact)},
                          {"within_epsilon", std::abs(r.estimate - exact) <= o.c.epsilon}};
    emit(make_report("alg1", o.c, config, results), o.c.format, o.c.out, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// grover

struct GroverOpts {
    Common c;
    std::size_t n = 10;
    std::size_t trials = 200;
    std::string mode = "expectation";
    std::string y;
    std::size_t eval_points = 100;
};

int cmd_grover(const GroverOpts &o, std::ostream &out) {
    const auto mode = grover::query_mode_from_name(o.mode);
    // Substreams far from the per-trial indices 0..trials-1.
    Rng model_rng = Rng::substream(o.c.seed, UINT64_MAX);
    Rng eval_rng = Rng::substream(o.c.seed, UINT64_MAX - 1);
    const auto model = o.y.empty() ? grover::GroverModel::random(o.n, model_rng) : grover::GroverModel::parse(o.y);
    const std::size_t n = model.num_qubits();

    const auto counts = grover::search_trials(model, mode, o.trials, o.c.seed);
    double sum = 0.0;
    for (auto q : counts) {
        sum += static_cast<double>(q);
    }
    const double mean = sum / static_cast<double>(counts.size());
    const double expected = grover::search_mean(n);
    const double sigma = std::sqrt(grover::search_variance(n) / static_cast<double>(counts.size()));

    const auto evaluator = grover::flipped_shadow_recover(model, eval_rng);
    double max_error = 0.0;
    for (std::size_t k = 0; k < o.eval_points; ++k) {
        const auto x = fixtures::random_point(n, 0.0, 2 * std::numbers::pi, eval_rng);
        max_error = std::max(max_error, std::abs(evaluator(x) - grover::grover_eval(model, x)));
    }
    const json config = {{"n", n}, {"trials", o.trials}, {"mode", o.mode}, {"y", o.y}, {"eval_points", o.eval_points}};
    const json results = {{"hidden", model.str()},
                          {"mean_queries", mean},
                          {"expected_mean", expected},
                          {"sigma_of_mean", sigma},
                          {"band", {expected - 3 * sigma, expected + 3 * sigma}},
                          {"within_band", std::abs(mean - expected) <= 3 * sigma},
                          {"shadow_measurements", evaluator.measurements()},
                          {"shadow_recovered", evaluator.recovered().str()},
                          {"shadow_max_error", max_error}};
    emit(make_report("grover", o.c, config, results), o.c.format, o.c.out, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"shadowlab: shadowable quantum models, flipped evaluation and DCR learning"};
    app.name(args.empty() ? "shadowlab" : args.front());
    app.require_subcommand(1);
    app.set_version_flag("--version", git_describe());

    std::function<int()> action;

    ShadowOpts shadow;
    auto *sc = app.add_subcommand("shadow", "Collect a Pauli shadow for a flipped model and optionally evaluate it");
    sc->add_option("--model", shadow.model, "Flipped model JSON")->required();
    sc->add_option("--T", shadow.T, "Snapshot count (0 = sufficient bound)")->capture_default_str();
    sc->add_option("--groups", shadow.groups, "Median-of-means groups (0 = from bound)")->capture_default_str();
    sc->add_option("--eval-grid", shadow.eval_grid, "Compare against exact values on this many grid points");
    sc->add_option("--report", shadow.report, "Report path (default stdout)");
    add_common(sc, shadow.c);
    sc->callback([&] { action = [&] { return cmd_shadow(shadow, out); }; });

    DcrOpts dcr_opts;
    auto *dc = app.add_subcommand("dcr", "Discrete cube root learning task");
    dc->require_subcommand(1);
    auto *keygen = dc->add_subcommand("keygen", "Generate a modulus N = pq with p, q = 2 mod 3");
    keygen->add_option("--bits", dcr_opts.bits, "Bit length of N")->capture_default_str();
    keygen->add_option("--p", dcr_opts.p, "Fixed prime p (with --q)");
    keygen->add_option("--q", dcr_opts.q, "Fixed prime q (with --p)");
    keygen->add_option("--public-out", dcr_opts.public_out, "Also write the public modulus here");
    keygen->add_option("--report", dcr_opts.report, "Report path (default stdout)");
    add_common(keygen, dcr_opts.c, false);
    keygen->callback([&] { action = [&] { return cmd_dcr_keygen(dcr_opts, out); }; });

    auto *gen = dc->add_subcommand("gen-data", "Sample labeled points for threshold s");
    gen->add_option("--modulus", dcr_opts.modulus, "Secret modulus JSON")->required();
    gen->add_option("--s", dcr_opts.s, "Concept threshold s in Z_N")->required();
    gen->add_option("--count", dcr_opts.count, "Number of samples")->required();
    gen->add_option("--report", dcr_opts.report, "Report path (default stdout)");
    add_common(gen, dcr_opts.c, false);
    gen->callback([&] { action = [&] { return cmd_dcr_gen_data(dcr_opts, out); }; });

    auto *learn = dc->add_subcommand("learn", "Learn a hypothesis from a dataset and the public modulus");
    learn->add_option("--data", dcr_opts.data, "Training JSONL")->required();
    learn->add_option("--modulus", dcr_opts.modulus, "Public (or secret) modulus JSON")->required();
    learn->add_option("--report", dcr_opts.report, "Report path (default stdout)");
    add_common(learn, dcr_opts.c);
    learn->callback([&] { action = [&] { return cmd_dcr_learn(dcr_opts, out); }; });

    auto *eval = dc->add_subcommand("eval", "Held-out error of a hypothesis");
    eval->add_option("--hypothesis", dcr_opts.hypothesis, "Hypothesis JSON")->required();
    eval->add_option("--data", dcr_opts.data, "Fresh labeled JSONL")->required();
    add_common(eval, dcr_opts.c);
    eval->callback([&] { action = [&] { return cmd_dcr_eval(dcr_opts, out); }; });

    auto *base = dc->add_subcommand("baseline", "Classical learners that do not factor N");
    base->add_option("--train", dcr_opts.train, "Training JSONL")->required();
    base->add_option("--heldout", dcr_opts.heldout, "Held-out JSONL")->required();
    base->add_option("--modulus", dcr_opts.modulus, "Public (or secret) modulus JSON")->required();
    add_common(base, dcr_opts.c, false);
    base->callback([&] { action = [&] { return cmd_dcr_baseline(dcr_opts, out); }; });

    FlipOpts flip;
    auto *fc = app.add_subcommand("flip", "Check the flipped form of conventional models");
    fc->add_option("--model", flip.model, "Conventional model JSON (default: random fixtures)");
    fc->add_option("--qubits", flip.qubits, "Qubits per random model")->capture_default_str();
    fc->add_option("--terms", flip.terms, "Observable terms per random model")->capture_default_str();
    fc->add_option("--models", flip.models, "Number of random models")->capture_default_str();
    fc->add_option("--inputs", flip.inputs, "Random inputs per model")->capture_default_str();
    fc->add_flag("--mixed", flip.mixed, "Use mixed initial states");
    fc->add_option("--tol", flip.tol, "Tolerance")->capture_default_str();
    add_common(fc, flip.c, false);
    fc->callback([&] { action = [&] { return cmd_flip(flip, out); }; });

    Alg1Opts alg1;
    auto *ac = app.add_subcommand("alg1", "Sampled flipped evaluation of a conventional model");
    ac->add_option("--model", alg1.model, "Conventional model JSON")->required();
    ac->add_option("--x", alg1.x, "Comma-separated input (default: zeros)");
    ac->add_option("--iterations", alg1.iterations, "Iterations (0 = sufficient count)")->capture_default_str();
    add_common(ac, alg1.c);
    ac->callback([&] { action = [&] { return cmd_alg1(alg1, out); }; });

    GroverOpts grover_opts;
    auto *gc = app.add_subcommand("grover", "Black-box search against one-shot shadow recovery");
    gc->add_option("--n", grover_opts.n, "Number of qubits")->capture_default_str();
    gc->add_option("--trials", grover_opts.trials, "Search trials")->capture_default_str();
    gc->add_option("--mode", grover_opts.mode, "Oracle access")
        ->check(CLI::IsMember({"expectation", "bernoulli"}))
        ->capture_default_str();
    gc->add_option("--y", grover_opts.y, "Hidden bit string (default: random from seed)");
    gc->add_option("--eval-points", grover_opts.eval_points, "Random inputs for the error check")
        ->capture_default_str();
    add_common(gc, grover_opts.c, false);
    gc->callback([&] { action = [&] { return cmd_grover(grover_opts, out); }; });

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        apply_thread_env();
        return action();
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const PropertyViolation &e) {
        err << "property violation: " << e.what() << '\n';
        return kExitProperty;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace shadowlab::cli
