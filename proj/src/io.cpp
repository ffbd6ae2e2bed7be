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


#include "shadowlab/io.hpp"

#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>

#include "shadowlab/errors.hpp"
#include "shadowlab/grover.hpp"

namespace shadowlab::io {

namespace {

// Runs f and prefixes any schema error with `where`.
template <class F>
auto in_context(const std::string &where, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw ValidationError(where + ": " + e.what());
    } catch (const ValidationError &e) {
        throw ValidationError(where + ": " + e.what());
    }
}

std::string decimal(uint64_t v) { return std::to_string(v); }

uint64_t decimal_field(const json &j, const char *key) {
    const json &v = j.at(key);
    require(v.is_string(), std::string("\"") + key + "\" must be a decimal string");
    return parse_u64(v.get<std::string>());
}

void register_task_families() {
    static std::once_flag once;
    std::call_once(once, [] { grover::register_weight_family(); });
}

}  // namespace

json read_json_file(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        // Translate the byte offset into line:column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ValidationError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                              ": invalid JSON (" + e.what() + ")");
    }
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot write '" + path.string() + "'");
    out << text;
    require(out.good(), "write to '" + path.string() + "' failed");
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

uint64_t parse_u64(const std::string &text) {
    uint64_t v = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    require(!text.empty() && ec == std::errc() && ptr == end, "'" + text + "' is not a 64-bit decimal integer");
    return v;
}

std::vector<double> parse_vector(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        require(used > 0 && item.find_first_not_of(" \t", used) == std::string::npos,
                "'" + item + "' is not a number");
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Circuits

namespace {

json gate_json(const Gate &g) {
    json out = {{"name", gate_name(g.kind)}};
    if (gate_arity(g.kind) == 2) {
        out["qubits"] = {g.qubits[0], g.qubits[1]};
    } else {
        out["qubits"] = {g.qubits[0]};
    }
    if (g.kind == GateKind::RY) {
        out["angle"] = g.angle;
    }
    return out;
}

Gate gate_from(const json &j, bool allow_missing_angle) {
    Gate g;
    g.kind = gate_from_name(j.at("name").get<std::string>());
    const auto qubits = j.at("qubits").get<std::vector<std::size_t>>();
    require(qubits.size() == gate_arity(g.kind), "gate '" + std::string(gate_name(g.kind)) + "' needs " +
                                                     std::to_string(gate_arity(g.kind)) + " qubit(s)");
    g.qubits = {qubits[0], qubits.back()};
    if (g.kind == GateKind::RY) {
        if (j.contains("angle")) {
            g.angle = j.at("angle").get<double>();
        } else {
            require(allow_missing_angle, "ry gate needs an \"angle\"");
        }
    } else {
        require(!j.contains("angle"), "only ry gates take an angle");
    }
    return g;
}

}  // namespace

json to_json(const CircuitSpec &c) {
    json gates = json::array();
    for (const auto &g : c.gates()) {
        gates.push_back(gate_json(g));
    }
    return {{"n", c.num_qubits()}, {"gates", gates}};
}

CircuitSpec circuit_from_json(const json &j) {
    CircuitSpec c(in_context("circuit", [&] { return j.at("n").get<std::size_t>(); }));
    const json &gates = in_context("circuit", [&]() -> const json & { return j.at("gates"); });
    for (std::size_t i = 0; i < gates.size(); ++i) {
        in_context("gates[" + std::to_string(i) + "]", [&] { c.add(gate_from(gates[i], false)); });
    }
    return c;
}

json to_json(const CircuitTemplate &c) {
    json gates = json::array();
    for (const auto &tg : c.gates()) {
        json g = gate_json(tg.gate);
        if (tg.binding) {
            g.erase("angle");
            g["input"] = tg.binding->input;
            g["scale"] = tg.binding->scale;
            g["offset"] = tg.binding->offset;
        }
        gates.push_back(g);
    }
    return {{"n", c.num_qubits()}, {"gates", gates}};
}

CircuitTemplate template_from_json(const json &j) {
    CircuitTemplate c(in_context("encoder", [&] { return j.at("n").get<std::size_t>(); }));
    const json &gates = in_context("encoder", [&]() -> const json & { return j.at("gates"); });
    for (std::size_t i = 0; i < gates.size(); ++i) {
        in_context("encoder gates[" + std::to_string(i) + "]", [&] {
            const json &gj = gates[i];
            if (gj.contains("input")) {
                const Gate g = gate_from(gj, true);
                require(g.kind == GateKind::RY, "only ry gates can bind an input");
                require(!gj.contains("angle"), "a bound ry gate takes \"input\", not \"angle\"");
                c.add_bound_ry(g.qubits[0], {gj.at("input").get<std::size_t>(), gj.value("scale", 1.0),
                                             gj.value("offset", 0.0)});
            } else {
                c.add(gate_from(gj, false));
            }
        });
    }
    return c;
}

// ---------------------------------------------------------------------------
// Models

json to_json(const FlippedLinearModel &m) {
    json paulis = json::array();
    for (const auto &p : m.paulis()) {
        paulis.push_back(p.str());
    }
    return {{"kind", "flipped"},
            {"n", m.num_qubits()},
            {"state_prep", to_json(m.state_prep())},
            {"paulis", paulis},
            {"weights", m.weights().to_json()}};
}

FlippedLinearModel flipped_model_from_json(const json &j) {
    register_task_families();
    return in_context("flipped model", [&] {
        require(j.value("kind", std::string("flipped")) == "flipped", "model kind must be \"flipped\"");
        CircuitSpec prep = circuit_from_json(j.at("state_prep"));
        if (j.contains("n")) {
            require(j.at("n").get<std::size_t>() == prep.num_qubits(), "\"n\" disagrees with state_prep");
        }
        std::vector<PauliString> paulis;
        for (const auto &p : j.at("paulis")) {
            paulis.push_back(PauliString::parse(p.get<std::string>()));
        }
        auto weights = WeightFamilyRegistry::instance().create(j.at("weights"));
        return FlippedLinearModel(std::move(prep), std::move(paulis), std::move(weights));
    });
}

json to_json(const ConventionalLinearModel &m) {
    json initial = json::array();
    for (const auto &[index, p] : m.initial_state()) {
        initial.push_back({index, p});
    }
    json terms = json::array();
    for (const auto &t : m.terms()) {
        terms.push_back({{"weight", t.weight}, {"basis", to_json(t.basis)}, {"eigenvalues", t.eigenvalues}});
    }
    json out = {{"kind", "conventional"},
                {"n", m.num_qubits()},
                {"encoder", to_json(m.encoder())},
                {"initial_state", initial},
                {"variational", to_json(m.variational())},
                {"terms", terms}};
    if (m.trace_norm_bound()) {
        out["trace_norm_bound"] = *m.trace_norm_bound();
    }
    return out;
}

ConventionalLinearModel conventional_model_from_json(const json &j) {
    return in_context("conventional model", [&] {
        require(j.value("kind", std::string("conventional")) == "conventional",
                "model kind must be \"conventional\"");
        CircuitTemplate encoder = template_from_json(j.at("encoder"));
        std::vector<std::pair<uint64_t, double>> initial;
        for (const auto &entry : j.at("initial_state")) {
            require(entry.is_array() && entry.size() == 2, "initial_state entries are [index, probability]");
            initial.emplace_back(entry[0].get<uint64_t>(), entry[1].get<double>());
        }
        CircuitSpec variational = circuit_from_json(j.at("variational"));
        std::vector<ObservableTerm> terms;
        const json &tj = j.at("terms");
        for (std::size_t i = 0; i < tj.size(); ++i) {
            terms.push_back(in_context("terms[" + std::to_string(i) + "]", [&] {
                return ObservableTerm{tj[i].at("weight").get<double>(), circuit_from_json(tj[i].at("basis")),
                                      tj[i].at("eigenvalues").get<std::vector<double>>()};
            }));
        }
        std::optional<double> bound;
        if (j.contains("trace_norm_bound")) {
            bound = j.at("trace_norm_bound").get<double>();
        }
        return ConventionalLinearModel(std::move(encoder), std::move(initial), std::move(variational),
                                       std::move(terms), bound);
    });
}

// ---------------------------------------------------------------------------
// Shadows

json to_json(const PauliShadow &s) {
    json snaps = json::array();
    for (const auto &snap : s.snapshots()) {
        snaps.push_back({{"bases", snap.bases_string(s.num_qubits())},
                         {"outcomes", snap.outcomes_string(s.num_qubits())}});
    }
    return {{"n", s.num_qubits()}, {"master_seed", s.master_seed()}, {"snapshots", snaps}};
}

PauliShadow shadow_from_json(const json &j) {
    return in_context("shadow", [&] {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<ShadowSnapshot> snaps;
        const json &sj = j.at("snapshots");
        snaps.reserve(sj.size());
        for (std::size_t i = 0; i < sj.size(); ++i) {
            snaps.push_back(in_context("snapshots[" + std::to_string(i) + "]", [&] {
                const auto bases = sj[i].at("bases").get<std::string>();
                require(bases.size() == n, "snapshot length differs from n");
                return ShadowSnapshot::from_strings(bases, sj[i].at("outcomes").get<std::string>());
            }));
        }
        return PauliShadow(n, j.at("master_seed").get<uint64_t>(), std::move(snaps));
    });
}

// ---------------------------------------------------------------------------
// DCR

json secret_json(const dcr::Modulus &m) {
    return {{"kind", "dcr_secret"}, {"p", decimal(m.p)}, {"q", decimal(m.q)},
            {"N", decimal(m.N)},    {"d", decimal(m.d)}, {"n_bits", m.n_bits}};
}

json public_json(const dcr::Modulus &m) { return {{"kind", "dcr_public"}, {"N", decimal(m.N)}}; }

dcr::Modulus modulus_from_json(const json &j) {
    return in_context("secret modulus", [&] {
        dcr::Modulus m = dcr::modulus_from_primes(decimal_field(j, "p"), decimal_field(j, "q"));
        require(m.N == decimal_field(j, "N"), "N does not equal p * q");
        if (j.contains("d")) {
            require(m.d == decimal_field(j, "d"), "d is not the inverse of 3 mod phi");
        }
        return m;
    });
}

uint64_t public_modulus_from_json(const json &j) {
    return in_context("modulus", [&] { return decimal_field(j, "N"); });
}

std::string to_jsonl(const std::vector<dcr::LabeledSample> &samples) {
    std::string out;
    for (const auto &s : samples) {
        out += json{{"x", decimal(s.x)}, {"label", s.label}}.dump();
        out += '\n';
    }
    return out;
}

std::vector<dcr::LabeledSample> dataset_from_jsonl(const std::string &text) {
    std::vector<dcr::LabeledSample> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        out.push_back(in_context("line " + std::to_string(number), [&] {
            const json j = json::parse(line);
            dcr::LabeledSample s{decimal_field(j, "x"), j.at("label").get<int>()};
            require(s.label == 0 || s.label == 1, "label must be 0 or 1");
            return s;
        }));
    }
    return out;
}

json to_json(const dcr::Hypothesis &h) {
    return {{"kind", "dcr_hypothesis"}, {"d_prime", decimal(h.d_prime)}, {"s_prime", decimal(h.s_prime)},
            {"N", decimal(h.N)}};
}

dcr::Hypothesis hypothesis_from_json(const json &j) {
    return in_context("hypothesis", [&] {
        dcr::Hypothesis h{decimal_field(j, "d_prime"), decimal_field(j, "s_prime"), decimal_field(j, "N")};
        require(h.N >= 2 && h.d_prime < h.N && h.s_prime < h.N, "hypothesis parameters must lie in Z_N");
        return h;
    });
}

}  // namespace shadowlab::io
