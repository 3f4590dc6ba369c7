// Copyright 2026 The qhash Authors
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

#include "qhash/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qhash/analysis.h"
#include "qhash/hashing.h"
#include "qhash/report.h"
#include "qhash/search.h"
#include "qhash/verify.h"

namespace qhash {

using nlohmann::json;

namespace {

struct Common {
    std::string out_path;
    bool quiet = false;
    unsigned threads = 0;
};

struct HashArgs {
    std::string form;
    int64_t q = 0;
    std::string s, b;
    int64_t x = 0;
    std::string sum_qubit = "off";
};

struct BiasArgs {
    int64_t q = 0;
    std::string b;
    std::optional<int64_t> x;
};

struct ResistArgs {
    int64_t q = 0;
    std::string s;
    std::string form = "single-qubit";
    std::string sum_qubit = "off";
};

struct SearchArgs {
    int64_t q = 0;
    int64_t n = 0;
    uint64_t trials = 1000;
    uint64_t seed = 0;
    std::optional<double> target_epsilon;
    std::string form = "single-qubit";
    std::string sum_qubit = "off";
};

struct VerifyArgs {
    uint64_t q_max = 64;
    uint64_t n_max = 5;
    uint64_t seed = 0;
    uint64_t trials = 5;
    std::string fault = "none";
};

struct Outcome {
    json document;
    int exit_code = kExitOk;
};

uint64_t checked_modulus(int64_t q) {
    if (q < 2 || static_cast<uint64_t>(q) > kMaxModulus) {
        throw std::invalid_argument("--q must satisfy 2 <= q <= 2^58, got " + std::to_string(q));
    }
    return static_cast<uint64_t>(q);
}

uint64_t checked_input(int64_t x, uint64_t q) {
    if (x < 0 || static_cast<uint64_t>(x) >= q) {
        throw std::invalid_argument(
            "--x must lie in Z_q = [0, " + std::to_string(q) + "), got " + std::to_string(x));
    }
    return static_cast<uint64_t>(x);
}

// Inline list, or the path of a file holding one.
std::vector<int64_t> read_set(const std::string &flag, const std::string &value, uint64_t q, std::ostream &err) {
    std::string text = value;
    std::error_code ec;
    if (std::filesystem::is_regular_file(value, ec)) {
        std::ifstream in(value);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::vector<int64_t> values;
    try {
        values = parse_int_list(text);
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(flag + ": " + e.what());
    }
    if (values.empty()) {
        throw std::invalid_argument(flag + " must list at least one element");
    }
    auto unreduced = std::count_if(values.begin(), values.end(), [q](int64_t v) {
        return v < 0 || static_cast<uint64_t>(v) >= q;
    });
    if (unreduced > 0) {
        err << "warning: " << unreduced << " element(s) of " << flag << " reduced mod q=" << q << "\n";
    }
    return values;
}

bool on_off(const std::string &v) {
    return v == "on";
}

json circuit_json(const Circuit &c) {
    json gates = json::array();
    for (const Gate &g : c.gates) {
        json controls = json::array();
        for (const Control &ctl : g.controls) {
            controls.push_back(json{{"qubit", ctl.qubit}, {"on", ctl.polarity == Polarity::kOnOne ? 1 : 0}});
        }
        json angles = json::array();
        for (Angle a : g.angles) {
            angles.push_back(a.radians);
        }
        gates.push_back(json{{"gate", to_string(g.kind)}, {"target", g.target}, {"controls", controls}, {"angles", angles}});
    }
    return gates;
}

Outcome cmd_hash(const HashArgs &a, std::ostream &err) {
    uint64_t q = checked_modulus(a.q);
    HashForm form = *parse_hash_form(a.form);
    uint64_t x = checked_input(a.x, q);
    bool sum = on_off(a.sum_qubit);
    json inputs{{"form", a.form}, {"q", q}, {"x", x}, {"sum_qubit", sum}};

    Circuit circuit;
    json set;
    if (form == HashForm::kStandard) {
        if (a.b.empty() == a.s.empty()) {
            throw std::invalid_argument("standard form needs exactly one of --b or --s");
        }
        BiasedSet biased;
        if (!a.b.empty()) {
            biased = BiasedSet::make(q, read_set("--b", a.b, q, err));
        } else {
            biased = derive_biased_set(ParamSet::make(q, read_set("--s", a.s, q, err)));
        }
        inputs["b"] = biased.b;
        circuit = standard_hash_circuit(biased, x);
        set = to_json(biased);
    } else {
        if (a.s.empty() || !a.b.empty()) {
            throw std::invalid_argument(a.form + " form needs --s (and no --b)");
        }
        ParamSet params = ParamSet::make(q, read_set("--s", a.s, q, err));
        if (params.has_duplicates()) {
            err << "warning: --s contains repeated parameters\n";
        }
        inputs["s"] = params.s;
        circuit = form == HashForm::kShallow ? shallow_hash_circuit(params, x)
                                             : single_qubit_hash_circuit(params, x, sum);
        set = to_json(params);
    }
    StateVector state = circuit.simulate();
    json outputs{
        {"form", a.form},
        {"set", set},
        {"x", x},
        {"sum_qubit", form == HashForm::kSingleQubit && sum},
        {"circuit", circuit_json(circuit)},
        {"multi_qubit_gates", circuit.multi_qubit_gate_count()},
        {"depth", circuit.depth()},
        {"state", to_json(state)},
    };
    return {make_document("hash", inputs, outputs, 0)};
}

Outcome cmd_bias(const BiasArgs &a, const Common &common, std::ostream &err) {
    uint64_t q = checked_modulus(a.q);
    BiasedSet set = BiasedSet::make(q, read_set("--b", a.b, q, err));
    json inputs{{"q", q}, {"b", set.b}};
    json outputs;
    if (a.x) {
        uint64_t x = checked_input(*a.x, q);
        inputs["x"] = x;
        outputs = json{{"mode", "single-x"}, {"x", x}, {"bias", bias(set, x)}};
        if (x == 0) {
            std::string warning = "bias at x=0 is always 1; epsilon ranges over x != 0 only";
            err << "warning: " << warning << "\n";
            outputs["warning"] = warning;
        }
    } else {
        outputs = to_json(epsilon_of_biased_set(set, common.threads));
        outputs["mode"] = "sweep";
    }
    return {make_document("bias", inputs, outputs, 0)};
}

Outcome cmd_resist(const ResistArgs &a, const Common &common, std::ostream &err) {
    uint64_t q = checked_modulus(a.q);
    HashForm form = *parse_hash_form(a.form);
    bool sum = on_off(a.sum_qubit);
    ParamSet params = ParamSet::make(q, read_set("--s", a.s, q, err));
    json inputs{{"q", q}, {"s", params.s}, {"form", a.form}, {"sum_qubit", sum}};
    json outputs = to_json(collision_resistance(params, form, sum, common.threads));
    outputs["form"] = a.form;
    outputs["sum_qubit"] = form == HashForm::kSingleQubit && sum;
    return {make_document("resist", inputs, outputs, 0)};
}

Outcome cmd_search(const SearchArgs &a, const Common &common) {
    SearchConfig cfg;
    cfg.q = checked_modulus(a.q);
    if (a.n < 1) {
        throw std::invalid_argument("--n must be positive");
    }
    cfg.n = static_cast<size_t>(a.n);
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.target_epsilon = a.target_epsilon;
    cfg.threads = common.threads;
    HashForm form = *parse_hash_form(a.form);
    bool sum = on_off(a.sum_qubit);
    json inputs{
        {"q", cfg.q}, {"n", cfg.n}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"form", a.form}, {"sum_qubit", sum}};
    inputs["target_epsilon"] = a.target_epsilon ? json(*a.target_epsilon) : json(nullptr);
    json outputs = to_json(random_search(cfg, form, sum));
    outputs["epsilon"] = outputs["report"]["epsilon"];
    return {make_document("search", inputs, outputs, 0)};
}

Outcome cmd_verify(const VerifyArgs &a) {
    VerifyOptions opt;
    opt.q_max = a.q_max;
    opt.n_max = static_cast<size_t>(a.n_max);
    opt.seed = a.seed;
    opt.trials = a.trials;
    opt.fault = *parse_fault(a.fault);
    json inputs{{"q_max", opt.q_max}, {"n_max", opt.n_max}, {"seed", opt.seed}, {"trials", opt.trials}};
    if (opt.fault != Fault::kNone) {
        inputs["fault"] = a.fault;
    }
    VerifyReport report = run_verification(opt);
    return {make_document("verify", inputs, to_json(report), 0), report.all_passed() ? kExitOk : kExitVerifyFailed};
}

void add_common(CLI::App *cmd, Common &common, bool threaded) {
    cmd->add_option("--out", common.out_path, "Write the report document to this path");
    cmd->add_flag("--quiet", common.quiet, "Do not print the report document");
    if (threaded) {
        cmd->add_option("--threads", common.threads, "Worker threads (0 = all cores)");
    }
}

const std::vector<std::string> kForms{"standard", "shallow", "single-qubit"};
const std::vector<std::string> kOnOff{"on", "off"};

}  // namespace

std::vector<int64_t> parse_int_list(const std::string &text) {
    std::vector<int64_t> out;
    size_t i = 0;
    auto is_sep = [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c));
    };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            i++;
            continue;
        }
        size_t j = i;
        while (j < text.size() && !is_sep(text[j])) {
            j++;
        }
        int64_t v = 0;
        const char *first = text.data() + i;
        const char *last = text.data() + j;
        if (*first == '+') {
            first++;
        }
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) {
            throw std::invalid_argument("not an integer: '" + text.substr(i, j - i) + "'");
        }
        out.push_back(v);
        i = j;
    }
    return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum hash construction, collision-resistance analysis and parameter search", "qhash"};
    app.require_subcommand(1);
    Common common;

    HashArgs hash;
    auto *hash_cmd = app.add_subcommand("hash", "Build a hash state and dump its amplitudes");
    hash_cmd->add_option("--form", hash.form, "standard | shallow | single-qubit")->required()->check(CLI::IsMember(kForms));
    hash_cmd->add_option("--q", hash.q, "Modulus")->required();
    hash_cmd->add_option("--s", hash.s, "Parameter set (inline list or file)");
    hash_cmd->add_option("--b", hash.b, "Biased set for the standard form (inline list or file)");
    hash_cmd->add_option("--x", hash.x, "Input in Z_q")->required();
    hash_cmd->add_option("--sum-qubit", hash.sum_qubit, "Append the sum qubit (single-qubit form)")->check(CLI::IsMember(kOnOff));
    add_common(hash_cmd, common, false);

    BiasArgs bias_args;
    auto *bias_cmd = app.add_subcommand("bias", "Bias of a set at one x, or epsilon over all x != 0");
    bias_cmd->add_option("--q", bias_args.q, "Modulus")->required();
    bias_cmd->add_option("--b", bias_args.b, "Set elements (inline list or file)")->required();
    bias_cmd->add_option("--x", bias_args.x, "Evaluate at this x only");
    add_common(bias_cmd, common, true);

    ResistArgs resist;
    auto *resist_cmd = app.add_subcommand("resist", "Collision resistance of a parameter set");
    resist_cmd->add_option("--q", resist.q, "Modulus")->required();
    resist_cmd->add_option("--s", resist.s, "Parameter set (inline list or file)")->required();
    resist_cmd->add_option("--form", resist.form, "standard | shallow | single-qubit")->check(CLI::IsMember(kForms));
    resist_cmd->add_option("--sum-qubit", resist.sum_qubit, "Include the sum qubit (single-qubit form)")->check(CLI::IsMember(kOnOff));
    add_common(resist_cmd, common, true);

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Seeded random search for a parameter set with small epsilon");
    search_cmd->add_option("--q", search.q, "Modulus")->required();
    search_cmd->add_option("--n", search.n, "Parameters per set")->required();
    search_cmd->add_option("--trials", search.trials, "Number of random draws");
    search_cmd->add_option("--seed", search.seed, "Seed");
    search_cmd->add_option("--target-epsilon", search.target_epsilon, "Stop once epsilon <= this");
    search_cmd->add_option("--form", search.form, "standard | shallow | single-qubit")->check(CLI::IsMember(kForms));
    search_cmd->add_option("--sum-qubit", search.sum_qubit, "Include the sum qubit (single-qubit form)")->check(CLI::IsMember(kOnOff));
    add_common(search_cmd, common, true);

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Cross-check simulated circuits against the closed forms");
    verify_cmd->add_option("--q-max", verify.q_max, "Sweep moduli 2..q-max");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest parameter set");
    verify_cmd->add_option("--seed", verify.seed, "Seed");
    verify_cmd->add_option("--trials", verify.trials, "Random sets per modulus");
    verify_cmd->add_option("--inject-fault", verify.fault, "Test hook: none | shallow-half-angle | drop-global-rotation")
        ->check(CLI::IsMember({"none", "shallow-half-angle", "drop-global-rotation"}))
        ->group("");
    add_common(verify_cmd, common, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
        if (*hash_cmd) {
            outcome = cmd_hash(hash, err);
        } else if (*bias_cmd) {
            outcome = cmd_bias(bias_args, common, err);
        } else if (*resist_cmd) {
            outcome = cmd_resist(resist, common, err);
        } else if (*search_cmd) {
            outcome = cmd_search(search, common);
        } else {
            outcome = cmd_verify(verify);
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    outcome.document["timing"]["wall_seconds"] = elapsed.count();

    std::string text = outcome.document.dump(2) + "\n";
    if (!common.out_path.empty()) {
        std::ofstream file(common.out_path);
        if (!file || !(file << text)) {
            err << "error: cannot write " << common.out_path << "\n";
            return kExitUsage;
        }
    } else if (!common.quiet) {
        out << text;
    }
    if (outcome.exit_code == kExitVerifyFailed) {
        for (const json &c : outcome.document["outputs"]["checks"]) {
            if (!c["passed"].get<bool>()) {
                err << "FAILED " << c["name"].get<std::string>() << ": max deviation "
                    << c["max_deviation"].get<double>() << "\n";
            }
        }
    }
    return outcome.exit_code;
}

}  // namespace qhash
