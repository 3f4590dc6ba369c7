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

#include "qhash/report.h"

#include <bit>

namespace qhash {

using nlohmann::json;

json to_json(const ParamSet &params) {
    return json{{"q", params.q}, {"s", params.s}};
}

json to_json(const BiasedSet &set) {
    return json{{"q", set.q}, {"b", set.b}};
}

json to_json(const StateVector &state) {
    return json{
        {"num_qubits", state.num_qubits()},
        {"basis_order", "qubit 0 is the most significant bit"},
        {"amplitudes", std::vector<double>(state.amplitudes().begin(), state.amplitudes().end())},
    };
}

json to_json(const ResistanceReport &report) {
    json table = json::array();
    for (const ResistanceEntry &e : report.table) {
        table.push_back(json{{"x", e.x}, {"value", e.value}, {"magnitude", e.magnitude}});
    }
    return json{{"epsilon", report.epsilon}, {"worst_x", report.worst_x}, {"table", std::move(table)}};
}

ResistanceReport resistance_report_from_json(const json &j) {
    ResistanceReport r;
    r.epsilon = j.at("epsilon").get<double>();
    r.worst_x = j.at("worst_x").get<uint64_t>();
    for (const json &e : j.at("table")) {
        r.table.push_back(
            ResistanceEntry{e.at("x").get<uint64_t>(), e.at("value").get<double>(), e.at("magnitude").get<double>()});
    }
    return r;
}

json to_json(const SearchResult &result) {
    json history = json::array();
    for (const SearchStep &step : result.history) {
        history.push_back(json{{"trial", step.trial}, {"epsilon", step.epsilon}});
    }
    return json{
        {"best_set", to_json(result.best_set)},
        {"report", to_json(result.report)},
        {"trials_run", result.trials_run},
        {"history", std::move(history)},
    };
}

json to_json(const VerifyReport &report) {
    json checks = json::array();
    for (const ClaimCheck &c : report.checks) {
        checks.push_back(json{
            {"name", c.name},
            {"claim", c.claim},
            {"passed", c.passed},
            {"max_deviation", c.max_deviation},
            {"cases", c.cases},
        });
    }
    return json{{"passed", report.all_passed()}, {"checks", std::move(checks)}};
}

json make_document(const std::string &command, json inputs, json outputs, double wall_seconds) {
    return json{
        {"schema_version", kSchemaVersion},
        {"command", command},
        {"inputs", std::move(inputs)},
        {"outputs", std::move(outputs)},
        {"timing", json{{"wall_seconds", wall_seconds}}},
    };
}

namespace {

struct Checker {
    std::vector<std::string> errors;

    bool require(const json &obj, const std::string &path, const std::string &key, json::value_t type) {
        if (!obj.is_object() || !obj.contains(key)) {
            errors.push_back(path + "." + key + ": missing");
            return false;
        }
        const json &v = obj.at(key);
        bool ok = v.type() == type || (type == json::value_t::number_float && v.is_number()) ||
                  (type == json::value_t::number_unsigned && v.is_number_integer() && v.get<int64_t>() >= 0);
        if (!ok) {
            errors.push_back(path + "." + key + ": expected " + json(type).type_name() + ", got " + v.type_name());
        }
        return ok;
    }

    void number_array(const json &obj, const std::string &path, const std::string &key) {
        if (!require(obj, path, key, json::value_t::array)) {
            return;
        }
        for (const json &v : obj.at(key)) {
            if (!v.is_number()) {
                errors.push_back(path + "." + key + ": non-numeric element");
                return;
            }
        }
    }

    void resistance(const json &obj, const std::string &path) {
        require(obj, path, "epsilon", json::value_t::number_float);
        require(obj, path, "worst_x", json::value_t::number_unsigned);
        if (!require(obj, path, "table", json::value_t::array)) {
            return;
        }
        for (const json &e : obj.at("table")) {
            require(e, path + ".table[]", "x", json::value_t::number_unsigned);
            require(e, path + ".table[]", "value", json::value_t::number_float);
            require(e, path + ".table[]", "magnitude", json::value_t::number_float);
            if (!errors.empty()) {
                return;
            }
        }
    }
};

}  // namespace

std::vector<std::string> validate_document(const json &doc) {
    using vt = json::value_t;
    Checker c;
    if (!doc.is_object()) {
        return {"document: expected object"};
    }
    if (c.require(doc, "", "schema_version", vt::string) && doc.at("schema_version") != kSchemaVersion) {
        c.errors.push_back(".schema_version: expected \"1\"");
    }
    c.require(doc, "", "inputs", vt::object);
    bool has_outputs = c.require(doc, "", "outputs", vt::object);
    if (c.require(doc, "", "timing", vt::object)) {
        c.require(doc.at("timing"), ".timing", "wall_seconds", vt::number_float);
    }
    if (!c.require(doc, "", "command", vt::string) || !has_outputs) {
        return c.errors;
    }
    const std::string cmd = doc.at("command");
    const json &out = doc.at("outputs");
    if (cmd == "hash") {
        c.require(out, ".outputs", "form", vt::string);
        c.require(out, ".outputs", "x", vt::number_unsigned);
        c.require(out, ".outputs", "sum_qubit", vt::boolean);
        c.require(out, ".outputs", "multi_qubit_gates", vt::number_unsigned);
        c.require(out, ".outputs", "depth", vt::number_unsigned);
        if (c.require(out, ".outputs", "state", vt::object)) {
            const json &st = out.at("state");
            c.number_array(st, ".outputs.state", "amplitudes");
            if (c.require(st, ".outputs.state", "num_qubits", vt::number_unsigned) && st.contains("amplitudes") &&
                st.at("amplitudes").is_array()) {
                auto m = st.at("num_qubits").get<uint64_t>();
                if (m >= 64 || st.at("amplitudes").size() != (uint64_t{1} << m)) {
                    c.errors.push_back(".outputs.state.amplitudes: length is not 2^num_qubits");
                }
            }
        }
    } else if (cmd == "bias") {
        if (c.require(out, ".outputs", "mode", vt::string)) {
            if (out.at("mode") == "sweep") {
                c.resistance(out, ".outputs");
            } else if (out.at("mode") == "single-x") {
                c.require(out, ".outputs", "x", vt::number_unsigned);
                c.require(out, ".outputs", "bias", vt::number_float);
            } else {
                c.errors.push_back(".outputs.mode: unknown mode");
            }
        }
    } else if (cmd == "resist") {
        c.require(out, ".outputs", "form", vt::string);
        c.resistance(out, ".outputs");
    } else if (cmd == "search") {
        c.require(out, ".outputs", "trials_run", vt::number_unsigned);
        c.require(out, ".outputs", "history", vt::array);
        if (c.require(out, ".outputs", "best_set", vt::object)) {
            c.number_array(out.at("best_set"), ".outputs.best_set", "s");
        }
        if (c.require(out, ".outputs", "report", vt::object)) {
            c.resistance(out.at("report"), ".outputs.report");
        }
    } else if (cmd == "verify") {
        c.require(out, ".outputs", "passed", vt::boolean);
        if (c.require(out, ".outputs", "checks", vt::array)) {
            for (const json &chk : out.at("checks")) {
                c.require(chk, ".outputs.checks[]", "name", vt::string);
                c.require(chk, ".outputs.checks[]", "passed", vt::boolean);
                c.require(chk, ".outputs.checks[]", "max_deviation", vt::number_float);
            }
        }
    } else {
        c.errors.push_back(".command: unknown command '" + cmd + "'");
    }
    return c.errors;
}

}  // namespace qhash
