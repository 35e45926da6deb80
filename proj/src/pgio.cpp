/*
 * Copyright 2026 the silab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "silab/pgio.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace silab {

void write_pgsolver(std::ostream &out, const ParityGame &g) {
    out << "parity " << (g.size() - 1) << ";\n";
    for (int v = 0; v < g.size(); v++) {
        out << v << ' ' << g.pri[v] << ' ' << (g.owner[v] == Owner::Odd ? 1 : 0)
            << ' ';
        for (size_t i = 0; i < g.succ[v].size(); i++) {
            if (i) out << ',';
            out << g.succ[v][i];
        }
        if (!g.label[v].empty()) out << " \"" << g.label[v] << '"';
        out << ";\n";
    }
}

std::string to_pgsolver(const ParityGame &g) {
    std::ostringstream ss;
    write_pgsolver(ss, g);
    return ss.str();
}

namespace {

[[noreturn]] void bad_line(int line, const std::string &what) {
    throw std::runtime_error("pgsolver: line " + std::to_string(line) + ": " +
                             what);
}

} // namespace

ParityGame read_pgsolver(std::istream &in) {
    ParityGame g;
    std::vector<char> declared;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        lineno++;
        // Strip the terminating semicolon and surrounding whitespace.
        size_t semi = line.find(';');
        std::string body = semi == std::string::npos ? line : line.substr(0, semi);
        std::istringstream ss(body);
        std::string first;
        if (!(ss >> first)) continue; // blank line
        if (first == "parity") {
            if (header_seen) bad_line(lineno, "duplicate header");
            header_seen = true;
            long long maxid;
            if (!(ss >> maxid) || maxid < 0) bad_line(lineno, "bad max id");
            continue;
        }
        int id;
        try {
            id = std::stoi(first);
        } catch (...) {
            bad_line(lineno, "expected vertex id, got '" + first + "'");
        }
        if (id < 0) bad_line(lineno, "negative vertex id");
        priority_t pri;
        int owner;
        std::string succs;
        if (!(ss >> pri >> owner >> succs))
            bad_line(lineno, "expected <priority> <owner> <successors>");
        if (owner != 0 && owner != 1) bad_line(lineno, "owner must be 0 or 1");

        if (id >= g.size()) {
            while (g.size() <= id) g.add(Owner::Even, 1);
            declared.resize(g.size(), 0);
        }
        if (declared[id]) bad_line(lineno, "vertex declared twice");
        declared[id] = 1;
        g.owner[id] = owner ? Owner::Odd : Owner::Even;
        g.pri[id] = pri;
        g.succ[id].clear();
        std::istringstream sl(succs);
        std::string tok;
        while (std::getline(sl, tok, ',')) {
            if (tok.empty()) bad_line(lineno, "empty successor entry");
            try {
                g.succ[id].push_back(std::stoi(tok));
            } catch (...) {
                bad_line(lineno, "bad successor '" + tok + "'");
            }
        }
        if (g.succ[id].empty()) bad_line(lineno, "no successors");
        // Optional quoted name, possibly containing spaces.
        std::string rest;
        std::getline(ss, rest);
        size_t q1 = rest.find('"');
        if (q1 != std::string::npos) {
            size_t q2 = rest.rfind('"');
            if (q2 == q1) bad_line(lineno, "unterminated name");
            g.label[id] = rest.substr(q1 + 1, q2 - q1 - 1);
        }
    }
    for (int v = 0; v < g.size(); v++)
        if (!declared[v])
            throw std::runtime_error("pgsolver: vertex " + std::to_string(v) +
                                     " referenced but never declared");
    g.validate();
    return g;
}

ParityGame load_pgsolver(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_pgsolver(in);
}

void save_pgsolver(const std::string &path, const ParityGame &g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_pgsolver(out, g);
}

void write_strategy(std::ostream &out, const Strategy &s) {
    for (int v = 0; v < (int)s.choice.size(); v++)
        if (s.choice[v] >= 0) out << v << ' ' << s.choice[v] << '\n';
}

Strategy read_strategy(std::istream &in, const ParityGame &g, Owner side) {
    Strategy s;
    s.side = side;
    s.choice.assign(g.size(), -1);
    int v, u;
    while (in >> v >> u) {
        if (v < 0 || v >= g.size())
            throw std::runtime_error("strategy: vertex out of range");
        s.choice[v] = u;
    }
    validate_strategy(g, s);
    return s;
}

void write_trace(std::ostream &out, const Trace &t) {
    for (const IterationRecord &r : t.iters) {
        nlohmann::ordered_json j;
        j["iteration"] = r.iteration;
        j["switched"] = nlohmann::ordered_json::array();
        for (const SwitchRec &s : r.switched)
            j["switched"].push_back({{"from", s.from}, {"to", s.to}});
        j["ties"] = r.ties;
        out << j.dump() << '\n';
    }
}

Trace read_trace(std::istream &in) {
    Trace t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        IterationRecord r;
        r.iteration = j.at("iteration").get<int>();
        for (const auto &s : j.at("switched"))
            r.switched.push_back(
                {s.at("from").get<int>(), s.at("to").get<int>()});
        for (const auto &v : j.at("ties")) r.ties.push_back(v.get<int>());
        t.iters.push_back(std::move(r));
    }
    return t;
}

} // namespace silab
