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

#pragma once

#include <iosfwd>
#include <string>

#include "silab/engine.hpp"

namespace silab {

/*
 * PGSolver text format:
 *   parity <max-id>;
 *   <id> <priority> <owner 0|1> <succ>,<succ>,... ["<name>"];
 * Owner 0 is Even. Names are optional.
 */
void write_pgsolver(std::ostream &out, const ParityGame &g);
std::string to_pgsolver(const ParityGame &g);
ParityGame read_pgsolver(std::istream &in);
ParityGame load_pgsolver(const std::string &path);
void save_pgsolver(const std::string &path, const ParityGame &g);

/* Strategies as "<vertex-id> <chosen-successor-id>" lines. */
void write_strategy(std::ostream &out, const Strategy &s);
Strategy read_strategy(std::istream &in, const ParityGame &g, Owner side);

/*
 * Traces as line-delimited JSON records
 *   {"iteration": t, "switched": [{"from": v, "to": u}, ...], "ties": [...]}
 */
void write_trace(std::ostream &out, const Trace &t);
Trace read_trace(std::istream &in);

} // namespace silab
