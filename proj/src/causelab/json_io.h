// Copyright 2026 The causelab Authors
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

// JSON readers and writers. Readers throw Error(Parse) for malformed
// documents and the usual validation errors for well-formed but invalid ones.

#ifndef CAUSELAB_JSON_IO_H
#define CAUSELAB_JSON_IO_H

#include <json.hpp>
#include <string_view>

#include "causelab/classify.h"
#include "causelab/quantum.h"

namespace causelab {

using Json = nlohmann::ordered_json;

Json parse_json_text(std::string_view text);

Json to_json(const Scenario &scenario);
Scenario scenario_from_json(const Json &j);

Json to_json(const Correlation &corr);
Correlation correlation_from_json(const Json &j);

Json to_json(const QuasiProcess &process);
QuasiProcess quasiprocess_from_json(const Json &j);

Json to_json(const InterventionFamily &interventions);
InterventionFamily interventions_from_json(const Json &j);

Json to_json(const QuasiProcessFunction &omega);
QuasiProcessFunction process_function_from_json(const Json &j);

Json to_json(const DeterministicIntervention &intervention);
Json to_json(const OutputChoice &choice);

Json to_json(const Game &game);
Game game_from_json(const Json &j);

Json to_json(const ProcessMatrix &pm);
ProcessMatrix process_matrix_from_json(const Json &j);

Json to_json(const InstrumentFamily &instruments);
InstrumentFamily instruments_from_json(const Json &j);

Json to_json(const FloatCorrelation &corr);
Json to_json(const ValidityReport &report);

Json to_json(const ConsistencyVerdict &verdict);
Json to_json(const ProcessFunctionVerdict &verdict);
Json to_json(const CausalStep &strategy);
Json to_json(const CausalBound &bound);
Json to_json(const DcBound &bound);
Json to_json(const PcBound &bound);
Json to_json(const WitnessCheck &check);
Json to_json(const ClassLabel &label);

}  // namespace causelab

#endif
