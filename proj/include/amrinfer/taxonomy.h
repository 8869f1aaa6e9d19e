// Copyright 2026 The amrinfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The closed set of inference types relating two premises to a conclusion.

#ifndef AMRINFER_TAXONOMY_H_
#define AMRINFER_TAXONOMY_H_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amrinfer {

// Declaration order is the reporting order; PREM-COPY comes last.
enum class InferenceType {
  kArgSub,
  kPredSub,
  kFrameSub,
  kCondFrame,
  kArgIns,
  kFrameConj,
  kArgPredGen,
  kArgSubProp,
  kExample,
  kIfThen,
  kUnknown,
  kPremiseCopy,
};

inline constexpr std::size_t kNumInferenceTypes = 12;

const std::array<InferenceType, kNumInferenceTypes>& all_inference_types();

// "ARG-SUB", "ARG/PRED-GEN", ... as used in record files and CLI flags.
std::string_view abbreviation(InferenceType t);

// Lower-cased phrase used inside prompts, e.g. "arg substitution".
std::string_view display_name(InferenceType t);

// Share of the reference corpus; none for PREM-COPY.
std::optional<double> expected_proportion(InferenceType t);

// Whether transform() can derive a conclusion for this type.
bool is_transformable(InferenceType t);

class UnknownType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Case-insensitive match on abbreviation or display name.
InferenceType lookup_type(std::string_view name);

}  // namespace amrinfer

#endif  // AMRINFER_TAXONOMY_H_
