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

#include "amrinfer/taxonomy.h"

#include <cctype>

namespace amrinfer {

namespace {

struct TypeInfo {
  std::string_view abbreviation;
  std::string_view display_name;
  double proportion;  // negative when absent
  bool transformable;
};

constexpr std::array<TypeInfo, kNumInferenceTypes> kInfo{{
    {"ARG-SUB", "arg substitution", 0.19, true},
    {"PRED-SUB", "pred substitution", 0.05, true},
    {"FRAME-SUB", "frame substitution", 0.20, true},
    {"COND-FRAME", "conditional frame insertion/substitution", 0.12, true},
    {"ARG-INS", "arg insertion", 0.18, true},
    {"FRAME-CONJ", "frame conjunction", 0.06, true},
    {"ARG/PRED-GEN", "arg/pred generalisation", 0.01, true},
    {"ARG-SUB-PROP", "arg substitution (property inheritance)", 0.004, true},
    {"EXAMPLE", "example", 0.009, false},
    {"IFT", "if ... then ...", 0.008, true},
    {"UNK", "others", 0.16, false},
    {"PREM-COPY", "premise copy", -1.0, false},
}};

const TypeInfo& info(InferenceType t) { return kInfo[static_cast<std::size_t>(t)]; }

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

const std::array<InferenceType, kNumInferenceTypes>& all_inference_types() {
  static const std::array<InferenceType, kNumInferenceTypes> kAll = [] {
    std::array<InferenceType, kNumInferenceTypes> a{};
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<InferenceType>(i);
    return a;
  }();
  return kAll;
}

std::string_view abbreviation(InferenceType t) { return info(t).abbreviation; }

std::string_view display_name(InferenceType t) { return info(t).display_name; }

std::optional<double> expected_proportion(InferenceType t) {
  if (info(t).proportion < 0) return std::nullopt;
  return info(t).proportion;
}

bool is_transformable(InferenceType t) { return info(t).transformable; }

InferenceType lookup_type(std::string_view name) {
  for (InferenceType t : all_inference_types()) {
    if (iequals(name, abbreviation(t)) || iequals(name, display_name(t))) return t;
  }
  std::string valid;
  for (InferenceType t : all_inference_types()) {
    if (!valid.empty()) valid += ", ";
    valid += abbreviation(t);
  }
  throw UnknownType("unknown inference type '" + std::string(name) +
                    "' (valid: " + valid + ")");
}

}  // namespace amrinfer
