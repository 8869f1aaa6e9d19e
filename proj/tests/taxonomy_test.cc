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

#include <gtest/gtest.h>

#include <string>

namespace amrinfer {
namespace {

TEST(Taxonomy, ProportionsFromReferenceTable) {
  double sum = 0;
  int with_proportion = 0;
  for (InferenceType t : all_inference_types()) {
    if (auto p = expected_proportion(t)) {
      sum += *p;
      ++with_proportion;
    }
  }
  EXPECT_EQ(with_proportion, 11);
  EXPECT_NEAR(sum, 0.991, 0.001);
  EXPECT_DOUBLE_EQ(*expected_proportion(InferenceType::kArgSub), 0.19);
  EXPECT_DOUBLE_EQ(*expected_proportion(InferenceType::kFrameSub), 0.20);
  EXPECT_DOUBLE_EQ(*expected_proportion(InferenceType::kArgSubProp), 0.004);
  EXPECT_DOUBLE_EQ(*expected_proportion(InferenceType::kUnknown), 0.16);
  EXPECT_FALSE(expected_proportion(InferenceType::kPremiseCopy));
}

TEST(Taxonomy, TransformableSet) {
  std::string names;
  for (InferenceType t : all_inference_types()) {
    if (is_transformable(t)) names += std::string(abbreviation(t)) + " ";
  }
  EXPECT_EQ(names,
            "ARG-SUB PRED-SUB FRAME-SUB COND-FRAME ARG-INS FRAME-CONJ "
            "ARG/PRED-GEN ARG-SUB-PROP IFT ");
}

TEST(LookupType, AbbreviationAndDisplayName) {
  EXPECT_EQ(lookup_type("ARG-SUB"), InferenceType::kArgSub);
  EXPECT_EQ(lookup_type("arg substitution"), InferenceType::kArgSub);
  EXPECT_EQ(lookup_type("Arg/Pred-Gen"), InferenceType::kArgPredGen);
  EXPECT_EQ(lookup_type("prem-copy"), InferenceType::kPremiseCopy);
}

TEST(LookupType, NameRoundTrip) {
  for (InferenceType t : all_inference_types()) {
    EXPECT_EQ(lookup_type(display_name(t)), t);
    EXPECT_EQ(lookup_type(abbreviation(t)), t);
  }
}

TEST(LookupType, UnknownListsValidNames) {
  try {
    lookup_type("FOO");
    FAIL();
  } catch (const UnknownType& e) {
    EXPECT_NE(std::string(e.what()).find("ARG-SUB-PROP"), std::string::npos);
  }
}

}  // namespace
}  // namespace amrinfer
