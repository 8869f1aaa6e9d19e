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

// Premise pairs shaped for each transformable inference type. Vocabulary is
// drawn without replacement so that only the intended concepts are shared.

#ifndef AMRINFER_TESTS_SUPPORT_INFERENCE_GENERATORS_H_
#define AMRINFER_TESTS_SUPPORT_INFERENCE_GENERATORS_H_

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "amrinfer/penman.h"
#include "amrinfer/taxonomy.h"

namespace amrinfer::testing {

class Vocabulary {
 public:
  explicit Vocabulary(std::mt19937& rng) : rng_(rng) {
    nouns_ = {"rock",   "granite", "energy", "sun",     "scar",    "knee",
              "food",   "nutrient", "wood",  "fuel",    "plant",   "water",
              "light",  "animal",  "leaf",   "soil",    "cloud",   "dust",
              "seed",   "tree",    "river",  "ocean",   "ice",     "sand",
              "oxygen", "carbon",  "bird",   "fish",    "insect",  "flower",
              "planet", "moon",    "star",   "magnet",  "iron",    "copper",
              "glass",  "salt",    "sugar",  "mineral", "telescope", "shell"};
    mods_ = {"hard", "solar", "smooth", "deep", "small", "large",
             "cold", "hot",   "bright", "dark", "green", "heavy"};
    preds_ = {"store-01",   "contain-01", "release-01", "absorb-01",
              "produce-01", "need-01",    "use-01",     "cause-01",
              "require-01", "provide-01", "reflect-01", "conduct-01",
              "protect-01", "form-01",    "move-01",    "block-01",
              "support-01", "carry-01",   "change-01",  "attract-01"};
    std::shuffle(nouns_.begin(), nouns_.end(), rng_);
    std::shuffle(mods_.begin(), mods_.end(), rng_);
    std::shuffle(preds_.begin(), preds_.end(), rng_);
  }

  std::string noun() { return take(nouns_); }
  std::string mod() { return take(mods_); }
  std::string pred() { return take(preds_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  static std::string take(std::vector<std::string>& pool) {
    std::string s = pool.back();
    pool.pop_back();
    return s;
  }

  std::mt19937& rng_;
  std::vector<std::string> nouns_, mods_, preds_;
};

struct PremisePair {
  AmrGraph p1;
  AmrGraph p2;
};

inline std::string opt_mod(Vocabulary& v, const std::string& var, double p = 0.5) {
  return v.coin(p) ? " :mod (" + var + " / " + v.mod() + ")" : "";
}

inline PremisePair make_pair_maybe_swapped(Vocabulary& v, const std::string& a,
                                           const std::string& b) {
  if (v.coin()) return {parse_penman(a), parse_penman(b)};
  return {parse_penman(b), parse_penman(a)};
}

// (b :domain counterpart) next to a statement mentioning b.
inline PremisePair gen_arg_sub(Vocabulary& v) {
  const std::string b = v.noun();
  const std::string link =
      "(b / " + b + " :domain (c / " + v.noun() + opt_mod(v, "m") + "))";
  std::string target;
  switch (v.pick(3)) {
    case 0:
      target = "(v / " + v.pred() + " :ARG0 (b / " + b + ") :ARG1 (o / " + v.noun() + "))";
      break;
    case 1:
      target = "(h / " + v.noun() + " :domain (b / " + b + "))";
      break;
    default:
      target = "(v / " + v.pred() + " :ARG0 (o / " + v.noun() + ") :ARG1 (b / " + b +
               opt_mod(v, "m") + "))";
  }
  return make_pair_maybe_swapped(v, link, target);
}

// "to V1 something can mean to V2 something" next to a V1 statement.
inline PremisePair gen_pred_sub(Vocabulary& v) {
  const std::string v1 = v.pred();
  const std::string v2 = v.pred();
  std::string rule = "(m / mean-01 :ARG1 (a / " + v1 +
                     " :ARG1 (s / something)) :ARG2 (b / " + v2 + " :ARG1 s))";
  if (v.coin()) rule = "(p / possible-01 :ARG1 " + rule + ")";
  std::string fact;
  if (v.coin()) {
    fact = "(v / " + v1 + " :ARG0 (n / " + v.noun() + ") :ARG1 (n2 / " + v.noun() +
           opt_mod(v, "m") + "))";
  } else {
    fact = "(h / " + v.pred() + " :ARG0 (n / " + v.noun() + ") :ARG1 (v / " + v1 +
           " :ARG1 (n2 / " + v.noun() + ")))";
  }
  return make_pair_maybe_swapped(v, rule, fact);
}

// Two statements whose inner frames both take the shared argument.
inline PremisePair gen_frame_sub(Vocabulary& v) {
  const std::string b = v.noun();
  const std::string target = "(r / " + v.pred() + " :ARG0 (h / " + v.pred() +
                             " :ARG1 (b / " + b + ")) :ARG1 (o / " + v.noun() +
                             ") :ARG2 (o2 / " + v.noun() + "))";
  const std::string source = "(q / " + v.pred() + " :ARG0 (h / " + v.pred() +
                             " :ARG0 (x / " + v.noun() + ") :ARG1 (b / " + b +
                             ")) :ARG1 (z / " + v.noun() + "))";
  return {parse_penman(target), parse_penman(source)};
}

// "if something A then that something is C" next to a fact binding A.
inline PremisePair gen_cond_frame(Vocabulary& v) {
  const std::string a = v.pred();
  const std::string rule = "(c / " + v.noun() + (v.coin() ? " :polarity -" : "") +
                           " :domain (s / something) :condition (a / " + a +
                           " :ARG1 s))";
  std::string fact;
  if (v.coin()) {
    fact = "(o / " + v.noun() + " :ARG1-of (a / " + a + ") :domain (w / " + v.noun() +
           opt_mod(v, "m") + "))";
  } else {
    fact = "(a / " + a + " :ARG0 (x / " + v.noun() + ") :ARG1 (w / " + v.noun() + "))";
  }
  return make_pair_maybe_swapped(v, rule, fact);
}

// A statement about the bridge and another statement that uses it.
inline PremisePair gen_arg_ins(Vocabulary& v) {
  const std::string b = v.noun();
  if (v.coin()) {
    const std::string detail = "(b / " + b + " :mod (m / " + v.mod() + ")" +
                               (v.coin() ? " :location (l / " + v.noun() + ")" : "") +
                               ")";
    const std::string use = "(v / " + v.pred() + " :ARG0 (b / " + b + ") :ARG1 (o / " +
                            v.noun() + "))";
    return make_pair_maybe_swapped(v, detail, use);
  }
  const std::string frame = "(c / " + v.pred() + " :ARG1 (b / " + b + ") :ARG2 (z / " +
                            v.noun() + "))";
  const std::string kind = "(e / " + v.noun() + " :domain (b / " + b + opt_mod(v, "m") +
                           "))";
  return make_pair_maybe_swapped(v, frame, kind);
}

inline PremisePair gen_frame_conj(Vocabulary& v) {
  const std::string shared = v.noun();
  auto frame = [&] {
    return "(v / " + v.pred() + " :ARG0 (a / " + v.noun() + ") :ARG1 (b / " +
           (v.coin() ? shared : v.noun()) + opt_mod(v, "m", 0.3) + "))";
  };
  const std::string a = frame();
  const std::string b = frame();
  return {parse_penman(a), parse_penman(b)};
}

// Two statements identical but for one term.
inline PremisePair gen_arg_pred_gen(Vocabulary& v) {
  const std::string x = v.noun();
  const std::string y = v.noun();
  if (v.coin(0.7)) {
    const std::string m = v.noun();
    const std::string mod = v.mod();
    auto stmt = [&](const std::string& n) {
      return "(m / " + m + " :mod (h / " + mod + ") :domain (x / " + n + "))";
    };
    return {parse_penman(stmt(x)), parse_penman(stmt(y))};
  }
  const std::string p1 = v.pred();
  const std::string p2 = v.pred();
  const std::string arg0 = v.noun();
  auto stmt = [&](const std::string& p) {
    return "(v / " + p + " :ARG0 (a / " + arg0 + ") :ARG1 (b / " + x + "))";
  };
  return {parse_penman(stmt(p1)), parse_penman(stmt(p2))};
}

// "x is made of y" next to a property of y (or of part of y).
inline PremisePair gen_arg_sub_prop(Vocabulary& v) {
  const std::string x = v.noun();
  const std::string y = v.noun();
  std::string bridge = y;
  std::string made_of = "(c / " + y + ")";
  if (v.coin()) {
    bridge = v.noun();
    made_of = "(c / " + y + " :mod (a / " + bridge + "))";
  }
  const std::string make = "(m / make-01 :ARG1 (b / " + x + opt_mod(v, "k", 0.3) +
                           ") :ARG2 " + made_of + ")";
  const std::string prop = "(h / " + v.pred() + " :ARG0 (a / " + bridge +
                           ") :ARG1 (s / " + v.noun() + " :mod (s2 / " + v.mod() + ")))";
  return make_pair_maybe_swapped(v, make, prop);
}

inline PremisePair gen_if_then(Vocabulary& v) {
  const std::string shared = v.noun();
  const std::string a = "(r / " + v.pred() + " :ARG0 (t / " + v.noun() +
                        opt_mod(v, "m") + ") :ARG1 (l / " + shared + "))";
  const std::string b = "(b / " + v.pred() + " :ARG0 (c / " + v.noun() +
                        ") :ARG1 (l / " + shared + "))";
  return {parse_penman(a), parse_penman(b)};
}

inline PremisePair generate_premises(InferenceType t, std::mt19937& rng) {
  Vocabulary v(rng);
  switch (t) {
    case InferenceType::kArgSub: return gen_arg_sub(v);
    case InferenceType::kPredSub: return gen_pred_sub(v);
    case InferenceType::kFrameSub: return gen_frame_sub(v);
    case InferenceType::kCondFrame: return gen_cond_frame(v);
    case InferenceType::kArgIns: return gen_arg_ins(v);
    case InferenceType::kFrameConj: return gen_frame_conj(v);
    case InferenceType::kArgPredGen: return gen_arg_pred_gen(v);
    case InferenceType::kArgSubProp: return gen_arg_sub_prop(v);
    case InferenceType::kIfThen: return gen_if_then(v);
    default: break;
  }
  throw std::invalid_argument("no generator for " + std::string(abbreviation(t)));
}

}  // namespace amrinfer::testing

#endif  // AMRINFER_TESTS_SUPPORT_INFERENCE_GENERATORS_H_
