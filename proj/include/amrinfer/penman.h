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

// Reading and writing AMR graphs in Penman notation:
//
//   (c / contain-01 :ARG0 (f / food) :ARG1 (n / nutrient))
//
// Inverse roles (":ARG0-of") are normalized to forward edges on read and are
// only written back when a node cannot be reached from the root otherwise.

#ifndef AMRINFER_PENMAN_H_
#define AMRINFER_PENMAN_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amrinfer/graph.h"

namespace amrinfer {

struct PenmanSource {
  std::string text;
  // File name and 1-based line of the first character, for diagnostics.
  std::optional<std::string> file;
  std::optional<std::size_t> line;
};

// Base for everything parse_penman throws. offset() is a byte offset into
// PenmanSource::text.
class PenmanError : public std::runtime_error {
 public:
  PenmanError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public PenmanError {
 public:
  using PenmanError::PenmanError;
};

class DanglingReference : public PenmanError {
 public:
  using PenmanError::PenmanError;
};

AmrGraph parse_penman(const PenmanSource& src);
AmrGraph parse_penman(const std::string& text);

// Canonical single-line form: depth-first from the root, concepts at first
// occurrence, edges in graph order, single spaces.
std::string serialize_penman(const AmrGraph& g);

// One graph read from a multi-graph document, with the "# ::snt" sentence
// when the preceding comment block carried one.
struct PenmanEntry {
  AmrGraph graph;
  std::optional<std::string> sentence;
  std::size_t line = 0;
};

// Reads blank-line separated graphs. Comment lines start with '#'.
std::vector<PenmanEntry> read_penman_document(std::istream& in,
                                              const std::string& file_name = "");

}  // namespace amrinfer

#endif  // AMRINFER_PENMAN_H_
