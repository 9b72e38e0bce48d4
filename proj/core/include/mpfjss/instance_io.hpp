// Copyright 2026 The mpfjss Authors
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

// Reading and writing instances.
//
// The fact format has one predicate per scheduling concept:
//
//   op(ID,DUR).          operation type and its duration in minutes
//   needs(OP,CLASS).     OP needs one instance of CLASS (one fact per class)
//   res(CLASS,IDX,OP).   instance IDX of CLASS can run OP
//   job(JID,DEADLINE).   job and its deadline, minutes from shift start
//   recipe(JID,OP).      OP must be executed for JID
//   prec(JID,OP1,OP2).   within JID, OP1 precedes OP2
//
// Identifiers match [a-z][A-Za-z0-9_]*, integers are non-negative decimals,
// `%` starts a comment, and several facts may share a line. Repeated facts
// are merged. A JSON mirror with arrays `operations`, `resources`,
// `demands` and `jobs` is accepted as well.

#ifndef MPFJSS_INSTANCE_IO_HPP_
#define MPFJSS_INSTANCE_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mpfjss/instance.hpp"

namespace mpfjss {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kIo, kSyntax, kSemantic };

  ParseError(Kind kind, int line, int column, std::string message,
             std::string fact = {});

  Kind kind() const { return kind_; }
  // 1-based; 0 when the error has no source position (JSON input, I/O).
  int line() const { return line_; }
  int column() const { return column_; }
  // Offending fact as written, for semantic errors.
  const std::string& fact() const { return fact_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string fact_;
};

// Parses fact-file text, or the JSON mirror when the first non-blank
// character is `{`. Throws ParseError.
Instance parse_instance(std::string_view text);

Instance parse_instance_facts(std::string_view text);
Instance parse_instance_json(std::string_view text);

// Reads and parses a file; unreadable files raise ParseError(kIo).
Instance load_instance(const std::filesystem::path& path);

// Canonical fact text: operations, demands, resources, then each job with
// its recipe and precedence, all in instance order.
std::string to_facts(const Instance& inst);
std::string to_json_text(const Instance& inst, int indent = 2);

}  // namespace mpfjss

#endif  // MPFJSS_INSTANCE_IO_HPP_
