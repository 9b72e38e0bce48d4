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

#include "mpfjss/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "graph_util.hpp"

namespace mpfjss {

namespace {

std::string format_message(int line, int column, const std::string& message) {
  if (line <= 0) return message;
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

template <typename T>
void push_unique(std::vector<T>& v, const T& value) {
  if (std::find(v.begin(), v.end(), value) == v.end()) v.push_back(value);
}

struct Position {
  int line = 0;
  int column = 0;
};

struct Token {
  enum class Type { kIdent, kInt, kLParen, kRParen, kComma, kDot, kEnd };
  Type type;
  std::string text;
  Position pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Position pos{line_, column_};
    if (at_ >= text_.size()) return {Token::Type::kEnd, "", pos};
    const char c = text_[at_];
    auto single = [&](Token::Type t) {
      advance();
      return Token{t, std::string(1, c), pos};
    };
    switch (c) {
      case '(': return single(Token::Type::kLParen);
      case ')': return single(Token::Type::kRParen);
      case ',': return single(Token::Type::kComma);
      case '.': return single(Token::Type::kDot);
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string s;
      while (at_ < text_.size() && (std::isalnum(static_cast<unsigned char>(
                                        text_[at_])) ||
                                    text_[at_] == '_')) {
        s += text_[at_];
        advance();
      }
      return {Token::Type::kIdent, s, pos};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (at_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[at_]))) {
        s += text_[at_];
        advance();
      }
      return {Token::Type::kInt, s, pos};
    }
    throw ParseError(ParseError::Kind::kSyntax, pos.line, pos.column,
                     std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[at_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++at_;
  }

  void skip_blank() {
    while (at_ < text_.size()) {
      const char c = text_[at_];
      if (c == '%') {
        while (at_ < text_.size() && text_[at_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t at_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Fact {
  std::string predicate;
  std::vector<Token> args;
  Position pos;
  std::string text;
};

std::string render(const std::string& predicate,
                   const std::vector<Token>& args) {
  std::string s = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += ",";
    s += args[i].text;
  }
  return s + ").";
}

std::vector<Fact> read_facts(std::string_view text) {
  Lexer lexer(text);
  std::vector<Fact> facts;
  auto fail = [](const Token& t, const std::string& what) -> void {
    throw ParseError(ParseError::Kind::kSyntax, t.pos.line, t.pos.column,
                     what + (t.type == Token::Type::kEnd
                                 ? std::string(" but reached end of input")
                                 : " but found '" + t.text + "'"));
  };
  for (Token t = lexer.next(); t.type != Token::Type::kEnd; t = lexer.next()) {
    if (t.type != Token::Type::kIdent) fail(t, "expected a predicate name");
    Fact fact{t.text, {}, t.pos, {}};
    Token open = lexer.next();
    if (open.type != Token::Type::kLParen) fail(open, "expected '('");
    while (true) {
      Token arg = lexer.next();
      if (arg.type != Token::Type::kIdent && arg.type != Token::Type::kInt) {
        fail(arg, "expected an identifier or integer");
      }
      fact.args.push_back(arg);
      Token sep = lexer.next();
      if (sep.type == Token::Type::kRParen) break;
      if (sep.type != Token::Type::kComma) fail(sep, "expected ',' or ')'");
    }
    Token dot = lexer.next();
    if (dot.type != Token::Type::kDot) fail(dot, "expected '.'");
    fact.text = render(fact.predicate, fact.args);
    facts.push_back(std::move(fact));
  }
  return facts;
}

// Signature check: 'i' identifier, 'n' integer.
void check_signature(const Fact& f, std::string_view signature) {
  if (f.args.size() != signature.size()) {
    throw ParseError(ParseError::Kind::kSyntax, f.pos.line, f.pos.column,
                     f.predicate + "/" + std::to_string(f.args.size()) +
                         " has wrong arity, expected " + f.predicate + "/" +
                         std::to_string(signature.size()),
                     f.text);
  }
  for (std::size_t i = 0; i < signature.size(); ++i) {
    const Token& a = f.args[i];
    const bool want_int = signature[i] == 'n';
    if (want_int != (a.type == Token::Type::kInt)) {
      throw ParseError(ParseError::Kind::kSyntax, a.pos.line, a.pos.column,
                       std::string("argument ") + std::to_string(i + 1) +
                           " of " + f.predicate + " must be " +
                           (want_int ? "an integer" : "an identifier"),
                       f.text);
    }
  }
}

Minutes to_minutes(const Token& t, const Fact& f) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(t.text, &used);
    return static_cast<Minutes>(v);
  } catch (const std::out_of_range&) {
    throw ParseError(ParseError::Kind::kSyntax, t.pos.line, t.pos.column,
                     "integer out of range", f.text);
  }
}

[[noreturn]] void semantic(const Fact& f, const std::string& message) {
  throw ParseError(ParseError::Kind::kSemantic, f.pos.line, f.pos.column,
                   message + " in " + f.text, f.text);
}

}  // namespace

ParseError::ParseError(Kind kind, int line, int column, std::string message,
                       std::string fact)
    : std::runtime_error(format_message(line, column, message)),
      kind_(kind),
      line_(line),
      column_(column),
      fact_(std::move(fact)) {}

Instance parse_instance_facts(std::string_view text) {
  const std::vector<Fact> facts = read_facts(text);

  Instance inst;
  std::map<std::string, std::size_t> op_at, job_at, demand_at;
  std::map<std::pair<std::string, int>, std::size_t> res_at;
  // Facts that reference other entities, checked once everything is read.
  std::vector<const Fact*> deferred;

  for (const Fact& f : facts) {
    if (f.predicate == "op") {
      check_signature(f, "in");
      const Minutes dur = to_minutes(f.args[1], f);
      if (dur < 1) semantic(f, "operation duration must be positive");
      auto [it, fresh] = op_at.emplace(f.args[0].text, inst.operations.size());
      if (fresh) {
        inst.operations.push_back({f.args[0].text, dur});
      } else if (inst.operations[it->second].duration != dur) {
        semantic(f, "conflicting duration for operation " + f.args[0].text);
      }
    } else if (f.predicate == "needs") {
      check_signature(f, "ii");
      auto [it, fresh] =
          demand_at.emplace(f.args[0].text, inst.demands.size());
      if (fresh) inst.demands.push_back({f.args[0].text, {}});
      push_unique(inst.demands[it->second].classes, f.args[1].text);
      deferred.push_back(&f);
    } else if (f.predicate == "res") {
      check_signature(f, "ini");
      const Minutes idx = to_minutes(f.args[1], f);
      if (idx < 1 || idx > 1'000'000'000) {
        semantic(f, "resource instance index must be positive");
      }
      const std::pair<std::string, int> key{f.args[0].text,
                                            static_cast<int>(idx)};
      auto [it, fresh] = res_at.emplace(key, inst.resources.size());
      if (fresh) inst.resources.push_back({key.first, key.second, {}});
      push_unique(inst.resources[it->second].capabilities, f.args[2].text);
      deferred.push_back(&f);
    } else if (f.predicate == "job") {
      check_signature(f, "in");
      const Minutes deadline = to_minutes(f.args[1], f);
      auto [it, fresh] = job_at.emplace(f.args[0].text, inst.jobs.size());
      if (fresh) {
        JobSpec job;
        job.id = f.args[0].text;
        job.deadline = deadline;
        inst.jobs.push_back(std::move(job));
      } else if (inst.jobs[it->second].deadline != deadline) {
        semantic(f, "conflicting deadline for job " + f.args[0].text);
      }
    } else if (f.predicate == "recipe") {
      check_signature(f, "ii");
      deferred.push_back(&f);
    } else if (f.predicate == "prec") {
      check_signature(f, "iii");
      deferred.push_back(&f);
    } else {
      throw ParseError(ParseError::Kind::kSyntax, f.pos.line, f.pos.column,
                       "unknown predicate " + f.predicate + "/" +
                           std::to_string(f.args.size()),
                       f.text);
    }
  }

  auto require_op = [&](const Fact& f, const std::string& op) {
    if (!op_at.contains(op)) semantic(f, "undeclared operation " + op);
  };
  auto require_job = [&](const Fact& f, const std::string& job) -> JobSpec& {
    auto it = job_at.find(job);
    if (it == job_at.end()) semantic(f, "undeclared job " + job);
    return inst.jobs[it->second];
  };

  // Recipes first so prec facts may precede the recipe lines they refer to.
  std::map<std::string, const Fact*> first_prec;
  for (const Fact* f : deferred) {
    if (f->predicate == "needs") {
      require_op(*f, f->args[0].text);
    } else if (f->predicate == "res") {
      require_op(*f, f->args[2].text);
    } else if (f->predicate == "recipe") {
      require_op(*f, f->args[1].text);
      push_unique(require_job(*f, f->args[0].text).ops, f->args[1].text);
    }
  }
  for (const Fact* f : deferred) {
    if (f->predicate != "prec") continue;
    JobSpec& job = require_job(*f, f->args[0].text);
    for (const Token* t : {&f->args[1], &f->args[2]}) {
      require_op(*f, t->text);
      if (std::find(job.ops.begin(), job.ops.end(), t->text) ==
          job.ops.end()) {
        semantic(*f, "operation " + t->text + " is not in the recipe of " +
                         job.id);
      }
    }
    push_unique(job.precedence, {f->args[1].text, f->args[2].text});
    first_prec.emplace(job.id, f);
  }
  for (const JobSpec& job : inst.jobs) {
    if (detail::has_cycle(job.ops, job.precedence)) {
      // Report the last prec fact of the job, the one that closed the cycle.
      const Fact* culprit = first_prec.at(job.id);
      for (const Fact* f : deferred) {
        if (f->predicate == "prec" && f->args[0].text == job.id) culprit = f;
      }
      semantic(*culprit, "precedence cycle in job " + job.id);
    }
  }
  return inst;
}

namespace {

using nlohmann::json;

[[noreturn]] void json_error(const std::string& message) {
  throw ParseError(ParseError::Kind::kSemantic, 0, 0, message);
}

const json& member(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    json_error(std::string("missing key '") + key + "'");
  }
  return obj.at(key);
}

template <typename T>
T get_as(const json& v, const char* what) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    json_error(std::string("bad value for '") + what + "'");
  }
}

}  // namespace

Instance parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::kSyntax, 0, 0, e.what());
  }
  if (!doc.is_object()) json_error("instance JSON must be an object");

  Instance inst;
  std::set<std::string> ops;
  auto array = [&](const char* key) -> const json& {
    static const json kEmpty = json::array();
    if (!doc.contains(key)) return kEmpty;
    const json& a = doc.at(key);
    if (!a.is_array()) json_error(std::string("'") + key + "' must be an array");
    return a;
  };

  for (const json& o : array("operations")) {
    OperationSpec op{get_as<std::string>(member(o, "id"), "id"),
                     get_as<Minutes>(member(o, "duration"), "duration")};
    if (op.duration < 1) json_error("operation duration must be positive");
    if (!ops.insert(op.id).second) json_error("duplicate operation " + op.id);
    inst.operations.push_back(op);
  }
  auto require_op = [&](const std::string& op) {
    if (!ops.contains(op)) json_error("undeclared operation " + op);
  };
  for (const json& r : array("resources")) {
    ResourceInstance res;
    res.resource_class = get_as<std::string>(member(r, "class"), "class");
    res.index = get_as<int>(member(r, "index"), "index");
    if (res.index < 1) json_error("resource instance index must be positive");
    for (const auto& op : get_as<std::vector<std::string>>(member(r, "ops"),
                                                           "ops")) {
      require_op(op);
      push_unique(res.capabilities, op);
    }
    if (inst.find_resource(res.resource_class, res.index) != nullptr) {
      json_error("duplicate resource " + res.resource_class + "/" +
                 std::to_string(res.index));
    }
    inst.resources.push_back(std::move(res));
  }
  for (const json& d : array("demands")) {
    Demand demand;
    demand.op = get_as<std::string>(member(d, "op"), "op");
    require_op(demand.op);
    for (const auto& c : get_as<std::vector<std::string>>(
             member(d, "classes"), "classes")) {
      push_unique(demand.classes, c);
    }
    if (inst.find_demand(demand.op) != nullptr) {
      json_error("duplicate demand for " + demand.op);
    }
    inst.demands.push_back(std::move(demand));
  }
  for (const json& j : array("jobs")) {
    JobSpec job;
    job.id = get_as<std::string>(member(j, "id"), "id");
    job.deadline = get_as<Minutes>(member(j, "deadline"), "deadline");
    if (job.deadline < 0) json_error("deadline must be non-negative");
    for (const auto& op :
         get_as<std::vector<std::string>>(member(j, "ops"), "ops")) {
      require_op(op);
      push_unique(job.ops, op);
    }
    if (j.contains("precedence")) {
      for (const auto& [a, b] :
           get_as<std::vector<std::pair<std::string, std::string>>>(
               j.at("precedence"), "precedence")) {
        for (const auto& end : {a, b}) {
          if (std::find(job.ops.begin(), job.ops.end(), end) ==
              job.ops.end()) {
            json_error("operation " + end + " is not in the recipe of " +
                       job.id);
          }
        }
        push_unique(job.precedence, {a, b});
      }
    }
    if (detail::has_cycle(job.ops, job.precedence)) {
      json_error("precedence cycle in job " + job.id);
    }
    if (inst.find_job(job.id) != nullptr) json_error("duplicate job " + job.id);
    inst.jobs.push_back(std::move(job));
  }
  return inst;
}

Instance parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_instance_json(text);
  }
  return parse_instance_facts(text);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(ParseError::Kind::kIo, 0, 0,
                     "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string to_facts(const Instance& inst) {
  std::ostringstream out;
  for (const auto& op : inst.operations) {
    out << "op(" << op.id << "," << op.duration << ").\n";
  }
  for (const auto& d : inst.demands) {
    for (const auto& c : d.classes) {
      out << "needs(" << d.op << "," << c << ").\n";
    }
  }
  for (const auto& r : inst.resources) {
    for (const auto& op : r.capabilities) {
      out << "res(" << r.resource_class << "," << r.index << "," << op
          << ").\n";
    }
  }
  for (const auto& job : inst.jobs) {
    out << "job(" << job.id << "," << job.deadline << ").\n";
    for (const auto& op : job.ops) {
      out << "recipe(" << job.id << "," << op << ").\n";
    }
    for (const auto& [a, b] : job.precedence) {
      out << "prec(" << job.id << "," << a << "," << b << ").\n";
    }
  }
  return out.str();
}

std::string to_json_text(const Instance& inst, int indent) {
  json doc;
  doc["operations"] = json::array();
  for (const auto& op : inst.operations) {
    doc["operations"].push_back({{"id", op.id}, {"duration", op.duration}});
  }
  doc["resources"] = json::array();
  for (const auto& r : inst.resources) {
    doc["resources"].push_back({{"class", r.resource_class},
                                {"index", r.index},
                                {"ops", r.capabilities}});
  }
  doc["demands"] = json::array();
  for (const auto& d : inst.demands) {
    doc["demands"].push_back({{"op", d.op}, {"classes", d.classes}});
  }
  doc["jobs"] = json::array();
  for (const auto& job : inst.jobs) {
    json prec = json::array();
    for (const auto& [a, b] : job.precedence) prec.push_back({a, b});
    doc["jobs"].push_back({{"id", job.id},
                           {"deadline", job.deadline},
                           {"ops", job.ops},
                           {"precedence", prec}});
  }
  return doc.dump(indent);
}

}  // namespace mpfjss
