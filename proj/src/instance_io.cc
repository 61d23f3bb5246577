// Copyright 2026 The Combcontract Authors.
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

#include "combcontract/instance_io.h"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "combcontract/error.h"

namespace combcontract {
namespace {

[[noreturn]] void Bad(const std::string& where, const std::string& what) {
  Fail(ErrorKind::kParse, where + ": " + what);
}

const Json& Require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) Bad(where, std::string("missing field '") + key + "'");
  return *it;
}

void OnlyKeys(const Json& obj, std::initializer_list<const char*> allowed,
              const std::string& where) {
  if (!obj.is_object()) Bad(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!ok.contains(it.key())) Bad(where, "unknown field '" + it.key() + "'");
  }
}

int AsInt(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) Bad(where, "expected an integer");
  return v.get<int>();
}

Rational AsRational(const Json& v, const std::string& where,
                    std::optional<BitPrecision> k) {
  if (v.is_number_integer()) return Rational(v.get<int64_t>());
  if (!v.is_string()) Bad(where, "expected a rational string");
  try {
    return ParseRational(v.get<std::string>(), k);
  } catch (const Error& e) {
    Bad(where, e.what());
  }
}

std::vector<Rational> AsRationals(const Json& v, const std::string& where,
                                  std::optional<BitPrecision> k,
                                  std::optional<size_t> size = std::nullopt) {
  if (!v.is_array()) Bad(where, "expected an array");
  if (size && v.size() != *size) {
    Bad(where, "expected " + std::to_string(*size) + " entries, got " +
                   std::to_string(v.size()));
  }
  std::vector<Rational> out;
  for (size_t i = 0; i < v.size(); ++i) {
    out.push_back(AsRational(v[i], where + "[" + std::to_string(i) + "]", k));
  }
  return out;
}

// 1-based index list mapped to 0-based, each in [1, bound].
std::vector<int> AsIndices(const Json& v, int bound, const std::string& where) {
  if (!v.is_array()) Bad(where, "expected an array");
  std::vector<int> out;
  for (const Json& x : v) {
    const int i = AsInt(x, where);
    if (i < 1 || i > bound) {
      Bad(where, "index " + std::to_string(i) + " outside 1.." +
                     std::to_string(bound));
    }
    out.push_back(i - 1);
  }
  return out;
}

Json RationalsToJson(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& r : values) out.push_back(r.ToString());
  return out;
}

Json TableToJson(const ExplicitTable& t) { return RationalsToJson(t.values); }

size_t TableSize(int n, const std::string& where) {
  if (n < 0 || n > kMaxActions) Bad(where, "n out of range");
  return size_t{1} << n;
}

template <typename Fn>
auto Guarded(const std::string& where, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    Bad(where, e.what());
  }
}

}  // namespace

Json SuccessFunctionToJson(const SuccessFunction& f) {
  Json params = Json::object();
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Additive> ||
                      std::is_same_v<T, UnitDemand>) {
          params["values"] = RationalsToJson(r.values);
        } else if constexpr (std::is_same_v<T, WeightedMatroidRank>) {
          Json m = Json::object();
          if (const auto* u = std::get_if<UniformMatroid>(&r.matroid)) {
            m["kind"] = "uniform";
            m["rank"] = u->rank;
          } else {
            const auto& p = std::get<PartitionMatroid>(r.matroid);
            m["kind"] = "partition";
            Json blocks = Json::array();
            for (size_t b = 0; b < p.capacity.size(); ++b) {
              Json actions = Json::array();
              for (size_t a = 0; a < p.block_of.size(); ++a) {
                if (p.block_of[a] == static_cast<int>(b)) {
                  actions.push_back(static_cast<int>(a) + 1);
                }
              }
              blocks.push_back(
                  Json{{"actions", actions}, {"capacity", p.capacity[b]}});
            }
            m["blocks"] = blocks;
          }
          params["matroid"] = m;
          params["weights"] = RationalsToJson(r.weights);
        } else if constexpr (std::is_same_v<T, BudgetAdditive>) {
          params["values"] = RationalsToJson(r.values);
          params["budget"] = r.budget.ToString();
        } else if constexpr (std::is_same_v<T, Coverage>) {
          params["weights"] = RationalsToJson(r.weights);
          Json covers = Json::array();
          for (const std::vector<int>& c : r.covers) {
            Json row = Json::array();
            for (int e : c) row.push_back(e + 1);
            covers.push_back(row);
          }
          params["covers"] = covers;
        } else {
          params["values"] = TableToJson(r);
        }
      },
      f.repr());
  return params;
}

SuccessFunction SuccessFunctionFromJson(FunctionClass cls, const Json& params,
                                        int n,
                                        std::optional<BitPrecision> k) {
  const std::string where = "params";
  const size_t un = static_cast<size_t>(n);
  switch (cls) {
    case FunctionClass::kAdditive:
    case FunctionClass::kUnitDemand: {
      OnlyKeys(params, {"values"}, where);
      std::vector<Rational> v =
          AsRationals(Require(params, "values", where), "params.values", k, un);
      if (cls == FunctionClass::kAdditive) {
        return SuccessFunction(Additive{std::move(v)});
      }
      return SuccessFunction(UnitDemand{std::move(v)});
    }
    case FunctionClass::kMatroidRank: {
      OnlyKeys(params, {"matroid", "weights"}, where);
      std::vector<Rational> w = AsRationals(Require(params, "weights", where),
                                            "params.weights", k, un);
      const Json& m = Require(params, "matroid", where);
      const std::string mw = "params.matroid";
      if (!m.is_object()) Bad(mw, "expected an object");
      const Json& kind = Require(m, "kind", mw);
      if (kind == "uniform") {
        OnlyKeys(m, {"kind", "rank"}, mw);
        const int rank = AsInt(Require(m, "rank", mw), mw + ".rank");
        return Guarded(where, [&] {
          return SuccessFunction(
              WeightedMatroidRank{UniformMatroid{rank}, std::move(w)});
        });
      }
      if (kind != "partition") Bad(mw, "kind must be uniform or partition");
      OnlyKeys(m, {"kind", "blocks"}, mw);
      const Json& blocks = Require(m, "blocks", mw);
      if (!blocks.is_array()) Bad(mw + ".blocks", "expected an array");
      PartitionMatroid p;
      p.block_of.assign(un, -1);
      for (size_t b = 0; b < blocks.size(); ++b) {
        const std::string bw = mw + ".blocks[" + std::to_string(b) + "]";
        OnlyKeys(blocks[b], {"actions", "capacity"}, bw);
        for (int a : AsIndices(Require(blocks[b], "actions", bw), n, bw)) {
          if (p.block_of[a] != -1) {
            Bad(bw, "action " + std::to_string(a + 1) + " in two blocks");
          }
          p.block_of[a] = static_cast<int>(b);
        }
        p.capacity.push_back(AsInt(Require(blocks[b], "capacity", bw), bw));
      }
      for (int a = 0; a < n; ++a) {
        if (p.block_of[a] == -1) {
          Bad(mw, "action " + std::to_string(a + 1) + " in no block");
        }
      }
      return Guarded(where, [&] {
        return SuccessFunction(WeightedMatroidRank{std::move(p), std::move(w)});
      });
    }
    case FunctionClass::kBudgetAdditive: {
      OnlyKeys(params, {"values", "budget"}, where);
      std::vector<Rational> v =
          AsRationals(Require(params, "values", where), "params.values", k, un);
      Rational b = AsRational(Require(params, "budget", where),
                              "params.budget", k);
      return SuccessFunction(BudgetAdditive{std::move(v), std::move(b)});
    }
    case FunctionClass::kCoverage: {
      OnlyKeys(params, {"weights", "covers"}, where);
      Coverage c;
      c.weights =
          AsRationals(Require(params, "weights", where), "params.weights", k);
      const Json& covers = Require(params, "covers", where);
      if (!covers.is_array() || covers.size() != un) {
        Bad("params.covers", "expected one cover per action");
      }
      for (size_t a = 0; a < un; ++a) {
        c.covers.push_back(
            AsIndices(covers[a], static_cast<int>(c.weights.size()),
                      "params.covers[" + std::to_string(a) + "]"));
      }
      return SuccessFunction(std::move(c));
    }
    case FunctionClass::kExplicitTable: {
      OnlyKeys(params, {"values"}, where);
      std::vector<Rational> v =
          AsRationals(Require(params, "values", where), "params.values", k,
                      TableSize(n, where));
      return SuccessFunction(ExplicitTable{std::move(v)});
    }
  }
  Bad(where, "unsupported class");
}

Json InstanceToJson(const Instance& inst, const Json& generator) {
  Json doc = Json::object();
  doc["version"] = kInstanceFormatVersion;
  doc["model"] = "binary";
  doc["n"] = inst.n();
  doc["class"] = std::string(FunctionClassName(inst.f.cls()));
  doc["params"] = SuccessFunctionToJson(inst.f);
  doc["costs"] = RationalsToJson(inst.costs);
  if (inst.k) doc["k"] = inst.k->bits();
  if (!inst.normalized) doc["normalized"] = false;
  if (!generator.is_null()) doc["generator"] = generator;
  return doc;
}

Json GeneralInstanceToJson(const GeneralInstance& inst, const Json& generator) {
  Json doc = Json::object();
  doc["version"] = kInstanceFormatVersion;
  doc["model"] = "general";
  doc["n"] = inst.n();
  doc["costs"] = RationalsToJson(inst.costs);
  doc["rewards"] = RationalsToJson(inst.rewards);
  if (inst.distributions) {
    Json d = Json::array();
    for (const ExplicitTable& t : *inst.distributions) d.push_back(TableToJson(t));
    doc["distributions"] = d;
  }
  if (inst.reward_function) {
    doc["reward_function"] = Json{
        {"class", std::string(FunctionClassName(inst.reward_function->cls()))},
        {"params", SuccessFunctionToJson(*inst.reward_function)}};
  }
  if (!generator.is_null()) doc["generator"] = generator;
  return doc;
}

InstanceDocument InstanceFromJson(const Json& doc, bool validate) {
  const std::string top = "instance";
  if (!doc.is_object()) Bad(top, "expected an object");
  const int version = AsInt(Require(doc, "version", top), "version");
  if (version != kInstanceFormatVersion) {
    Bad(top, "unsupported version " + std::to_string(version));
  }
  const Json& model = Require(doc, "model", top);
  const int n = AsInt(Require(doc, "n", top), "n");
  if (n < 1 || n > kMaxActions) {
    Bad("n", "must lie in 1.." + std::to_string(kMaxActions));
  }
  const size_t un = static_cast<size_t>(n);

  InstanceDocument out;
  if (doc.contains("generator")) {
    out.generator = doc["generator"];
    if (!out.generator.is_object()) Bad("generator", "expected an object");
  }

  if (model == "binary") {
    OnlyKeys(doc,
             {"version", "model", "n", "class", "params", "costs", "k",
              "normalized", "generator"},
             top);
    std::optional<BitPrecision> k;
    if (doc.contains("k")) {
      const int bits = AsInt(doc["k"], "k");
      k = Guarded("k", [&] { return BitPrecision(bits); });
    }
    bool normalized = true;
    if (doc.contains("normalized")) {
      if (!doc["normalized"].is_boolean()) Bad("normalized", "expected a bool");
      normalized = doc["normalized"].get<bool>();
    }
    const Json& cls_name = Require(doc, "class", top);
    if (!cls_name.is_string()) Bad("class", "expected a string");
    const FunctionClass cls = ParseFunctionClass(cls_name.get<std::string>());
    SuccessFunction f = Guarded("params", [&] {
      return SuccessFunctionFromJson(cls, Require(doc, "params", top), n, k);
    });
    std::vector<Rational> costs =
        AsRationals(Require(doc, "costs", top), "costs", k, un);
    out.binary = Guarded(top, [&] {
      return Instance(std::move(f), std::move(costs), k, normalized);
    });
    if (validate) ValidateOrThrow(*out.binary);
    return out;
  }
  if (model != "general") Bad("model", "must be binary or general");

  OnlyKeys(doc,
           {"version", "model", "n", "costs", "rewards", "distributions",
            "reward_function", "generator"},
           top);
  GeneralInstance g;
  g.costs = AsRationals(Require(doc, "costs", top), "costs", std::nullopt, un);
  g.rewards = AsRationals(Require(doc, "rewards", top), "rewards", std::nullopt);
  if (doc.contains("distributions")) {
    const Json& d = doc["distributions"];
    if (!d.is_array()) Bad("distributions", "expected an array");
    std::vector<ExplicitTable> tables;
    for (size_t j = 0; j < d.size(); ++j) {
      tables.push_back(ExplicitTable{
          AsRationals(d[j], "distributions[" + std::to_string(j) + "]",
                      std::nullopt, TableSize(n, "distributions"))});
    }
    g.distributions = std::move(tables);
  }
  if (doc.contains("reward_function")) {
    const Json& r = doc["reward_function"];
    const std::string rw = "reward_function";
    OnlyKeys(r, {"class", "params"}, rw);
    const Json& cls_name = Require(r, "class", rw);
    if (!cls_name.is_string()) Bad(rw + ".class", "expected a string");
    const FunctionClass cls = ParseFunctionClass(cls_name.get<std::string>());
    g.reward_function = Guarded(rw, [&] {
      return SuccessFunctionFromJson(cls, Require(r, "params", rw), n,
                                     std::nullopt);
    });
  }
  if (g.distributions.has_value() == g.reward_function.has_value()) {
    Bad(top, "general instances need exactly one of distributions and "
             "reward_function");
  }
  if (validate) ValidateGeneralOrThrow(g);
  out.general = std::move(g);
  return out;
}

InstanceDocument ParseInstance(std::string_view text, bool validate) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
  return InstanceFromJson(doc, validate);
}

InstanceDocument ReadInstanceFile(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str(), validate);
}

std::string DumpJson(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace combcontract
