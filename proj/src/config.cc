// Copyright 2026 The blotto-iu Authors.
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

#include "blotto/config.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "blotto/error.h"
#include "json.hpp"

namespace blotto {
namespace {

using nlohmann::json;

int LineAt(const std::string& text, std::size_t pos) {
  pos = std::min(pos, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ThrowConfig("malformed JSON at line " + std::to_string(LineAt(text, e.byte == 0 ? 0 : e.byte - 1)) +
                ": " + e.what());
  }
}

// Typed access to one JSON object. Keys are located in the source text to
// report line numbers; every key must be consumed or it is rejected as
// unknown.
class Reader {
 public:
  Reader(const std::string& text, const json& obj, std::string path, std::size_t from)
      : text_(text), obj_(obj), path_(std::move(path)), from_(from) {
    if (!obj_.is_object()) {
      ThrowConfig((path_.empty() ? std::string("document") : "key '" + path_ + "'") +
                  " must be a JSON object");
    }
  }

  bool Has(const std::string& key) const { return obj_.contains(key); }

  [[noreturn]] void Fail(const std::string& key, const std::string& what) const {
    std::string msg = "config key '" + Name(key) + "'";
    const std::size_t pos = Find(key);
    if (pos != std::string::npos) msg += " (line " + std::to_string(LineAt(text_, pos)) + ")";
    ThrowConfig(msg + ": " + what);
  }

  const json& Get(const std::string& key) {
    if (!Has(key)) {
      std::string msg = "missing config key '" + Name(key) + "'";
      ThrowConfig(msg);
    }
    seen_.insert(key);
    return obj_.at(key);
  }

  double Number(const std::string& key) {
    const json& v = Get(key);
    if (!v.is_number()) Fail(key, "expected a number");
    return v.get<double>();
  }
  double Number(const std::string& key, double fallback) { return Has(key) ? Number(key) : fallback; }

  uint64_t Unsigned(const std::string& key) {
    const json& v = Get(key);
    if (!v.is_number_unsigned()) Fail(key, "expected a non-negative integer");
    return v.get<uint64_t>();
  }
  std::size_t Count(const std::string& key, std::size_t fallback) {
    return Has(key) ? static_cast<std::size_t>(Unsigned(key)) : fallback;
  }

  std::string String(const std::string& key) {
    const json& v = Get(key);
    if (!v.is_string()) Fail(key, "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> Numbers(const std::string& key) {
    const json& v = Get(key);
    if (!v.is_array()) Fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) Fail(key, "expected an array of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  Reader Child(const std::string& key) {
    const json& v = Get(key);
    const std::size_t pos = Find(key);
    return Reader(text_, v, Name(key), pos == std::string::npos ? from_ : pos);
  }

  void RejectUnknown() const {
    for (const auto& item : obj_.items()) {
      if (!seen_.count(item.key())) Fail(item.key(), "unknown key");
    }
  }

 private:
  std::string Name(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  // Offset of `"key"` followed by a colon, searching from the parent's key.
  std::size_t Find(const std::string& key) const {
    const std::string quoted = "\"" + key + "\"";
    for (std::size_t pos = text_.find(quoted, from_); pos != std::string::npos;
         pos = text_.find(quoted, pos + 1)) {
      std::size_t k = pos + quoted.size();
      while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
      if (k < text_.size() && text_[k] == ':') return pos;
    }
    return std::string::npos;
  }

  const std::string& text_;
  const json& obj_;
  std::string path_;
  std::size_t from_;
  std::set<std::string> seen_;
};

GameSpec ReadGame(Reader& r) {
  GameSpec g;
  g.budget_a = r.Number("budget_a");
  g.budget_b = r.Number("budget_b");
  g.values_a = r.Numbers("values_a");
  g.values_b = r.Numbers("values_b");
  if (g.values_b.size() != g.values_a.size()) r.Fail("values_b", "length differs from values_a");
  g.n = r.Count("n", g.values_a.size());
  if (g.n != g.values_a.size()) r.Fail("n", "does not match the length of values_a");
  g.alpha = r.Number("alpha", 0.5);
  r.RejectUnknown();
  return g;
}

std::string Resolve(const std::string& path, const std::string& base_dir) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (std::filesystem::path(base_dir) / p).string();
}

GameSource ReadGameSource(Reader& r, const std::string& base_dir) {
  GameSource src;
  if (r.Has("file")) {
    src.kind = GameSource::Kind::kFile;
    src.path = Resolve(r.String("file"), base_dir);
    r.RejectUnknown();
    const std::string text = ReadTextFile(src.path);
    try {
      src.spec = ParseGameJson(text);
    } catch (const Error& e) {
      ThrowConfig(src.path + ": " + e.what());
    }
  } else if (r.Has("family")) {
    src.kind = GameSource::Kind::kGenerator;
    src.family = r.String("family");
    if (!IsKnownFamily(src.family)) r.Fail("family", "unknown family '" + src.family + "'");
    FamilyParams& p = src.params;
    p.n = r.Count("n", p.n);
    p.budget_a = r.Number("budget_a", p.budget_a);
    p.budget_b = r.Number("budget_b", p.budget_b);
    p.w_low = r.Number("w_low", p.w_low);
    p.w_high = r.Number("w_high", p.w_high);
    p.alpha = r.Number("alpha", p.alpha);
    if (r.Has("seed")) src.game_seed = r.Unsigned("seed");
    r.RejectUnknown();
  } else {
    src.kind = GameSource::Kind::kInline;
    src.spec = ReadGame(r);
  }
  return src;
}

}  // namespace

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ThrowConfig("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GameSpec ParseGameJson(const std::string& text) {
  const json doc = ParseJson(text);
  Reader r(text, doc, "", 0);
  return ReadGame(r);
}

ExperimentConfig ParseExperimentConfig(const std::string& text, const std::string& base_dir) {
  const json doc = ParseJson(text);
  Reader r(text, doc, "", 0);
  ExperimentConfig c;
  if (r.Has("game")) {
    Reader g = r.Child("game");
    c.game = ReadGameSource(g, base_dir);
  }
  if (r.Has("task")) {
    c.task = r.String("task");
    static const std::set<std::string> kTasks = {"solve", "sample", "payoff", "exploit", "delta", "sweep"};
    if (!kTasks.count(c.task)) r.Fail("task", "unknown task '" + c.task + "'");
  }
  if (r.Has("csf")) {
    Reader s = r.Child("csf");
    const std::string kind = s.String("kind");
    if (kind == "blotto") {
      c.csf.kind = CsfKind::kBlotto;
    } else if (kind == "power") {
      c.csf.kind = CsfKind::kPower;
    } else if (kind == "logit") {
      c.csf.kind = CsfKind::kLogit;
    } else {
      s.Fail("kind", "expected blotto, power or logit");
    }
    if (c.csf.kind != CsfKind::kBlotto) {
      c.csf.r = s.Number("r");
      if (!(c.csf.r > 0.0)) s.Fail("r", "must be positive");
    }
    if (s.Has("alpha")) c.csf.alpha = s.Number("alpha");
    s.RejectUnknown();
  }
  if (r.Has("sweep")) {
    Reader s = r.Child("sweep");
    const std::string axis = s.String("axis");
    if (axis == "n") {
      c.axis = SweepAxis::kN;
    } else if (axis == "R" || axis == "r") {
      c.axis = SweepAxis::kR;
    } else if (axis == "eps") {
      c.axis = SweepAxis::kEps;
    } else if (axis == "budget_ratio") {
      c.axis = SweepAxis::kBudgetRatio;
    } else {
      s.Fail("axis", "expected n, R, eps or budget_ratio");
    }
    c.values = s.Numbers("values");
    if (c.values.empty()) s.Fail("values", "must not be empty");
    s.RejectUnknown();
  }
  c.m_samples = r.Count("m_samples", c.m_samples);
  c.grid_points = r.Count("grid_points", c.grid_points);
  c.repetitions = r.Count("repetitions", c.repetitions);
  if (r.Has("seed")) c.seed = r.Unsigned("seed");
  c.eps = r.Number("eps", c.eps);
  c.root_index = r.Count("root_index", c.root_index);
  c.samples = r.Count("samples", c.samples);
  if (r.Has("player")) {
    const std::string p = r.String("player");
    if (p != "A" && p != "B") r.Fail("player", "expected \"A\" or \"B\"");
    c.player = p == "A" ? Player::kA : Player::kB;
  }
  if (r.Has("x_a")) c.x_a = r.Numbers("x_a");
  if (r.Has("x_b")) c.x_b = r.Numbers("x_b");
  if (r.Has("out")) c.out = r.String("out");
  if (r.Has("format")) {
    c.format = r.String("format");
    if (c.format != "json" && c.format != "csv") r.Fail("format", "expected json or csv");
  }
  r.RejectUnknown();
  return c;
}

}  // namespace blotto
