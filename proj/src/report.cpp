//  Copyright 2026 The hyperlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "hyperlat/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace hyperlat {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "unknown";
}

Check Check::pass(std::string name, std::string anchor, std::string note) {
  return Check{std::move(name), std::move(anchor), Verdict::Pass, std::nullopt,
               std::move(note)};
}

Check Check::fail(std::string name, std::string anchor, Error::Bindings witness,
                  std::string note) {
  return Check{std::move(name), std::move(anchor), Verdict::Fail,
               std::move(witness), std::move(note)};
}

Check Check::skip(std::string name, std::string anchor, std::string note) {
  return Check{std::move(name), std::move(anchor), Verdict::Skip, std::nullopt,
               std::move(note)};
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const Check& c) { return c.verdict == Verdict::Fail; }));
}

const Check* Report::find(std::string_view anchor) const {
  for (const Check& c : checks) {
    if (c.anchor == anchor) return &c;
  }
  return nullptr;
}

void Report::append(Report sub) {
  checks.insert(checks.end(), std::make_move_iterator(sub.checks.begin()),
                std::make_move_iterator(sub.checks.end()));
  if (!sub.note.empty() && note.find(sub.note) == std::string::npos) {
    if (!note.empty()) note += "; ";
    note += sub.note;
  }
  if (sub.params && !params) params = sub.params;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "carrier: " << carrier << "\n";
  if (!connectives.empty()) out << "connectives: " << connectives << "\n";
  if (params) {
    out << "params: samples=" << params->samples << " seed=" << params->seed
        << " denominator-bound=" << params->denominator_bound << "\n";
  }
  if (!note.empty()) out << "note: " << note << "\n";
  out << "\n";

  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.anchor.size());
  for (const Check& c : checks) {
    std::string verdict(verdict_name(c.verdict));
    for (auto& ch : verdict) ch = static_cast<char>(std::toupper(ch));
    out << "  " << verdict << "  " << c.anchor
        << std::string(width - c.anchor.size() + 2, ' ') << c.name;
    if (c.witness && !c.witness->empty()) {
      out << "  [witness ";
      bool first = true;
      for (const auto& [var, value] : *c.witness) {
        if (!first) out << ", ";
        first = false;
        out << var << "=" << value;
      }
      out << "]";
    }
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }

  out << "\n";
  const std::size_t failed = failures();
  if (failed == 0) {
    out << "result: PASS (" << checks.size() << " checks)\n";
  } else {
    out << "result: FAIL (" << failed << " of " << checks.size()
        << " checks failed)\n";
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["carrier"] = carrier;
  j["connectives"] = connectives;
  if (params) {
    j["params"] = {{"samples", params->samples},
                   {"seed", params->seed},
                   {"denominator_bound", params->denominator_bound}};
  } else {
    j["params"] = nullptr;
  }
  if (!note.empty()) j["note"] = note;
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["verdict"] = std::string(verdict_name(c.verdict));
    if (c.witness) {
      nlohmann::json w = nlohmann::json::object();
      for (const auto& [var, value] : *c.witness) w[var] = value;
      jc["witness"] = w;
    } else {
      jc["witness"] = nullptr;
    }
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(std::move(jc));
  }
  j["passed"] = all_passed();
  return j.dump(2);
}

}  // namespace hyperlat
