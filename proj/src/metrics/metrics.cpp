// Copyright 2026 The chainlint Authors.
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

#include "metrics/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace chainlint::metrics {

namespace {

std::string trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

LabelSet LabelSet::parse(const std::string& text) {
  LabelSet set;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, ',');
    for (auto& c : cols) c = trim(c);
    if (header) {
      header = false;
      if (cols.size() >= 2 && cols[0] == "fingerprint" && cols[1] == "label") continue;
      throw MetricsError("labels file must start with the header fingerprint,label[,canonical]");
    }
    if (cols.size() < 2 || cols.size() > 3 || cols[0].empty()) {
      throw MetricsError("labels line " + std::to_string(line_no) + ": expected fingerprint,label[,canonical]");
    }
    LabelEntry e;
    const std::string& l = cols[1];
    if (l == "TP") {
      e.label = Label::TP;
    } else if (l == "FP") {
      e.label = Label::FP;
    } else if (l == "DUP") {
      e.label = Label::DUP;
      if (cols.size() < 3 || cols[2].empty()) {
        throw MetricsError("labels line " + std::to_string(line_no) + ": DUP needs a canonical fingerprint");
      }
      e.canonical = cols[2];
    } else {
      throw MetricsError("labels line " + std::to_string(line_no) + ": unknown label " + l);
    }
    set.add(cols[0], e);
  }
  set.validate();
  return set;
}

LabelSet LabelSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MetricsError("cannot read labels file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void LabelSet::add(const std::string& fingerprint, LabelEntry entry) {
  if (!entries_.emplace(fingerprint, std::move(entry)).second) {
    throw MetricsError("fingerprint labeled twice: " + fingerprint);
  }
}

void LabelSet::validate() const {
  std::vector<std::string> bad;
  for (const auto& [fp, e] : entries_) {
    if (e.label != Label::DUP) continue;
    const LabelEntry* target = find(e.canonical);
    if (!target || target->label != Label::TP) bad.push_back(fp + " -> " + e.canonical);
  }
  if (!bad.empty()) {
    std::string msg = "DUP labels must point at a TP-labeled fingerprint:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw MetricsError(msg);
  }
}

const LabelEntry* LabelSet::find(const std::string& fingerprint) const {
  auto it = entries_.find(fingerprint);
  return it == entries_.end() ? nullptr : &it->second;
}

GroupStats stats_from_counts(std::string group, int64_t p, int64_t fp, int64_t dup) {
  if (p < 0 || fp < 0 || dup < 0 || fp + dup > p) {
    throw MetricsError("inconsistent counts for group " + group);
  }
  GroupStats s;
  s.group = std::move(group);
  s.p = p;
  s.fp = fp;
  s.dup = dup;
  s.tp = p - fp;
  s.utp = s.tp - dup;
  if (p > 0) s.precision = Rational(s.tp, p);
  if (s.tp > 0) s.nr = Rational(s.tp - s.utp, s.tp);
  return s;
}

MetricsReport compute_metrics(const std::vector<LabeledFinding>& findings, const LabelSet& labels,
                              GroupBy group_by, bool allow_unlabeled,
                              const std::vector<std::string>& known_groups) {
  struct Counts {
    int64_t p = 0, fp = 0, dup = 0, unlabeled = 0;
  };
  std::map<std::string, Counts> counts;
  for (const std::string& g : known_groups) counts[g];
  std::set<std::string> missing;
  for (const LabeledFinding& f : findings) {
    Counts& c = counts[group_by == GroupBy::Rule ? f.rule : f.project];
    const LabelEntry* e = labels.find(f.fingerprint);
    if (!e) {
      missing.insert(f.fingerprint);
      ++c.unlabeled;
      continue;
    }
    ++c.p;
    if (e->label == Label::FP) ++c.fp;
    if (e->label == Label::DUP) ++c.dup;
  }
  if (!missing.empty() && !allow_unlabeled) {
    std::string msg = "unlabeled findings (use --allow-unlabeled to exclude them):";
    for (const auto& m : missing) msg += "\n  " + m;
    throw MetricsError(msg);
  }
  MetricsReport r;
  r.group_by = group_by;
  Counts total;
  for (const auto& [g, c] : counts) {
    GroupStats s = stats_from_counts(g, c.p, c.fp, c.dup);
    s.unlabeled = c.unlabeled;
    r.groups.push_back(s);
    total.p += c.p;
    total.fp += c.fp;
    total.dup += c.dup;
    total.unlabeled += c.unlabeled;
  }
  r.total = stats_from_counts("TOTAL", total.p, total.fp, total.dup);
  r.total.unlabeled = total.unlabeled;
  return r;
}

namespace {

GroupDelta delta(const GroupStats& a, const GroupStats& b, bool fp_only_gain) {
  GroupDelta d;
  d.group = a.group;
  d.d_fp = b.fp - a.fp;
  d.d_utp = b.utp - a.utp;
  d.d_tp = b.tp - a.tp;
  if (a.nr && b.nr) d.d_nr = *b.nr - *a.nr;
  std::optional<Rational> pa = a.precision;
  std::optional<Rational> pb = b.precision;
  if (fp_only_gain && b.p == 0) pb = Rational(1);
  if (pa && pb) d.d_precision = *pb - *pa;
  return d;
}

}  // namespace

ComparisonReport compare(const MetricsReport& first, const MetricsReport& second,
                         bool fp_only_gain) {
  std::map<std::string, const GroupStats*> a;
  std::map<std::string, const GroupStats*> b;
  for (const auto& g : first.groups) a[g.group] = &g;
  for (const auto& g : second.groups) b[g.group] = &g;
  std::vector<std::string> mismatch;
  for (const auto& [name, s] : a) {
    if (!b.count(name)) mismatch.push_back(name + " (only in first)");
  }
  for (const auto& [name, s] : b) {
    if (!a.count(name)) mismatch.push_back(name + " (only in second)");
  }
  if (first.group_by != second.group_by) mismatch.push_back("reports use different grouping");
  if (!mismatch.empty()) {
    std::string msg = "group sets differ:";
    for (const auto& m : mismatch) msg += "\n  " + m;
    throw MetricsError(msg);
  }
  ComparisonReport r;
  for (const auto& [name, s] : a) r.groups.push_back(delta(*s, *b[name], fp_only_gain));
  r.total = delta(first.total, second.total, fp_only_gain);
  return r;
}

std::string format_percent(const std::optional<Rational>& r, bool signed_output) {
  if (!r) return "N/A";
  // Hundredths of a percent, rounded half away from zero.
  const int64_t num = r->numerator();
  const int64_t den = r->denominator();
  const bool neg = num < 0;
  const int64_t a = neg ? -num : num;
  const int64_t scaled = (a * 10000 * 2 + den) / (2 * den);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld%%",
                neg ? "-" : (signed_output && scaled > 0 ? "+" : ""),
                static_cast<long long>(scaled / 100), static_cast<long long>(scaled % 100));
  return buf;
}

namespace {

const char* group_by_name(GroupBy g) { return g == GroupBy::Rule ? "rule" : "project"; }

std::string signed_int(int64_t v) { return (v > 0 ? "+" : "") + std::to_string(v); }

size_t name_width(const std::vector<std::string>& names) {
  size_t w = 5;
  for (const auto& n : names) w = std::max(w, n.size());
  return w;
}

nlohmann::ordered_json rational_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return {{"num", r->numerator()}, {"den", r->denominator()}, {"percent", format_percent(r)}};
}

nlohmann::ordered_json stats_json(const GroupStats& s) {
  nlohmann::ordered_json j;
  j["group"] = s.group;
  j["P"] = s.p;
  j["FP"] = s.fp;
  j["TP"] = s.tp;
  j["UTP"] = s.utp;
  j["DUP"] = s.dup;
  j["unlabeled"] = s.unlabeled;
  j["precision"] = rational_json(s.precision);
  j["NR"] = rational_json(s.nr);
  return j;
}

nlohmann::ordered_json delta_json(const GroupDelta& d) {
  nlohmann::ordered_json j;
  j["group"] = d.group;
  j["dFP"] = d.d_fp;
  j["dUTP"] = d.d_utp;
  j["dTP"] = d.d_tp;
  j["dNR"] = rational_json(d.d_nr);
  j["dPrec"] = rational_json(d.d_precision);
  return j;
}

}  // namespace

std::string format_text(const MetricsReport& report) {
  std::vector<std::string> names{group_by_name(report.group_by)};
  for (const auto& g : report.groups) names.push_back(g.group);
  const int w = static_cast<int>(name_width(names));
  std::ostringstream os;
  os << std::left << std::setw(w) << group_by_name(report.group_by) << std::right << std::setw(6)
     << "P" << std::setw(6) << "FP" << std::setw(6) << "TP" << std::setw(6) << "UTP"
     << std::setw(11) << "Precision" << std::setw(9) << "NR" << '\n';
  auto row = [&](const GroupStats& s) {
    os << std::left << std::setw(w) << s.group << std::right << std::setw(6) << s.p
       << std::setw(6) << s.fp << std::setw(6) << s.tp << std::setw(6) << s.utp << std::setw(11)
       << format_percent(s.precision) << std::setw(9) << format_percent(s.nr);
    if (s.unlabeled) os << "  (" << s.unlabeled << " unlabeled)";
    os << '\n';
  };
  for (const auto& g : report.groups) row(g);
  row(report.total);
  return os.str();
}

std::string format_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["group_by"] = group_by_name(report.group_by);
  j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : report.groups) j["groups"].push_back(stats_json(g));
  j["total"] = stats_json(report.total);
  return j.dump(2) + "\n";
}

MetricsReport parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MetricsError(std::string("metrics report is not valid JSON: ") + e.what());
  }
  try {
    MetricsReport r;
    const std::string g = j.at("group_by").get<std::string>();
    if (g != "rule" && g != "project") throw MetricsError("unknown group_by " + g);
    r.group_by = g == "rule" ? GroupBy::Rule : GroupBy::Project;
    auto read = [](const nlohmann::json& s) {
      GroupStats st = stats_from_counts(s.at("group").get<std::string>(), s.at("P").get<int64_t>(),
                                        s.at("FP").get<int64_t>(), s.at("DUP").get<int64_t>());
      st.unlabeled = s.value("unlabeled", int64_t{0});
      return st;
    };
    for (const auto& s : j.at("groups")) r.groups.push_back(read(s));
    r.total = read(j.at("total"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw MetricsError(std::string("malformed metrics report: ") + e.what());
  }
}

std::string format_text(const ComparisonReport& report) {
  std::vector<std::string> names{"group"};
  for (const auto& g : report.groups) names.push_back(g.group);
  const int w = static_cast<int>(name_width(names));
  std::ostringstream os;
  os << std::left << std::setw(w) << "group" << std::right << std::setw(7) << "dFP"
     << std::setw(7) << "dUTP" << std::setw(10) << "dNR" << std::setw(10) << "dPrec" << '\n';
  auto row = [&](const GroupDelta& d) {
    os << std::left << std::setw(w) << d.group << std::right << std::setw(7) << signed_int(d.d_fp)
       << std::setw(7) << signed_int(d.d_utp) << std::setw(10) << format_percent(d.d_nr, true)
       << std::setw(10) << format_percent(d.d_precision, true) << '\n';
  };
  for (const auto& g : report.groups) row(g);
  row(report.total);
  return os.str();
}

std::string format_json(const ComparisonReport& report) {
  nlohmann::ordered_json j;
  j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : report.groups) j["groups"].push_back(delta_json(g));
  j["total"] = delta_json(report.total);
  return j.dump(2) + "\n";
}

std::vector<LabeledFinding> read_findings(const std::string& text, const std::string& project) {
  std::vector<LabeledFinding> out;
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
      for (const auto& run : doc.at("runs")) {
        for (const auto& res : run.value("results", nlohmann::json::array())) {
          if (res.contains("suppressions") && !res["suppressions"].empty()) continue;
          LabeledFinding f;
          f.rule = res.at("ruleId").get<std::string>();
          f.fingerprint = res.at("partialFingerprints").at("chainlint/v1").get<std::string>();
          f.project = project;
          out.push_back(std::move(f));
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw MetricsError(std::string("malformed SARIF findings file: ") + e.what());
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4) {
      throw MetricsError("findings line " + std::to_string(line_no) +
                         ": expected file:line:col, rule, message, fingerprint");
    }
    if (cols[2].find(" [suppressed: ") != std::string::npos) continue;
    out.push_back({trim(cols[3]), cols[1], project});
  }
  return out;
}

}  // namespace chainlint::metrics
