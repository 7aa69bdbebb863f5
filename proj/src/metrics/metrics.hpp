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

// Evaluation statistics over labeled findings, computed with exact
// rational arithmetic:
//
//   TP = P - FP,  UTP = TP - #DUP,  precision = TP / P,  NR = (TP - UTP) / TP
//
// precision is N/A when P = 0 and NR is N/A when TP = 0. Values are rounded
// only when displayed.

#ifndef CHAINLINT_METRICS_METRICS_HPP_
#define CHAINLINT_METRICS_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace chainlint::metrics {

using Rational = boost::rational<int64_t>;

class MetricsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Label : uint8_t { TP, FP, DUP };

struct LabelEntry {
  Label label = Label::TP;
  std::string canonical;  // DUP only
};

class LabelSet {
 public:
  // CSV with header `fingerprint,label[,canonical]`. Throws MetricsError on a
  // repeated fingerprint, an unknown label, or a DUP whose target is not TP.
  static LabelSet parse(const std::string& text);
  static LabelSet load(const std::string& path);

  void add(const std::string& fingerprint, LabelEntry entry);
  // Checks the DUP-target invariant.
  void validate() const;
  const LabelEntry* find(const std::string& fingerprint) const;
  const std::map<std::string, LabelEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, LabelEntry> entries_;
};

struct LabeledFinding {
  std::string fingerprint;
  std::string rule;
  std::string project;
};

struct GroupStats {
  std::string group;
  int64_t p = 0;
  int64_t fp = 0;
  int64_t tp = 0;
  int64_t utp = 0;
  int64_t dup = 0;
  int64_t unlabeled = 0;
  std::optional<Rational> precision;
  std::optional<Rational> nr;
};

// Builds a consistent row from counts. Throws MetricsError unless
// 0 <= FP, 0 <= dup and FP + dup <= P.
GroupStats stats_from_counts(std::string group, int64_t p, int64_t fp, int64_t dup);

enum class GroupBy : uint8_t { Rule, Project };

struct MetricsReport {
  GroupBy group_by = GroupBy::Rule;
  std::vector<GroupStats> groups;  // sorted by group name
  GroupStats total;
};

// Throws MetricsError listing unlabeled fingerprints unless allow_unlabeled,
// in which case they are excluded and counted per group. Groups named in
// `known_groups` are reported even when they have no findings.
MetricsReport compute_metrics(const std::vector<LabeledFinding>& findings, const LabelSet& labels,
                              GroupBy group_by, bool allow_unlabeled,
                              const std::vector<std::string>& known_groups = {});

struct GroupDelta {
  std::string group;
  int64_t d_fp = 0;
  int64_t d_utp = 0;
  int64_t d_tp = 0;
  std::optional<Rational> d_nr;
  std::optional<Rational> d_precision;
};

struct ComparisonReport {
  std::vector<GroupDelta> groups;
  GroupDelta total;
};

// Deltas are second minus first. With fp_only_gain, a second-run group with
// P = 0 counts as 100% precision.
ComparisonReport compare(const MetricsReport& first, const MetricsReport& second,
                         bool fp_only_gain);

// "38.46%" (half-up to two decimals), or "N/A".
std::string format_percent(const std::optional<Rational>& r, bool signed_output = false);

std::string format_text(const MetricsReport& report);
std::string format_json(const MetricsReport& report);
MetricsReport parse_json(const std::string& text);
std::string format_text(const ComparisonReport& report);
std::string format_json(const ComparisonReport& report);

// Reads a SARIF document or the text finding format. Suppressed SARIF
// results are dropped.
std::vector<LabeledFinding> read_findings(const std::string& text, const std::string& project);

}  // namespace chainlint::metrics

#endif  // CHAINLINT_METRICS_METRICS_HPP_
