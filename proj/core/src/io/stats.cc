// Copyright 2026 The posediv Authors
// SPDX-License-Identifier: Apache-2.0

#include "posediv/io/stats.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "posediv/error.h"

namespace posediv {
namespace {

std::string Number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

void RunStats::Validate() const {
  if (kept + filtered != generated) {
    throw Error(ErrorCode::kInvalidArgument, "kept + filtered must equal generated");
  }
}

int HistogramBucket(double distance) {
  if (!(distance >= 0.0) || distance > 2.0) {
    throw Error(ErrorCode::kRange, "distance outside [0, 2]");
  }
  return std::min(kHistogramBuckets - 1, static_cast<int>(distance * 10.0));
}

void AddFilterCounts(std::span<const FilterDecision> decisions, RunStats* stats) {
  stats->generated += decisions.size();
  const std::size_t kept = CountKept(decisions);
  stats->kept += kept;
  stats->filtered += decisions.size() - kept;
}

void AddSetDiversity(const NovelPoseSet& set, RunStats* stats) {
  stats->set_size = set.size();
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const double d = PoseDistance(set[i], set[j], set.metric());
      ++stats->histogram[HistogramBucket(d)];
      if (!stats->min_pairwise || d < *stats->min_pairwise) stats->min_pairwise = d;
    }
  }
}

void WriteStatsCsv(std::ostream& out, const RunStats& stats) {
  stats.Validate();
  out << "# posediv.stats/1\nkind,name,lo,hi,value\n";
  out << "count,generated,,," << stats.generated << '\n';
  out << "count,kept,,," << stats.kept << '\n';
  out << "count,filtered,,," << stats.filtered << '\n';
  out << "count,set_size,,," << stats.set_size << '\n';
  if (stats.min_pairwise) {
    out << "distance,min_pairwise,,," << Number(*stats.min_pairwise) << '\n';
  }
  for (int b = 0; b < kHistogramBuckets; ++b) {
    out << "histogram,pairwise_distance," << Number(b / 10.0) << ',' << Number((b + 1) / 10.0)
        << ',' << stats.histogram[b] << '\n';
  }
  for (const auto& [stage, seconds] : stats.timings) {
    out << "timing," << stage << ",,," << Number(seconds) << '\n';
  }
}

void AppendTiming(const std::string& path, const std::string& stage, double seconds) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::kIo, "cannot append to " + path);
  out << stage << ',' << Number(seconds) << '\n';
}

std::vector<std::pair<std::string, double>> ReadTimings(std::istream& in) {
  std::vector<std::pair<std::string, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kParse, "bad timing row: " + line);
    try {
      rows.emplace_back(line.substr(0, comma), std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad timing row: " + line);
    }
  }
  return rows;
}

}  // namespace posediv
