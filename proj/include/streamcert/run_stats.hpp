#pragma once

#include <string>
#include <vector>

namespace streamcert {

/// Machine-readable summary of a certificate build.
struct RunStats {
  std::string algorithm;  // "a1" or "a2"
  int k = 0;
  int n = 0;
  long m_stream = 0;  // raw edge records in one pass, loops included
  int passes = 0;
  long cert_edges = 0;
  std::vector<long> per_forest_edges;  // a2 only
  long membership_skips = 0;           // a2 only
  long hand_overs = 0;                 // a2 only
  long self_loops_skipped = 0;
  long duplicates_seen = 0;
  long peak_words = 0;
  double wall_time_ms = 0.0;
};

}  // namespace streamcert
