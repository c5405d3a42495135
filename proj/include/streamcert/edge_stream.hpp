#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "streamcert/edge.hpp"

namespace streamcert {

/// Raised on malformed stream files and I/O failures. Messages carry the
/// offending line number.
class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential, rewindable reader over an edge-stream file.
///
/// File format: the first non-comment line holds the vertex count n; every
/// following non-comment line holds one edge "u v" with 0 <= u,v < n. Lines
/// whose first non-blank character is '#' and blank lines are ignored.
///
/// Access is strictly sequential within a pass; rewind() restarts at the
/// first edge and increments pass_index(). Self-loops and duplicates are
/// returned unmodified; consumers decide how to treat them.
class EdgeStream {
 public:
  explicit EdgeStream(const std::string& path);

  int vertex_count() const { return n_; }
  int pass_index() const { return pass_index_; }
  long edges_read_this_pass() const { return edges_this_pass_; }
  const std::string& path() const { return path_; }

  /// Next edge in file order, or nullopt at end of pass (idempotent).
  std::optional<Edge> next_edge();

  /// Back to the first edge; legal mid-pass. Increments pass_index.
  void rewind();

 private:
  std::string path_;
  std::ifstream in_;
  int n_ = 0;
  int pass_index_ = 0;
  long edges_this_pass_ = 0;
  long line_no_ = 0;
  long first_edge_line_ = 0;
  std::streampos first_edge_pos_;
};

EdgeStream open_stream(const std::string& path);

/// Writes a graph in the stream file format (header n, then "u v" lines).
void write_edge_file(const std::string& path, int vertex_count,
                     const std::vector<Edge>& edges);

}  // namespace streamcert
