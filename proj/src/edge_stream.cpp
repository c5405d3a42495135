#include "streamcert/edge_stream.hpp"

#include <limits>
#include <sstream>

namespace streamcert {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

[[noreturn]] void fail(const std::string& path, const std::string& what,
                       long line_no) {
  throw StreamError(path + ": " + what + ", line " + std::to_string(line_no));
}

}  // namespace

EdgeStream::EdgeStream(const std::string& path) : path_(path), in_(path) {
  if (!in_.is_open()) {
    throw StreamError(path + ": cannot open file");
  }
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (is_blank_or_comment(line)) continue;
    std::istringstream iss(line);
    long long n = -1;
    std::string extra;
    if (!(iss >> n) || n < 0 || n > std::numeric_limits<int>::max() ||
        (iss >> extra)) {
      fail(path_, "malformed header", line_no_);
    }
    n_ = static_cast<int>(n);
    in_.clear();
    first_edge_pos_ = in_.tellg();
    first_edge_line_ = line_no_;
    return;
  }
  fail(path_, "malformed header (missing vertex count)", line_no_);
}

std::optional<Edge> EdgeStream::next_edge() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (is_blank_or_comment(line)) continue;
    std::istringstream iss(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(iss >> u) || !(iss >> v) || (iss >> extra)) {
      fail(path_, "non-integer token (expected \"u v\")", line_no_);
    }
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      fail(path_, "vertex id out of range", line_no_);
    }
    ++edges_this_pass_;
    return Edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (in_.bad()) {
    throw StreamError(path_ + ": I/O failure while reading");
  }
  return std::nullopt;
}

void EdgeStream::rewind() {
  in_.clear();
  in_.seekg(first_edge_pos_);
  if (in_.fail()) {
    throw StreamError(path_ + ": I/O failure on rewind");
  }
  ++pass_index_;
  edges_this_pass_ = 0;
  line_no_ = first_edge_line_;
}

EdgeStream open_stream(const std::string& path) { return EdgeStream(path); }

void write_edge_file(const std::string& path, int vertex_count,
                     const std::vector<Edge>& edges) {
  std::ofstream out(path);
  if (!out.is_open()) {
    throw StreamError(path + ": cannot open file for writing");
  }
  out << vertex_count << "\n";
  for (const Edge& e : edges) {
    out << e.u << " " << e.v << "\n";
  }
  out.flush();
  if (!out) {
    throw StreamError(path + ": I/O failure while writing");
  }
}

}  // namespace streamcert
