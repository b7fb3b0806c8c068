#pragma once

#include "dpq/core.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dpq::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string command;
  std::optional<int> degree;
  bool quadric = false;
  std::optional<std::vector<std::string>> group;   // generator words
  std::optional<std::vector<std::string>> galois;  // generator words
  bool has_point = false;
  Format format = Format::Json;
  std::vector<std::string> args;  // positional: lemma id, example id, m q
  bool all = false;
  int jobs = 1;

  // Fields present in `j` overwrite ours.
  void merge_json(const Json& j);
  Json to_json() const;
};

const std::vector<std::string>& commands();
Format parse_format(const std::string& s);
// "a,b" or "a b"; commas inside s[...] stay.
std::vector<std::string> split_words(const std::string& s);

// Exit status: 0 success, 2 assertion mismatch, 1 usage or input error (message on err).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Argument parsing for the executable; returns the exit status.
int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dpq::cli
