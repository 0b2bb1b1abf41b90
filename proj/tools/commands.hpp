#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyknot/polyknot.hpp"

namespace polyknot::cli {

/// Bad flags or flag combinations; reported with exit status 64.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable input file; exit status 66.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path);
/// To stdout when `path` is empty, else atomically to the file.
void emit(const std::string& content, const std::string& path, std::ostream& out);
Rational number_flag(const std::string& text, const std::string& flag);

struct WitnessOptions {
  std::string kind = "p-inf";
  int n = 1;
  std::optional<std::string> r, s, delta, epsilon;
  std::optional<long> k;
  std::uint64_t seed = 1;
  int samples = 50;
  std::string knot_path;
  std::string point_path;
  std::vector<std::string> constraints;
  std::string out;
};

int cmd_witness(const WitnessOptions& o, std::ostream& out, std::ostream& err);

struct PlotOptions {
  std::string path;
  std::vector<std::string> range{"-2", "2"};
  int samples = 401;
  std::string format = "csv";
  std::vector<int> components;
  std::string out;
};

int cmd_plot(const PlotOptions& o, std::ostream& out, std::ostream& err);

}  // namespace polyknot::cli
