#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "partequiv/equimap.hpp"

namespace partequiv::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSizeCap = 3 };

/// Usage problems detected after parsing (bad combinations, bad values).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimsArgs {
  int n = -1, k = -1, l = -1;
  std::string spec;
};

struct BasisArgs {
  int n = -1, k = -1, l = -1;
  std::string format = "pattern";  // json | csv | pattern
  bool bias = false;
  std::uint64_t cap = kDefaultEntryCap;
  unsigned workers = 1;
};

struct QuiverArgs {
  int n = -1;
  int power = -1;  // < 0: print the adjacency matrix
  std::string from;
  std::string to;
};

struct BratteliArgs {
  int n = -1;
  int levels = 0;
};

struct VerifyArgs {
  int n = -1, k = -1, l = -1;
  std::string spec;
  VerifyOptions options;
  bool oracle = false;
  std::uint64_t cap = kDefaultEntryCap;
};

struct AppendixArgs {
  std::string which = "all";  // A..E or all
  std::string fixtures;
};

struct ProductArgs {
  std::string spec;
  std::string format = "list";  // list | pattern | json
  std::uint64_t cap = kDefaultEntryCap;
};

int cmd_dims(const DimsArgs& args, std::ostream& out);
int cmd_basis(const BasisArgs& args, std::ostream& out);
int cmd_quiver(const QuiverArgs& args, std::ostream& out);
int cmd_bratteli(const BratteliArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_appendix(const AppendixArgs& args, std::ostream& out);
int cmd_product(const ProductArgs& args, std::ostream& out);

/// Runs a command, turning exceptions into exit codes and messages on err:
/// usage and parse errors give kUsage, size caps give kSizeCap.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace partequiv::cli
