#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aurif/poly.hpp"

namespace aurif::cli {

struct CommandRequest {
  std::string subcommand;  // phi, gauss, lucas, factor, verify, classnum
  std::optional<std::int64_t> n;
  std::optional<Rational> m;  // factor: m or --rational; lucas: --eval
  std::optional<long> precision_bits;
  std::uint64_t trial_limit = 1'000'000;
  bool json = false;
  bool oracle = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> range;
};

struct ParseOutcome {
  std::optional<CommandRequest> request;  // empty when parsing ended early
  int exit_code = 0;
};

/// `args` excludes the program name. Help and usage errors are written to
/// out/err; usage errors give exit code 2.
ParseOutcome parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit status 0 iff every requested check passes; module errors print their
/// name to err and give 1.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aurif::cli
