#ifndef DOMKIT_CLI_HPP_
#define DOMKIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace domkit::cli {

  inline constexpr char const* kVersion = "0.1.0";

  // Exit codes.
  inline constexpr int kOk         = 0;
  inline constexpr int kInputError = 1;  // validation or precondition failure
  inline constexpr int kLimitError = 2;  // order cap or node budget
  inline constexpr int kInternal   = 3;  // a self-check failed

  // Runs one command line (args[0] is the program name) writing the report
  // to out and diagnostics to err.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace domkit::cli

#endif  // DOMKIT_CLI_HPP_
