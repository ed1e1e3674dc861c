// Command-line front end for flat-eta.
#ifndef FLATETA_CLI_HPP_
#define FLATETA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace flateta {

// Exit codes: 0 success, 1 computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace flateta

#endif
