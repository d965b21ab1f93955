#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace wrt {

// Parses and runs one invocation. Output goes to out unless --out is given;
// errors are written to err as JSON and mapped to the error code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0+1i", "1.5-2i", "2i", "-0.3"
std::complex<double> parse_complex(const std::string& s);

// "a:b:s" or "a:b" or "a"
std::vector<int> parse_levels(const std::string& s);

} // namespace wrt
