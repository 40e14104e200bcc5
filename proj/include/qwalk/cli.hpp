#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 2,
  kExitValidationFailure = 3,
  kExitIoFailure = 4,
  kExitConvergenceFailure = 5,
};

// Parses `a`, `ai`, `a+bi`, `a-bi` (no spaces; `i` alone means 1i).
// Throws InvalidParameter on anything else.
Complex parse_complex(const std::string& text);

// Comma-separated complex components.
std::vector<Complex> parse_components(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);

// Accepts |norm^2 - 1| <= 1e-9 silently, rescales with a warning on `warn`
// up to 1e-4, throws InvalidState beyond that.
std::vector<Complex> normalize_components(const std::vector<Complex>& c, std::ostream& warn);

// %.17g real and imaginary parts in `a+bi` form.
std::string format_complex(Complex z);

// args excludes the program name. Returns one of the ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk
