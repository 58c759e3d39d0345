#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/prob.hpp"

namespace renyi {

/// Raised for malformed or unreadable input files.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a joint pmf from a JSON object {"matrix": [[...]], "normalize": true}
/// or from a CSV grid of numbers.  Both loaders produce bit-identical internal
/// state for the same data.  The format is chosen by file extension
/// (.json/.csv); anything else is tried as JSON first.
JointPMF load_joint(const std::string& path);

/// Channel spec: JSON {"bsc": delta} or {"matrix": [[...]], "normalize": bool}.
Channel load_channel(const std::string& path);

JointPMF parse_joint_json(const std::string& text);
JointPMF parse_joint_csv(const std::string& text);
Channel parse_channel_json(const std::string& text);

std::string read_file(const std::string& path);

/// Fixed-point formatting used by all table output (no locale, no surprises).
std::string format_fixed(double v, int decimals);

/// Shortest round-trip representation used in CSV payloads.
std::string format_full(double v);

}  // namespace renyi
