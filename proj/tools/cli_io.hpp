#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "padeguard/polyrat.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A JSON array of [re, im] pairs (bare numbers are real), or text with one
/// `re [im]` per line. Blank lines and lines starting with '#' are skipped.
std::vector<padeguard::Complex> parse_coefficients(const std::string& text);
std::vector<padeguard::Complex> read_coefficients(const std::string& path);

/// Writes to `path`, or to stdout when it is empty or "-".
void write_output(const std::string& path, const std::string& content);

/// Non-finite values become null.
Json number(double v);
Json complex(padeguard::Complex z);
Json coefficients(const padeguard::Polynomial& p);

/// %.17g, "inf" or "nan".
std::string text(double v);
std::string text(padeguard::Complex z);

}  // namespace cli
