#pragma once

#include <string>

#include "kn/centroid.hpp"
#include "kn/probes.hpp"
#include "kn/report.hpp"
#include "kn/tables.hpp"

namespace kn {

/// JSON documents are emitted with a fixed key order and two-space indent,
/// so equal inputs give byte-identical output.
std::string to_json(const Report& r);
std::string to_json(const BracketTable& t);
std::string to_json(const Spectrum& s);
std::string to_json(const CentroidResult& c);

std::string to_markdown(const Report& r);
std::string to_markdown(const BracketTable& t);
std::string to_markdown(const Spectrum& s);
std::string to_markdown(const CentroidResult& c);

/// "PASS k/k" or "FAIL j/k" with j the number of passing checks.
std::string summary_line(const Report& r);

}  // namespace kn
