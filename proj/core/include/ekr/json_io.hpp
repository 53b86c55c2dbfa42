#pragma once

#include <string>

#include "ekr/classify.hpp"
#include "ekr/density.hpp"

namespace ekr {

// JSON renderings with fixed key order and 2-space indentation, ending in a
// newline, so identical inputs produce byte-identical output.
std::string group_info_json(const PermGroup& g);
std::string density_report_json(const PermGroup& g, const DensityResult& r);
std::string classification_json(const PermGroup& g, const Classification2p& c);
std::string suite_report_json(const SuiteReport& rep);
std::string spectrum_json(const SpectrumReport& rep);

}  // namespace ekr
