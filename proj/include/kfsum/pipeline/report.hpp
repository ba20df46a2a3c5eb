// Copyright (C) 2026 The kfsum Authors
// SPDX-License-Identifier: Apache-2.0
//

// Report rows. Big integers are decimal strings; enclosures are rendered by
// their endpoint in the conservative direction (upper for bounds, lower for
// epsilon). Everything here is a pure function of its input, so reports are
// byte-stable.

#pragma once

#include "kfsum/interval.hpp"
#include "kfsum/matveev.hpp"
#include "kfsum/pipeline/config.hpp"
#include "kfsum/pipeline/properties.hpp"
#include "kfsum/reduction.hpp"
#include "kfsum/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace kfsum::pipeline {

using Json = nlohmann::ordered_json;

/// Upper endpoint rounded up, `digits` significant digits, e.g. "2.18171e+14".
std::string sci_upper(const Interval& x, int digits = 6);
/// Lower endpoint rounded down.
std::string sci_lower(const Interval& x, int digits = 6);

Json bound_row(const BoundReport& r);
Json threshold_row(const ThresholdCheck& t);
Json stage1_json(const StageOneBound& s);
Json stage2_json(const StageTwoGrid& g);
Json record_json(const SolutionRecord& r);
SolutionRecord record_from_json(const Json& j);
Json property_json(const PropertyResult& p);

/// Indented JSON with a trailing newline.
void write_json(const Json& report, std::ostream& out);
/// Flat export: record,k,kind,value,n,m,a,family,a_relation.
void write_csv(const Json& report, std::ostream& out);

}  // namespace kfsum::pipeline
