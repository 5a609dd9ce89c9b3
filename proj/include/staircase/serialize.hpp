#pragma once

#include <string>

#include <json.hpp>

#include "staircase/depth.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/ideal.hpp"
#include "staircase/reduction.hpp"

namespace staircase {

// All reports are built as ordered JSON so field order is part of the schema.
using Json = nlohmann::ordered_json;

const char* to_string(ProbeStatus s);
const char* to_string(McVerdict v);

Json json_witness(const std::optional<Witness>& w);  // {"n", "monomial"} or null

Json json_classify(const std::string& input, const Classification& c);
Json json_invariants(const std::string& input, const MonomialIdeal2& I,
                     const HilbertSummary& hs);
Json json_depths(const std::string& input, const MonomialIdeal2& I, const ProbeResult& gr,
                 const ProbeResult& fiber);
Json json_reduction(const std::string& input, const MonomialIdeal2& I,
                    const SplitFactor& factor, const McResult& mc);

// Aligned "key = value" lines; nested objects flatten to dotted paths, arrays
// of scalars render inline, arrays of objects index into the path.
std::string render_text(const Json& j);

}  // namespace staircase
