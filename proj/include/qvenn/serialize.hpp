#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qvenn/blockcoding.hpp"
#include "qvenn/bounds.hpp"
#include "qvenn/channel.hpp"
#include "qvenn/classical.hpp"
#include "qvenn/codes.hpp"
#include "qvenn/sidechannel.hpp"
#include "qvenn/venn.hpp"

namespace qvenn {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; magnitudes below 1e-13 become 0.
double round12(double v);

Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

Json layout_to_json(const RegisterLayout& layout);
RegisterLayout layout_from_json(const Json& j);

/// {layout: [{label, dim}], matrix: [[[re, im], ...], ...]}
Json state_to_json(const DensityState& s);
DensityState state_from_json(const Json& j);

/// {name, input_dim, output_dim, kraus: [matrix, ...]}
Json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const Json& j);

/// {k, n, matrix}
Json code_to_json(const EncodingIsometry& code);
EncodingIsometry code_from_json(const Json& j);

/// {transition: [[...], ...]}
Json classical_channel_to_json(const ClassicalChannel& ch);
ClassicalChannel classical_channel_from_json(const Json& j);

Json tolerances_json();

Json to_json(const ChannelReport& r);
Json to_json(const VennDiagram3& v);
Json to_json(const BlockReport& r);
Json to_json(const ErasureVerdict& v);
Json to_json(const MixtureAnalysis& m);
Json to_json(const DualRelation& d);
Json to_json(const BoundCatalog& c);
Json to_json(const SideChannelDiagram& d);
Json to_json(const SideErasureVerdict& v);
Json to_json(const LosslessCheck& c);
Json to_json(const ClassicalReport& r);
Json to_json(const ClassicalBlockReport& r);
Json to_json(const DataProcessingRecord& r);

/// Parses JSON text, mapping syntax errors to DomainError.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

}  // namespace qvenn
