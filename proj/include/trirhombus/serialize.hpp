#ifndef TRIRHOMBUS_SERIALIZE_HPP
#define TRIRHOMBUS_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "trirhombus/geometry.hpp"

namespace trirhombus {

// Wire format: rationals are "num/den" in lowest terms with a positive
// denominator, integers are decimal strings of any length. Output uses LF
// line endings only.

/// {"certificates": [...]} with the fixed field order
/// triangle{a,b,c}, rhombus{side,sin_theta,cos_theta}, common_perimeter,
/// common_area, scale_lambda, param{u,v_canonical}, provenance{multiple,torsion_added}.
std::string to_json_document(const std::vector<PairCertificate>& certs);

/// Header line plus one line per certificate, columns in the JSON field order.
std::string to_csv(const std::vector<PairCertificate>& certs);

/// Parses either format (JSON when the first non-blank byte is '{').
/// Throws ParseError on malformed input or non-canonical rationals.
std::vector<PairCertificate> parse_certificates(std::string_view text);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_SERIALIZE_HPP
