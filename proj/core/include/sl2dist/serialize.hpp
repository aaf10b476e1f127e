#ifndef SL2DIST_SERIALIZE_HPP
#define SL2DIST_SERIALIZE_HPP

// JSON round-trip for elements: a ring descriptor plus a list of
// {f, h, e, coef} records with decimal-string coefficients (Zp-local
// coefficients as "num/den").  Term order in the output is sorted by
// (f, h, e) so serialization is canonical.

#include "sl2dist/element.hpp"

#include <string>

namespace sl2dist {

std::string ring_to_json(const RingDescriptor& d);
RingDescriptor ring_from_json(const std::string& text);

std::string element_to_json(const Element<RingZ>& x);
std::string element_to_json(const Element<RingQp>& x);
std::string element_to_json(const Element<RingFp>& x);
std::string element_to_json(const Element<RingZpM>& x);

// Each parser checks the embedded ring descriptor kind (and p, m where
// applicable) and throws on mismatch or malformed input.
Element<RingZ> element_z_from_json(const std::string& text);
Element<RingQp> element_qp_from_json(const std::string& text);
Element<RingFp> element_fp_from_json(const std::string& text);
Element<RingZpM> element_zpm_from_json(const std::string& text);

}  // namespace sl2dist

#endif
