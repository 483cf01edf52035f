#ifndef HQT_SERIALIZE_HPP
#define HQT_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "hqt/group.hpp"
#include "hqt/rmatrix.hpp"

namespace hqt {

using Json = nlohmann::ordered_json;

// {"order": M, "coeffs": ["p/q", ...]} with phi(M) entries in lowest terms
Json cycnum_to_json(const CycNum& a);
CycNum cycnum_from_json(const Json& j);

// {"invariants": [...], "action": {"gen_0": [...], ...},
//  "sigma": {"e1,e2,...": cyc}, "tau": {"e...|e...": cyc}}
Json extension_to_json(const ExtensionData& d);
ExtensionData extension_from_json(const Json& j);
ExtensionData load_extension_data(const std::string& path);

std::string element_key(const AbelianGroup& g, int idx);          // "e1,e2,..."
int element_from_key(const AbelianGroup& g, const std::string& s);

// {"w1": {"g|h": cyc, ...}, ...} sparse, zero entries omitted
Json rmatrix_to_json(const RMatrix& r);
RMatrix rmatrix_from_json(const Json& j, const HopfAlgebra& h);

// structure tensors of H for external inspection
Json hopf_to_json(const HopfAlgebra& h);

// FNV-1a of the canonical extension JSON; ties every report to its input
std::string fingerprint(const ExtensionData& d);

} // namespace hqt

#endif
