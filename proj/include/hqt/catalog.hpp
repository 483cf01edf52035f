#ifndef HQT_CATALOG_HPP
#define HQT_CATALOG_HPP

#include <string>

#include "hqt/group.hpp"

namespace hqt {

enum class Family { K8, H2n2, A2n2t, K8nZeta, K8nCustom, FlatCustom };

struct CatalogSpec {
    Family family = Family::K8;
    int n = 1;
    int root_choice = 0;      // index into the primitive roots of the needed order
    std::string data_file;    // for the custom families
};

Family parse_family(const std::string& s);
std::string family_name(Family f);

// The data of each named family, materialized at the instance's ambient
// order M = 4 * lcm(2|G|, multiplicative orders of all sigma/tau values, 8).
ExtensionData build_k8();
ExtensionData build_k8n_zeta(int n, int root_choice = 0);
ExtensionData build_h2n2(int n, int root_choice = 0); // n = 2 is rewritten into the Z_2n x Z_2 shape
ExtensionData build_a2n2t(int n, int root_choice = 0);
// sigma = tau = 1 on Z_2 x Z_2 with a <| x = ab (the group-algebra case,
// where eta(a,b) = +1)
ExtensionData build_flat_trivial();

ExtensionData build_from_spec(const CatalogSpec& spec);

int ambient_order_for(const AbelianGroup& g, const std::vector<int>& value_orders);

} // namespace hqt

#endif
