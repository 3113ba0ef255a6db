#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csrec/homology.hpp"

namespace csrec {

// On-disk manifold description: presentation, 3-cell boundary data, and a
// list of representations with decimal-string matrix entries.
struct ManifoldInput {
    std::string name;
    CellStructure cell;
    struct Rep {
        std::string id;
        Rho rho;
    };
    std::vector<Rep> representations;
    std::optional<SL2> v0;

    // metadata for cross-checks (absent => 0)
    long surgery_p = 0;
    long surgery_q = 0;
};

ManifoldInput load_manifold(const std::string& path, mpfr_prec_t prec);
void save_manifold(const ManifoldInput& manifold, const std::string& path, int digits = 25);

}  // namespace csrec
