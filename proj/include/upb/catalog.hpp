#pragma once

#include <string>
#include <vector>

#include "upb/states.hpp"

namespace upb {

enum class FactSource { MinSizeLemma, GenTilesLemma, Table1Seed, Imported };

const char* fact_source_name(FactSource s);

/// Size-only record: a UPB of this size exists in these dimensions,
/// with no explicit states attached.
struct ExistenceFact {
    SystemDims dims;
    std::size_t size = 0;
    FactSource source = FactSource::Imported;

    std::size_t missing() const { return dims.total() - size; }
};

/// The five-tile UPB of a 3x3 system.
UpbCandidate tiles_3x3();

/// The same tile pattern living on coordinates 3..5 of a dimension-6
/// second party; a UPB of that coordinate block, not of the full 3x6 space.
UpbCandidate tiles_3x3_shifted();

/// Zero-pads one party so its support lands on [offset, offset + d).
/// All inner products are preserved.
UpbCandidate embed(const UpbCandidate& u, std::size_t party, std::size_t offset,
                   std::size_t new_dim);

/// All D standard-basis product states.
std::vector<ProductState> complete_product_basis(const SystemDims& dims);

/// Smallest possible UPB size: d1+d2-1 if either dimension is odd,
/// d1+d2 if both are even. Requires d1, d2 >= 3.
std::size_t min_upb_size(std::size_t d1, std::size_t d2);

/// Registry of size facts over a dimension grid.
std::vector<ExistenceFact> existence_facts(std::size_t max_m, std::size_t max_n);

} // namespace upb
